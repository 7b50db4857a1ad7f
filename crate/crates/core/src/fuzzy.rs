//! Intuitionistic fuzzy values, sets over a finite universe, weight vectors,
//! and Atanassov's order.
//!
//! Every constructor validates; once built, values are immutable and used
//! exactly as given (no renormalization).

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Slack allowed on `mu + nu <= 1` so that decimal inputs such as
/// `0.3 + 0.7` are not rejected for rounding.
pub const SIMPLEX_SLACK: f64 = 1e-9;

/// Tolerance on `sum(weights) == 1`.
pub const WEIGHT_SUM_TOL: f64 = 1e-9;

/// An intuitionistic fuzzy value `<mu, nu>`: membership and non-membership
/// degrees with `mu + nu <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ifv {
    mu: f64,
    nu: f64,
}

impl Ifv {
    /// `<1, 0>`, the maximum of Atanassov's order.
    pub const FULL: Ifv = Ifv { mu: 1.0, nu: 0.0 };
    /// `<0, 1>`, the minimum of Atanassov's order.
    pub const EMPTY: Ifv = Ifv { mu: 0.0, nu: 1.0 };

    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        check_unit("mu", mu)?;
        check_unit("nu", nu)?;
        let sum = mu + nu;
        if sum > 1.0 + SIMPLEX_SLACK {
            return Err(Error::SimplexViolation { mu, nu, sum });
        }
        Ok(Ifv { mu, nu })
    }

    #[inline]
    pub fn mu(&self) -> f64 {
        self.mu
    }

    #[inline]
    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Hesitation degree `1 - mu - nu`, clamped at zero so the validation
    /// slack never produces a negative value.
    #[inline]
    pub fn indeterminacy(&self) -> f64 {
        (1.0 - self.mu - self.nu).max(0.0)
    }

    #[inline]
    pub fn complement(&self) -> Ifv {
        Ifv {
            mu: self.nu,
            nu: self.mu,
        }
    }

    /// Atanassov's order: `self ⊂ other` iff `mu <= other.mu` and
    /// `nu >= other.nu`. Comparisons are exact.
    #[inline]
    pub fn is_subset_of(&self, other: &Ifv) -> bool {
        self.mu <= other.mu && self.nu >= other.nu
    }

    #[inline]
    pub fn is_strict_subset_of(&self, other: &Ifv) -> bool {
        self.is_subset_of(other) && self != other
    }

    /// True for `<1, 0>` and `<0, 1>`.
    pub fn is_crisp(&self) -> bool {
        *self == Ifv::FULL || *self == Ifv::EMPTY
    }
}

impl fmt::Display for Ifv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.mu, self.nu)
    }
}

fn check_unit(field: &'static str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::OutOfRange { field, value });
    }
    Ok(())
}

/// An intuitionistic fuzzy set over a finite, ordered, labeled universe.
#[derive(Debug, Clone, PartialEq)]
pub struct Ifs {
    universe: Vec<String>,
    values: Vec<Ifv>,
}

impl Ifs {
    pub fn new(universe: Vec<String>, values: Vec<Ifv>) -> Result<Self> {
        if universe.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if universe.len() != values.len() {
            return Err(Error::LengthMismatch {
                labels: universe.len(),
                values: values.len(),
            });
        }
        let mut seen = HashSet::with_capacity(universe.len());
        for label in &universe {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Ifs { universe, values })
    }

    /// Builds a set over the positional universe `x1, x2, ..., xn`.
    pub fn from_values(values: Vec<Ifv>) -> Result<Self> {
        let universe = (1..=values.len()).map(|j| format!("x{j}")).collect();
        Ifs::new(universe, values)
    }

    /// A one-element set `{a / x1}`.
    pub fn singleton(a: Ifv) -> Self {
        Ifs {
            universe: vec!["x1".to_owned()],
            values: vec![a],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn values(&self) -> &[Ifv] {
        &self.values
    }

    pub fn complement(&self) -> Ifs {
        Ifs {
            universe: self.universe.clone(),
            values: self.values.iter().map(Ifv::complement).collect(),
        }
    }

    /// Crisp iff every element is `<1, 0>` or `<0, 1>`.
    pub fn is_crisp(&self) -> bool {
        self.values.iter().all(Ifv::is_crisp)
    }

    /// Fails unless both sets share the same labels in the same order.
    pub fn check_same_universe(&self, other: &Ifs) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch(format!(
                "{:?} vs {:?}",
                self.universe, other.universe
            )));
        }
        Ok(())
    }

    /// Pointwise Atanassov order.
    pub fn is_subset_of(&self, other: &Ifs) -> Result<bool> {
        self.check_same_universe(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a.is_subset_of(b)))
    }

    pub fn is_strict_subset_of(&self, other: &Ifs) -> Result<bool> {
        Ok(self.is_subset_of(other)? && self.values != other.values)
    }

    /// Iterates aligned element pairs after checking the universes match.
    pub(crate) fn zip_with<'a>(
        &'a self,
        other: &'a Ifs,
    ) -> Result<impl Iterator<Item = (&'a Ifv, &'a Ifv)> + 'a> {
        self.check_same_universe(other)?;
        Ok(self.values.iter().zip(other.values.iter()))
    }
}

/// Positive weights over the universe, summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
}

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("empty weight vector".into()));
        }
        if let Some((j, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !(**w > 0.0 && **w <= 1.0))
        {
            return Err(Error::InvalidWeights(format!(
                "weight {j} = {w} is outside (0, 1]"
            )));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::InvalidWeights(format!(
                "weights sum to {sum}, not 1"
            )));
        }
        Ok(WeightVector { weights })
    }

    /// All weights `1/n`.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn uniform(n: usize) -> Self {
        assert!(n > 0, "uniform weights need n >= 1");
        WeightVector {
            weights: vec![1.0 / n as f64; n],
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.weights.len() != n {
            return Err(Error::WeightLengthMismatch {
                expected: n,
                got: self.weights.len(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(mu: f64, nu: f64) -> Ifv {
        Ifv::new(mu, nu).unwrap()
    }

    #[test]
    fn make_ifv_examples() {
        assert!(Ifv::new(0.33, 0.36).is_ok());
        assert_eq!(Ifv::new(1.0, 0.0).unwrap(), Ifv::FULL);
        assert!(matches!(
            Ifv::new(0.7, 0.4),
            Err(Error::SimplexViolation { .. })
        ));
        assert!(matches!(
            Ifv::new(-0.1, 0.4),
            Err(Error::OutOfRange { field: "mu", .. })
        ));
        assert!(matches!(
            Ifv::new(0.1, 1.5),
            Err(Error::OutOfRange { field: "nu", .. })
        ));
        assert!(Ifv::new(f64::NAN, 0.0).is_err());
        // decimal rounding artifacts are accepted
        assert!(Ifv::new(0.3, 0.7).is_ok());
        assert!(Ifv::new(0.1 + 0.2, 0.7).is_ok());
    }

    #[test]
    fn indeterminacy_examples() {
        assert!((v(0.3, 0.2).indeterminacy() - 0.5).abs() < 1e-15);
        assert_eq!(Ifv::FULL.indeterminacy(), 0.0);
        assert!((v(1.0 / 3.0, 1.0 / 3.0).indeterminacy() - 1.0 / 3.0).abs() < 1e-15);
        // slack never produces a negative degree
        assert_eq!(v(0.5, 0.5 + 5e-10).indeterminacy(), 0.0);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(v(0.3, 0.2).complement(), v(0.2, 0.3));
        assert_eq!(Ifv::FULL.complement(), Ifv::EMPTY);
        assert_eq!(v(0.5, 0.5).complement(), v(0.5, 0.5));
    }

    #[test]
    fn order_examples() {
        let a = v(0.33, 0.36);
        let b = v(1.0 / 3.0, 1.0 / 3.0);
        let c = v(0.334, 0.333333);
        assert!(a.is_subset_of(&b) && b.is_subset_of(&c));
        assert!(a.is_strict_subset_of(&b) && b.is_strict_subset_of(&c));
        assert!(a.is_subset_of(&a));
        assert!(!a.is_strict_subset_of(&a));
        assert!(!v(0.4, 0.1).is_subset_of(&v(0.3, 0.2)));
        assert!(Ifv::EMPTY.is_strict_subset_of(&Ifv::FULL));
    }

    #[test]
    fn ifs_order_and_mismatch() {
        let a2 = Ifs::from_values(vec![v(0.30, 0.20), v(0.40, 0.30)]).unwrap();
        let b2 = Ifs::from_values(vec![v(0.16, 0.26), v(0.26, 0.36)]).unwrap();
        assert!(b2.is_subset_of(&a2).unwrap());
        assert!(b2.is_strict_subset_of(&a2).unwrap());
        assert!(a2.is_subset_of(&a2).unwrap());
        assert!(!a2.is_strict_subset_of(&a2).unwrap());

        let one = Ifs::new(vec!["x1".into()], vec![v(0.1, 0.1)]).unwrap();
        let two = Ifs::new(vec!["x1".into(), "x2".into()], vec![v(0.1, 0.1); 2]).unwrap();
        assert!(matches!(
            one.is_subset_of(&two),
            Err(Error::UniverseMismatch(_))
        ));
        // same labels in a different order are different universes
        let swapped = Ifs::new(vec!["x2".into(), "x1".into()], vec![v(0.1, 0.1); 2]).unwrap();
        assert!(two.is_subset_of(&swapped).is_err());
    }

    #[test]
    fn ifs_construction_errors() {
        assert!(matches!(
            Ifs::new(vec![], vec![]),
            Err(Error::EmptyUniverse)
        ));
        assert!(matches!(
            Ifs::new(vec!["a".into()], vec![]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            Ifs::new(vec!["a".into(), "a".into()], vec![Ifv::FULL; 2]),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn weights() {
        let w = WeightVector::uniform(3);
        assert_eq!(w.as_slice(), &[1.0 / 3.0; 3]);
        assert_eq!(WeightVector::uniform(1).as_slice(), &[1.0]);
        assert_eq!(WeightVector::uniform(2).as_slice(), &[0.5, 0.5]);
        assert!(WeightVector::new(vec![1.0 / 3.0; 3]).is_ok());
        assert!(WeightVector::new(vec![0.5, 0.5, 0.1]).is_err());
        assert!(WeightVector::new(vec![1.0, 0.0]).is_err());
        assert!(WeightVector::new(vec![]).is_err());
        assert!(WeightVector::new(vec![1.5, -0.5]).is_err());
    }
}
