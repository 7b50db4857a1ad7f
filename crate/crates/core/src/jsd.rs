//! Jensen-Shannon measures on intuitionistic fuzzy values and sets.
//!
//! An IFV `<mu, nu>` is read as the interval `[nu, 1 - mu]`, and the two
//! endpoints `1 - mu` and `nu` are compared with the two-point divergence
//!
//! ```text
//! L(p, q) = p log2(2p / (p + q)) + q log2(2q / (p + q)),   0 log2 0 = 0
//! ```
//!
//! which gives
//!
//! ```text
//! Z(a, b)       = L(1 - mu_a, 1 - mu_b) + L(nu_a, nu_b)
//! JS_IF(a, b)   = (ln 2 / 2) Z(a, b)
//! js_norm(a, b) = sqrt(JS_IF(a, b) / ln 2) = sqrt(Z(a, b) / 2)      in [0, 1]
//! d_Wu(A, B)    = sum_j w_j js_norm(A_j, B_j)
//! E(a)          = 1 - js_norm(a, a^c)
//! ```
//!
//! `js_norm` is symmetric bit-for-bit, vanishes only on identical inputs,
//! reaches 1 only on the pair `<1,0>`, `<0,1>`, is strictly monotone along
//! strict Atanassov chains and satisfies the triangle inequality.

use std::f64::consts::LN_2;

use crate::error::{Error, Result};
use crate::fuzzy::{Ifs, Ifv, WeightVector};

/// Rounding allowance below zero for quantities that are nonnegative in
/// exact arithmetic.
pub const NEGATIVE_CLAMP: f64 = 1e-15;

/// Below this `|p - q| / (p + q)` the divergence is summed as a power series.
const SERIES_CUTOFF: f64 = 0.01;

#[inline]
fn xlog2_ratio(p: f64, s: f64) -> f64 {
    if p == 0.0 {
        0.0
    } else {
        p * (2.0 * p / s).log2()
    }
}

/// Unclamped `L(p, q)` for `p, q >= 0`.
///
/// With `s = p + q` and `d = (p - q) / s`,
/// `L = (s / 2 ln 2) [(1 + d) ln(1 + d) + (1 - d) ln(1 - d)]`; for small `d`
/// the bracket is evaluated as `sum_k d^(2k) / (k (2k - 1))`, which avoids
/// the cancellation between the two logarithmic terms.
fn l_raw(p: f64, q: f64) -> f64 {
    if p == q {
        return 0.0;
    }
    let s = p + q;
    let d = (p - q) / s;
    if d.abs() < SERIES_CUTOFF {
        let d2 = d * d;
        let mut pow = d2;
        let mut acc = 0.0;
        for k in 1..=6u32 {
            let k = f64::from(k);
            acc += pow / (k * (2.0 * k - 1.0));
            pow *= d2;
        }
        0.5 * s * acc / LN_2
    } else {
        xlog2_ratio(p, s) + xlog2_ratio(q, s)
    }
}

fn clamp_nonnegative(raw: f64, what: &str) -> Result<f64> {
    if raw >= 0.0 {
        Ok(raw)
    } else if raw >= -NEGATIVE_CLAMP {
        Ok(0.0)
    } else {
        Err(Error::InternalConsistency(format!("{what} = {raw} < 0")))
    }
}

/// `L(p, q)` for `p, q >= 0`, clamped to zero within rounding.
pub fn l_divergence(p: f64, q: f64) -> Result<f64> {
    if !(p >= 0.0 && q >= 0.0) || !p.is_finite() || !q.is_finite() {
        return Err(Error::NegativeInput { p, q });
    }
    clamp_nonnegative(l_raw(p, q), "L(p, q)")
}

/// `L` on arguments already known to lie in `[0, 1]`.
#[inline]
pub(crate) fn l_unit(p: f64, q: f64) -> f64 {
    let raw = l_raw(p, q);
    debug_assert!(raw >= -NEGATIVE_CLAMP, "L({p}, {q}) = {raw}");
    raw.max(0.0)
}

/// `zeta(x) = x log2(2x) + (1 - x) log2(2(1 - x))` on `[0, 1]`, with
/// `zeta(0) = zeta(1) = 1` and minimum `zeta(0.5) = 0`.
pub fn zeta(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::OutOfRange {
            field: "x",
            value: x,
        });
    }
    let term = |t: f64| if t == 0.0 { 0.0 } else { t * (2.0 * t).log2() };
    Ok((term(x) + term(1.0 - x)).max(0.0))
}

/// `Z(a, b) = L(1 - mu_a, 1 - mu_b) + L(nu_a, nu_b)`, in `[0, 2]`.
pub fn z_score(a: &Ifv, b: &Ifv) -> f64 {
    l_unit(1.0 - a.mu(), 1.0 - b.mu()) + l_unit(a.nu(), b.nu())
}

/// Jensen-Shannon IF divergence, evaluated directly in natural logarithms:
/// `H((a + b) / 2) - H(a) / 2 - H(b) / 2` with `H` the interval entropy.
pub fn js_if(a: &Ifv, b: &Ifv) -> f64 {
    fn pair(p: f64, q: f64) -> f64 {
        let s = p + q;
        let t = |x: f64| {
            if x == 0.0 {
                0.0
            } else {
                x * (2.0 * x / s).ln()
            }
        };
        t(p) + t(q)
    }
    let raw = 0.5 * (pair(1.0 - a.mu(), 1.0 - b.mu()) + pair(a.nu(), b.nu()));
    raw.max(0.0)
}

/// Shannon entropy of the interval `[nu, 1 - mu]`:
/// `-(nu ln nu + (1 - mu) ln(1 - mu))`.
pub fn shannon_interval_entropy(a: &Ifv) -> f64 {
    let xlnx = |x: f64| if x == 0.0 { 0.0 } else { x * x.ln() };
    -(xlnx(a.nu()) + xlnx(1.0 - a.mu()))
}

/// Normalized JS divergence `sqrt(Z(a, b) / 2)`; a strict IF distance on IFVs.
pub fn js_norm(a: &Ifv, b: &Ifv) -> f64 {
    (0.5 * z_score(a, b)).sqrt()
}

/// Exponent of the parametric family; must be positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaParam(f64);

impl LambdaParam {
    pub fn new(lambda: f64) -> Result<Self> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::InvalidLambda(lambda));
        }
        Ok(LambdaParam(lambda))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// `js_norm` with every degree raised to `lambda` (`0^lambda = 0`).
pub fn js_norm_lambda(a: &Ifv, b: &Ifv, lam: LambdaParam) -> f64 {
    let l = lam.0;
    if l == 1.0 {
        return js_norm(a, b);
    }
    let p = |x: f64| x.powf(l);
    let z = l_unit(1.0 - p(a.mu()), 1.0 - p(b.mu())) + l_unit(p(a.nu()), p(b.nu()));
    (0.5 * z).sqrt()
}

fn weighted_sum<F>(a: &Ifs, b: &Ifs, w: &WeightVector, f: F) -> Result<f64>
where
    F: Fn(&Ifv, &Ifv) -> f64,
{
    let pairs = a.zip_with(b)?;
    w.check_len(a.len())?;
    Ok(pairs
        .zip(w.as_slice())
        .map(|((x, y), wj)| wj * f(x, y))
        .sum())
}

/// Weighted distance `sum_j w_j js_norm(A_j, B_j)`.
pub fn dist_wu(a: &Ifs, b: &Ifs, w: &WeightVector) -> Result<f64> {
    weighted_sum(a, b, w, js_norm)
}

pub fn sim_wu(a: &Ifs, b: &Ifs, w: &WeightVector) -> Result<f64> {
    Ok(1.0 - dist_wu(a, b, w)?)
}

/// Parametric distance: `dist_wu` with `mu -> mu^lambda`, `nu -> nu^lambda`.
pub fn dist_wu_lambda(a: &Ifs, b: &Ifs, w: &WeightVector, lam: LambdaParam) -> Result<f64> {
    weighted_sum(a, b, w, |x, y| js_norm_lambda(x, y, lam))
}

pub fn sim_wu_lambda(a: &Ifs, b: &Ifs, w: &WeightVector, lam: LambdaParam) -> Result<f64> {
    Ok(1.0 - dist_wu_lambda(a, b, w, lam)?)
}

/// Entropy `1 - js_norm(a, a^c)`: 0 exactly on `<1,0>` and `<0,1>`,
/// 1 exactly when `mu == nu`.
pub fn entropy_ifv(a: &Ifv) -> f64 {
    1.0 - js_norm(a, &a.complement())
}

/// Weighted set entropy `1 - d_Wu(A, A^c)`.
pub fn entropy_ifs(a: &Ifs, w: &WeightVector) -> Result<f64> {
    Ok(1.0 - dist_wu(a, &a.complement(), w)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(mu: f64, nu: f64) -> Ifv {
        Ifv::new(mu, nu).unwrap()
    }

    // Expected values below were evaluated with 50-digit mpmath.

    #[test]
    fn l_examples() {
        assert_eq!(l_divergence(1.0, 0.0).unwrap(), 1.0);
        assert_eq!(l_divergence(0.0, 1.0).unwrap(), 1.0);
        for p in [0.0, 1e-9, 0.25, 0.5, 1.0, 3.0] {
            assert_eq!(l_divergence(p, p).unwrap(), 0.0);
        }
        let got = l_divergence(0.5, 0.25).unwrap();
        assert!((got - 0.061_278_124_459_132_86).abs() < 1e-15, "{got}");
        assert!(matches!(
            l_divergence(-0.1, 0.2),
            Err(Error::NegativeInput { .. })
        ));
        assert!(l_divergence(f64::NAN, 0.2).is_err());
    }

    #[test]
    fn l_series_branch_matches_log_branch() {
        // p close to q goes through the series; compare against the
        // closed form at the cutoff from both sides.
        for &(p, q) in &[(0.5, 0.4951), (0.5, 0.4949), (0.3, 0.3 + 1e-7)] {
            let s = p + q;
            let direct = xlog2_ratio(p, s) + xlog2_ratio(q, s);
            let got = l_divergence(p, q).unwrap();
            assert!((got - direct).abs() < 1e-15, "{p} {q}: {got} vs {direct}");
        }
        // L(0.5, 0.5 + 1e-6) = s d^2 / (2 ln 2) + O(d^4), d = 1e-6 / 1.000001
        let got = l_divergence(0.5, 0.500_001).unwrap();
        let d: f64 = -1e-6 / 1.000_001;
        let expected = 1.000_001 * d * d / (2.0 * LN_2);
        assert!((got / expected - 1.0).abs() < 1e-9);
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta(0.5).unwrap(), 0.0);
        assert_eq!(zeta(0.0).unwrap(), 1.0);
        assert_eq!(zeta(1.0).unwrap(), 1.0);
        let got = zeta(0.25).unwrap();
        assert!((got - 0.188_721_875_540_867_14).abs() < 1e-15);
        assert!(zeta(1.5).is_err());
        assert!(zeta(-0.1).is_err());
    }

    #[test]
    fn z_score_examples() {
        assert_eq!(z_score(&Ifv::FULL, &Ifv::EMPTY), 2.0);
        let a = v(0.3, 0.2);
        assert_eq!(z_score(&a, &a), 0.0);
        for i in 0..=100 {
            let lam = i as f64 / 100.0;
            let z = z_score(&Ifv::FULL, &v(lam, 0.0));
            assert!((z - (1.0 - lam)).abs() < 1e-15);
        }
    }

    #[test]
    fn js_if_examples() {
        let a = v(0.2, 0.5);
        assert_eq!(js_if(&a, &a), 0.0);
        assert!((js_if(&Ifv::FULL, &Ifv::EMPTY) - LN_2).abs() < 1e-15);
        let x = v(0.33, 0.36);
        let y = v(1.0 / 3.0, 1.0 / 3.0);
        assert!((js_if(&x, &y) - LN_2 / 2.0 * z_score(&x, &y)).abs() < 1e-12);
    }

    #[test]
    fn shannon_examples() {
        assert_eq!(shannon_interval_entropy(&Ifv::FULL), 0.0);
        assert_eq!(shannon_interval_entropy(&Ifv::EMPTY), 0.0);
        let got = shannon_interval_entropy(&v(0.5, 0.25));
        assert!((got - std::f64::consts::LN_2).abs() < 1e-15);
    }

    #[test]
    fn js_norm_examples() {
        assert_eq!(js_norm(&Ifv::FULL, &Ifv::EMPTY), 1.0);
        assert_eq!(js_norm(&Ifv::EMPTY, &Ifv::FULL), 1.0);
        let a = v(0.4, 0.1);
        assert_eq!(js_norm(&a, &a), 0.0);
        assert!((js_norm(&Ifv::FULL, &v(0.5, 0.0)) - 0.5).abs() < 1e-15);
    }

    fn case1() -> (Ifs, Ifs) {
        (
            Ifs::from_values(vec![v(0.30, 0.20), v(0.40, 0.30)]).unwrap(),
            Ifs::from_values(vec![v(0.15, 0.25), v(0.25, 0.35)]).unwrap(),
        )
    }

    #[test]
    fn dist_wu_examples() {
        let (a, b) = case1();
        let w = WeightVector::uniform(2);
        let d = dist_wu(&a, &b, &w).unwrap();
        assert!((d - 0.08563).abs() < 2e-5, "{d}");
        assert_eq!(dist_wu(&a, &a, &w).unwrap(), 0.0);
        for i in 0..=100 {
            let lam = i as f64 / 100.0;
            let d = dist_wu(
                &Ifs::singleton(Ifv::FULL),
                &Ifs::singleton(v(lam, 1.0 - lam)),
                &WeightVector::uniform(1),
            )
            .unwrap();
            assert!((d - (1.0 - lam).sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn dist_wu_errors() {
        let (a, b) = case1();
        assert!(matches!(
            dist_wu(&a, &b, &WeightVector::uniform(3)),
            Err(Error::WeightLengthMismatch {
                expected: 2,
                got: 3
            })
        ));
        let c = Ifs::singleton(Ifv::FULL);
        assert!(matches!(
            dist_wu(&a, &c, &WeightVector::uniform(2)),
            Err(Error::UniverseMismatch(_))
        ));
    }

    #[test]
    fn sim_wu_examples() {
        let w1 = WeightVector::uniform(1);
        let (a, _) = case1();
        assert_eq!(sim_wu(&a, &a, &WeightVector::uniform(2)).unwrap(), 1.0);
        let s = sim_wu(&Ifs::singleton(Ifv::FULL), &Ifs::singleton(Ifv::EMPTY), &w1).unwrap();
        assert_eq!(s, 0.0);
    }

    #[test]
    fn lambda_family() {
        let (a, b) = case1();
        let w = WeightVector::uniform(2);
        let one = LambdaParam::new(1.0).unwrap();
        assert_eq!(
            dist_wu_lambda(&a, &b, &w, one).unwrap(),
            dist_wu(&a, &b, &w).unwrap()
        );
        let third = LambdaParam::new(1.0 / 3.0).unwrap();
        assert_eq!(dist_wu_lambda(&a, &a, &w, third).unwrap(), 0.0);
        assert!(matches!(
            LambdaParam::new(0.0),
            Err(Error::InvalidLambda(_))
        ));
        assert!(LambdaParam::new(-1.0).is_err());
        assert!(LambdaParam::new(f64::NAN).is_err());
        // 0^lambda = 0
        let z = js_norm_lambda(&v(0.0, 0.0), &v(0.0, 0.0), third);
        assert_eq!(z, 0.0);
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(entropy_ifv(&Ifv::FULL), 0.0);
        assert_eq!(entropy_ifv(&Ifv::EMPTY), 0.0);
        assert_eq!(entropy_ifv(&v(0.4, 0.4)), 1.0);
        let a = v(0.5, 0.25);
        assert_eq!(entropy_ifv(&a), 1.0 - js_norm(&a, &v(0.25, 0.5)));
        // 50-digit value: 0.77910423115098258500764988487955
        assert!((entropy_ifv(&a) - 0.779_104_231_150_982_6).abs() < 1e-14);

        let half = Ifs::from_values(vec![v(0.5, 0.5); 3]).unwrap();
        assert_eq!(entropy_ifs(&half, &WeightVector::uniform(3)).unwrap(), 1.0);
        let crisp = Ifs::from_values(vec![Ifv::FULL, Ifv::EMPTY, Ifv::FULL]).unwrap();
        assert_eq!(entropy_ifs(&crisp, &WeightVector::uniform(3)).unwrap(), 0.0);
        let single = Ifs::singleton(v(0.3, 0.2));
        assert_eq!(
            entropy_ifs(&single, &WeightVector::uniform(1)).unwrap(),
            entropy_ifv(&v(0.3, 0.2))
        );
    }
}
