//! Rival measures: Xiao's three-component JS distance, Yang and Chiclana's
//! spherical distance and Hung and Yang's `J_gamma` divergence.
//!
//! None of these is a strict distance; see [`crate::audit`] for the
//! counterexamples they admit.

use std::f64::consts::{FRAC_2_PI, LN_2};

use crate::error::{Error, Result};
use crate::fuzzy::{Ifs, Ifv, SIMPLEX_SLACK};
use crate::jsd::{l_unit, NEGATIVE_CLAMP};

/// Allowed excursion of the arccos argument above 1.
pub const ARCCOS_TOL: f64 = 1e-12;

/// Xiao's per-element distance
/// `sqrt((L(mu_a, mu_b) + L(nu_a, nu_b) + L(pi_a, pi_b)) / 2)`.
pub fn xiao_ifv(a: &Ifv, b: &Ifv) -> f64 {
    let radicand = l_unit(a.mu(), b.mu())
        + l_unit(a.nu(), b.nu())
        + l_unit(a.indeterminacy(), b.indeterminacy());
    (0.5 * radicand).sqrt()
}

/// Xiao's distance: the unweighted mean of [`xiao_ifv`] over the universe.
pub fn dist_xiao(a: &Ifs, b: &Ifs) -> Result<f64> {
    let n = a.len() as f64;
    Ok(a.zip_with(b)?.map(|(x, y)| xiao_ifv(x, y)).sum::<f64>() / n)
}

pub fn sim_xiao(a: &Ifs, b: &Ifs) -> Result<f64> {
    Ok(1.0 - dist_xiao(a, b)?)
}

/// Spherical per-element distance
/// `(2/pi) arccos(sqrt(mu_a mu_b) + sqrt(nu_a nu_b) + sqrt(pi_a pi_b))`.
pub fn yc_ifv(a: &Ifv, b: &Ifv) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let arg = (a.mu() * b.mu()).sqrt()
        + (a.nu() * b.nu()).sqrt()
        + (a.indeterminacy() * b.indeterminacy()).sqrt();
    // inputs admitted under the simplex slack may push the argument up by
    // their excess mass
    let excess = (a.mu() + a.nu() - 1.0).max(0.0) + (b.mu() + b.nu() - 1.0).max(0.0);
    if arg > 1.0 + ARCCOS_TOL + excess.min(2.0 * SIMPLEX_SLACK) {
        return Err(Error::InternalConsistency(format!(
            "arccos argument {arg} > 1 for {a}, {b}"
        )));
    }
    Ok(FRAC_2_PI * arg.clamp(-1.0, 1.0).acos())
}

pub fn dist_yc(a: &Ifs, b: &Ifs) -> Result<f64> {
    let n = a.len() as f64;
    let mut acc = 0.0;
    for (x, y) in a.zip_with(b)? {
        acc += yc_ifv(x, y)?;
    }
    Ok(acc / n)
}

pub fn sim_yc(a: &Ifs, b: &Ifs) -> Result<f64> {
    Ok(1.0 - dist_yc(a, b)?)
}

/// Order parameter of the `J_gamma` divergence; must be positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaParam(f64);

impl GammaParam {
    pub fn new(gamma: f64) -> Result<Self> {
        if !(gamma > 0.0 && gamma.is_finite()) {
            return Err(Error::InvalidGamma(gamma));
        }
        Ok(GammaParam(gamma))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// `|gamma - 1|` below which the logarithmic branch is used.
pub const GAMMA_ONE_TOL: f64 = 1e-12;

/// Hung and Yang's `J_gamma` divergence over the three components
/// `mu`, `nu`, `pi`. The raw value is returned; for `gamma = 1` it lies in
/// `[0, ln 2]`.
pub fn j_gamma(a: &Ifv, b: &Ifv, g: GammaParam) -> f64 {
    let comps = [
        (a.mu(), b.mu()),
        (a.nu(), b.nu()),
        (a.indeterminacy(), b.indeterminacy()),
    ];
    let gamma = g.0;
    let raw = if (gamma - 1.0).abs() < GAMMA_ONE_TOL {
        let xlnx = |x: f64| if x == 0.0 { 0.0 } else { x * x.ln() };
        let bracket: f64 = comps
            .iter()
            .map(|&(p, q)| {
                let s = p + q;
                let mid = if s == 0.0 { 0.0 } else { s * (s / 2.0).ln() };
                mid - xlnx(p) - xlnx(q)
            })
            .sum();
        -0.5 * bracket
    } else {
        let bracket: f64 = comps
            .iter()
            .map(|&(p, q)| ((p + q) / 2.0).powf(gamma) - 0.5 * (p.powf(gamma) + q.powf(gamma)))
            .sum();
        -bracket / (gamma - 1.0)
    };
    if (-NEGATIVE_CLAMP..0.0).contains(&raw) {
        0.0
    } else {
        raw
    }
}

/// `J_1 / ln 2`: the per-element identity `J_1 = ln 2 * xiao_ifv^2` holds.
pub fn j1_over_ln2(a: &Ifv, b: &Ifv) -> f64 {
    j_gamma(a, b, GammaParam(1.0)) / LN_2
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn v(mu: f64, nu: f64) -> Ifv {
        Ifv::new(mu, nu).unwrap()
    }

    fn one(a: Ifv) -> Ifs {
        Ifs::singleton(a)
    }

    fn example1() -> (Ifs, Ifs, Ifs) {
        (
            one(v(0.33, 0.36)),
            one(v(1.0 / 3.0, 1.0 / 3.0)),
            one(v(0.334, 0.333333)),
        )
    }

    #[test]
    fn xiao_example1() {
        let (i1, i2, i3) = example1();
        let s12 = sim_xiao(&i1, &i2).unwrap();
        let s13 = sim_xiao(&i1, &i3).unwrap();
        assert!((s12 - 0.973_897_2).abs() < 1e-6, "{s12}");
        assert!((s13 - 0.974_171_3).abs() < 1e-6, "{s13}");
        assert!(s12 < s13);
    }

    #[test]
    fn xiao_degenerate_maximum() {
        for i in 0..=100 {
            let lam = i as f64 / 100.0;
            let d = dist_xiao(&one(Ifv::EMPTY), &one(v(lam, 0.0))).unwrap();
            assert!((d - 1.0).abs() < 1e-12, "lambda {lam}: {d}");
            let d2 = dist_xiao(&one(Ifv::FULL), &one(v(lam, 0.0))).unwrap();
            let d3 = dist_xiao(&one(Ifv::FULL), &one(v(lam, 1.0 - lam))).unwrap();
            assert!((d2 - d3).abs() < 1e-12);
        }
    }

    #[test]
    fn xiao_identity_and_endpoints() {
        let (i1, _, _) = example1();
        assert_eq!(sim_xiao(&i1, &i1).unwrap(), 1.0);
        assert_eq!(sim_xiao(&one(Ifv::FULL), &one(Ifv::EMPTY)).unwrap(), 0.0);
    }

    #[test]
    fn xiao_table2_case5() {
        let a = Ifs::from_values(vec![v(0.30, 0.20), v(0.40, 0.30)]).unwrap();
        let b = Ifs::from_values(vec![v(0.45, 0.15), v(0.55, 0.25)]).unwrap();
        assert!((dist_xiao(&a, &b).unwrap() - 0.13224).abs() < 2e-5);
    }

    #[test]
    fn yc_closed_form_and_identity() {
        for i in 0..=100 {
            let lam = i as f64 / 100.0;
            let d = dist_yc(&one(Ifv::FULL), &one(v(lam, 0.0))).unwrap();
            assert!((d - FRAC_2_PI * lam.sqrt().acos()).abs() < 1e-12);
            let d3 = dist_yc(&one(Ifv::FULL), &one(v(lam, 1.0 - lam))).unwrap();
            assert!((d - d3).abs() < 1e-12);
            if lam > 0.0 {
                let dt = dist_yc(&one(Ifv::FULL), &one(v(0.0, lam))).unwrap();
                assert!((dt - 1.0).abs() < 1e-12);
            }
        }
        let a = one(v(0.1 + 0.2, 0.3));
        assert_eq!(dist_yc(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn yc_example4_violation() {
        let i1 = one(v(0.5, 0.5));
        let i2 = one(v(0.6, 0.3));
        let i3 = one(v(0.7, 0.3));
        let s12 = sim_yc(&i1, &i2).unwrap();
        let s13 = sim_yc(&i1, &i3).unwrap();
        assert!((s12 - (1.0 - 2.0 / PI * (0.3f64.sqrt() + 0.15f64.sqrt()).acos())).abs() < 1e-12);
        assert!((s13 - (1.0 - 2.0 / PI * (0.35f64.sqrt() + 0.15f64.sqrt()).acos())).abs() < 1e-12);
        assert!(s12 < s13);
    }

    #[test]
    fn j_gamma_examples() {
        let a = v(0.2, 0.5);
        for g in [0.5, 1.0, 1.5, 2.0, 3.0] {
            assert_eq!(j_gamma(&a, &a, GammaParam::new(g).unwrap()), 0.0);
        }
        let g1 = GammaParam::new(1.0).unwrap();
        assert!((j_gamma(&Ifv::FULL, &Ifv::EMPTY, g1) - LN_2).abs() < 1e-15);
        // 50-digit reference: J_1(<0.2,0.5>, <0.6,0.1>) = 0.12510060588454696988...
        let b = v(0.6, 0.1);
        assert!((j_gamma(&a, &b, g1) - 0.125_100_605_884_546_97).abs() < 1e-15);
        assert!((j_gamma(&a, &b, g1) - LN_2 * xiao_ifv(&a, &b).powi(2)).abs() < 1e-12);
        // gamma -> 1 approaches the log branch
        let near = j_gamma(&a, &b, GammaParam::new(1.0 + 1e-7).unwrap());
        assert!((near - j_gamma(&a, &b, g1)).abs() < 1e-6);
        assert!(matches!(GammaParam::new(0.0), Err(Error::InvalidGamma(_))));
        // gamma = 2: -(sum of ((p+q)/2)^2 - (p^2+q^2)/2) = sum (p-q)^2 / 4
        let g2 = GammaParam::new(2.0).unwrap();
        let expected = (0.4f64.powi(2) + 0.4f64.powi(2) + 0.0) / 4.0;
        assert!((j_gamma(&a, &b, g2) - expected).abs() < 1e-15);
    }
}
