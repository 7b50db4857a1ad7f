//! Named, parameterized measures usable by the audit, the classifier and
//! the command line.

use std::collections::BTreeMap;
use std::fmt;

use crate::baselines::{self, GammaParam};
use crate::error::{Error, Result};
use crate::fuzzy::{Ifs, Ifv, WeightVector};
use crate::jsd::{self, LambdaParam};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureKind {
    Distance,
    Similarity,
}

impl MeasureKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MeasureKind::Distance => "distance",
            MeasureKind::Similarity => "similarity",
        }
    }
}

/// The registered measure families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Evaluator {
    /// Weighted normalized JS distance.
    Wu,
    /// The parametric family with exponent `lambda`.
    WuLambda(LambdaParam),
    Xiao,
    Yc,
    /// `J_gamma`, averaged with weights `1/n` on sets.
    JGamma(GammaParam),
}

impl Evaluator {
    /// Distance between two values.
    pub fn ifv_distance(&self, a: &Ifv, b: &Ifv) -> Result<f64> {
        Ok(match self {
            Evaluator::Wu => jsd::js_norm(a, b),
            Evaluator::WuLambda(l) => jsd::js_norm_lambda(a, b, *l),
            Evaluator::Xiao => baselines::xiao_ifv(a, b),
            Evaluator::Yc => baselines::yc_ifv(a, b)?,
            Evaluator::JGamma(g) => baselines::j_gamma(a, b, *g),
        })
    }

    /// Distance between two sets. Only the Wu family uses `w`; the others
    /// weight elements by `1/n`.
    pub fn ifs_distance(&self, a: &Ifs, b: &Ifs, w: &WeightVector) -> Result<f64> {
        match self {
            Evaluator::Wu => jsd::dist_wu(a, b, w),
            Evaluator::WuLambda(l) => jsd::dist_wu_lambda(a, b, w, *l),
            Evaluator::Xiao => baselines::dist_xiao(a, b),
            Evaluator::Yc => baselines::dist_yc(a, b),
            Evaluator::JGamma(g) => {
                let n = a.len() as f64;
                Ok(a.zip_with(b)?
                    .map(|(x, y)| baselines::j_gamma(x, y, *g))
                    .sum::<f64>()
                    / n)
            }
        }
    }
}

/// A measure together with its registry name, kind and parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureDescriptor {
    name: String,
    kind: MeasureKind,
    params: BTreeMap<String, f64>,
    evaluator: Evaluator,
}

/// Names accepted by [`MeasureDescriptor::lookup`].
pub const REGISTRY: &[&str] = &[
    "wu",
    "wu-lambda",
    "xiao",
    "yc",
    "jgamma",
    "sim-wu",
    "sim-wu-lambda",
    "sim-xiao",
    "sim-yc",
];

impl MeasureDescriptor {
    /// Resolves a registry name. `wu-lambda` needs `lambda`, `jgamma` needs
    /// `gamma`; other parameters are rejected.
    pub fn lookup(name: &str, params: &BTreeMap<String, f64>) -> Result<Self> {
        let (kind, base) = match name.strip_prefix("sim-") {
            Some(base) if base != "jgamma" => (MeasureKind::Similarity, base),
            _ => (MeasureKind::Distance, name),
        };
        let allowed: &[&str] = match base {
            "wu-lambda" => &["lambda"],
            "jgamma" => &["gamma"],
            "wu" | "xiao" | "yc" => &[],
            _ => return Err(Error::UnknownMeasure(name.to_owned())),
        };
        if let Some(extra) = params.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(Error::InvalidConfig(format!(
                "measure {name:?} takes no parameter {extra:?}"
            )));
        }
        let need = |key: &str| {
            params
                .get(key)
                .copied()
                .ok_or_else(|| Error::InvalidConfig(format!("measure {name:?} needs {key}")))
        };
        let evaluator = match base {
            "wu" => Evaluator::Wu,
            "wu-lambda" => Evaluator::WuLambda(LambdaParam::new(need("lambda")?)?),
            "xiao" => Evaluator::Xiao,
            "yc" => Evaluator::Yc,
            "jgamma" => Evaluator::JGamma(GammaParam::new(need("gamma")?)?),
            _ => unreachable!(),
        };
        Ok(MeasureDescriptor {
            name: name.to_owned(),
            kind,
            params: params.clone(),
            evaluator,
        })
    }

    /// Lookup without parameters.
    pub fn named(name: &str) -> Result<Self> {
        Self::lookup(name, &BTreeMap::new())
    }

    pub fn wu() -> Self {
        Self::from_evaluator("wu", Evaluator::Wu)
    }

    pub fn wu_lambda(lam: LambdaParam) -> Self {
        let mut d = Self::from_evaluator("wu-lambda", Evaluator::WuLambda(lam));
        d.params.insert("lambda".into(), lam.value());
        d
    }

    pub fn xiao() -> Self {
        Self::from_evaluator("xiao", Evaluator::Xiao)
    }

    pub fn yc() -> Self {
        Self::from_evaluator("yc", Evaluator::Yc)
    }

    pub fn jgamma(g: GammaParam) -> Self {
        let mut d = Self::from_evaluator("jgamma", Evaluator::JGamma(g));
        d.params.insert("gamma".into(), g.value());
        d
    }

    fn from_evaluator(name: &str, evaluator: Evaluator) -> Self {
        MeasureDescriptor {
            name: name.to_owned(),
            kind: MeasureKind::Distance,
            params: BTreeMap::new(),
            evaluator,
        }
    }

    /// The dual similarity `1 - d` of a distance measure.
    pub fn dual(&self) -> Self {
        let (kind, name) = match self.kind {
            MeasureKind::Distance => (MeasureKind::Similarity, format!("sim-{}", self.name)),
            MeasureKind::Similarity => (
                MeasureKind::Distance,
                self.name.trim_start_matches("sim-").to_owned(),
            ),
        };
        MeasureDescriptor {
            name,
            kind,
            params: self.params.clone(),
            evaluator: self.evaluator,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> MeasureKind {
        self.kind
    }

    pub fn params(&self) -> &BTreeMap<String, f64> {
        &self.params
    }

    pub fn evaluator(&self) -> Evaluator {
        self.evaluator
    }

    /// The measure's own value on two sets (a distance or a similarity).
    pub fn evaluate(&self, a: &Ifs, b: &Ifs, w: &WeightVector) -> Result<f64> {
        let d = self.evaluator.ifs_distance(a, b, w)?;
        Ok(match self.kind {
            MeasureKind::Distance => d,
            MeasureKind::Similarity => 1.0 - d,
        })
    }

    /// Similarity score: the value itself for similarities, `1 - d` for
    /// distances.
    pub fn similarity(&self, a: &Ifs, b: &Ifs, w: &WeightVector) -> Result<f64> {
        Ok(1.0 - self.evaluator.ifs_distance(a, b, w)?)
    }
}

impl fmt::Display for MeasureDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_registry() {
        for name in ["wu", "xiao", "yc", "sim-wu", "sim-xiao", "sim-yc"] {
            let m = MeasureDescriptor::named(name).unwrap();
            assert_eq!(m.name(), name);
        }
        assert_eq!(
            MeasureDescriptor::named("sim-wu").unwrap().kind(),
            MeasureKind::Similarity
        );
        assert!(matches!(
            MeasureDescriptor::named("hamming"),
            Err(Error::UnknownMeasure(_))
        ));
        assert!(MeasureDescriptor::named("wu-lambda").is_err());
        assert!(MeasureDescriptor::named("jgamma").is_err());
        let mut p = BTreeMap::new();
        p.insert("lambda".to_owned(), 0.0);
        assert!(matches!(
            MeasureDescriptor::lookup("wu-lambda", &p),
            Err(Error::InvalidLambda(_))
        ));
        p.insert("lambda".to_owned(), 0.5);
        assert!(MeasureDescriptor::lookup("wu-lambda", &p).is_ok());
        assert!(MeasureDescriptor::lookup("wu", &p).is_err());
        let mut g = BTreeMap::new();
        g.insert("gamma".to_owned(), 1.0);
        assert!(MeasureDescriptor::lookup("jgamma", &g).is_ok());
        assert!(MeasureDescriptor::lookup("sim-jgamma", &g).is_err());
    }

    #[test]
    fn dual_round_trip() {
        let m = MeasureDescriptor::xiao();
        assert_eq!(m.dual().name(), "sim-xiao");
        assert_eq!(m.dual().dual(), m);
        let a = Ifs::singleton(Ifv::new(0.2, 0.3).unwrap());
        let b = Ifs::singleton(Ifv::new(0.6, 0.1).unwrap());
        let w = WeightVector::uniform(1);
        let d = m.evaluate(&a, &b, &w).unwrap();
        let s = m.dual().evaluate(&a, &b, &w).unwrap();
        assert_eq!(s, 1.0 - d);
        assert_eq!(m.similarity(&a, &b, &w).unwrap(), s);
    }

    #[test]
    fn jgamma_set_average() {
        let g = GammaParam::new(1.0).unwrap();
        let m = MeasureDescriptor::jgamma(g);
        let a = Ifs::from_values(vec![Ifv::FULL, Ifv::FULL]).unwrap();
        let b = Ifs::from_values(vec![Ifv::EMPTY, Ifv::FULL]).unwrap();
        let d = m.evaluate(&a, &b, &WeightVector::uniform(2)).unwrap();
        assert!((d - std::f64::consts::LN_2 / 2.0).abs() < 1e-15);
    }
}
