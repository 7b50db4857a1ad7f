//! Jensen–Shannon distance, similarity and entropy measures for
//! intuitionistic fuzzy sets, with rival measures, a sampled axiom auditor
//! and a minimum-distance pattern classifier.
//!
//! ```
//! use ifjs::{Ifs, Ifv, WeightVector, dist_wu};
//!
//! let a = Ifs::from_values(vec![Ifv::new(0.5, 0.4)?, Ifv::new(0.4, 0.3)?])?;
//! let b = Ifs::from_values(vec![Ifv::new(0.6, 0.3)?, Ifv::new(0.3, 0.2)?])?;
//! let d = dist_wu(&a, &b, &WeightVector::uniform(2))?;
//! assert!(d > 0.0 && d < 1.0);
//! # Ok::<(), ifjs::Error>(())
//! ```

pub mod audit;
pub mod baselines;
pub mod cli;
pub mod dataset;
pub mod error;
pub mod fuzzy;
pub mod jsd;
pub mod measure;
pub mod recognition;
pub mod repro;

pub use audit::{audit_distance, audit_entropy, AuditConfig, Axiom, AxiomReport, Verdict};
pub use baselines::{dist_xiao, dist_yc, j_gamma, sim_xiao, sim_yc, GammaParam};
pub use dataset::Dataset;
pub use error::{Error, Result};
pub use fuzzy::{Ifs, Ifv, WeightVector};
pub use jsd::{
    dist_wu, dist_wu_lambda, entropy_ifs, entropy_ifv, js_if, js_norm, js_norm_lambda,
    l_divergence, sim_wu, sim_wu_lambda, zeta, LambdaParam,
};
pub use measure::{MeasureDescriptor, MeasureKind};
pub use recognition::{classify, ClassificationResult, PatternLibrary};

/// Formats a float with 17 significant digits, enough to round-trip.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}
