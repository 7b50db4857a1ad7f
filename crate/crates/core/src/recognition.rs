//! Minimum-distance (maximum-similarity) pattern recognition.

use crate::error::{Error, Result};
use crate::fuzzy::{Ifs, WeightVector};
use crate::measure::MeasureDescriptor;

/// Named patterns over a common universe, with the weights used to compare
/// samples against them.
#[derive(Debug, Clone, PartialEq)]
pub struct PatternLibrary {
    patterns: Vec<(String, Ifs)>,
    weights: WeightVector,
}

impl PatternLibrary {
    pub fn new(patterns: Vec<(String, Ifs)>, weights: WeightVector) -> Result<Self> {
        let Some((_, first)) = patterns.first() else {
            return Err(Error::InvalidConfig("pattern library is empty".into()));
        };
        weights.check_len(first.len())?;
        for (i, (name, p)) in patterns.iter().enumerate() {
            first.check_same_universe(p)?;
            if patterns[..i].iter().any(|(n, _)| n == name) {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        Ok(PatternLibrary { patterns, weights })
    }

    pub fn patterns(&self) -> &[(String, Ifs)] {
        &self.patterns
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationResult {
    /// `(pattern, similarity)`, best first; ties keep library order.
    pub scores: Vec<(String, f64)>,
    /// The best pattern, absent when the result is undecided.
    pub winner: Option<String>,
    /// True when the best two scores are within the tie tolerance.
    pub undecided: bool,
    /// Best minus second-best score; infinite with a single pattern.
    pub tie_margin: f64,
}

/// Scores `sample` against every pattern by similarity and picks the best.
pub fn classify(
    library: &PatternLibrary,
    sample: &Ifs,
    measure: &MeasureDescriptor,
    tie_tol: f64,
) -> Result<ClassificationResult> {
    if tie_tol.is_nan() || tie_tol < 0.0 {
        return Err(Error::InvalidConfig(format!(
            "tie tolerance {tie_tol} must be >= 0"
        )));
    }
    let mut scores = library
        .patterns
        .iter()
        .map(|(name, p)| {
            Ok((
                name.clone(),
                measure.similarity(p, sample, &library.weights)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    scores.sort_by(|a, b| b.1.total_cmp(&a.1));
    let tie_margin = match scores.get(1) {
        Some(second) => scores[0].1 - second.1,
        None => f64::INFINITY,
    };
    let undecided = tie_margin <= tie_tol;
    Ok(ClassificationResult {
        winner: (!undecided).then(|| scores[0].0.clone()),
        undecided,
        tie_margin,
        scores,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::Ifv;

    fn set(vals: &[(f64, f64)]) -> Ifs {
        Ifs::from_values(vals.iter().map(|&(m, n)| Ifv::new(m, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn picks_nearest_pattern() {
        let lib = PatternLibrary::new(
            vec![
                ("far".into(), set(&[(0.9, 0.0), (0.9, 0.05)])),
                ("near".into(), set(&[(0.2, 0.6), (0.3, 0.5)])),
            ],
            WeightVector::uniform(2),
        )
        .unwrap();
        let s = set(&[(0.25, 0.55), (0.3, 0.5)]);
        let r = classify(&lib, &s, &MeasureDescriptor::wu(), 1e-4).unwrap();
        assert_eq!(r.winner.as_deref(), Some("near"));
        assert!(!r.undecided);
        assert!(r.scores[0].1 >= r.scores[1].1);
    }

    #[test]
    fn ties_are_flagged() {
        let p = set(&[(0.4, 0.4)]);
        let lib = PatternLibrary::new(
            vec![("a".into(), p.clone()), ("b".into(), p.clone())],
            WeightVector::uniform(1),
        )
        .unwrap();
        let r = classify(&lib, &set(&[(0.1, 0.2)]), &MeasureDescriptor::xiao(), 0.0).unwrap();
        assert!(r.undecided);
        assert_eq!(r.winner, None);
        assert_eq!(r.scores[0].0, "a");
        assert_eq!(r.tie_margin, 0.0);
    }

    #[test]
    fn single_pattern_margin_is_infinite() {
        let lib = PatternLibrary::new(
            vec![("only".into(), set(&[(0.4, 0.4)]))],
            WeightVector::uniform(1),
        )
        .unwrap();
        let r = classify(&lib, &set(&[(0.1, 0.2)]), &MeasureDescriptor::yc(), 1e-4).unwrap();
        assert!(r.tie_margin.is_infinite());
        assert!(!r.undecided);
    }

    #[test]
    fn rejects_bad_libraries() {
        assert!(PatternLibrary::new(vec![], WeightVector::uniform(1)).is_err());
        let lib = PatternLibrary::new(
            vec![
                ("a".into(), set(&[(0.4, 0.4)])),
                ("a".into(), set(&[(0.1, 0.4)])),
            ],
            WeightVector::uniform(1),
        );
        assert!(matches!(lib, Err(Error::DuplicateLabel(_))));
        let lib = PatternLibrary::new(
            vec![("a".into(), set(&[(0.4, 0.4)]))],
            WeightVector::uniform(2),
        );
        assert!(lib.is_err());
    }
}
