//! JSON dataset files: a universe, named sets of `[mu, nu]` pairs and
//! optional weights.
//!
//! ```json
//! {
//!   "universe": ["x1", "x2"],
//!   "sets": { "A": [[0.3, 0.2], [0.4, 0.3]], "B": [[0.15, 0.25], [0.25, 0.35]] },
//!   "weights": [0.5, 0.5]
//! }
//! ```

use std::path::Path;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuzzy::{Ifs, Ifv, WeightVector};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DatasetFile {
    universe: Vec<String>,
    sets: IndexMap<String, Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<f64>>,
}

/// Validated sets over one universe, in file order.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    universe: Vec<String>,
    sets: IndexMap<String, Ifs>,
    weights: Option<WeightVector>,
}

/// Names accepted by [`Dataset::builtin`].
pub const BUILTIN: &[&str] = &[
    "tableI_case1",
    "tableI_case2",
    "tableI_case3",
    "tableI_case4",
    "tableI_case5",
    "tableI_case3_printed",
    "tableI_case4_printed",
    "tableIII",
    "example1",
    "example4",
];

impl Dataset {
    pub fn new(
        universe: Vec<String>,
        sets: IndexMap<String, Ifs>,
        weights: Option<WeightVector>,
    ) -> Result<Self> {
        if universe.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        for (name, s) in &sets {
            if s.universe() != universe.as_slice() {
                return Err(Error::Validation {
                    location: format!("set {name:?}"),
                    message: "universe differs from the dataset universe".into(),
                });
            }
        }
        if let Some(w) = &weights {
            w.check_len(universe.len())?;
        }
        Ok(Dataset {
            universe,
            sets,
            weights,
        })
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: DatasetFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Self::from_file(file)
    }

    fn from_file(file: DatasetFile) -> Result<Self> {
        let n = file.universe.len();
        if n == 0 {
            return Err(Error::Validation {
                location: "universe".into(),
                message: "must contain at least one label".into(),
            });
        }
        let mut sets = IndexMap::with_capacity(file.sets.len());
        for (name, pairs) in file.sets {
            if pairs.len() != n {
                return Err(Error::Validation {
                    location: format!("set {name:?}"),
                    message: format!("{} pairs for a universe of {n}", pairs.len()),
                });
            }
            let values = pairs
                .iter()
                .zip(&file.universe)
                .enumerate()
                .map(|(i, ([mu, nu], label))| {
                    Ifv::new(*mu, *nu).map_err(|e| Error::Validation {
                        location: format!("set {name:?}, element {i} ({label}), pair [{mu}, {nu}]"),
                        message: e.to_string(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let ifs = Ifs::new(file.universe.clone(), values).map_err(|e| Error::Validation {
                location: "universe".into(),
                message: e.to_string(),
            })?;
            sets.insert(name, ifs);
        }
        let weights = file
            .weights
            .map(|w| {
                if w.len() != n {
                    return Err(Error::Validation {
                        location: "weights".into(),
                        message: format!("{} weights for a universe of {n}", w.len()),
                    });
                }
                WeightVector::new(w).map_err(|e| Error::Validation {
                    location: "weights".into(),
                    message: e.to_string(),
                })
            })
            .transpose()?;
        Ok(Dataset {
            universe: file.universe,
            sets,
            weights,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }

    /// A file path if one exists, otherwise a built-in dataset name.
    pub fn resolve(source: &str) -> Result<Self> {
        let path = Path::new(source);
        if path.exists() {
            return Self::load(path);
        }
        Self::builtin(source).ok_or_else(|| {
            Error::Io(format!(
                "{source}: no such file or built-in dataset (built-ins: {})",
                BUILTIN.join(", ")
            ))
        })
    }

    pub fn to_json_string(&self) -> String {
        let file = DatasetFile {
            universe: self.universe.clone(),
            sets: self
                .sets
                .iter()
                .map(|(k, s)| {
                    (
                        k.clone(),
                        s.values().iter().map(|a| [a.mu(), a.nu()]).collect(),
                    )
                })
                .collect(),
            weights: self.weights.as_ref().map(|w| w.as_slice().to_vec()),
        };
        let mut out = serde_json::to_string_pretty(&file).expect("dataset serializes");
        out.push('\n');
        out
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json_string())?;
        Ok(())
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn sets(&self) -> &IndexMap<String, Ifs> {
        &self.sets
    }

    pub fn weights(&self) -> Option<&WeightVector> {
        self.weights.as_ref()
    }

    pub fn get(&self, name: &str) -> Result<&Ifs> {
        self.sets.get(name).ok_or_else(|| Error::Validation {
            location: format!("set {name:?}"),
            message: format!(
                "not in dataset (available: {})",
                self.sets.keys().cloned().collect::<Vec<_>>().join(", ")
            ),
        })
    }

    /// File weights if present, otherwise uniform.
    pub fn weights_or_uniform(&self) -> WeightVector {
        self.weights
            .clone()
            .unwrap_or_else(|| WeightVector::uniform(self.universe.len()))
    }

    pub fn builtin(name: &str) -> Option<Self> {
        let a1 = [[0.30, 0.20], [0.40, 0.30]];
        let a3 = [[0.50, 0.40], [0.40, 0.30]];
        let b1 = [[0.15, 0.25], [0.25, 0.35]];
        let b2 = [[0.16, 0.26], [0.26, 0.36]];
        let pair = |a: [[f64; 2]; 2], b: [[f64; 2]; 2]| {
            raw(&["x1", "x2"], &[("A", &a), ("B", &b)], Some(&[0.5, 0.5]))
        };
        let file = match name {
            "tableI_case1" => pair(a1, b1),
            "tableI_case2" => pair(a1, b2),
            // Cases 3 and 4 as printed reuse B from cases 1 and 2; these B
            // reproduce the published distances
            "tableI_case3" => pair(a3, [[0.40, 0.40], [0.50, 0.40]]),
            "tableI_case4" => pair(a3, [[0.60, 0.30], [0.30, 0.20]]),
            "tableI_case5" => pair(a1, [[0.45, 0.15], [0.55, 0.25]]),
            "tableI_case3_printed" => pair(a3, b1),
            "tableI_case4_printed" => pair(a3, b2),
            "tableIII" => raw(
                &["x1", "x2", "x3"],
                &[
                    ("P1", &[[0.15, 0.25], [0.25, 0.35], [0.35, 0.45]]),
                    ("P2", &[[0.05, 0.15], [0.15, 0.25], [0.25, 0.35]]),
                    ("P3", &[[0.16, 0.26], [0.26, 0.36], [0.36, 0.46]]),
                    ("S1", &[[0.30, 0.20], [0.40, 0.30], [0.50, 0.40]]),
                ],
                Some(&[1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]),
            ),
            "example1" => raw(
                &["x"],
                &[
                    ("I1", &[[0.33, 0.36]]),
                    ("I2", &[[1.0 / 3.0, 1.0 / 3.0]]),
                    ("I3", &[[0.334, 0.333333]]),
                ],
                None,
            ),
            "example4" => raw(
                &["x"],
                &[
                    ("I1", &[[0.5, 0.5]]),
                    ("I2", &[[0.6, 0.3]]),
                    ("I3", &[[0.7, 0.3]]),
                ],
                None,
            ),
            _ => return None,
        };
        Some(Self::from_file(file).expect("built-in dataset is valid"))
    }
}

fn raw(universe: &[&str], sets: &[(&str, &[[f64; 2]])], weights: Option<&[f64]>) -> DatasetFile {
    DatasetFile {
        universe: universe.iter().map(|s| (*s).to_owned()).collect(),
        sets: sets
            .iter()
            .map(|(k, v)| ((*k).to_owned(), v.to_vec()))
            .collect(),
        weights: weights.map(<[f64]>::to_vec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_iii_builtin() {
        let d = Dataset::builtin("tableIII").unwrap();
        let names: Vec<&String> = d.sets().keys().collect();
        assert_eq!(names, ["P1", "P2", "P3", "S1"]);
        assert_eq!(d.universe(), ["x1", "x2", "x3"]);
        assert_eq!(
            d.get("S1").unwrap().values()[2],
            Ifv::new(0.5, 0.4).unwrap()
        );
    }

    #[test]
    fn all_builtins_load_and_round_trip() {
        for name in BUILTIN {
            let d = Dataset::builtin(name).unwrap();
            let again = Dataset::from_json_str(&d.to_json_string()).unwrap();
            assert_eq!(d, again, "{name}");
        }
        assert!(Dataset::builtin("nope").is_none());
    }

    #[test]
    fn invalid_pair_is_located() {
        let text = r#"{"universe":["x1","x2"],"sets":{"A":[[0.3,0.2],[0.7,0.4]]}}"#;
        match Dataset::from_json_str(text) {
            Err(Error::Validation { location, .. }) => {
                assert!(location.contains("\"A\""), "{location}");
                assert!(location.contains("element 1"), "{location}");
                assert!(location.contains("[0.7, 0.4]"), "{location}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bad_weight_sum() {
        let text = r#"{"universe":["a","b","c"],"sets":{},"weights":[0.5,0.5,0.1]}"#;
        assert!(matches!(
            Dataset::from_json_str(text),
            Err(Error::Validation { location, .. }) if location == "weights"
        ));
    }

    #[test]
    fn parse_error_has_position() {
        let text = "{\n  \"universe\": [\"a\"],\n  \"sets\": {\"A\": [[0.1, ]]}\n}";
        match Dataset::from_json_str(text) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn length_and_label_checks() {
        let short = r#"{"universe":["a","b"],"sets":{"A":[[0.1,0.2]]}}"#;
        assert!(matches!(
            Dataset::from_json_str(short),
            Err(Error::Validation { .. })
        ));
        let dup = r#"{"universe":["a","a"],"sets":{"A":[[0.1,0.2],[0.1,0.2]]}}"#;
        assert!(Dataset::from_json_str(dup).is_err());
        let unknown = r#"{"universe":["a"],"sets":{},"extra":1}"#;
        assert!(matches!(
            Dataset::from_json_str(unknown),
            Err(Error::Parse { .. })
        ));
    }
}
