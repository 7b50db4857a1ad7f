use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{field} = {value} is outside [0, 1]")]
    OutOfRange { field: &'static str, value: f64 },

    #[error("mu + nu = {sum} exceeds 1 (mu = {mu}, nu = {nu})")]
    SimplexViolation { mu: f64, nu: f64, sum: f64 },

    #[error("universes differ: {0}")]
    UniverseMismatch(String),

    #[error("universe must contain at least one element")]
    EmptyUniverse,

    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),

    #[error("{labels} labels but {values} values")]
    LengthMismatch { labels: usize, values: usize },

    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),

    #[error("weight vector has length {got}, universe has {expected} elements")]
    WeightLengthMismatch { expected: usize, got: usize },

    #[error("L(p, q) requires p, q >= 0, got p = {p}, q = {q}")]
    NegativeInput { p: f64, q: f64 },

    #[error("lambda must be > 0, got {0}")]
    InvalidLambda(f64),

    #[error("gamma must be > 0, got {0}")]
    InvalidGamma(f64),

    #[error("unknown measure {0:?}")]
    UnknownMeasure(String),

    #[error("measure {name:?} is a {actual}, expected a {expected}")]
    MeasureKind {
        name: String,
        expected: &'static str,
        actual: &'static str,
    },

    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),

    #[error("unknown curve family {0:?}")]
    UnknownFamily(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("internal consistency violated: {0}")]
    InternalConsistency(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("validation error in {location}: {message}")]
    Validation { location: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
