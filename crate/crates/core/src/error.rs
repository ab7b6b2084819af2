use thiserror::Error;

use crate::exactnum::Spin;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid spin: twice-value {0} is negative")]
    InvalidSpin(i64),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("radicands differ: sqrt({0}) and sqrt({1}) cannot be added")]
    IncompatibleRadicands(String, String),

    #[error("negative radicand {0}")]
    NegativeRadicand(String),

    #[error("6j symbol {symbol} has invalid triads: {triads:?}")]
    InvalidTriads { symbol: String, triads: Vec<[Spin; 3]> },

    #[error("phase (-1)^n requested for non-integer n = {twice_exponent}/2")]
    PhaseParityError { twice_exponent: i64 },

    #[error("Regge transform of {0} produces a negative spin")]
    NegativeSpinAfterTransform(String),

    #[error("quadrangle ({0}) admits no valid pair of diagonals")]
    UnrealizableQuadrangle(String),

    #[error("invalid Biedenharn-Elliott instance: failing triads {0:?}")]
    InvalidInstance(Vec<[Spin; 3]>),

    #[error("invalid incidence structure: {0}")]
    InvalidStructure(String),

    #[error("malformed labels: {0}")]
    MalformedLabels(String),

    #[error("triad violation at {} point(s): {0:?}", .0.len())]
    TriadViolation(Vec<TriadFailure>),

    #[error("label transfer mismatch: {0}")]
    LabelTransferMismatch(String),

    #[error("requested max twice-spin {requested} exceeds ceiling {ceiling}")]
    CeilingExceeded { requested: u32, ceiling: u32 },

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

/// A point (or triangle) whose three incident spins fail the triad rule.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct TriadFailure {
    pub location: String,
    pub spins: [Spin; 3],
}
