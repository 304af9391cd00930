use thiserror::Error;

/// Errors raised by the library and the command-line front end.
///
/// Every variant maps to a stable machine code (see [`Error::code`]); the
/// codes are part of the CLI contract.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("unknown irreducible polynomial `{0}`")]
    UnknownIrreducible(String),
    #[error("invalid Brauer class: {0}")]
    InvalidClass(String),
    #[error("irreducible `{poly}` has no splitting data at place `{place}`")]
    MissingSplittingData { poly: String, place: String },
    #[error("characteristic polynomial has degree {found}, expected {expected}")]
    DegreeMismatch { expected: u64, found: u64 },
    #[error("not a characteristic polynomial of the algebra: {0}")]
    InvalidCharpoly(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("characteristic polynomials differ")]
    CharpolyMismatch,
    #[error("irreducible `{0}` carries no rational coefficients")]
    MissingCoefficients(String),
    #[error("characteristic polynomial has factors outside the registry ({0} dimensions unaccounted)")]
    UnregisteredFactor(usize),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("parabolics are not nested")]
    NotNested,
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse-error",
            Error::Schema(_) => "schema-error",
            Error::UnknownIrreducible(_) => "unknown-irreducible",
            Error::InvalidClass(_) => "invalid-class",
            Error::MissingSplittingData { .. } => "missing-splitting-data",
            Error::DegreeMismatch { .. } => "degree-mismatch",
            Error::InvalidCharpoly(_) => "invalid-charpoly",
            Error::AlgebraMismatch(_) => "algebra-mismatch",
            Error::CharpolyMismatch => "charpoly-mismatch",
            Error::MissingCoefficients(_) => "missing-coefficients",
            Error::UnregisteredFactor(_) => "unregistered-factor",
            Error::InvalidComposition(_) => "invalid-composition",
            Error::NotARoot(_) => "not-a-root",
            Error::NotNested => "not-nested",
        }
    }

    /// Domain errors are everything except malformed or incomplete input.
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::Parse(_) | Error::Schema(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
