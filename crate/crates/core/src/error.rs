use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    InvalidCharacteristic(u32),
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("field mismatch: F_{0} vs F_{1}")]
    FieldMismatch(u32, u32),
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { got: usize, max: usize },
    #[error("exponent {0} out of range")]
    ExponentOverflow(u64),
    #[error("inhomogeneous polynomial: {0}")]
    Inhomogeneous(String),
    #[error("inconsistent degree data: {0}")]
    DegreeData(String),
    #[error("degree matrix is not normalized: {0}")]
    NotNormalized(String),
    #[error("monomial ideal is not stable: generator {generator} fails the exchange with x{j}")]
    NotStable { generator: String, j: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("expected height {expected}, found {found}")]
    HeightMismatch { expected: usize, found: usize },
    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,
    #[error("complex is not minimal: unit entry in differential {0}")]
    NotMinimal(usize),
    #[error("computation budget of {0} steps exhausted")]
    BudgetExceeded(u64),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
