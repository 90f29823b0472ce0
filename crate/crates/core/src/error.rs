use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Graph invariant violations reported by the parser and [`crate::graph::Graph`] constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("loop at vertex {vertex} (edge {edge})")]
    Loop { edge: String, vertex: String },
    #[error("duplicate edge {u}-{v} (edges {first} and {second})")]
    DuplicateEdge {
        u: String,
        v: String,
        first: String,
        second: String,
    },
    #[error("duplicate edge label {0}")]
    DuplicateLabel(String),
    #[error("vertex index {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid graph: {0}")]
    Validation(#[from] ValidationError),
    #[error("{what} too large: {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("cycle enumeration exceeded the cap of {limit} cycles")]
    CycleOverflow { limit: usize },
    #[error("DNF expansion exceeded the cap of {limit} cubes")]
    ExpansionOverflow { limit: usize },
    #[error("assignment width {got} does not match formula width {expected}")]
    WidthMismatch { expected: usize, got: usize },
    #[error("brute-force search over {m} variables exceeds the limit of {limit}")]
    TooManyVariables { m: usize, limit: usize },
    #[error("malformed model: {0}")]
    ModelParse(String),
    #[error("model variable {var} out of range (instance has {num_vars} variables)")]
    VarOutOfRange { var: i64, num_vars: usize },
    #[error("model does not satisfy the encoding: {0}")]
    ModelInvalid(String),
    #[error("lazy refinement did not converge within {rounds} rounds ({blocks_added} blocks added)")]
    RoundLimitExceeded { rounds: usize, blocks_added: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable short code printed by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "E_PARSE",
            Error::Validation(_) => "E_VALIDATION",
            Error::TooLarge { .. } => "E_TOO_LARGE",
            Error::CycleOverflow { .. } => "E_CYCLE_OVERFLOW",
            Error::ExpansionOverflow { .. } => "E_EXPANSION_OVERFLOW",
            Error::WidthMismatch { .. } => "E_WIDTH_MISMATCH",
            Error::TooManyVariables { .. } => "E_TOO_MANY_VARIABLES",
            Error::ModelParse(_) => "E_MODEL_PARSE",
            Error::VarOutOfRange { .. } => "E_VAR_OUT_OF_RANGE",
            Error::ModelInvalid(_) => "E_MODEL_INVALID",
            Error::RoundLimitExceeded { .. } => "E_ROUND_LIMIT",
            Error::InvalidArgument(_) => "E_INVALID_ARGUMENT",
            Error::Internal(_) => "E_INTERNAL",
        }
    }

    /// True for errors caused by a size cap rather than bad input.
    pub fn is_cap_overflow(&self) -> bool {
        matches!(
            self,
            Error::TooLarge { .. }
                | Error::CycleOverflow { .. }
                | Error::ExpansionOverflow { .. }
                | Error::TooManyVariables { .. }
                | Error::RoundLimitExceeded { .. }
        )
    }
}
