use std::fmt;

/// A syntax or schema error at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] polyshift::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("routes disagree: {0}")]
    Disagreement(String),
}

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const PRECONDITION: i32 = 2;
    pub const RESOURCE: i32 = 3;
    pub const DISAGREEMENT: i32 = 4;
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use polyshift::Error as E;
        match self {
            CliError::Parse(_) | CliError::Usage(_) | CliError::Io(_) => exit::USAGE,
            CliError::Disagreement(_) => exit::DISAGREEMENT,
            CliError::Core(e) => match e {
                E::InvalidSpec(_) | E::InvalidOrder(_) | E::DimensionMismatch { .. } | E::VariableOutOfRange { .. } => {
                    exit::USAGE
                }
                E::ResourceCap { .. } | E::BudgetExhausted(_) | E::Overflow => exit::RESOURCE,
                E::Internal(_) => exit::DISAGREEMENT,
                _ => exit::PRECONDITION,
            },
        }
    }
}
