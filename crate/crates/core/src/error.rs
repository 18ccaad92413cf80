use thiserror::Error;

/// Usage, parse, and resource errors. Negative search results are not
/// errors; they are reported through the dedicated outcome types of each
/// finder.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a {n}-vertex tournament")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("vertex {0} is listed more than once")]
    DuplicateVertex(usize),

    #[error("a tournament needs at least one vertex")]
    EmptyTournament,

    #[error("a regular tournament needs an odd number of vertices, got {0}")]
    EvenOrder(usize),

    #[error("vertex {0} is not a vertex of the auxiliary graph")]
    NotInGraph(usize),

    #[error("invalid adjacency: {0}")]
    InvalidAdjacency(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("work estimate {needed} exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
