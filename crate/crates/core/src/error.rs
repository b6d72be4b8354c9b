use thiserror::Error;

/// Errors surfaced by the library. The CLI maps each family onto an exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on the caller's input failed.
    #[error("input error: {0}")]
    Input(String),

    /// A DIMACS (or other text) input could not be parsed.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An exact search or resampling loop ran out of budget. `lower`/`upper`
    /// carry the best bounds known when the search stopped, if any.
    #[error("resource limit reached: {message} (bounds {lower:?}..={upper:?})")]
    Resource {
        message: String,
        lower: Option<usize>,
        upper: Option<usize>,
    },

    /// The graph has an odd cycle; the witness lists its vertices in order.
    #[error("graph is not bipartite; odd cycle {cycle:?}")]
    NotBipartite { cycle: Vec<usize> },

    /// An exhaustive search proved that no assignment exists.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// An invariant the construction guarantees did not hold.
    #[error("internal consistency violation: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource {
            message: msg.into(),
            lower: None,
            upper: None,
        }
    }

    /// Exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Parse { .. } | Error::NotBipartite { .. } => 2,
            Error::Resource { .. } | Error::Infeasible(_) => 3,
            Error::Consistency(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
