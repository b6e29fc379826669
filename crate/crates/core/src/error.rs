use thiserror::Error;

/// Errors produced while loading instances or running the solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid instance: {0}")]
    Invalid(String),

    #[error("weight overflow: twice the total edge weight does not fit in 64 bits")]
    WeightOverflow,

    #[error("bad-pair explosion: more than {cap} bad edge pairs")]
    BadPairExplosion { cap: usize },

    #[error("search space guard exceeded: {} candidates (limit {limit})", approx(*.size))]
    SearchSpace { size: u128, limit: u128 },

    #[error("time limit exceeded")]
    TimedOut,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// Guard and timeout failures, as opposed to malformed input.
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            Error::BadPairExplosion { .. } | Error::SearchSpace { .. } | Error::TimedOut
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

fn approx(size: u128) -> String {
    if size == u128::MAX {
        "more than 2^127".into()
    } else if size < 1 << 64 {
        size.to_string()
    } else {
        format!("about 2^{}", 127 - size.leading_zeros())
    }
}
