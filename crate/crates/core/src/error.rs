use thiserror::Error;

/// Errors raised by the decision engine.
///
/// The variants fall into three families which the command line front end
/// maps onto distinct exit statuses: malformed input (`DimensionMismatch`,
/// `InvalidSpec`, `InvalidDescriptor`, `InvalidTorsor`, `Parse`), failed
/// classification hypotheses (`SquarefreeHypothesis`, `Undecided`), and resource
/// limits (`EnumerationCap`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid central subgroup: {0}")]
    InvalidSpec(String),

    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("invalid torsor datum: {0}")]
    InvalidTorsor(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("residue enumeration exceeded the cap of {cap} elements")]
    EnumerationCap { cap: usize },

    #[error(
        "squarefree hypothesis violated: factor {factor} has type A degree {degree}, which is not squarefree"
    )]
    SquarefreeHypothesis { factor: usize, degree: u64 },

    #[error("not decided by the available criteria: {0}")]
    Undecided(String),
}

impl Error {
    /// True for errors caused by the input itself rather than by a failed
    /// hypothesis or a resource limit.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch { .. }
                | Error::InvalidSpec(_)
                | Error::InvalidDescriptor(_)
                | Error::InvalidTorsor(_)
                | Error::Parse(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
