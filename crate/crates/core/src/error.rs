use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failure raised by an [`Objective`](crate::Objective) implementation.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{0}")]
pub struct ObjectiveError(pub String);

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("fitness of member {member} has not been evaluated")]
    StaleFitness { member: usize },

    #[error("objective failed at group {group}, member {member}: {source}")]
    Evaluation {
        group: usize,
        member: usize,
        #[source]
        source: ObjectiveError,
    },

    #[error("{0}")]
    Domain(String),

    #[error("run aborted after {} iterations: {source}", partial.iterations_run)]
    Aborted {
        partial: Box<crate::engine::RunReport>,
        #[source]
        source: Box<Error>,
    },
}
