use thiserror::Error;

/// Errors produced by algebra construction and the counting operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation at vertex {start} with {arrows} arrows leaves the quiver (needs start + arrows <= {n})")]
    RelationOutOfRange { start: usize, arrows: usize, n: usize },
    #[error("relation at vertex {start} has {arrows} arrow(s); admissible relations compose at least 2")]
    RelationTooShort { start: usize, arrows: usize },
    #[error("relation set is not minimal: {0}")]
    NonMinimalSet(String),
    #[error("duplicate relation {start}:{arrows}")]
    DuplicateRelation { start: usize, arrows: usize },
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("invalid preset parameters: {0}")]
    InvalidPresetParams(String),
    #[error("interval [{a},{b}] is not a module of this algebra")]
    NotAModule { a: usize, b: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("formula not applicable: {0}")]
    NotApplicable(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("unknown sequence '{0}'")]
    UnknownSequence(String),
    #[error("invalid algebra description: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
