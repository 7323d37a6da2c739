use thiserror::Error;

/// Errors raised by the relation, graph and enumeration operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("object mismatch: expected {expected}, found {found}")]
    ObjectMismatch { expected: String, found: String },

    #[error("element {element} is not in {set}")]
    UnknownElement { element: String, set: String },

    #[error("duplicate element {0}")]
    DuplicateElement(String),

    #[error("relation on {dom} -> {cod} is not an endomorphism")]
    NotEndomorphism { dom: String, cod: String },

    #[error("relation is not positive")]
    NotPositive,

    #[error("relation is not completely positive")]
    NotCompletelyPositive,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("edge endpoint {0} is not a vertex")]
    DanglingEdge(String),

    #[error("relabelling of {0} is not injective")]
    NotInjective(String),

    #[error("enumeration bound exceeded: {size} > {bound}")]
    BoundExceeded { size: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
