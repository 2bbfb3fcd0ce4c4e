use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Dimensions, sources or targets do not line up.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A hom object or enumeration would exceed the configured bound.
    #[error("resource bound exceeded: {what} needs {size}, limit is {limit}")]
    Resource { what: String, size: String, limit: usize },

    /// Proposed structure maps fail the monoid axioms.
    #[error("not a monoid: {0}")]
    NotMonoid(String),

    #[error("monoid is not solid: {0}")]
    NotSolid(String),

    #[error("functor is not idempotent: {0}")]
    NotIdempotent(String),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("solution is not unique: {0}")]
    NonUnique(String),

    /// A test universe lacks the images a check needs.
    #[error("universe not closed under the functor: {0}")]
    NotClosed(String),

    /// The construction leaves the computable fragment of this category.
    #[error("unsupported in this category: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    Input(String),

    /// An invariant that the theory guarantees was violated.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
