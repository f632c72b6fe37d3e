use thiserror::Error;

/// Errors raised by cobordism operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("map entry {value} at index {index} is outside codomain of size {cod}")]
    NotTotal { index: usize, value: usize, cod: usize },

    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),

    #[error("square does not commute")]
    NonCommutingSquare,

    #[error("invalid cobordism: {}", .0.join("; "))]
    Invalid(Vec<String>),

    #[error("class precondition violated: {0}")]
    ClassPrecondition(String),

    #[error("factorizations admit no alignment")]
    NoAlignment,

    #[error("factorizations admit more than one alignment")]
    MultipleAlignments,

    #[error("infeasible sign profile: {0}")]
    InfeasibleSignProfile(String),

    #[error("genus overflow")]
    GenusOverflow,

    #[error("internal invariant breached: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
