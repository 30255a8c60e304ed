use thiserror::Error;

/// Errors raised by group, parahoric and stratification computations.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element belongs to a different group context")]
    ContextMismatch,

    #[error("element lies outside the materialized ball of radius {cap}")]
    CapExceeded { cap: u32 },

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("coweight violates the lattice constraints: {0}")]
    InvalidCoweight(String),

    #[error("coweight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("generator index {index} out of range (group has {count} generators)")]
    GeneratorOutOfRange { index: usize, count: usize },

    #[error("sigma does not permute the affine simple reflections: {0}")]
    InvalidSigma(String),

    #[error("generator set {0:?} does not generate a finite group")]
    InfiniteParabolic(Vec<usize>),

    #[error("parahoric {gens:?} is not stable under sigma")]
    SigmaUnstable { gens: Vec<usize> },

    #[error("{0} is not a minimal double coset representative")]
    InvalidRepresentative(String),

    #[error("{0}")]
    NotMember(String),

    #[error("invalid level: {0}")]
    InvalidLevel(String),

    #[error("{0} is not sigma-straight")]
    NotStraight(String),

    #[error("could not parse element {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("internal consistency violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
