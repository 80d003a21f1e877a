use thiserror::Error;

use crate::invariants::Triple;

/// Errors produced by geometry, invariant evaluation, verification and
/// imaging. Indices in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index {index} is out of range for a configuration of {n} points")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("indices must be pairwise distinct, got {0:?}")]
    RepeatedIndex(Vec<usize>),

    #[error("configuration needs at least {needed} points, got {got}")]
    ConfigTooSmall { needed: usize, got: usize },

    #[error("homography is singular (zero determinant)")]
    SingularHomography,

    /// A sample is sent to the line at infinity (`c1·x + c2·y + c3 = 0`).
    #[error("{}", match .index {
        Some(i) => format!("degenerate transform: sample {i} is mapped to infinity"),
        None => "degenerate transform: point is mapped to infinity".to_string(),
    })]
    DegenerateTransform { index: Option<usize> },

    #[error("singular configuration: Δ{0} vanishes in a denominator")]
    SingularConfiguration(Triple),

    #[error("non-generic configuration: {}", .0.join("; "))]
    NonGeneric(Vec<String>),

    #[error("keypoint {0} lies outside the field domain")]
    OutOfDomain(usize),

    #[error("malformed image: {0}")]
    MalformedImage(String),

    #[error("weight system has no rational solution")]
    Infeasible,

    #[error("no generic sample found after {0} attempts")]
    GenericityFailure(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
