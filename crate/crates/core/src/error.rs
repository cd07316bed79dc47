use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("profile {index} is empty")]
    EmptyProfile { index: usize },
    #[error("profile {index} has non-positive entry")]
    NonPositiveEntry { index: usize },
    #[error("negative Schubert index {0}")]
    NegativeIndex(i64),
    #[error("Grassmannian Gr(2, {0}) needs N >= 2")]
    ContextTooSmall(i64),
    #[error("mismatched contexts Gr(2, {0}) and Gr(2, {1})")]
    ContextMismatch(u32, u32),
    #[error("operation requires ell >= 0, got {0}")]
    NegativeEll(i64),
    #[error("invalid genus-0 problem: {0}")]
    InvalidProblem(&'static str),
    #[error("repeated source point at indices {0} and {1}")]
    RepeatedSourcePoint(usize, usize),
    #[error("repeated target point at indices {0} and {1}")]
    RepeatedTargetPoint(usize, usize),
    #[error("target point {0} is [0:0]")]
    DegenerateTarget(usize),
    #[error("malformed point configuration: {0}")]
    MalformedConfig(&'static str),
}
