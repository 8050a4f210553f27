use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    BadLabel { vertex: usize, order: usize },

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("invalid family parameters: {0}")]
    BadFamilyParams(String),

    #[error("the branch at {root} is already a pendent path")]
    BranchIsAlreadyPath { root: usize },

    #[error("not pendent paths: {0}")]
    NotPendentPaths(String),

    #[error("arm lengths out of order: long arm has {long}, short arm has {short}")]
    LengthOrderViolated { long: usize, short: usize },

    #[error("inconsistent component sizes: {0}")]
    InconsistentSizes(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("non-integer result in {0}")]
    NonIntegerResult(String),

    #[error("order {order} has the wrong parity (expected {expected})")]
    ParityError { order: usize, expected: &'static str },

    #[error("neither square-case construction is TI at order {0}")]
    DichotomyViolated(usize),

    #[error("tree is not transmission irregular")]
    NotTi,

    #[error("order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("verification failed at order {order}: {detail}")]
    VerificationFailed { order: usize, detail: String },

    #[error("certificate mismatch: {0}")]
    CertificateMismatch(String),

    #[error("malformed sparse6: {0}")]
    MalformedSparse6(String),

    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("arithmetic overflow in {0}")]
    Overflow(String),
}
