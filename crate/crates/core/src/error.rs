use thiserror::Error;

use crate::perm::Arc;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error in cycle notation {text:?}: {reason}")]
    Syntax { text: String, reason: String },
    #[error("index {index} out of range for size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("endpoint {0} appears in more than one cycle")]
    Overlap(usize),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("arc {0} is not in the support")]
    ArcNotInSupport(Arc),
    #[error("arc {0} is not a minimal element of the support")]
    NotMinimal(Arc),
    #[error("{partner} is not an a-candidate for {arc}")]
    NotACandidate { arc: Arc, partner: Arc },
    #[error("{partner} is not a b-candidate for {arc}")]
    NotBCandidate { arc: Arc, partner: Arc },
    #[error("({alpha},{beta}) is not a c-candidate for {arc}")]
    NotCCandidate { arc: Arc, alpha: usize, beta: usize },
    #[error("move result is not an involution: {0}")]
    InvalidResult(String),
    #[error("move is not applicable: {0}")]
    MoveNotApplicable(String),
    #[error("limit at 0 is undefined at entry ({row},{col})")]
    LimitUndefined { row: usize, col: usize },
    #[error("matrix is singular")]
    SingularElement,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("matrix is not upper-triangular")]
    NotUpperTriangular,
    #[error("matrix is not strictly lower-triangular")]
    NotStrictlyLower,
    #[error("xi map has no value for arc {0}")]
    MissingArc(Arc),
    #[error("xi map assigns zero to arc {0}")]
    ZeroXi(Arc),
    #[error("involution is not in the poset")]
    NotInPoset,
    #[error("support is not a chain")]
    NotChain,
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("n = {n} exceeds the bound {bound} for {what}")]
    BoundExceeded { what: String, n: usize, bound: usize },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
}
