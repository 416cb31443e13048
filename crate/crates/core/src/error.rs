use thiserror::Error;

/// Errors raised by the geometric operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty sequence")]
    EmptySequence,
    #[error("degenerate generator set")]
    DegenerateGenerators,
    #[error("point not in sublattice: {0:?}")]
    NotInSublattice(Vec<i64>),
    #[error("degenerate hull")]
    DegenerateHull,
    #[error("origin not interior")]
    OriginNotInterior,
    #[error("singular map")]
    SingularMap,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("not l-reflexive")]
    NotReflexive,
    #[error("index not ≡ 3 mod 6 family (k = {0} is even)")]
    NotThreeKFamily(i64),
    #[error("signature equivalence is not transitive for k = {0}")]
    IntransitiveSignatures(i64),
    #[error("loop has fewer than three points")]
    DegenerateLoop,
    #[error("loop condition ({condition}) violated at position {index}")]
    LoopCondition { condition: u8, index: usize },
    #[error("loop passes through the origin at position {0}")]
    LoopThroughOrigin(usize),
    #[error("not a simplex: {0} vertices in dimension {1}")]
    NotASimplex(usize, usize),
    #[error("no positive affine relation among the vertices")]
    NoPositiveRelation,
}

pub type Result<T> = std::result::Result<T, Error>;
