use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("polynomial: {0}")]
    Polynomial(String),
    #[error("braid word: {0}")]
    Braid(String),
    #[error("R-matrix file: {0}")]
    RMatrix(String),
    #[error("chord diagram: {0}")]
    Chord(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("ragged matrix data")]
    Ragged,
    #[error("inexact division in the Laurent ring")]
    InexactDivision,
    #[error("matrix is not invertible over the Laurent ring")]
    Singular,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("braid needs at least one strand")]
    NoStrands,
    #[error("letter position {pos} out of range for word of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("expected a {expected} letter at position {pos}")]
    KindMismatch { pos: usize, expected: &'static str },
    #[error("cannot destabilize: {0}")]
    InvalidDestabilization(&'static str),
    #[error("component {0} does not exist")]
    NoSuchComponent(usize),
    #[error("linking number needs two distinct components")]
    SameComponent,
    #[error("strand cap {cap} exceeded")]
    StrandCap { cap: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("word contains singular letters; the skein evaluator needs an ordinary braid")]
    SingularLetter,
    #[error("closure has {0} components, expected a knot")]
    NotAKnot(usize),
    #[error("representation dimension {dim} exceeds cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("expansion order {order} below singular count {singular}")]
    OrderTooLow { order: usize, singular: usize },
    #[error("invalid R-matrix: {0}")]
    InvalidRMatrix(String),
    #[error("enhanced R-matrix failed validation: {0}")]
    Validation(String),
    #[error("rescaling factor must be an invertible monomial")]
    NonInvertibleScale,
    #[error("chord diagram order {order} outside 1..={cap}")]
    OrderCap { order: usize, cap: usize },
}
