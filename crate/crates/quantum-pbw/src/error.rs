//! Error types shared across the crate.

use thiserror::Error;

/// Errors from exact arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// The rational function has no expansion in `Z((t))` (the denominator's
    /// lowest term is not a unit after factoring out powers of `t`).
    #[error("no Z((t)) expansion bounded below: {0}")]
    NotBoundedBelow(String),
}

/// Errors from root-system and word combinatorics.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("enumeration exceeded cap of {0} reduced words")]
    CapExceeded(usize),
    #[error("word is not reduced or not a word for w0: {0:?}")]
    NotReducedWord(Vec<usize>),
    #[error("local pattern does not match a {kind}-move at position {pos}")]
    PatternMismatch { pos: usize, kind: u8 },
    #[error("vertex {0} is neither a sink nor a source")]
    NotSinkOrSource(usize),
}

/// Errors from the word-space model and its linear algebra.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("weight mismatch")]
    WeightMismatch,
    #[error("element is not in the span of monomial images")]
    NotInSpan,
}

/// Errors from the PBW engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PbwError {
    #[error("no minimal pair found for root index {0} (internal inconsistency)")]
    NoMinimalPair(usize),
    #[error("lower PBW classes are not linearly independent (internal failure)")]
    SingularBasis,
    #[error("Saito shift requires the last coordinate to be zero")]
    NonzeroLastCoordinate,
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// Errors from the canonical-basis layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GlobalError {
    #[error("bar matrix is not unitriangular w.r.t. <_i (convention bug): {0}")]
    TriangularityViolation(String),
    #[error("canonical-basis recursion has no solution: {0}")]
    NoSolution(String),
    #[error("canonical-basis coefficient is not a Laurent polynomial: {0}")]
    NonPolynomialCoefficient(String),
    #[error("Gram matrix of the canonical basis is singular")]
    SingularGram,
    #[error("requested parameters out of configured range: {0}")]
    RangeExceeded(String),
    #[error(transparent)]
    Pbw(#[from] PbwError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Errors from the KLR rewriting oracle.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KlrError {
    #[error("generator index {0} out of range for n = {1}")]
    IndexOutOfRange(usize, usize),
    #[error("rewriting exceeded the step cap (bug signal)")]
    NonTermination,
    #[error("weight mismatch between words")]
    WeightMismatch,
    #[error("requested parameters out of configured range: {0}")]
    RangeExceeded(String),
}

/// Errors from the quiver-representation oracle.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("representations live over different orientations")]
    OrientationMismatch,
    #[error("vertex {0} is not a sink")]
    NotSink(usize),
    #[error("vertex {0} is not a source")]
    NotSource(usize),
    #[error("weight mismatch")]
    WeightMismatch,
}
