use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("slot count mismatch: {0} vs {1}")]
    SlotMismatch(usize, usize),
    #[error("invalid slot pair ({0}, {1}) for {2} slots")]
    InvalidPair(usize, usize, usize),
    #[error("negative difference exponent would result at pair ({0}, {1})")]
    NegativeExponent(usize, usize),
    #[error("coincident insertion points z{0} = z{1}")]
    CoincidentPoints(usize, usize),
    #[error("expected {expected} insertion points, got {got}")]
    PointCount { expected: usize, got: usize },
    #[error("unknown render format `{0}`")]
    UnknownFormat(String),
    #[error("rank must be at least 1")]
    InvalidRank,
    #[error("level must be a positive integer, got {0}")]
    InvalidLevel(Rational),
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("vector is not homogeneous")]
    Inhomogeneous,
    #[error("vector dimension {got} does not match space dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("type A generators need a in h and b in h*")]
    WrongHalves,
    #[error("Jordan type mismatch")]
    TypeMismatch,
    #[error("modes of a quadratic generator must be at least 1")]
    InvalidMode,
    #[error("product left the span of quadratics and the vacuum")]
    DecompositionResidue,
    #[error("matrix size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("permutation has a fixed point at {0}")]
    FixedPoint(usize),
    #[error("closed form requires weight-(1,1) generators")]
    NonGenerator,
    #[error("empty cycle")]
    EmptyCycle,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
