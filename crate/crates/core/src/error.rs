use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of 1..{n}: {word:?}")]
    InvalidPermutation { n: usize, word: Vec<usize> },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("pattern {pattern} not avoided by {word}")]
    PatternViolation { pattern: String, word: String },

    #[error("invalid concatenation: {0}")]
    InvalidConcatenation(String),

    #[error("order {n} exceeds configured bound {max}")]
    OrderBound { n: usize, max: usize },

    #[error("not a partition (weakly decreasing positive parts): {parts:?}")]
    InvalidPartition { parts: Vec<usize> },

    #[error("shape sums to {shape_sum}, expected {expected}")]
    ShapeMismatch { shape_sum: usize, expected: usize },

    #[error("network of order {0} is disconnected or trivial")]
    Disconnected(usize),

    #[error("unknown method: {0}")]
    UnknownMethod(String),

    #[error("poset labeling violates the natural unit-interval-order rule: {0}")]
    LabelingViolation(String),

    #[error("inexact polynomial division")]
    InexactDivision,

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}
