use thiserror::Error;

use crate::LabelSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("sign string for n={n}, r={r} must have length {expected}, got {actual}")]
    WrongSignStringLength { n: u8, r: u8, expected: usize, actual: usize },

    #[error("illegal character {ch:?} at position {pos}; expected '+' or '-'")]
    IllegalSignChar { pos: usize, ch: char },

    #[error("basis sign at lexicographic rank {rank} is zero; only uniform matroids are supported")]
    ZeroBasisSign { rank: u64 },

    #[error("unsupported parameters n={n}, r={r}")]
    BadRankParams { n: u8, r: u8 },

    #[error("expected {expected} distinct elements, got {actual}")]
    WrongCardinality { expected: usize, actual: usize },

    #[error("element {label} out of range 1..={n}")]
    LabelOutOfRange { label: u8, n: u8 },

    #[error("repeated element {label}")]
    RepeatedElement { label: u8 },

    #[error("positive and negative parts overlap on {{{shared}}}")]
    SignedOverlap { shared: LabelSet },

    #[error("cannot parse {text:?} as a label")]
    BadLabelText { text: String },

    #[error("cannot parse {text:?} as a signed set; expected \"positive|negative\"")]
    BadSignedSetText { text: String },

    #[error("expected {expected} circuits, got {actual}")]
    WrongCircuitCount { expected: usize, actual: usize },

    #[error("circuit at position {index} covers {{{actual}}} instead of {{{expected}}}")]
    UnderlyingMismatch { index: usize, expected: LabelSet, actual: LabelSet },
}
