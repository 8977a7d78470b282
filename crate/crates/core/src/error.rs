use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring parameters: {0}")]
    InvalidParams(String),

    #[error("factor index {index} out of range 1..={m}")]
    IndexOutOfRange { index: usize, m: usize },

    #[error("tau generator needs two distinct indices, got ({0},{0})")]
    SelfPairedTau(usize),

    #[error("operation requires a homogeneous class")]
    Inhomogeneous,

    #[error("codimension {c} out of range 0..={max}")]
    CodimOutOfRange { c: usize, max: usize },

    #[error("operation needs at least {needed} factors, ring has m = {m}")]
    TooFewFactors { m: usize, needed: usize },

    #[error("index set must consist of {expected} distinct indices, got {got:?}")]
    BadIndexSet { expected: usize, got: Vec<usize> },

    #[error("factor count mismatch: {left} vs {right}")]
    FactorMismatch { left: usize, right: usize },

    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    #[error("sign adjudication failed: {0}")]
    Adjudication(String),
}

pub type Result<T> = std::result::Result<T, Error>;
