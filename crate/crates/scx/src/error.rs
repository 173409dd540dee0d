//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid simplex {0:?}: vertices must be distinct")]
    DuplicateVertex(Vec<usize>),

    #[error("face {0:?} is not in the complex")]
    FaceNotInComplex(Vec<usize>),

    #[error("not a subcomplex: {face:?} (dimension {dim}) is missing from the ambient complex")]
    NotSubcomplex { dim: usize, face: Vec<usize> },

    #[error("complex is not a clique complex through dimension {0}")]
    NotCliqueComplex(usize),

    #[error("{0}-skeleton differs from the {0}-skeleton of the clique complex of the 1-skeleton")]
    SkeletonMismatch(usize),

    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {delta}")]
    NotSymmetric { i: usize, j: usize, delta: f64 },

    #[error("matrix side {0} exceeds the dense eigensolver cap {1}")]
    MatrixTooLarge(usize, usize),

    #[error("eigensolver did not converge in {0} sweeps")]
    NoConvergence(usize),

    #[error("cochain dimension mismatch: expected {expected}, got {got}")]
    CochainDimension { expected: isize, got: isize },

    #[error("cochain length {got} does not match |X({k})| = {expected}")]
    CochainLength { k: isize, expected: usize, got: usize },

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("threshold formula gives p = {p} > 1 (n = {n}, k = {k}, c = {c})")]
    ThresholdAboveOne { n: usize, k: usize, c: f64, p: f64 },

    #[error("{check} not applicable: {reason}")]
    NotApplicable { check: String, reason: String },

    #[error("exact computation needs about {needed} entry-ops, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn not_applicable(check: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::NotApplicable { check: check.into(), reason: reason.into() }
    }
}
