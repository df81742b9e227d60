use thiserror::Error;

use crate::lie::{GradingViolation, JacobiViolation};
use crate::triple::AxiomViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("structure tensor is not antisymmetric in its first two slots at ({i},{j},{k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("not a Lie triple system: {0}")]
    InvalidLts(AxiomViolation),
    #[error("not a Lie algebra: {0}")]
    InvalidLie(JacobiViolation),
    #[error("invalid grading: {0}")]
    InvalidGrading(GradingViolation),
    #[error("operators violate the cyclic identity on (e1,e2,e3)")]
    CyclicMismatch,
    #[error("unsupported dimension {0}: classification covers dimensions 2 and 3")]
    UnsupportedDimension(usize),
}
