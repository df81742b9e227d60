//! Exact linear algebra over the rationals: scalars, dense matrices and
//! canonical subspaces.

mod matrix;
mod rational;
mod subspace;

pub use matrix::Matrix;
pub use rational::{
    axpy, dot, int, int_vector, is_zero_vector, rat, scaled, unit, zero_vector, Rational, Vector,
};
pub use subspace::Subspace;
