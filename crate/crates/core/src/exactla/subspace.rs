use num_traits::Zero;

use super::matrix::Matrix;
use super::rational::{axpy, Rational, Vector};
use crate::error::{Error, Result};

/// A linear subspace of `Q^n` stored as the nonzero rows of its reduced row
/// echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Linear span of `vectors`, each of length `ambient_dim`.
    pub fn span(vectors: &[Vector], ambient_dim: usize) -> Result<Self> {
        Ok(Self::from_rows(&Matrix::from_rows(vectors, ambient_dim)?))
    }

    /// Row space of `m`.
    pub fn from_rows(m: &Matrix) -> Self {
        let (red, pivots) = m.rref_with_pivots();
        let rows: Vec<usize> = (0..pivots.len()).collect();
        let cols: Vec<usize> = (0..m.cols()).collect();
        Self {
            ambient_dim: m.cols(),
            basis: red.submatrix(&rows, &cols),
            pivots,
        }
    }

    /// Span of the standard basis vectors with the given (zero-based) indices.
    pub fn coordinate(ambient_dim: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vectors: Vec<Vector> = indices
            .into_iter()
            .map(|i| super::rational::unit(ambient_dim, i))
            .collect();
        Self::span(&vectors, ambient_dim).expect("unit vectors have ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if n != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: n,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim)?;
        let vectors: Vec<Vector> = self
            .basis_vectors()
            .chain(other.basis_vectors())
            .map(<[Rational]>::to_vec)
            .collect();
        Subspace::span(&vectors, self.ambient_dim)
    }

    /// Intersection, from the kernel of `[A^T | -B^T]` where the rows of `A`
    /// and `B` are the two bases.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim)?;
        let (ra, rb) = (self.dim(), other.dim());
        if ra == 0 || rb == 0 {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let mut stacked = Matrix::zeros(self.ambient_dim, ra + rb);
        for c in 0..self.ambient_dim {
            for r in 0..ra {
                stacked[(c, r)] = self.basis[(r, c)].clone();
            }
            for r in 0..rb {
                stacked[(c, ra + r)] = -other.basis[(r, c)].clone();
            }
        }
        let kernel = stacked.kernel();
        let vectors: Vec<Vector> = kernel
            .basis_vectors()
            .map(|coeffs| self.basis.vec_mul(&coeffs[..ra]))
            .collect();
        Subspace::span(&vectors, self.ambient_dim)
    }

    /// Remainder of `v` after eliminating the pivot coordinates with the basis.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vector> {
        self.check_ambient(v.len())?;
        let mut rest = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if rest[p].is_zero() {
                continue;
            }
            let factor = -rest[p].clone();
            axpy(&mut rest, &factor, self.basis.row(row));
        }
        Ok(rest)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient_dim)?;
        for v in other.basis_vectors() {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` lies
    /// outside the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Image under the coordinate projection onto `indices` (in that order).
    pub fn project(&self, indices: &[usize]) -> Subspace {
        let vectors: Vec<Vector> = self
            .basis_vectors()
            .map(|v| indices.iter().map(|&i| v[i].clone()).collect())
            .collect();
        Subspace::span(&vectors, indices.len()).expect("projected vectors have matching length")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rational::int_vector;

    fn vs(rows: &[&[i64]]) -> Vec<Vector> {
        rows.iter().map(|r| int_vector(r)).collect()
    }

    #[test]
    fn span_examples() {
        let s = Subspace::span(&vs(&[&[1, 0, 0], &[1, 1, 0]]), 3).unwrap();
        assert_eq!(s.basis(), &Matrix::from_i64(2, 3, &[1, 0, 0, 0, 1, 0]));

        let empty = Subspace::span(&[], 3).unwrap();
        assert!(empty.is_zero());
        assert_eq!(empty.ambient_dim(), 3);

        let line = Subspace::span(&vs(&[&[2, 4]]), 2).unwrap();
        assert_eq!(line.basis(), &Matrix::from_i64(1, 2, &[1, 2]));
    }

    #[test]
    fn span_rejects_wrong_length() {
        assert!(matches!(
            Subspace::span(&vs(&[&[1, 0]]), 3),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn sum_intersect_contains() {
        let x = Subspace::span(&vs(&[&[1, 0]]), 2).unwrap();
        let y = Subspace::span(&vs(&[&[0, 1]]), 2).unwrap();
        assert!(x.sum(&y).unwrap().is_full());

        let a = Subspace::span(&vs(&[&[1, 0, 0], &[0, 1, 0]]), 3).unwrap();
        let b = Subspace::span(&vs(&[&[0, 1, 0], &[0, 0, 1]]), 3).unwrap();
        assert_eq!(
            a.intersect(&b).unwrap(),
            Subspace::span(&vs(&[&[0, 1, 0]]), 3).unwrap()
        );

        let line = Subspace::span(&vs(&[&[1, 2]]), 2).unwrap();
        assert!(line.contains(&int_vector(&[2, 4])).unwrap());
        assert!(!line.contains(&int_vector(&[2, 3])).unwrap());
    }

    #[test]
    fn mismatched_ambient_dims_fail() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(a.sum(&b).is_err());
        assert!(a.intersect(&b).is_err());
        assert!(a.contains(&int_vector(&[1, 0, 0])).is_err());
    }

    #[test]
    fn coordinates_and_projection() {
        let s = Subspace::span(&vs(&[&[1, 0, 1], &[0, 1, 1]]), 3).unwrap();
        assert_eq!(
            s.coordinates(&int_vector(&[2, 3, 5])).unwrap(),
            Some(int_vector(&[2, 3]))
        );
        assert_eq!(s.coordinates(&int_vector(&[0, 0, 1])).unwrap(), None);
        assert_eq!(s.project(&[2]), Subspace::full(1));
    }
}
