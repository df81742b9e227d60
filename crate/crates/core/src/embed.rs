//! The graded Lie algebra `G = M + h` enveloping a triple system, with
//! `h` spanned by inner derivations.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rational, Subspace, Vector};
use crate::lie::{Grading, LieAlgebra, Sign};
use crate::triple::TripleSystem;

/// The map `z ↦ (x, y, z)`; column `k` is `(x, y, e_k)`.
pub fn inner_derivation(t: &TripleSystem, x: &[Rational], y: &[Rational]) -> Result<Matrix> {
    let n = t.dim();
    let mut d = Matrix::zeros(n, n);
    for k in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[k] = num_traits::One::one();
        d.set_column(k, &t.triple_product(x, y, &e)?);
    }
    Ok(d)
}

fn flatten(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardEmbedding {
    pub source: TripleSystem,
    pub algebra: LieAlgebra,
    pub grading: Grading,
    pub h_basis: Vec<Matrix>,
}

impl StandardEmbedding {
    pub fn h_dim(&self) -> usize {
        self.h_basis.len()
    }

    /// Coordinates `0..n` of the algebra.
    pub fn m_span(&self) -> Subspace {
        Subspace::coordinate(self.algebra.dim(), 0..self.source.dim())
    }

    /// Coordinates `n..n + h_dim` of the algebra.
    pub fn h_span(&self) -> Subspace {
        Subspace::coordinate(self.algebra.dim(), self.source.dim()..self.algebra.dim())
    }

    /// No nonzero ideal of the algebra lies inside `h`.
    pub fn is_canonical(&self) -> bool {
        is_canonical(&self.algebra, &self.grading)
    }

    pub fn decompose(&self) -> Decomposition {
        let n = self.source.dim();
        let big = self.algebra.dim();
        let r = self.algebra.radical();
        let m_part = r.intersect(&self.m_span()).expect("same ambient dimension");
        let h_part = r.intersect(&self.h_span()).expect("same ambient dimension");
        debug_assert_eq!(m_part.sum(&h_part).unwrap(), r);
        Decomposition {
            m_prime: m_part.project(&(0..n).collect::<Vec<_>>()),
            h_prime: h_part.project(&(n..big).collect::<Vec<_>>()),
            r,
        }
    }
}

/// Radical pieces of an embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Radical of the algebra.
    pub r: Subspace,
    /// Its intersection with `M`, in source coordinates.
    pub m_prime: Subspace,
    /// Its intersection with `h`, in `h` coordinates.
    pub h_prime: Subspace,
}

/// True when the largest ideal of `g` inside the even part of `gr` is zero.
pub fn is_canonical(g: &LieAlgebra, gr: &Grading) -> bool {
    let even = Subspace::coordinate(g.dim(), gr.indices(Sign::Plus));
    g.core_ideal(&even).is_zero()
}

pub fn standard_embedding(t: &TripleSystem) -> Result<StandardEmbedding> {
    t.check_axioms().map_err(Error::InvalidLts)?;
    let n = t.dim();

    let mut h_basis: Vec<Matrix> = Vec::new();
    let mut spanned = Subspace::zero(n * n);
    for i in 0..n {
        for j in i + 1..n {
            let d = t.operator(i, j);
            let v = flatten(&d);
            if !spanned.contains(&v)? {
                spanned = spanned.sum(&Subspace::span(&[v], n * n)?)?;
                h_basis.push(d);
            }
        }
    }
    let h = h_basis.len();
    let big = n + h;
    let columns: Vec<Vector> = h_basis.iter().map(flatten).collect();
    let to_h = Matrix::from_rows(&columns, n * n)?.transpose();
    let h_coords = |m: &Matrix| -> Vector {
        to_h.solve(&flatten(m))
            .expect("derivation lies in the span of inner derivations")
    };

    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (a, q) in h_coords(&t.operator(i, j)).into_iter().enumerate() {
                if !q.is_zero() {
                    entries.push((i, j, n + a, q));
                }
            }
        }
    }
    for i in 0..n {
        for (a, d) in h_basis.iter().enumerate() {
            // [X, A] = -A X
            for (l, q) in d.column(i).into_iter().enumerate() {
                if !q.is_zero() {
                    entries.push((i, n + a, l, -q));
                }
            }
        }
    }
    for a in 0..h {
        for b in a + 1..h {
            let c = h_basis[a].commutator(&h_basis[b]);
            for (k, q) in h_coords(&c).into_iter().enumerate() {
                if !q.is_zero() {
                    entries.push((n + a, n + b, n + k, q));
                }
            }
        }
    }
    let algebra = LieAlgebra::from_half_entries(big, entries)?;
    Ok(StandardEmbedding {
        source: t.clone(),
        algebra,
        grading: Grading::split(n, h),
        h_basis,
    })
}

/// Maximal solvable ideal of `t`, as `M ∩ r` of its standard embedding.
pub fn lts_radical(t: &TripleSystem) -> Result<Subspace> {
    Ok(standard_embedding(t)?.decompose().m_prime)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, unit};
    use crate::lie::KillingSignature;

    fn spherical() -> TripleSystem {
        TripleSystem::from_half_entries(2, [(0, 1, 0, 1, int(1)), (0, 1, 1, 0, int(-1))]).unwrap()
    }

    fn type_ii() -> TripleSystem {
        TripleSystem::from_half_entries(3, [(1, 2, 2, 0, int(1))]).unwrap()
    }

    #[test]
    fn inner_derivation_examples() {
        let s = spherical();
        let d = inner_derivation(&s, &unit(2, 0), &unit(2, 1)).unwrap();
        assert_eq!(d, Matrix::from_i64(2, 2, &[0, -1, 1, 0]));
        let z = TripleSystem::zero(3);
        assert!(inner_derivation(&z, &unit(3, 0), &unit(3, 2)).unwrap().is_zero());
    }

    #[test]
    fn abelian_embedding_is_abelian() {
        let e = standard_embedding(&TripleSystem::zero(3)).unwrap();
        assert_eq!(e.h_dim(), 0);
        assert!(e.algebra.is_abelian());
        assert!(e.is_canonical());
    }

    #[test]
    fn type_ii_brackets() {
        let e = standard_embedding(&type_ii()).unwrap();
        let entries: Vec<_> = e
            .algebra
            .half_entries()
            .map(|(i, j, k, q)| (i, j, k, q.clone()))
            .collect();
        assert_eq!(entries, vec![(1, 2, 3, int(1)), (2, 3, 0, int(-1))]);
        assert!(e.is_canonical());
        assert_eq!(e.algebra.lie_to_lts(&e.grading).unwrap(), type_ii());
    }

    #[test]
    fn spherical_embedding_is_compact() {
        let e = standard_embedding(&spherical()).unwrap();
        assert_eq!(e.algebra.dim(), 3);
        assert_eq!(
            e.algebra.killing_signature(),
            KillingSignature { positive: 0, negative: 3, zero: 0 }
        );
        assert_eq!(e.algebra.check_jacobi(), Ok(()));
        assert_eq!(e.algebra.check_grading(&e.grading), Ok(()));
        assert!(e.decompose().m_prime.is_zero());
    }

    #[test]
    fn adjoined_central_even_vector_is_not_canonical() {
        let e = standard_embedding(&type_ii()).unwrap();
        let entries: Vec<_> = e
            .algebra
            .half_entries()
            .map(|(i, j, k, q)| (i, j, k, q.clone()))
            .collect();
        let g = LieAlgebra::from_half_entries(5, entries).unwrap();
        assert!(!is_canonical(&g, &Grading::split(3, 2)));
    }

    #[test]
    fn invalid_input_is_rejected() {
        let t = TripleSystem::from_half_entries(3, [(0, 1, 2, 0, int(1))]).unwrap();
        assert!(matches!(standard_embedding(&t), Err(Error::InvalidLts(_))));
        assert!(matches!(lts_radical(&t), Err(Error::InvalidLts(_))));
    }

    #[test]
    fn radical_examples() {
        assert!(lts_radical(&type_ii()).unwrap().is_full());
        assert!(lts_radical(&spherical()).unwrap().is_zero());
        let split = TripleSystem::zero(1).direct_sum(&spherical());
        assert_eq!(lts_radical(&split).unwrap(), Subspace::coordinate(3, [0]));
    }
}
