//! Lie triple systems given by structure constants.
//!
//! A [`TripleSystem`] of dimension `n` stores the full tensor `c[i][j][k]`,
//! the coordinate vector of `(e_i, e_j, e_k)`. Indices are zero-based in the
//! API and one-based in every user-facing rendering.

use std::fmt;
use std::ops::{AddAssign, Mul, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactla::{axpy, is_zero_vector, unit, zero_vector, Matrix, Rational, Subspace, Vector};

/// Which defining identity failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `(x,x,y) = 0`
    Alternation,
    /// `(x,y,z) + (y,z,x) + (z,x,y) = 0`
    Cyclic,
    /// `(x,y,(u,v,w)) = ((x,y,u),v,w) + (u,(x,y,v),w) + (u,v,(x,y,w))`
    Derivation,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identity::Alternation => "alternation",
            Identity::Cyclic => "cyclic",
            Identity::Derivation => "derivation",
        })
    }
}

/// First failing identity instance on basis vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AxiomViolation {
    pub identity: Identity,
    /// Zero-based basis indices of the instance.
    pub indices: Vec<usize>,
    /// Left side minus right side; never zero.
    pub residual: Vector,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} identity violated at ({}): residual {}",
            self.identity,
            join(self.indices.iter().map(|i| i + 1), ","),
            join(self.residual.iter(), " ")
        )
    }
}

fn join<T: ToString>(items: impl Iterator<Item = T>, sep: &str) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

/// Terms of `Ω ⊇ Ω⁽¹⁾ ⊇ Ω⁽²⁾ ⊇ …` up to the first zero or repeated term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedSeries {
    pub terms: Vec<Subspace>,
    pub solvable: bool,
}

impl DerivedSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    /// Number of derivation steps taken.
    pub fn depth(&self) -> usize {
        self.terms.len() - 1
    }
}

/// Iterates `step` from `start` until the term is zero or stops shrinking.
/// A stabilized nonzero term appears twice at the end.
pub(crate) fn iterate_series(
    start: Subspace,
    mut step: impl FnMut(&Subspace) -> Subspace,
) -> Vec<Subspace> {
    let mut terms = vec![start];
    loop {
        let last = terms.last().expect("series is never empty");
        if last.is_zero() {
            return terms;
        }
        let next = step(last);
        let stable = next == *last;
        terms.push(next);
        if stable {
            return terms;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TripleSystem {
    dim: usize,
    c: Vec<Rational>,
}

impl TripleSystem {
    /// The abelian system: every product vanishes.
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            c: vec![Rational::zero(); dim.pow(4)],
        }
    }

    /// Builds a system from the full tensor, flattened as
    /// `c[((i*n + j)*n + k)*n + l]` = coefficient of `e_l` in `(e_i,e_j,e_k)`.
    ///
    /// The tensor must satisfy `c[i][j][k] = -c[j][i][k]`.
    pub fn from_tensor(dim: usize, c: Vec<Rational>) -> Result<Self> {
        if c.len() != dim.pow(4) {
            return Err(Error::DimensionMismatch {
                expected: dim.pow(4),
                found: c.len(),
            });
        }
        let t = Self { dim, c };
        for i in 0..dim {
            for j in i..dim {
                for k in 0..dim {
                    let a = t.structure(i, j, k);
                    let b = t.structure(j, i, k);
                    if a.iter().zip(b).any(|(x, y)| !(x + y).is_zero()) {
                        return Err(Error::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        Ok(t)
    }

    /// Builds a system from entries `(i, j, k, l, q)` with `i < j`, meaning
    /// `(e_i,e_j,e_k)` has coordinate `q` on `e_l`; the `(j, i)` half is the
    /// negation. Later entries overwrite earlier ones.
    pub fn from_half_entries(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut t = Self::zero(dim);
        for (i, j, k, l, q) in entries {
            for index in [i, j, k, l] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            if i >= j {
                return Err(Error::NotAntisymmetric { i, j, k });
            }
            let neg = -q.clone();
            *t.slot_mut(i, j, k, l) = q;
            *t.slot_mut(j, i, k, l) = neg;
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        ((i * self.dim + j) * self.dim + k) * self.dim
    }

    fn slot_mut(&mut self, i: usize, j: usize, k: usize, l: usize) -> &mut Rational {
        let o = self.offset(i, j, k);
        &mut self.c[o + l]
    }

    /// Coordinate vector of `(e_i, e_j, e_k)`.
    pub fn structure(&self, i: usize, j: usize, k: usize) -> &[Rational] {
        let o = self.offset(i, j, k);
        &self.c[o..o + self.dim]
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        &self.structure(i, j, k)[l]
    }

    /// Nonzero entries with `i < j`, in lexicographic `(i, j, k, l)` order.
    pub fn half_entries(&self) -> impl Iterator<Item = (usize, usize, usize, usize, &Rational)> + '_ {
        let n = self.dim;
        (0..n).flat_map(move |i| {
            (i + 1..n).flat_map(move |j| {
                (0..n).flat_map(move |k| {
                    (0..n).filter_map(move |l| {
                        let q = self.coefficient(i, j, k, l);
                        (!q.is_zero()).then_some((i, j, k, l, q))
                    })
                })
            })
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Trilinear product `(x, y, z)`.
    pub fn triple_product(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        self.check_len(z)?;
        Ok(self.product(x, y, z))
    }

    pub(crate) fn product(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                if i == j {
                    continue;
                }
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    let s = self.structure(i, j, k);
                    if is_zero_vector(s) {
                        continue;
                    }
                    axpy(&mut out, &(&xy * zk), s);
                }
            }
        }
        out
    }

    /// The operator `z ↦ (e_i, e_j, z)` as a matrix acting on column vectors.
    pub fn operator(&self, i: usize, j: usize) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m.set_column(k, self.structure(i, j, k));
        }
        m
    }

    /// Verifies the three defining identities on all basis instances.
    ///
    /// Instances are scanned identity by identity (alternation, cyclic,
    /// derivation) and lexicographically within each, so the reported
    /// violation is deterministic.
    pub fn check_axioms(&self) -> Result<(), AxiomViolation> {
        let n = self.dim;
        for i in 0..n {
            for k in 0..n {
                let s = self.structure(i, i, k);
                if !is_zero_vector(s) {
                    return Err(AxiomViolation {
                        identity: Identity::Alternation,
                        indices: vec![i, i, k],
                        residual: s.to_vec(),
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut sum = self.structure(i, j, k).to_vec();
                    for (a, b) in sum.iter_mut().zip(self.structure(j, k, i)) {
                        *a += b;
                    }
                    for (a, b) in sum.iter_mut().zip(self.structure(k, i, j)) {
                        *a += b;
                    }
                    if !is_zero_vector(&sum) {
                        return Err(AxiomViolation {
                            identity: Identity::Cyclic,
                            indices: vec![i, j, k],
                            residual: sum,
                        });
                    }
                }
            }
        }
        let found = match self.scaled_integers() {
            Some((ints, scale)) => derivation_scan(n, &ints).map(|(idx, r)| {
                let s2 = &scale * &scale;
                let residual = r.into_iter().map(|v| Rational::from_integer(v.into()) / &s2).collect();
                (idx, residual)
            }),
            None => derivation_scan(n, &self.c),
        };
        if let Some((indices, residual)) = found {
            return Err(AxiomViolation {
                identity: Identity::Derivation,
                indices: indices.to_vec(),
                residual,
            });
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check_axioms().is_ok()
    }

    /// The constants times their common denominator, when all fit in `i32`.
    fn scaled_integers(&self) -> Option<(Vec<i128>, BigInt)> {
        let scale = self.c.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        let ints = self
            .c
            .iter()
            .map(|q| (q.numer() * (&scale / q.denom())).to_i32().map(i128::from))
            .collect::<Option<Vec<_>>>()?;
        Some((ints, scale))
    }

    fn check_subspace(&self, d: &Subspace) -> Result<()> {
        if d.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: d.ambient_dim(),
            });
        }
        Ok(())
    }

    /// `(D, M, M) ⊆ D`.
    pub fn is_ideal(&self, d: &Subspace) -> Result<bool> {
        self.check_subspace(d)?;
        let n = self.dim;
        for v in d.basis_vectors() {
            for j in 0..n {
                for k in 0..n {
                    let p = self.product(v, &unit(n, j), &unit(n, k));
                    if !d.contains(&p)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `(D, D, D) ⊆ D`.
    pub fn is_subsystem(&self, d: &Subspace) -> Result<bool> {
        self.check_subspace(d)?;
        let basis: Vec<&[Rational]> = d.basis_vectors().collect();
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    if !d.contains(&self.product(a, b, c))? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `(M, Ω, Ω)`.
    pub fn derived_subspace(&self, om: &Subspace) -> Result<Subspace> {
        self.check_subspace(om)?;
        Ok(self.derived_unchecked(om))
    }

    fn derived_unchecked(&self, om: &Subspace) -> Subspace {
        let n = self.dim;
        let basis: Vec<&[Rational]> = om.basis_vectors().collect();
        let mut products = Vec::new();
        for x in 0..n {
            let ex = unit(n, x);
            for a in &basis {
                for b in &basis {
                    products.push(self.product(&ex, a, b));
                }
            }
        }
        Subspace::span(&products, n).expect("products have ambient length")
    }

    /// Derived series of the ideal `om`; fails with [`Error::NotAnIdeal`]
    /// otherwise.
    pub fn derived_series(&self, om: &Subspace) -> Result<DerivedSeries> {
        if !self.is_ideal(om)? {
            return Err(Error::NotAnIdeal);
        }
        let terms = iterate_series(om.clone(), |s| self.derived_unchecked(s));
        let solvable = terms.last().is_some_and(Subspace::is_zero);
        Ok(DerivedSeries { terms, solvable })
    }

    /// Derived series of the whole space.
    pub fn full_derived_series(&self) -> DerivedSeries {
        self.derived_series(&Subspace::full(self.dim))
            .expect("the whole space is an ideal")
    }

    pub fn is_solvable(&self) -> bool {
        self.full_derived_series().solvable
    }

    /// `{z : (z,x,y) = 0 and (x,y,z) = 0 for all x, y}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // One linear equation in z per (x, y, l) and slot position.
        let mut rows = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for l in 0..n {
                    rows.push((0..n).map(|z| self.coefficient(z, x, y, l).clone()).collect());
                    rows.push((0..n).map(|z| self.coefficient(x, y, z, l).clone()).collect());
                }
            }
        }
        Matrix::from_rows(&rows, n)
            .expect("rows have ambient length")
            .kernel()
    }

    /// Quotient by the ideal `om`, on the basis of standard vectors at the
    /// non-pivot coordinates of `om`.
    pub fn quotient(&self, om: &Subspace) -> Result<TripleSystem> {
        if !self.is_ideal(om)? {
            return Err(Error::NotAnIdeal);
        }
        let n = self.dim;
        let keep: Vec<usize> = (0..n).filter(|c| !om.pivots().contains(c)).collect();
        let q = keep.len();
        let mut out = TripleSystem::zero(q);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                for (c, &k) in keep.iter().enumerate() {
                    let reduced = om.reduce(self.structure(i, j, k))?;
                    for (d, &l) in keep.iter().enumerate() {
                        *out.slot_mut(a, b, c, d) = reduced[l].clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Block sum: `self` on the first coordinates, `other` on the rest, no
    /// cross products.
    pub fn direct_sum(&self, other: &TripleSystem) -> TripleSystem {
        let (na, nb) = (self.dim, other.dim);
        let mut out = TripleSystem::zero(na + nb);
        for (sys, shift) in [(self, 0), (other, na)] {
            let m = sys.dim;
            for i in 0..m {
                for j in 0..m {
                    for k in 0..m {
                        for l in 0..m {
                            let q = sys.coefficient(i, j, k, l);
                            if !q.is_zero() {
                                *out.slot_mut(i + shift, j + shift, k + shift, l + shift) =
                                    q.clone();
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Structure constants in the basis `f_a = Σ_i t[a][i] e_i`.
    pub fn transform(&self, t: &Matrix) -> Result<TripleSystem> {
        let n = self.dim;
        if t.rows() != n || t.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: t.rows().max(t.cols()),
            });
        }
        let inv = t.inverse()?;
        let mut out = TripleSystem::zero(n);
        for a in 0..n {
            for b in a + 1..n {
                for c in 0..n {
                    let v = self.product(t.row(a), t.row(b), t.row(c));
                    let coords = inv.vec_mul(&v);
                    for (d, q) in coords.into_iter().enumerate() {
                        *out.slot_mut(b, a, c, d) = -q.clone();
                        *out.slot_mut(a, b, c, d) = q;
                    }
                }
            }
        }
        Ok(out)
    }
}

/// First `(x, y, u, v, w)` with `x < y` where `D = (e_x, e_y, -)` fails to
/// be a derivation of the constants `c`, with the residual.
///
/// `D_{y,x} = -D_{x,y}` and `D_{x,x} = 0` once alternation holds, so pairs
/// with `x < y` still find the lexicographically first violation.
fn derivation_scan<T>(n: usize, c: &[T]) -> Option<([usize; 5], Vec<T>)>
where
    T: Clone + Zero + AddAssign + SubAssign,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let sparse: Vec<Vec<(usize, &T)>> = c
        .chunks(n.max(1))
        .map(|s| s.iter().enumerate().filter(|(_, q)| !q.is_zero()).collect())
        .collect();
    let at = |i: usize, j: usize, k: usize| &sparse[(i * n + j) * n + k];
    for x in 0..n {
        for y in x + 1..n {
            let d: Vec<&Vec<(usize, &T)>> = (0..n).map(|p| at(x, y, p)).collect();
            for u in 0..n {
                for v in 0..n {
                    for w in 0..n {
                        let mut r = vec![T::zero(); n];
                        for &(p, q) in at(u, v, w) {
                            for &(l, s) in d[p] {
                                r[l] += q * s;
                            }
                        }
                        for (pos, slot) in [u, v, w].into_iter().enumerate() {
                            for &(p, q) in d[slot] {
                                let term = match pos {
                                    0 => at(p, v, w),
                                    1 => at(u, p, w),
                                    _ => at(u, v, p),
                                };
                                for &(l, s) in term {
                                    r[l] -= q * s;
                                }
                            }
                        }
                        if r.iter().any(|q| !q.is_zero()) {
                            return Some(([x, y, u, v, w], r));
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, int_vector, rat};

    fn e(n: usize, i: usize) -> Vector {
        unit(n, i)
    }

    /// Spherical plane: (e1,e2,e1) = e2, (e1,e2,e2) = -e1.
    fn spherical() -> TripleSystem {
        TripleSystem::from_half_entries(2, [(0, 1, 0, 1, int(1)), (0, 1, 1, 0, int(-1))]).unwrap()
    }

    /// β = diag(1, 0): the only product is (e1,e2,e1) = e2.
    fn case_4a() -> TripleSystem {
        TripleSystem::from_half_entries(2, [(0, 1, 0, 1, int(1))]).unwrap()
    }

    /// Only (e2,e3,e3) = e1.
    fn type_ii() -> TripleSystem {
        TripleSystem::from_half_entries(3, [(1, 2, 2, 0, int(1))]).unwrap()
    }

    #[test]
    fn triple_product_examples() {
        let s = spherical();
        assert_eq!(s.triple_product(&e(2, 0), &e(2, 1), &e(2, 0)).unwrap(), e(2, 1));
        let x = int_vector(&[3, -2]);
        assert!(is_zero_vector(&s.triple_product(&x, &x, &e(2, 1)).unwrap()));
        assert_eq!(
            type_ii().triple_product(&e(3, 1), &e(3, 2), &e(3, 2)).unwrap(),
            e(3, 0)
        );
        assert!(s.triple_product(&e(3, 0), &e(2, 0), &e(2, 0)).is_err());
    }

    #[test]
    fn valid_systems_pass() {
        assert_eq!(spherical().check_axioms(), Ok(()));
        assert_eq!(TripleSystem::zero(4).check_axioms(), Ok(()));
        assert_eq!(type_ii().check_axioms(), Ok(()));
    }

    #[test]
    fn cyclic_violation_is_reported_first() {
        let t = TripleSystem::from_half_entries(3, [(0, 1, 2, 0, int(1))]).unwrap();
        let v = t.check_axioms().unwrap_err();
        assert_eq!(v.identity, Identity::Cyclic);
        assert_eq!(v.indices, vec![0, 1, 2]);
        assert_eq!(v.residual, e(3, 0));
        assert_eq!(
            v.to_string(),
            "cyclic identity violated at (1,2,3): residual 1 0 0"
        );
    }

    #[test]
    fn from_tensor_rejects_asymmetric_input() {
        let mut c = vec![Rational::zero(); 16];
        // (e1, e2, e1) = e2 without the matching (e2, e1, e1).
        c[5] = int(1);
        assert_eq!(
            TripleSystem::from_tensor(2, c),
            Err(Error::NotAntisymmetric { i: 0, j: 1, k: 0 })
        );
    }

    #[test]
    fn ideals_and_subsystems() {
        let s = spherical();
        assert!(s.is_ideal(&Subspace::full(2)).unwrap());
        assert!(s.is_ideal(&Subspace::zero(2)).unwrap());
        assert!(!s.is_ideal(&Subspace::coordinate(2, [0])).unwrap());
        assert!(s.is_subsystem(&Subspace::coordinate(2, [0])).unwrap());
        let ab = TripleSystem::zero(3);
        let line = Subspace::span(&[int_vector(&[1, 2, 3])], 3).unwrap();
        assert!(ab.is_subsystem(&line).unwrap());
    }

    #[test]
    fn derived_subspace_examples() {
        assert!(TripleSystem::zero(3)
            .derived_subspace(&Subspace::full(3))
            .unwrap()
            .is_zero());
        let t = case_4a();
        assert_eq!(
            t.derived_subspace(&Subspace::full(2)).unwrap(),
            Subspace::coordinate(2, [1])
        );
        assert!(t
            .derived_subspace(&Subspace::coordinate(2, [1]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn derived_series_examples() {
        let ab = TripleSystem::zero(3).full_derived_series();
        assert_eq!((ab.dims(), ab.solvable), (vec![3, 0], true));
        let s4a = case_4a().full_derived_series();
        assert_eq!((s4a.dims(), s4a.solvable, s4a.depth()), (vec![2, 1, 0], true, 2));
        let sph = spherical().full_derived_series();
        assert_eq!((sph.dims(), sph.solvable), (vec![2, 2], false));
        assert_eq!(
            spherical().derived_series(&Subspace::coordinate(2, [0])),
            Err(Error::NotAnIdeal)
        );
    }

    #[test]
    fn center_examples() {
        assert!(TripleSystem::zero(3).center().is_full());
        assert_eq!(type_ii().center(), Subspace::coordinate(3, [0]));
        assert!(spherical().center().is_zero());
    }

    #[test]
    fn quotient_examples() {
        let s = spherical();
        assert_eq!(s.quotient(&Subspace::zero(2)).unwrap(), s);
        let q = case_4a().quotient(&Subspace::coordinate(2, [1])).unwrap();
        assert_eq!(q, TripleSystem::zero(1));
        let q = type_ii().quotient(&Subspace::coordinate(3, [0])).unwrap();
        assert_eq!(q, TripleSystem::zero(2));
        assert_eq!(
            s.quotient(&Subspace::coordinate(2, [0])),
            Err(Error::NotAnIdeal)
        );
    }

    #[test]
    fn direct_sum_blocks() {
        let sum = TripleSystem::zero(1).direct_sum(&spherical());
        assert_eq!(sum.dim(), 3);
        assert_eq!(sum.structure(1, 2, 1), e(3, 2).as_slice());
        assert!(is_zero_vector(sum.structure(0, 1, 1)));
        assert_eq!(sum.check_axioms(), Ok(()));
        assert!(TripleSystem::zero(1)
            .direct_sum(&TripleSystem::zero(2))
            .is_abelian());
    }

    #[test]
    fn transform_examples() {
        let t = case_4a();
        assert_eq!(t.transform(&Matrix::identity(2)).unwrap(), t);
        let flipped = t.transform(&Matrix::from_i64(2, 2, &[1, 0, 0, -1])).unwrap();
        assert_eq!(flipped, t);
        // (2e1, e2, 2e1) = 4 e2.
        let scaled = t.transform(&Matrix::from_i64(2, 2, &[2, 0, 0, 1])).unwrap();
        assert_eq!(scaled.coefficient(0, 1, 0, 1), &int(4));
        assert_eq!(
            t.transform(&Matrix::from_i64(2, 2, &[1, 1, 1, 1])),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn trilinear_scaling() {
        let s = spherical();
        let x = int_vector(&[1, 2]);
        let y = int_vector(&[-1, 3]);
        let z = int_vector(&[2, 5]);
        let q = rat(-3, 7);
        let base = s.product(&x, &y, &z);
        let xs: Vector = x.iter().map(|v| v * &q).collect();
        let expect: Vector = base.iter().map(|v| v * &q).collect();
        assert_eq!(s.product(&xs, &y, &z), expect);
    }
}
