//! Finite-dimensional Lie algebras over the rationals, their invariants and
//! Z2-gradings.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{axpy, is_zero_vector, unit, zero_vector, Matrix, Rational, Subspace, Vector};
use crate::triple::{iterate_series, TripleSystem};

/// First basis triple on which the Jacobi identity fails.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JacobiViolation {
    /// Zero-based indices `(i, j, k)`.
    pub indices: [usize; 3],
    /// `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]`.
    pub residual: Vector,
}

impl fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k] = self.indices;
        write!(
            f,
            "jacobi identity violated at ({},{},{}): residual {}",
            i + 1,
            j + 1,
            k + 1,
            self.residual
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GradingViolation {
    Length { expected: usize, found: usize },
    /// `[e_i, e_j]` leaves the subspace of parity `sign_i * sign_j`.
    Parity { i: usize, j: usize },
}

impl fmt::Display for GradingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradingViolation::Length { expected, found } => {
                write!(f, "expected {expected} signs, found {found}")
            }
            GradingViolation::Parity { i, j } => {
                write!(f, "[e{},e{}] has the wrong parity", i + 1, j + 1)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Eigenvalue of the involution on each basis vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grading {
    pub signs: Vec<Sign>,
}

impl Grading {
    pub fn new(signs: Vec<Sign>) -> Self {
        Self { signs }
    }

    /// `minus` odd coordinates followed by `plus` even ones.
    pub fn split(minus: usize, plus: usize) -> Self {
        let mut signs = vec![Sign::Minus; minus];
        signs.extend(std::iter::repeat_n(Sign::Plus, plus));
        Self { signs }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn indices(&self, sign: Sign) -> Vec<usize> {
        (0..self.signs.len()).filter(|&i| self.signs[i] == sign).collect()
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.signs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Inertia of a symmetric bilinear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct KillingSignature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl fmt::Display for KillingSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.zero)
    }
}

/// Inertia of the symmetric matrix `s` by rational congruence.
///
/// Panics if `s` is not square.
pub fn signature(s: &Matrix) -> KillingSignature {
    assert!(s.is_square(), "signature of a non-square matrix");
    let m = s.rows();
    let mut a = s.clone();
    let mut sig = KillingSignature::default();
    for k in 0..m {
        if a[(k, k)].is_zero() {
            if let Some(p) = (k + 1..m).find(|&p| !a[(p, p)].is_zero()) {
                swap_congruent(&mut a, k, p);
            } else if let Some((p, q)) = (k..m)
                .flat_map(|p| (p + 1..m).map(move |q| (p, q)))
                .find(|&(p, q)| !a[(p, q)].is_zero())
            {
                // All remaining diagonal entries vanish: e_p + e_q is
                // anisotropic with value 2 a_pq.
                add_congruent(&mut a, p, q);
                swap_congruent(&mut a, k, p);
            } else {
                break;
            }
        }
        let pivot = a[(k, k)].clone();
        if pivot.is_positive() {
            sig.positive += 1;
        } else {
            sig.negative += 1;
        }
        for r in k + 1..m {
            if a[(r, k)].is_zero() {
                continue;
            }
            let factor = -(&a[(r, k)] / &pivot);
            for c in 0..m {
                let d = &factor * &a[(k, c)];
                a[(r, c)] += d;
            }
            for c in 0..m {
                let d = &factor * &a[(c, k)];
                a[(c, r)] += d;
            }
        }
    }
    sig.zero = m - sig.positive - sig.negative;
    sig
}

fn swap_congruent(a: &mut Matrix, p: usize, q: usize) {
    if p == q {
        return;
    }
    let m = a.rows();
    for c in 0..m {
        let t = a[(p, c)].clone();
        a[(p, c)] = a[(q, c)].clone();
        a[(q, c)] = t;
    }
    for r in 0..m {
        let t = a[(r, p)].clone();
        a[(r, p)] = a[(r, q)].clone();
        a[(r, q)] = t;
    }
}

/// Row and column `p` += row and column `q`.
fn add_congruent(a: &mut Matrix, p: usize, q: usize) {
    let m = a.rows();
    for c in 0..m {
        let v = a[(q, c)].clone();
        a[(p, c)] += v;
    }
    for r in 0..m {
        let v = a[(r, q)].clone();
        a[(r, p)] += v;
    }
}

/// Terms of a Lie algebra series up to the first zero or repeated term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieSeries {
    pub terms: Vec<Subspace>,
}

impl LieSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    pub fn reaches_zero(&self) -> bool {
        self.terms.last().is_some_and(Subspace::is_zero)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    dim: usize,
    /// `f[(i*m + j)*m + k]` = coefficient of `e_k` in `[e_i, e_j]`.
    f: Vec<Rational>,
}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        Self {
            dim,
            f: vec![Rational::zero(); dim.pow(3)],
        }
    }

    /// Full bracket tensor; must be antisymmetric with zero diagonal.
    pub fn from_tensor(dim: usize, f: Vec<Rational>) -> Result<Self> {
        if f.len() != dim.pow(3) {
            return Err(Error::DimensionMismatch {
                expected: dim.pow(3),
                found: f.len(),
            });
        }
        let g = Self { dim, f };
        for i in 0..dim {
            for j in i..dim {
                let a = g.structure(i, j);
                let b = g.structure(j, i);
                if a.iter().zip(b).any(|(x, y)| !(x + y).is_zero()) {
                    return Err(Error::NotAntisymmetric { i, j, k: i });
                }
            }
        }
        Ok(g)
    }

    /// Entries `(i, j, k, q)` with `i < j`: `[e_i, e_j]` has coordinate `q`
    /// on `e_k`.
    pub fn from_half_entries(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut g = Self::abelian(dim);
        for (i, j, k, q) in entries {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            if i >= j {
                return Err(Error::NotAntisymmetric { i, j, k });
            }
            g.set(j, i, k, -q.clone());
            g.set(i, j, k, q);
        }
        Ok(g)
    }

    fn set(&mut self, i: usize, j: usize, k: usize, q: Rational) {
        let m = self.dim;
        self.f[(i * m + j) * m + k] = q;
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[Rational] {
        let o = (i * self.dim + j) * self.dim;
        &self.f[o..o + self.dim]
    }

    /// Nonzero `(i, j, k, q)` with `i < j`, lexicographic.
    pub fn half_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        let m = self.dim;
        (0..m).flat_map(move |i| {
            (i + 1..m).flat_map(move |j| {
                self.structure(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, q)| !q.is_zero())
                    .map(move |(k, q)| (i, j, k, q))
            })
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.f.iter().all(Zero::is_zero)
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        Ok(self.br(x, y))
    }

    pub(crate) fn br(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                if i != j {
                    axpy(&mut out, &(xi * yj), self.structure(i, j));
                }
            }
        }
        out
    }

    /// `ad e_i` as a matrix on column vectors.
    pub fn ad(&self, i: usize) -> Matrix {
        let m = self.dim;
        let mut a = Matrix::zeros(m, m);
        for j in 0..m {
            a.set_column(j, self.structure(i, j));
        }
        a
    }

    pub fn check_jacobi(&self) -> Result<(), JacobiViolation> {
        let m = self.dim;
        let e: Vec<Vector> = (0..m).map(|i| unit(m, i)).collect();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let mut r = self.br(&e[i], self.structure(j, k));
                    for (a, b) in r.iter_mut().zip(self.br(&e[j], self.structure(k, i))) {
                        *a += b;
                    }
                    for (a, b) in r.iter_mut().zip(self.br(&e[k], self.structure(i, j))) {
                        *a += b;
                    }
                    if !is_zero_vector(&r) {
                        return Err(JacobiViolation {
                            indices: [i, j, k],
                            residual: r,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check_jacobi().is_ok()
    }

    /// `[a, b]` as a subspace.
    pub fn bracket_subspace(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let products: Vec<Vector> = a
            .basis_vectors()
            .flat_map(|x| b.basis_vectors().map(move |y| self.br(x, y)))
            .collect();
        Subspace::span(&products, self.dim).expect("brackets have ambient length")
    }

    pub fn derived_algebra(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_subspace(&full, &full)
    }

    pub fn derived_series(&self) -> LieSeries {
        LieSeries {
            terms: iterate_series(Subspace::full(self.dim), |s| self.bracket_subspace(s, s)),
        }
    }

    pub fn lower_central_series(&self) -> LieSeries {
        let full = Subspace::full(self.dim);
        LieSeries {
            terms: iterate_series(full.clone(), |s| self.bracket_subspace(&full, s)),
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().reaches_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().reaches_zero()
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let full = Subspace::full(self.dim);
        s.contains_subspace(&self.bracket_subspace(s, &full))
            .expect("same ambient dimension")
    }

    pub fn killing_form(&self) -> Matrix {
        let m = self.dim;
        let ads: Vec<Matrix> = (0..m).map(|i| self.ad(i)).collect();
        let mut k = Matrix::zeros(m, m);
        for i in 0..m {
            for j in i..m {
                let v = ads[i].mul(&ads[j]).trace();
                k[(j, i)] = v.clone();
                k[(i, j)] = v;
            }
        }
        k
    }

    pub fn killing_signature(&self) -> KillingSignature {
        signature(&self.killing_form())
    }

    /// Killing-orthogonal complement of the derived algebra.
    pub fn radical(&self) -> Subspace {
        let k = self.killing_form();
        let rows: Vec<Vector> = self
            .derived_algebra()
            .basis_vectors()
            .map(|d| k.vec_mul(d))
            .collect();
        Matrix::from_rows(&rows, self.dim)
            .expect("rows have ambient length")
            .kernel()
    }

    pub fn center(&self) -> Subspace {
        let m = self.dim;
        let mut rows = Vec::with_capacity(m * m);
        for j in 0..m {
            for k in 0..m {
                rows.push((0..m).map(|i| self.structure(i, j)[k].clone()).collect());
            }
        }
        Matrix::from_rows(&rows, m)
            .expect("rows have ambient length")
            .kernel()
    }

    /// Largest ideal of the algebra contained in `s`.
    pub fn core_ideal(&self, s: &Subspace) -> Subspace {
        let m = self.dim;
        let mut cur = s.clone();
        loop {
            if cur.is_zero() {
                return cur;
            }
            let basis: Vec<Vector> = cur.basis_vectors().map(<[Rational]>::to_vec).collect();
            // Residues of [b_a, e_j] modulo cur; x = Σ c_a b_a survives when
            // Σ c_a residue_a vanishes for every j.
            let mut rows = Vec::new();
            for j in 0..m {
                let residues: Vec<Vector> = basis
                    .iter()
                    .map(|b| cur.reduce(&self.br(b, &unit(m, j))).expect("ambient length"))
                    .collect();
                for l in 0..m {
                    rows.push(residues.iter().map(|r| r[l].clone()).collect());
                }
            }
            let coeffs = Matrix::from_rows(&rows, basis.len())
                .expect("rows have basis length")
                .kernel();
            let b = Matrix::from_rows(&basis, m).expect("basis rows have ambient length");
            let vectors: Vec<Vector> = coeffs.basis_vectors().map(|c| b.vec_mul(c)).collect();
            let next = Subspace::span(&vectors, m).expect("ambient length");
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn check_grading(&self, gr: &Grading) -> Result<(), GradingViolation> {
        let m = self.dim;
        if gr.len() != m {
            return Err(GradingViolation::Length {
                expected: m,
                found: gr.len(),
            });
        }
        for i in 0..m {
            for j in i + 1..m {
                let parity = gr.signs[i].times(gr.signs[j]);
                let ok = self
                    .structure(i, j)
                    .iter()
                    .zip(&gr.signs)
                    .all(|(q, &s)| q.is_zero() || s == parity);
                if !ok {
                    return Err(GradingViolation::Parity { i, j });
                }
            }
        }
        Ok(())
    }

    /// The triple system `(x, y, z) = [[x, y], z]` on the odd part, in the
    /// order its basis vectors appear.
    pub fn lie_to_lts(&self, gr: &Grading) -> Result<TripleSystem> {
        self.check_grading(gr).map_err(Error::InvalidGrading)?;
        let odd = gr.indices(Sign::Minus);
        let m = self.dim;
        let mut entries = Vec::new();
        for (a, &i) in odd.iter().enumerate() {
            for (b, &j) in odd.iter().enumerate().skip(a + 1) {
                let xy = self.structure(i, j);
                for (c, &k) in odd.iter().enumerate() {
                    let v = self.br(xy, &unit(m, k));
                    for (d, &l) in odd.iter().enumerate() {
                        if !v[l].is_zero() {
                            entries.push((a, b, c, d, v[l].clone()));
                        }
                    }
                }
            }
        }
        TripleSystem::from_half_entries(odd.len(), entries)
    }

    /// Structure constants in the basis `f_a = Σ_i t[a][i] e_i`.
    pub fn transform(&self, t: &Matrix) -> Result<LieAlgebra> {
        let m = self.dim;
        if t.rows() != m || t.cols() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: t.rows().max(t.cols()),
            });
        }
        let inv = t.inverse()?;
        let mut out = LieAlgebra::abelian(m);
        for a in 0..m {
            for b in a + 1..m {
                let v = inv.vec_mul(&self.br(t.row(a), t.row(b)));
                for (c, q) in v.into_iter().enumerate() {
                    out.set(b, a, c, -q.clone());
                    out.set(a, b, c, q);
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    /// [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2.
    fn so3() -> LieAlgebra {
        LieAlgebra::from_half_entries(
            3,
            [(0, 1, 2, int(1)), (1, 2, 0, int(1)), (0, 2, 1, int(-1))],
        )
        .unwrap()
    }

    /// [e2,e3]=e4, [e3,e4]=-e1.
    fn nil4() -> LieAlgebra {
        LieAlgebra::from_half_entries(4, [(1, 2, 3, int(1)), (2, 3, 0, int(-1))]).unwrap()
    }

    #[test]
    fn jacobi() {
        assert_eq!(LieAlgebra::abelian(4).check_jacobi(), Ok(()));
        assert_eq!(so3().check_jacobi(), Ok(()));
        assert_eq!(nil4().check_jacobi(), Ok(()));
        // [e1,e2]=e3, [e1,e3]=e1: the cyclic sum on (e1,e2,e3) is e3.
        let bad = LieAlgebra::from_half_entries(3, [(0, 1, 2, int(1)), (0, 2, 0, int(1))]).unwrap();
        let v = bad.check_jacobi().unwrap_err();
        assert_eq!(v.indices, [0, 1, 2]);
        assert_eq!(v.to_string(), "jacobi identity violated at (1,2,3): residual 0 0 1");
    }

    #[test]
    fn series() {
        assert_eq!(LieAlgebra::abelian(3).derived_series().dims(), vec![3, 0]);
        assert_eq!(nil4().derived_series().dims(), vec![4, 2, 0]);
        assert_eq!(nil4().lower_central_series().dims(), vec![4, 2, 1, 0]);
        let s = so3().derived_series();
        assert_eq!(s.dims(), vec![3, 3]);
        assert!(!s.reaches_zero());
    }

    #[test]
    fn killing() {
        assert_eq!(
            LieAlgebra::abelian(3).killing_signature(),
            KillingSignature { positive: 0, negative: 0, zero: 3 }
        );
        assert_eq!(so3().killing_form(), Matrix::from_i64(3, 3, &[-2, 0, 0, 0, -2, 0, 0, 0, -2]));
        assert_eq!(
            so3().killing_signature(),
            KillingSignature { positive: 0, negative: 3, zero: 0 }
        );
    }

    #[test]
    fn signature_with_zero_diagonal() {
        let h = Matrix::from_i64(2, 2, &[0, 1, 1, 0]);
        assert_eq!(signature(&h), KillingSignature { positive: 1, negative: 1, zero: 0 });
        let s = Matrix::from_i64(3, 3, &[0, 0, 0, 0, 0, 2, 0, 2, 0]);
        assert_eq!(signature(&s), KillingSignature { positive: 1, negative: 1, zero: 1 });
    }

    #[test]
    fn radical_and_center() {
        assert!(LieAlgebra::abelian(2).radical().is_full());
        assert!(so3().radical().is_zero());
        assert!(nil4().radical().is_full());
        assert!(LieAlgebra::abelian(2).center().is_full());
        assert_eq!(nil4().center(), Subspace::coordinate(4, [0]));
        assert!(so3().center().is_zero());
    }

    #[test]
    fn grading() {
        let g = so3();
        assert_eq!(g.check_grading(&Grading::split(2, 1)), Ok(()));
        assert!(matches!(
            g.check_grading(&Grading::split(3, 0)),
            Err(GradingViolation::Parity { i: 0, j: 1 })
        ));
        assert_eq!(g.check_grading(&Grading::split(0, 3)), Ok(()));
        assert_eq!(LieAlgebra::abelian(3).check_grading(&Grading::split(0, 3)), Ok(()));
    }

    #[test]
    fn so3_gives_spherical_plane() {
        let t = so3().lie_to_lts(&Grading::split(2, 1)).unwrap();
        // (e1,e2,e1) = [e3,e1] = e2 and (e1,e2,e2) = [e3,e2] = -e1.
        let expect = TripleSystem::from_half_entries(
            2,
            [(0, 1, 0, 1, int(1)), (0, 1, 1, 0, int(-1))],
        )
        .unwrap();
        assert_eq!(t, expect);
    }

    #[test]
    fn core_ideal_detects_central_even_part() {
        let g = LieAlgebra::abelian(3);
        assert_eq!(g.core_ideal(&Subspace::coordinate(3, [2])), Subspace::coordinate(3, [2]));
        assert!(so3().core_ideal(&Subspace::coordinate(3, [2])).is_zero());
    }

    #[test]
    fn transform_preserves_signature() {
        let t = Matrix::from_i64(3, 3, &[1, 2, 0, 0, 1, -1, 1, 0, 1]);
        let g = so3().transform(&t).unwrap();
        assert_eq!(g.check_jacobi(), Ok(()));
        assert_eq!(g.killing_signature(), so3().killing_signature());
    }
}
