//! Canonical Lie triple systems of dimensions 2 and 3, with frozen
//! fingerprints.

use num_traits::Zero;

use crate::classify::Fingerprint;
use crate::error::{Error, Result};
use crate::exactla::{int, rat, Matrix, Rational};
use crate::lie::KillingSignature;
use crate::triple::TripleSystem;

/// Diagonal symmetric form `diag(alpha, nu)` on the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricForm2D {
    pub alpha: Rational,
    pub nu: Rational,
}

impl SymmetricForm2D {
    pub fn new(alpha: Rational, nu: Rational) -> Self {
        Self { alpha, nu }
    }

    fn ints(alpha: i64, nu: i64) -> Self {
        Self::new(int(alpha), int(nu))
    }
}

/// The plane with `(X,Y,Z) = β(X,Z)Y − β(Y,Z)X`.
pub fn from_symmetric_form(beta: &SymmetricForm2D) -> TripleSystem {
    TripleSystem::from_half_entries(
        2,
        [
            (0, 1, 0, 1, beta.alpha.clone()),
            (0, 1, 1, 0, -beta.nu.clone()),
        ],
    )
    .expect("indices are in range")
}

/// Three-dimensional system with `A = (e1,e2,-)`, `B = (e2,e3,-)` and
/// `C = (e3,e1,-)` acting on coordinate columns.
///
/// Fails with [`Error::CyclicMismatch`] unless `A e3 + B e1 + C e2 = 0`.
/// The derivation identity is not checked.
pub fn from_operators(a: &Matrix, b: &Matrix, c: &Matrix) -> Result<TripleSystem> {
    for m in [a, b, c] {
        if m.rows() != 3 || m.cols() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: m.rows().max(m.cols()),
            });
        }
    }
    let cyclic = (0..3).all(|l| (&a[(l, 2)] + &b[(l, 0)] + &c[(l, 1)]).is_zero());
    if !cyclic {
        return Err(Error::CyclicMismatch);
    }
    let mut entries = Vec::new();
    for k in 0..3 {
        for l in 0..3 {
            entries.push((0, 1, k, l, a[(l, k)].clone()));
            entries.push((1, 2, k, l, b[(l, k)].clone()));
            entries.push((0, 2, k, l, -c[(l, k)].clone()));
        }
    }
    TripleSystem::from_half_entries(3, entries)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: &'static str,
    pub system: TripleSystem,
    /// Which family of the classification the entry realizes.
    pub description: &'static str,
    /// Name of the enveloping algebra in Mubarakzyanov's tables, where one
    /// is known; carried as text only.
    pub notes: &'static str,
    pub expected: Fingerprint,
}

fn sig(positive: usize, negative: usize, zero: usize) -> KillingSignature {
    KillingSignature {
        positive,
        negative,
        zero,
    }
}

#[allow(clippy::too_many_arguments)]
fn fp(
    dim_m: usize,
    m_derived_dims: &[usize],
    m_center_dim: usize,
    lts_radical_dim: usize,
    h_dim: usize,
    g_derived_dims: &[usize],
    g_lcs_dims: &[usize],
    g_killing: KillingSignature,
    g_radical_dim: usize,
    g_center_dim: usize,
    m_killing: KillingSignature,
    h_killing: KillingSignature,
) -> Fingerprint {
    Fingerprint {
        dim_m,
        m_derived_dims: m_derived_dims.to_vec(),
        m_center_dim,
        lts_radical_dim,
        h_dim,
        g_dim: dim_m + h_dim,
        g_derived_dims: g_derived_dims.to_vec(),
        g_lcs_dims: g_lcs_dims.to_vec(),
        g_killing,
        g_radical_dim,
        g_center_dim,
        canonical: true,
        m_killing,
        h_killing,
    }
}

fn m3(values: [[Rational; 3]; 3]) -> Matrix {
    let rows: Vec<Vec<Rational>> = values.into_iter().map(Vec::from).collect();
    Matrix::from_rows(&rows, 3).expect("3x3")
}

fn mi(values: [[i64; 3]; 3]) -> Matrix {
    Matrix::from_i64(3, 3, values.as_flattened())
}

fn zero3() -> Matrix {
    Matrix::zeros(3, 3)
}

fn ops(a: Matrix, b: Matrix, c: Matrix) -> TripleSystem {
    let t = from_operators(&a, &b, &c).expect("catalog operators satisfy the cyclic identity");
    debug_assert!(t.is_valid());
    t
}

/// `A = [[0,s,0],0,0]`: the solvable plane `<e1,e2>` times the line `<e3>`.
fn type_iii(s: i64) -> TripleSystem {
    ops(mi([[0, s, 0], [0; 3], [0; 3]]), zero3(), zero3())
}

fn type_iv(s: i64) -> TripleSystem {
    ops(
        mi([[0, s, 1], [0; 3], [0; 3]]),
        zero3(),
        mi([[0, -1, -s], [0; 3], [0; 3]]),
    )
}

fn type_v(s: i64) -> TripleSystem {
    ops(zero3(), mi([[0, 1, 0], [0, 0, s], [0; 3]]), zero3())
}

fn plane(alpha: i64, nu: i64) -> TripleSystem {
    from_symmetric_form(&SymmetricForm2D::ints(alpha, nu))
}

/// The operators printed for the seventh solvable type:
/// `A = 0`, `B = E11`, `C = -E12`.
///
/// They satisfy the cyclic identity but not the derivation identity, so this
/// is not a Lie triple system and is excluded from [`all_entries`].
pub fn printed_type_vii() -> TripleSystem {
    from_operators(
        &zero3(),
        &mi([[1, 0, 0], [0; 3], [0; 3]]),
        &mi([[0, -1, 0], [0; 3], [0; 3]]),
    )
    .expect("printed operators satisfy the cyclic identity")
}

/// Every catalog entry, in a fixed order.
pub fn all_entries() -> Vec<CatalogEntry> {
    let z = |n| sig(0, 0, n);
    let q = |p, d| rat(p, d);
    let zr = Rational::zero;
    let mut out = Vec::with_capacity(23);
    let mut push = |label, system, description, notes, expected| {
        out.push(CatalogEntry {
            label,
            system,
            description,
            notes,
            expected,
        })
    };

    // Dimension 2.
    push(
        "dim2-1",
        plane(1, 1),
        "spherical plane, beta = diag(1,1)",
        "so(3)/so(2)",
        fp(2, &[2, 2], 0, 0, 1, &[3, 3], &[3, 3], sig(0, 3, 0), 0, 0, sig(0, 2, 0), sig(0, 1, 0)),
    );
    push(
        "dim2-2",
        plane(-1, -1),
        "hyperbolic plane, beta = diag(-1,-1)",
        "sl(2,R)/so(2)",
        fp(2, &[2, 2], 0, 0, 1, &[3, 3], &[3, 3], sig(2, 1, 0), 0, 0, sig(2, 0, 0), sig(0, 1, 0)),
    );
    push(
        "dim2-3",
        plane(1, -1),
        "plane with non-compact h, beta = diag(1,-1)",
        "sl(2,R)/R",
        fp(2, &[2, 2], 0, 0, 1, &[3, 3], &[3, 3], sig(2, 1, 0), 0, 0, sig(1, 1, 0), sig(1, 0, 0)),
    );
    push(
        "dim2-4a",
        plane(1, 0),
        "solvable plane, beta = diag(1,0)",
        "g_{3,5}(p=0)",
        fp(2, &[2, 1, 0], 0, 2, 1, &[3, 2, 0], &[3, 2, 2], sig(0, 1, 2), 3, 0, sig(0, 1, 1), z(1)),
    );
    push(
        "dim2-4b",
        plane(-1, 0),
        "solvable plane, beta = diag(-1,0)",
        "g_{3,4}(h=-1)",
        fp(2, &[2, 1, 0], 0, 2, 1, &[3, 2, 0], &[3, 2, 2], sig(1, 0, 2), 3, 0, sig(1, 0, 1), z(1)),
    );
    push(
        "dim2-5",
        plane(0, 0),
        "abelian plane",
        "R^2/{0}",
        fp(2, &[2, 0], 2, 2, 0, &[2, 0], &[2, 0], z(2), 2, 2, z(2), z(0)),
    );

    // Solvable, dimension 3.
    let nil = |lcs: &[usize], k: KillingSignature, mk: KillingSignature| {
        fp(3, &[3, 1, 0], 1, 3, 1, &[4, 2, 0], lcs, k, 4, 1, mk, z(1))
    };
    push(
        "dim3-I",
        TripleSystem::zero(3),
        "abelian",
        "",
        fp(3, &[3, 0], 3, 3, 0, &[3, 0], &[3, 0], z(3), 3, 3, z(3), z(0)),
    );
    push(
        "dim3-II",
        ops(zero3(), mi([[0, 0, 1], [0; 3], [0; 3]]), zero3()),
        "solvable type II, B = E13",
        "g_{4,1}",
        nil(&[4, 2, 1, 0], z(4), z(3)),
    );
    push(
        "dim3-III+",
        type_iii(1),
        "solvable type III, sign +",
        "g_{3,4}/g_{3,5} plus a line",
        nil(&[4, 2, 2], sig(1, 0, 3), sig(1, 0, 2)),
    );
    push(
        "dim3-III-",
        type_iii(-1),
        "solvable type III, sign -",
        "g_{3,4}/g_{3,5} plus a line",
        nil(&[4, 2, 2], sig(0, 1, 3), sig(0, 1, 2)),
    );
    push(
        "dim3-IV+",
        type_iv(1),
        "solvable type IV, sign +",
        "g_{4,5}/g_{4,6}",
        nil(&[4, 2, 2], sig(1, 0, 3), sig(1, 0, 2)),
    );
    push(
        "dim3-IV-",
        type_iv(-1),
        "solvable type IV, sign -",
        "g_{4,5}/g_{4,6}",
        nil(&[4, 2, 2], sig(0, 1, 3), sig(0, 1, 2)),
    );
    let type5 = |k, mk| fp(3, &[3, 2, 1, 0], 1, 3, 1, &[4, 3, 1, 0], &[4, 3, 3], k, 4, 1, mk, z(1));
    push(
        "dim3-V+",
        type_v(1),
        "solvable type V, sign +",
        "g_8/g_9",
        type5(sig(1, 0, 3), sig(1, 0, 2)),
    );
    push(
        "dim3-V-",
        type_v(-1),
        "solvable type V, sign -",
        "g_8/g_9",
        type5(sig(0, 1, 3), sig(0, 1, 2)),
    );
    push(
        "dim3-VI",
        ops(
            zero3(),
            mi([[0, 0, 1], [0; 3], [0; 3]]),
            mi([[0; 3], [0, 0, 1], [0; 3]]),
        ),
        "solvable type VI",
        "g_{4,13}",
        fp(3, &[3, 2, 0], 0, 3, 2, &[5, 4, 0], &[5, 4, 4], z(5), 5, 0, z(3), z(2)),
    );

    // Splitting, dimension 3.
    let line = TripleSystem::zero(1);
    let split1 = |k, mk, hk| fp(3, &[3, 2, 2], 1, 1, 1, &[4, 3, 3], &[4, 3, 3], k, 1, 1, mk, hk);
    push(
        "split-1a",
        line.direct_sum(&plane(1, 1)),
        "line plus the spherical plane",
        "R + so(3)/so(2)",
        split1(sig(0, 3, 1), sig(0, 2, 1), sig(0, 1, 0)),
    );
    push(
        "split-1b",
        line.direct_sum(&plane(-1, -1)),
        "line plus the hyperbolic plane",
        "R + sl(2,R)/so(2)",
        split1(sig(2, 1, 1), sig(2, 0, 1), sig(0, 1, 0)),
    );
    push(
        "split-1c",
        line.direct_sum(&plane(1, -1)),
        "line plus the plane with non-compact h",
        "R + sl(2,R)/R",
        split1(sig(2, 1, 1), sig(1, 1, 1), sig(1, 0, 0)),
    );
    let split6 = |k, mk, hk| fp(3, &[3, 3], 0, 1, 3, &[6, 6], &[6, 6], k, 3, 0, mk, hk);
    push(
        "split-2",
        ops(
            mi([[0, -1, 0], [0; 3], [0; 3]]),
            mi([[0; 3], [0, 0, -1], [0, 1, 0]]),
            mi([[0, 0, 1], [0; 3], [0; 3]]),
        ),
        "splitting type 2",
        "",
        split6(sig(0, 3, 3), sig(0, 2, 1), sig(0, 1, 2)),
    );
    push(
        "split-3",
        ops(
            mi([[0, 1, 0], [0; 3], [0; 3]]),
            mi([[0; 3], [0, 0, 1], [0, -1, 0]]),
            mi([[0, 0, -1], [0; 3], [0; 3]]),
        ),
        "splitting type 3",
        "",
        split6(sig(2, 1, 3), sig(2, 0, 1), sig(0, 1, 2)),
    );
    push(
        "split-4",
        ops(
            mi([[0, -1, 0], [0; 3], [0; 3]]),
            mi([[0; 3], [0, 0, 1], [0, 1, 0]]),
            mi([[0, 0, -1], [0; 3], [0; 3]]),
        ),
        "splitting type 4",
        "",
        split6(sig(2, 1, 3), sig(1, 1, 1), sig(1, 0, 2)),
    );
    let split5 = || fp(3, &[3, 3], 0, 1, 2, &[5, 5], &[5, 5], sig(2, 1, 2), 2, 0, sig(1, 1, 1), sig(1, 0, 1));
    let quarter_row = |b: i64, c: i64| m3([[zr(), q(b, 4), q(c, 4)], [zr(), zr(), zr()], [zr(), zr(), zr()]]);
    let b56 = |h: i64| m3([[q(h, 2), zr(), zr()], [zr(), zr(), int(1)], [zr(), int(1), zr()]]);
    push(
        "split-5",
        ops(quarter_row(-1, 1), b56(-1), quarter_row(1, -1)),
        "splitting type 5",
        "",
        split5(),
    );
    push(
        "split-6",
        ops(quarter_row(-1, -1), b56(1), quarter_row(-1, -1)),
        "splitting type 6",
        "",
        split5(),
    );
    out
}

pub fn labels() -> Vec<&'static str> {
    all_entries().into_iter().map(|e| e.label).collect()
}

pub fn entry(label: &str) -> Option<CatalogEntry> {
    all_entries().into_iter().find(|e| e.label == label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::unit;

    #[test]
    fn symmetric_form_examples() {
        let s = plane(1, 1);
        assert_eq!(s.structure(0, 1, 0), unit(2, 1).as_slice());
        let neg: Vec<Rational> = unit(2, 0).into_iter().map(|x| -x).collect();
        assert_eq!(s.structure(0, 1, 1), neg.as_slice());
        assert!(plane(0, 0).is_abelian());
        let a = plane(1, 0);
        assert_eq!(a.structure(0, 1, 0), unit(2, 1).as_slice());
        assert!(a.structure(0, 1, 1).iter().all(Zero::is_zero));
        let odd = from_symmetric_form(&SymmetricForm2D::new(rat(2, 3), rat(-5, 7)));
        assert!(odd.is_valid());
    }

    #[test]
    fn operator_examples() {
        assert_eq!(ops(zero3(), zero3(), zero3()), TripleSystem::zero(3));
        let ii = ops(zero3(), mi([[0, 0, 1], [0; 3], [0; 3]]), zero3());
        let nonzero: Vec<_> = ii.half_entries().map(|(i, j, k, l, _)| (i, j, k, l)).collect();
        assert_eq!(nonzero, vec![(1, 2, 2, 0)]);
        assert_eq!(
            from_operators(&mi([[0, 0, 1], [0; 3], [0; 3]]), &zero3(), &zero3()),
            Err(Error::CyclicMismatch)
        );
    }

    #[test]
    fn operators_are_recovered_as_slices() {
        for e in all_entries().iter().filter(|e| e.system.dim() == 3) {
            let t = &e.system;
            let rebuilt = from_operators(&t.operator(0, 1), &t.operator(1, 2), &t.operator(2, 0));
            assert_eq!(rebuilt.as_ref(), Ok(t), "{}", e.label);
        }
    }

    #[test]
    fn entry_list_shape() {
        let labels = labels();
        assert_eq!(labels.len(), 23);
        assert_eq!(labels[0], "dim2-1");
        assert_eq!(labels[22], "split-6");
        assert!(!labels.contains(&"dim3-VII"));
        assert!(entry("dim3-I").unwrap().system.is_abelian());
        assert_eq!(
            entry("split-1a").unwrap().system,
            TripleSystem::zero(1).direct_sum(&plane(1, 1))
        );
        assert!(entry("nope").is_none());
    }

    #[test]
    fn every_entry_is_valid() {
        for e in all_entries() {
            assert_eq!(e.system.check_axioms(), Ok(()), "{}", e.label);
        }
    }

    #[test]
    fn printed_type_vii_is_not_a_triple_system() {
        let t = printed_type_vii();
        let v = t.check_axioms().unwrap_err();
        assert_eq!(v.identity, crate::triple::Identity::Derivation);
    }
}
