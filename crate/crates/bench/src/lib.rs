//! Inputs shared by the benchmarks.

use lts_core::catalog::all_entries;
use lts_core::exactla::{int, Matrix};
use lts_core::TripleSystem;

/// A fixed invertible change of basis with small entries.
pub fn mixing_matrix(n: usize) -> Matrix {
    let mut m = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m[(i, j)] = int(((i + 2 * j) % 3) as i64 - 1);
            }
        }
    }
    m
}

/// Catalog systems after a non-trivial change of basis, so the constants are
/// dense and fractional.
pub fn mixed_catalog() -> Vec<(&'static str, TripleSystem)> {
    all_entries()
        .into_iter()
        .filter_map(|e| {
            let w = mixing_matrix(e.system.dim());
            w.inverse().ok()?;
            Some((e.label, e.system.transform(&w).ok()?))
        })
        .collect()
}
