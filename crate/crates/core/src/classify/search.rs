//! Enumerative search for basis changes between two triple systems.
//!
//! Candidates are matrices whose entries come from a growing list of small
//! rationals. Level `k` uses the first `LEVEL_SIZES[k]` values of
//! [`LEVEL_VALUES`] and skips the matrices already tried at level `k - 1`.
//! Within a level, entry `(0,0)` is the most significant digit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::exactla::{rat, Matrix, Rational};
use crate::triple::TripleSystem;

/// Entry values as `(numerator, denominator)`, in enumeration order.
pub const LEVEL_VALUES: [(i64, i64); 15] = [
    (0, 1),
    (1, 1),
    (-1, 1),
    (2, 1),
    (-2, 1),
    (1, 2),
    (-1, 2),
    (3, 1),
    (-3, 1),
    (1, 3),
    (-1, 3),
    (3, 2),
    (-3, 2),
    (2, 3),
    (-2, 3),
];

const LEVEL_SIZES: [usize; 3] = [3, 7, 15];
/// Common denominator of the values used at each level.
const LEVEL_DENOMS: [i64; 3] = [1, 2, 6];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub witness: Option<Matrix>,
    pub tested: u64,
}

/// Nonzero structure constants scaled to integers by a common denominator.
struct IntTensor {
    scale: i128,
    /// `(i, j, k, l, value)` over all `i != j`.
    entries: Vec<(usize, usize, usize, usize, i128)>,
    dense: Vec<i128>,
}

fn to_int_tensor(t: &TripleSystem) -> Option<IntTensor> {
    let n = t.dim();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for q in t.structure(i, j, k) {
                    den = den.lcm(q.denom());
                }
            }
        }
    }
    let scale = den.to_i128()?;
    let mut entries = Vec::new();
    let mut dense = vec![0i128; n.pow(4)];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for (l, q) in t.structure(i, j, k).iter().enumerate() {
                    if q.is_zero() {
                        continue;
                    }
                    let v = (q.numer() * (&den / q.denom())).to_i128()?;
                    entries.push((i, j, k, l, v));
                    dense[((i * n + j) * n + k) * n + l] = v;
                }
            }
        }
    }
    Some(IntTensor {
        scale,
        entries,
        dense,
    })
}

/// Tests `transform(a, S / denom) == b` up to invertibility, in integers:
/// `Db · Σ S_pi S_qj S_rk a'_ijk = denom² · Da · Σ_d b'_pqr^d S_d`.
/// Returns `None` on overflow.
fn integer_match(a: &IntTensor, b: &IntTensor, s: &[i128], n: usize, denom: i128) -> Option<bool> {
    let rhs_scale = denom.checked_mul(denom)?.checked_mul(a.scale)?;
    let mut lhs = vec![0i128; n * n];
    let mut rhs = vec![0i128; n];
    for p in 0..n {
        for q in p + 1..n {
            lhs.iter_mut().for_each(|x| *x = 0);
            for &(i, j, k, l, v) in &a.entries {
                let spq = s[p * n + i].checked_mul(s[q * n + j])?;
                if spq == 0 {
                    continue;
                }
                let w = spq.checked_mul(v)?;
                for r in 0..n {
                    let srk = s[r * n + k];
                    if srk != 0 {
                        let cell = &mut lhs[r * n + l];
                        *cell = cell.checked_add(w.checked_mul(srk)?)?;
                    }
                }
            }
            for r in 0..n {
                rhs.iter_mut().for_each(|x| *x = 0);
                for d in 0..n {
                    let coeff = b.dense[((p * n + q) * n + r) * n + d];
                    if coeff == 0 {
                        continue;
                    }
                    for l in 0..n {
                        let sdl = s[d * n + l];
                        if sdl != 0 {
                            rhs[l] = rhs[l].checked_add(coeff.checked_mul(sdl)?)?;
                        }
                    }
                }
                for l in 0..n {
                    let left = lhs[r * n + l].checked_mul(b.scale)?;
                    let right = rhs[l].checked_mul(rhs_scale)?;
                    if left != right {
                        return Some(false);
                    }
                }
            }
        }
    }
    Some(true)
}

fn exact_match(a: &TripleSystem, b: &TripleSystem, t: &Matrix) -> bool {
    t.is_invertible() && a.transform(t).is_ok_and(|x| &x == b)
}

/// Searches for `T` with `a.transform(T) == b`, testing at most `budget`
/// candidates.
pub fn search_witness(a: &TripleSystem, b: &TripleSystem, budget: u64) -> SearchOutcome {
    let n = a.dim();
    let mut tested = 0u64;
    if n != b.dim() {
        return SearchOutcome {
            witness: None,
            tested,
        };
    }
    let ints = to_int_tensor(a).zip(to_int_tensor(b));
    let cells = n * n;
    for level in 0..LEVEL_SIZES.len() {
        let size = LEVEL_SIZES[level];
        let previous = if level == 0 { 0 } else { LEVEL_SIZES[level - 1] };
        let denom = LEVEL_DENOMS[level];
        let scaled: Vec<i128> = LEVEL_VALUES[..size]
            .iter()
            .map(|&(p, q)| (p * (denom / q)) as i128)
            .collect();
        let values: Vec<Rational> = LEVEL_VALUES[..size].iter().map(|&(p, q)| rat(p, q)).collect();
        let mut digits = vec![0usize; cells];
        let mut s = vec![0i128; cells];
        loop {
            if level == 0 || digits.iter().any(|&d| d >= previous) {
                if tested >= budget {
                    return SearchOutcome {
                        witness: None,
                        tested,
                    };
                }
                tested += 1;
                for (slot, &d) in s.iter_mut().zip(&digits) {
                    *slot = scaled[d];
                }
                let hit = match &ints {
                    Some((ia, ib)) => integer_match(ia, ib, &s, n, denom as i128),
                    None => None,
                };
                let t = || {
                    let entries = digits.iter().map(|&d| values[d].clone()).collect();
                    Matrix::from_vec(n, n, entries).expect("n x n entries")
                };
                let found = match hit {
                    Some(false) => None,
                    Some(true) | None => Some(t()).filter(|t| exact_match(a, b, t)),
                };
                if let Some(witness) = found {
                    return SearchOutcome {
                        witness: Some(witness),
                        tested,
                    };
                }
            }
            // Odometer increment, last cell least significant.
            let mut pos = cells;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < size {
                    break;
                }
                digits[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX || cells == 0 {
                break;
            }
        }
    }
    SearchOutcome {
        witness: None,
        tested,
    }
}
