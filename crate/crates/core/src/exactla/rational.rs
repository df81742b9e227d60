//! Exact rational scalars and coordinate vectors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Coordinate vector over [`Rational`].
pub type Vector = Vec<Rational>;

/// `num / den` reduced to lowest terms.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

/// Standard basis vector `e_i` (zero-based) of length `n`.
pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Vector from small integers.
pub fn int_vector(values: &[i64]) -> Vector {
    values.iter().map(|&x| int(x)).collect()
}

/// `acc += scale * v`.
pub fn axpy(acc: &mut [Rational], scale: &Rational, v: &[Rational]) {
    debug_assert_eq!(acc.len(), v.len());
    if scale.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += scale * x;
        }
    }
}

pub fn scaled(v: &[Rational], scale: &Rational) -> Vector {
    v.iter().map(|x| x * scale).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let q = rat(4, -6);
        assert_eq!(q.numer(), &BigInt::from(-2));
        assert_eq!(q.denom(), &BigInt::from(3));
        assert_eq!(rat(0, 5), Rational::zero());
        assert_eq!(rat(0, 5).denom(), &BigInt::from(1));
    }

    #[test]
    fn display_is_p_or_p_over_q() {
        assert_eq!(int(-3).to_string(), "-3");
        assert_eq!(rat(1, 4).to_string(), "1/4");
        assert_eq!(rat(-1, 2).to_string(), "-1/2");
    }

    #[test]
    fn axpy_accumulates() {
        let mut acc = int_vector(&[1, 0, 2]);
        axpy(&mut acc, &rat(1, 2), &int_vector(&[2, 4, 0]));
        assert_eq!(acc, int_vector(&[2, 2, 2]));
        assert_eq!(dot(&acc, &int_vector(&[1, 1, 1])), int(6));
    }
}
