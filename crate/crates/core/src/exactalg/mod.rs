//! Exact arithmetic substrate: rationals, sparse multivariate polynomials over
//! a weighted-graded alphabet, polynomial matrices and exact linear algebra.

mod linalg;
mod matrix;
mod parse;
mod poly;
mod variable;

pub use linalg::{rank_over_q, RowEchelon};
pub use matrix::{DetStrategy, PolyMatrix};
pub use poly::{Monomial, MultiPoly};
pub use variable::{Family, Variable};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// `n / 1`
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * int(k))
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 || n < 0 || k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * int(n - i) / int(i + 1);
    }
    acc
}

/// Elementary symmetric polynomial `e_k` evaluated on a list of rationals.
pub fn elementary_values(k: usize, values: &[Rational]) -> Rational {
    // e_k via the recurrence on prefixes; O(n k).
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    for v in values {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * v;
            e[j] += add;
        }
    }
    e[k].clone()
}

/// Complete homogeneous symmetric polynomial `h_k` on a list of rationals.
pub fn complete_values(k: usize, values: &[Rational]) -> Rational {
    let mut h = vec![Rational::zero(); k + 1];
    h[0] = Rational::one();
    for v in values {
        for j in 1..=k {
            let add = &h[j - 1] * v;
            h[j] += add;
        }
    }
    h[k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&n| int(n)).collect()
    }

    #[test]
    fn symmetric_values_small() {
        assert_eq!(elementary_values(2, &ints(&[1, 2, 3])), int(11));
        assert_eq!(complete_values(2, &ints(&[1, 2, 3])), int(25));
        assert_eq!(elementary_values(4, &ints(&[1, 2, 3])), int(0));
        assert_eq!(complete_values(0, &[]), int(1));
        assert_eq!(elementary_values(1, &[]), int(0));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(5, 7), int(0));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(factorial(5), int(120));
    }
}
