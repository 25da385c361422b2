//! Exact integer and rational machinery.

pub mod bernoulli;
pub mod coeffs;
pub mod identities;
pub mod multiplicity;
pub mod stirling;

pub use bernoulli::{
    bernoulli_number, bernoulli_polynomial, hurwitz_zeta_nonpos_int, BernoulliCache,
};
pub use coeffs::{
    coefficients, coeffs_via_expansion, coeffs_via_recursion, coeffs_via_stirling, methods_agree,
    CoeffTable, Method,
};
pub use identities::{
    check_identities, integrality_holds, leading_is_two, parity_holds, IdentityCheck,
    IdentityReport,
};
pub use multiplicity::{multiplicity, multiplicity_at};
pub use stirling::{stirling_first, StirlingCache};

use num_bigint::BigInt;
use num_traits::One;

use crate::Rational;

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Ordinary binomial coefficient `C(n, m)`, zero when `m > n`.
pub fn binomial(n: usize, m: usize) -> BigInt {
    if m > n {
        return BigInt::from(0);
    }
    let m = m.min(n - m);
    let mut acc = BigInt::one();
    for i in 0..m {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial coefficient `C(x, m) = x (x-1) ... (x-m+1) / m!`
/// for a rational top argument.
pub fn binomial_rational(x: &Rational, m: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..m {
        acc *= x - Rational::from_integer(BigInt::from(i));
        acc /= Rational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// `x^n` for a rational base.
pub(crate) fn rational_pow(x: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_factorials_and_binomials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn generalized_binomial_half_integer_top() {
        // C(-1/2, 1) = -1/2, C(-1/2, 2) = 3/8
        assert_eq!(binomial_rational(&r(-1, 2), 1), r(-1, 2));
        assert_eq!(binomial_rational(&r(-1, 2), 2), r(3, 8));
        // integer top below the bottom index vanishes
        assert_eq!(binomial_rational(&r(2, 1), 3), r(0, 1));
    }
}
