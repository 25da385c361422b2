//! Exact identities satisfied by the coefficient rows. Every check is carried
//! out in rational arithmetic; a failure indicates a bug, never rounding.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::coeffs::{coefficients, Method};
use super::factorial;
use crate::space::Dim;
use crate::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub k: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

fn half(n: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(2))
}

/// Evaluates the row at `x = (k-1)/2` (must give `(k-1)!`) and at every root
/// of the shifted multiplicity polynomial other than the origin:
/// `p = 1, ..., (k-3)/2` for odd `k`, `p = 1/2, 3/2, ..., (k-3)/2` for even `k`.
pub fn check_identities(dim: Dim) -> IdentityReport {
    let k = dim.get();
    let table = coefficients(dim, Method::Expansion);
    let mut checks = vec![IdentityCheck {
        name: "sum_j B_kj ((k-1)/2)^j = (k-1)!".to_string(),
        lhs: table.eval(&half(k as i64 - 1)),
        rhs: Rational::from_integer(factorial(k - 1)),
    }];
    // roots at p = (k-3)/2, (k-5)/2, ... down to 1 (odd k) or 1/2 (even k)
    let mut twice_p = k as i64 - 3;
    while twice_p >= 1 {
        let p = half(twice_p);
        checks.push(IdentityCheck {
            name: format!("sum_j B_kj p^j = 0 at p = {p}"),
            lhs: table.eval(&p),
            rhs: Rational::zero(),
        });
        twice_p -= 2;
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    IdentityReport { k, checks }
}

/// `B_{k,j} = 0` exactly when `j = 0` or `j ≡ k (mod 2)`.
pub fn parity_holds(dim: Dim) -> bool {
    let k = dim.get();
    let table = coefficients(dim, Method::Expansion);
    table.coeffs().iter().enumerate().all(|(j, c)| {
        let should_vanish = j == 0 || j % 2 == k % 2;
        c.is_zero() == should_vanish
    })
}

/// Odd `k`: every entry is an integer. Even `k`: `2^{k-2} B_{k,j}` is.
pub fn integrality_holds(dim: Dim) -> bool {
    let k = dim.get();
    let table = coefficients(dim, Method::Expansion);
    let scale = if k % 2 == 1 {
        BigInt::one()
    } else {
        BigInt::one() << (k - 2)
    };
    table.coeffs().iter().all(|c| {
        let scaled = c * Rational::from_integer(scale.clone());
        scaled.denom().is_one()
    })
}

/// `B_{k,k-1} = 2`.
pub fn leading_is_two(dim: Dim) -> bool {
    let table = coefficients(dim, Method::Expansion);
    table.get(dim.get() - 1) == Some(&Rational::from_integer(BigInt::from(2)))
}
