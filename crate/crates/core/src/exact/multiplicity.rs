//! Eigenvalue multiplicities of the Laplacian on `S^k`.
//!
//! The eigenvalue `n (n + k - 1)` occurs with multiplicity
//! `P_k(n) = (2n + k - 1)(n + 1) ... (n + k - 2) / (k - 1)!`.

use num_bigint::BigInt;

use super::factorial;
use crate::scalar::Scalar;
use crate::space::Dim;

/// `P_k(n)` as an exact integer.
pub fn multiplicity(dim: Dim, n: usize) -> BigInt {
    let k = dim.get();
    let mut num = BigInt::from(2 * n + k - 1);
    for i in 1..=k - 2 {
        num *= BigInt::from(n + i);
    }
    num / factorial(k - 1)
}

/// The multiplicity polynomial `P_k(x)` evaluated at an arbitrary point.
pub fn multiplicity_at<T: Scalar>(dim: Dim, x: &T) -> T {
    let k = dim.get() as i64;
    let two = T::from_int(2);
    let mut acc = two * x.clone() + T::from_int(k - 1);
    for i in 1..=k - 2 {
        acc = acc * (x.clone() + T::from_int(i));
    }
    acc / T::from_bigint(&factorial(dim.get() - 1))
}
