use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Result, ZetaError};
use crate::scalar::Real;
use crate::Rational;

/// `psi(a)` at a positive integer or half-integer:
/// `psi(m) = -gamma + H_{m-1}` and
/// `psi(m + 1/2) = -gamma - 2 ln 2 + 2 sum_{i=1}^{m} 1/(2i - 1)`.
pub fn digamma_at_half_integer<T: Real>(a: &Rational) -> Result<T> {
    if !a.is_positive() {
        return Err(ZetaError::Domain(format!(
            "digamma argument must be positive, got {a}"
        )));
    }
    let two = BigInt::from(2);
    let (base, harmonic) = if a.denom().is_one() {
        let m = a
            .to_integer()
            .to_usize()
            .ok_or_else(|| ZetaError::Domain("argument too large".into()))?;
        let h = (1..m).fold(Rational::zero(), |acc, i| {
            acc + Rational::new(BigInt::one(), BigInt::from(i))
        });
        (-T::euler_gamma(), h)
    } else if *a.denom() == two {
        let m = a
            .floor()
            .to_integer()
            .to_usize()
            .ok_or_else(|| ZetaError::Domain("argument too large".into()))?;
        let h = (1..=m).fold(Rational::zero(), |acc, i| {
            acc + Rational::new(two.clone(), BigInt::from(2 * i - 1))
        });
        (-T::euler_gamma() - T::lit(2.0) * T::LN_2(), h)
    } else {
        return Err(ZetaError::Domain(format!(
            "{a} is neither an integer nor a half-integer"
        )));
    };
    Ok(base + T::from_rational(&harmonic))
}
