//! Numeric residues and limits on the lattice `s0 = k/2 - n`, by Richardson
//! extrapolation of symmetric samples at `s0 ± eps` and `s0 ± eps/2`.

use num_complex::Complex;

use super::continuation::zeta_continuation;
use super::options::EvalOptions;
use crate::error::{Result, ZetaError};
use crate::scalar::Real;
use crate::space::SpaceSpec;

fn check_eps<T: Real>(eps: T) -> Result<()> {
    if eps > T::zero() && eps < T::lit(0.1) {
        Ok(())
    } else {
        Err(ZetaError::Domain("eps must lie in (0, 0.1)".into()))
    }
}

/// `(4 A(eps/2) - A(eps)) / 3` for an even sample functional `A`.
fn richardson<T: Real>(
    eps: T,
    mut sample: impl FnMut(T) -> Result<Complex<T>>,
) -> Result<Complex<T>> {
    let coarse = sample(eps)?;
    let fine = sample(eps / T::lit(2.0))?;
    Ok((fine * T::lit(4.0) - coarse) / T::lit(3.0))
}

/// Estimate of `lim_{s -> s0} (s - s0) Z(s)` at `s0 = k/2 - n`.
pub fn residue_numeric<T: Real>(
    spec: SpaceSpec,
    n: usize,
    eps: T,
    opts: &EvalOptions<T>,
) -> Result<Complex<T>> {
    check_eps(eps)?;
    let s0 = T::from_usize_lossy(spec.k()) / T::lit(2.0) - T::from_usize_lossy(n);
    richardson(eps, |e| {
        let right = Complex::new(s0 + e, T::zero());
        let left = Complex::new(s0 - e, T::zero());
        let zr = zeta_continuation(spec, right, opts)?.value;
        let zl = zeta_continuation(spec, left, opts)?.value;
        // offsets as actually represented
        Ok((zr * (right.re - s0) + zl * (left.re - s0)) / T::lit(2.0))
    })
}

/// Estimate of `lim_{s -> s0} Z(s)` from samples that avoid `s0` itself.
pub fn limit_numeric<T: Real>(
    spec: SpaceSpec,
    s0: T,
    eps: T,
    opts: &EvalOptions<T>,
) -> Result<Complex<T>> {
    check_eps(eps)?;
    richardson(eps, |e| {
        let zr = zeta_continuation(spec, Complex::new(s0 + e, T::zero()), opts)?.value;
        let zl = zeta_continuation(spec, Complex::new(s0 - e, T::zero()), opts)?.value;
        Ok((zr + zl) / T::lit(2.0))
    })
}
