//! Hurwitz zeta `zeta(s; a) = sum_{n>=0} (n + a)^{-s}` by Euler–Maclaurin
//! summation:
//!
//! ```text
//! zeta(s; a) = sum_{n<N} (n+a)^{-s} + x^{1-s}/(s-1) + x^{-s}/2
//!            + sum_{m=1}^{M} B_{2m}/(2m)! (s)_{2m-1} x^{-s-2m+1} + R,    x = N + a
//! |R| <= 4 |(s)_{2M}| / (2 pi)^{2M} * x^{-(sigma+2M-1)} / (sigma+2M-1)
//! ```
//!
//! `N` and `M` are searched jointly so the remainder bound drops below the
//! tolerance. For `Re s < 1` the search starts from `N = 0`, which keeps the
//! direct sum (and the cancellation against `x^{1-s}/(s-1)`) small.

use std::sync::OnceLock;

use num_complex::Complex;

use super::options::{EvalFlags, EvalOptions, EvalResult};
use crate::error::{Result, ZetaError};
use crate::exact::{bernoulli_number, factorial};
use crate::scalar::Real;
use crate::Rational;

const M_CAP: usize = 80;
const N_CAP: usize = 1 << 20;

/// `B_{2m} / (2m)!` for `m = 0..=M_CAP`.
fn em_coefficients() -> &'static [f64] {
    static COEFFS: OnceLock<Vec<f64>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        (0..=M_CAP)
            .map(|m| {
                let c = bernoulli_number(2 * m) / Rational::from_integer(factorial(2 * m));
                num_traits::ToPrimitive::to_f64(&c).unwrap_or(0.0)
            })
            .collect()
    })
}

/// `expm1(z) / z`, equal to 1 at the origin.
pub(crate) fn expm1_ratio<T: Real>(z: Complex<T>) -> Complex<T> {
    if z.norm() < T::lit(0.5) {
        let mut term = Complex::new(T::one(), T::zero());
        let mut sum = term;
        for m in 2..40 {
            term = term * z / T::from_usize_lossy(m);
            sum = sum + term;
            if term.norm() <= T::epsilon() * sum.norm() {
                break;
            }
        }
        sum
    } else {
        (z.exp() - Complex::new(T::one(), T::zero())) / z
    }
}

/// Raw Euler–Maclaurin evaluation.
#[derive(Debug, Clone, Copy)]
pub(crate) struct HurwitzEval<T> {
    pub value: Complex<T>,
    pub bound: T,
    pub terms: usize,
    pub truncated: bool,
}

/// `log` of the remainder bound for given `x = N + a` and correction order `m`,
/// using prefix sums of `ln|s + i|`. `None` means the bound is exactly zero.
fn log_remainder<T: Real>(sigma: T, log_rising: &[Option<T>], x: T, m: usize) -> Option<T> {
    let two_m = T::from_usize_lossy(2 * m);
    let expo = sigma + two_m - T::one();
    let lr = log_rising[2 * m]?;
    Some(T::lit(4.0).ln() + lr - two_m * (T::TAU()).ln() - expo * x.ln() - expo.ln())
}

/// Evaluates `zeta(s; a)`, or `zeta(s; a) - 1/(s-1)` when `regularized`.
pub(crate) fn hurwitz_em<T: Real>(
    s: Complex<T>,
    a: T,
    tol: T,
    em_order: usize,
    regularized: bool,
) -> HurwitzEval<T> {
    let one = Complex::new(T::one(), T::zero());
    let sigma = s.re;
    let eps = T::epsilon();
    let m_min = {
        let need = ((T::lit(2.0) - sigma) / T::lit(2.0)).ceil();
        let need = if need > T::zero() {
            need.to_usize().unwrap_or(M_CAP)
        } else {
            0
        };
        (em_order / 2).max(need).clamp(1, M_CAP)
    };

    // ln|(s)_i| for i = 0..=2*M_CAP; None once a factor vanishes
    let mut log_rising: Vec<Option<T>> = Vec::with_capacity(2 * M_CAP + 1);
    log_rising.push(Some(T::zero()));
    for i in 0..2 * M_CAP {
        let prev = log_rising[i];
        let factor = (s + T::from_usize_lossy(i)).norm();
        log_rising.push(match prev {
            Some(p) if factor > T::zero() => Some(p + factor.ln()),
            _ => None,
        });
    }

    let scale_at = |x: T| -> T {
        let xs = (-s * x.ln()).exp();
        let main = if regularized {
            (-(s - one) * x.ln()).exp().norm().max(x.ln().abs())
        } else {
            (xs * x / (s - one)).norm()
        };
        main + xs.norm()
    };

    let mut n = if sigma >= T::one() {
        let im = s.im.abs().ceil().to_usize().unwrap_or(N_CAP);
        let two_a = (T::lit(2.0) * a).ceil().to_usize().unwrap_or(N_CAP);
        10.max(im).max(two_a)
    } else {
        0
    };
    let mut best: (usize, usize, Option<T>);
    let mut truncated = true;
    loop {
        let x = T::from_usize_lossy(n) + a;
        let target = tol.max(eps * scale_at(x));
        let mut choice = (m_min, log_remainder(sigma, &log_rising, x, m_min));
        for m in m_min + 1..=M_CAP {
            let lb = log_remainder(sigma, &log_rising, x, m);
            match (lb, choice.1) {
                (None, _) => {
                    choice = (m, None);
                    break;
                }
                (Some(v), Some(c)) if v < c => choice = (m, Some(v)),
                _ => {}
            }
        }
        best = (n, choice.0, choice.1);
        let ok = match choice.1 {
            None => true,
            Some(lb) => lb.exp() <= target,
        };
        if ok {
            truncated = false;
            break;
        }
        if n >= N_CAP {
            break;
        }
        n = if n == 0 { 1 } else { n + (n / 2).max(1) };
    }
    let (n, m, log_bound) = best;

    let mut sum = Complex::new(T::zero(), T::zero());
    let mut abs_sum = T::zero();
    for i in (0..n).rev() {
        let base = T::from_usize_lossy(i) + a;
        let t = (-s * base.ln()).exp();
        abs_sum = abs_sum + t.norm();
        sum = sum + t;
    }
    let x = T::from_usize_lossy(n) + a;
    let lx = x.ln();
    let xs = (-s * lx).exp();
    let integral = if regularized {
        let u = s - one;
        expm1_ratio(-u * lx) * (-lx)
    } else {
        xs * x / (s - one)
    };
    let half = xs / T::lit(2.0);
    let coeffs = em_coefficients();
    let mut q = s * xs / x;
    let mut corr = Complex::new(T::zero(), T::zero());
    let mut corr_abs = T::zero();
    for (mm, &c) in coeffs.iter().enumerate().take(m + 1).skip(1) {
        let t = q * T::lit(c);
        corr = corr + t;
        corr_abs = corr_abs + t.norm();
        let k = T::from_usize_lossy(2 * mm);
        q = q * (s + k - T::one()) * (s + k) / (x * x);
    }
    let value = sum + integral + half + corr;
    let magnitude = abs_sum + integral.norm() + half.norm() + corr_abs;
    let rounding = eps * (s.norm() * lx.abs() + T::lit(6.0)) * magnitude;
    let remainder = log_bound.map_or(T::zero(), |lb| lb.exp());
    HurwitzEval {
        value,
        bound: remainder + rounding,
        terms: n + m,
        truncated,
    }
}

fn check_args<T: Real>(s: Complex<T>, a: T, opts: &EvalOptions<T>) -> Result<()> {
    opts.validate()?;
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(ZetaError::Domain("s must be finite".into()));
    }
    if a.is_nan() || a <= T::zero() || !a.is_finite() {
        return Err(ZetaError::Domain(
            "Hurwitz parameter a must be positive".into(),
        ));
    }
    if (s - Complex::new(T::one(), T::zero())).norm() <= opts.pole_eps {
        return Err(ZetaError::PoleAtOne);
    }
    Ok(())
}

/// `zeta(s; a)` for complex `s != 1` and real `a > 0`.
pub fn hurwitz_zeta<T: Real>(s: Complex<T>, a: T, opts: &EvalOptions<T>) -> Result<EvalResult<T>> {
    check_args(s, a, opts)?;
    let (tol, clamped) = opts.effective_tol();
    let raw = hurwitz_em(s, a, tol, opts.em_order, false);
    Ok(EvalResult {
        value: raw.value,
        error_bound: raw.bound,
        terms_used: raw.terms,
        flags: EvalFlags {
            truncated: raw.truncated,
            tolerance_clamped: clamped,
            ..EvalFlags::default()
        },
    })
}

/// Riemann zeta, `zeta(s; 1)`.
pub fn riemann_zeta<T: Real>(s: Complex<T>, opts: &EvalOptions<T>) -> Result<EvalResult<T>> {
    hurwitz_zeta(s, T::one(), opts)
}
