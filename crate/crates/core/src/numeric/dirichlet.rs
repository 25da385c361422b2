//! Direct summation of the defining Dirichlet series, used as an independent
//! check on the continuation where the series converges:
//!
//! ```text
//! Z_k(s) = sum_{n>=1} P_k(n) / [n(n+k-1)]^s
//! L_k(s) = sum_{n>=1} P_k(2n) / [2n(2n+k-1)]^s
//! ```
//!
//! The first `N - 1` terms are summed directly. The tail `sum_{n>=N} f(n)` is
//! replaced by `int_N^inf f + f(N)/2 - f'(N)/12`, whose remainder is bounded
//! by `(1/12) int_N^inf |f''|`.

use num_complex::Complex;

use super::options::{EvalFlags, EvalOptions, EvalResult};
use crate::error::{Result, ZetaError};
use crate::exact::multiplicity_at;
use crate::scalar::Real;
use crate::space::{Space, SpaceSpec};

/// Minimum distance of `Re s` to the right of the abscissa `k/2`.
pub const DIRICHLET_MARGIN: f64 = 0.25;

/// Ascending coefficients of `(k-1)! P_k(y - (k-1)/2)` in `y`, expanded in
/// the floating carrier.
fn shifted_polynomial<T: Real>(k: usize) -> Vec<T> {
    let c = T::from_usize_lossy(k - 1) / T::lit(2.0);
    let mut poly = vec![T::zero(), T::lit(2.0)];
    for i in 1..k - 1 {
        let shift = T::from_usize_lossy(i) - c;
        let mut next = vec![T::zero(); poly.len() + 1];
        for (d, &p) in poly.iter().enumerate() {
            next[d + 1] = next[d + 1] + p;
            next[d] = next[d] + p * shift;
        }
        poly = next;
    }
    poly
}

fn factorial<T: Real>(n: usize) -> T {
    (2..=n).fold(T::one(), |acc, i| acc * T::from_usize_lossy(i))
}

/// `int_u0^inf P_k(u) [u(u+k-1)]^{-s} du`, expanding `(y^2 - c^2)^{-s}` in
/// powers of `c/y` with `y = u + c`. Returns the value and the magnitude of
/// the last term kept.
fn tail_integral<T: Real>(k: usize, s: Complex<T>, u0: T) -> (Complex<T>, T) {
    let c = T::from_usize_lossy(k - 1) / T::lit(2.0);
    let y = u0 + c;
    let ly = y.ln();
    let poly = shifted_polynomial::<T>(k);
    let ratio = (c / y) * (c / y);
    let mut total = Complex::new(T::zero(), T::zero());
    let mut last = T::zero();
    for (j, &b) in poly.iter().enumerate() {
        if b == T::zero() {
            continue;
        }
        let jp1 = T::from_usize_lossy(j + 1);
        let base = ((Complex::new(jp1, T::zero()) - s * T::lit(2.0)) * ly).exp();
        let mut coef = Complex::new(T::one(), T::zero());
        let mut power = T::one();
        for l in 0..64 {
            let lf = T::from_usize_lossy(l);
            let denom = s * T::lit(2.0) + lf * T::lit(2.0) - jp1;
            let term = coef * base * power / denom * b;
            total = total + term;
            last = term.norm();
            if last <= T::epsilon() * total.norm() {
                break;
            }
            coef = coef * (s + lf) / (lf + T::one());
            power = power * ratio;
        }
    }
    (total / factorial::<T>(k - 1), last / factorial::<T>(k - 1))
}

/// Partial sum of the Dirichlet series up to `n_terms` with an Euler–Maclaurin
/// tail. Requires `Re s > k/2 + DIRICHLET_MARGIN`.
pub fn dirichlet_oracle<T: Real>(
    spec: SpaceSpec,
    s: Complex<T>,
    n_terms: usize,
    opts: &EvalOptions<T>,
) -> Result<EvalResult<T>> {
    opts.validate()?;
    let k = spec.k();
    let kf = T::from_usize_lossy(k);
    let abscissa = kf / T::lit(2.0) + T::lit(DIRICHLET_MARGIN);
    if s.re.is_nan() || s.re <= abscissa || !s.im.is_finite() {
        return Err(ZetaError::Domain(format!(
            "Dirichlet series needs Re s > k/2 + {DIRICHLET_MARGIN}"
        )));
    }
    if n_terms < 2 {
        return Err(ZetaError::Domain(
            "Dirichlet oracle needs at least 2 terms".into(),
        ));
    }
    let alpha = match spec.space {
        Space::Sphere => T::one(),
        Space::Projective => T::lit(2.0),
    };
    let km1 = kf - T::one();
    let term = |n: usize| -> (Complex<T>, T) {
        let u = alpha * T::from_usize_lossy(n);
        let p: T = multiplicity_at(spec.dim, &u);
        let lambda = u * (u + km1);
        ((-s * lambda.ln()).exp() * p, lambda.ln())
    };

    let mut sum = Complex::new(T::zero(), T::zero());
    let mut abs_sum = T::zero();
    for n in (1..n_terms).rev() {
        let (f, _) = term(n);
        abs_sum = abs_sum + f.norm();
        sum = sum + f;
    }

    let (f_n, log_lambda) = term(n_terms);
    let u = alpha * T::from_usize_lossy(n_terms);
    let lambda = u * (u + km1);
    let mut dlog_p = T::lit(2.0) / (T::lit(2.0) * u + km1);
    for i in 1..k - 1 {
        dlog_p = dlog_p + T::one() / (u + T::from_usize_lossy(i));
    }
    let dlog_f = Complex::new(dlog_p, T::zero()) - s * (T::lit(2.0) * u + km1) / lambda;
    let f_prime = f_n * dlog_f * alpha;
    let (integral, integral_last) = tail_integral(k, s, u);
    let integral = integral / alpha;
    let tail = integral + f_n / T::lit(2.0) - f_prime / T::lit(12.0);

    // f(x) ~ A x^{-beta}, so int_N^inf |f''| ~ |f(N)| |beta| |beta+1| / (N (Re beta + 1)); doubled.
    let beta = s * T::lit(2.0) - km1;
    let nf = T::from_usize_lossy(n_terms);
    let em_remainder =
        T::lit(2.0) / T::lit(12.0) * f_n.norm() * beta.norm() * (beta + T::one()).norm()
            / (nf * (beta.re + T::one()));
    let rounding = T::epsilon() * (s.norm() * log_lambda + T::lit(8.0)) * (abs_sum + tail.norm());

    Ok(EvalResult {
        value: sum + tail,
        error_bound: em_remainder + rounding + integral_last,
        terms_used: n_terms,
        flags: EvalFlags::default(),
    })
}
