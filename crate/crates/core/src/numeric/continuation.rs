//! Analytic continuation of `Z_k` and `L_k` through the binomial series
//!
//! ```text
//! Z_k(s) = 1/(k-1)! sum_l (s)_l / l! c^{2l} sum_j B_{k,j} zeta(2s + 2l - j; a)
//! ```
//!
//! with `(c, a) = ((k-1)/2, (k+1)/2)` for spheres. For projective spaces
//! `(c, a) = ((k-1)/4, (k+3)/4)`, the coefficients carry an extra `2^j` and
//! the whole sum a `2^{-2s}` prefactor.
//!
//! Individual terms have Hurwitz poles at `s* = (j+1)/2 - l`, all on the
//! lattice `k/2 - n`. Close to such a point each affected term is split as
//! `zeta(w; a) = 1/(w-1) + R(w; a)`; the polar pieces are recombined exactly:
//! `(s)_l / (s - s*) = Q_l(s) + (s*)_l / (s - s*)` where `Q_l` is the divided
//! difference of the rising factorial, and the `(s*)_l` parts summed in
//! rational arithmetic. When that sum vanishes the point is regular and no
//! `1/(s - s*)` term survives.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::hurwitz::hurwitz_em;
use super::options::{EvalFlags, EvalOptions, EvalResult};
use crate::error::{Result, ZetaError};
use crate::exact::{coefficients, factorial, rational_pow, Method};
use crate::numeric::digamma::digamma_at_half_integer;
use crate::scalar::Real;
use crate::space::{Space, SpaceSpec};
use crate::special_values::{residue, special_value, PolePoint};
use crate::Rational;

/// Terms whose Hurwitz argument is within `2 * CROSSING_RADIUS` of 1 are
/// evaluated in regularized form.
const CROSSING_RADIUS: f64 = 5e-4;

/// Required run of consecutive small tail bounds before stopping.
const STABLE_RUN: usize = 3;

struct SeriesTerm<T> {
    j: usize,
    weight: T,
    weight_exact: Rational,
}

struct Series<T> {
    c2: T,
    c2_exact: Rational,
    a: T,
    a_exact: Rational,
    terms: Vec<SeriesTerm<T>>,
    inv_factorial: T,
}

impl<T: Real> Series<T> {
    fn new(spec: SpaceSpec) -> Self {
        let k = spec.k() as i64;
        let table = coefficients(spec.dim, Method::Expansion);
        let (c, a, base) = match spec.space {
            Space::Sphere => (rat(k - 1, 2), rat(k + 1, 2), Rational::one()),
            Space::Projective => (rat(k - 1, 4), rat(k + 3, 4), rat(2, 1)),
        };
        let terms = table
            .support()
            .map(|j| {
                let weight_exact = rational_pow(&base, j) * table.get(j).expect("index in range");
                SeriesTerm {
                    j,
                    weight: T::from_rational(&weight_exact),
                    weight_exact,
                }
            })
            .collect();
        let c2_exact = &c * &c;
        Series {
            c2: T::from_rational(&c2_exact),
            c2_exact,
            a: T::from_rational(&a),
            a_exact: a,
            terms,
            inv_factorial: T::from_rational(&Rational::new(1.into(), factorial(spec.k() - 1))),
        }
    }
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn rising_exact(x: &Rational, l: usize) -> Rational {
    (0..l).fold(Rational::one(), |acc, i| {
        acc * (x + Rational::from_integer(i.into()))
    })
}

/// `((s)_l - (s*)_l) / (s - s*)`, i.e. `sum_m prod_{i<m} (s+i) prod_{m<i<l} (s*+i)`.
fn rising_divided_difference<T: Real>(s: Complex<T>, s_star: T, l: usize) -> Complex<T> {
    let mut suffix = vec![T::one(); l + 1];
    for m in (0..l).rev() {
        suffix[m] = if m + 1 < l {
            suffix[m + 1] * (s_star + T::from_usize_lossy(m + 1))
        } else {
            T::one()
        };
    }
    let mut prefix = Complex::new(T::one(), T::zero());
    let mut acc = Complex::new(T::zero(), T::zero());
    for (m, &tail) in suffix.iter().enumerate().take(l) {
        acc = acc + prefix * tail;
        prefix = prefix * (s + T::from_usize_lossy(m));
    }
    acc
}

/// Majorant of `|zeta(w; a)|` for `Re w = sigma > 1`.
fn zeta_majorant<T: Real>(sigma: T, a: T) -> T {
    a.powf(-sigma) + a.powf(T::one() - sigma) / (sigma - T::one())
}

/// Nearest lattice point `k/2 - n` with `n >= 0`, and its distance from `s`.
pub(crate) fn nearest_lattice_point<T: Real>(k: usize, s: Complex<T>) -> (usize, T) {
    let half_k = T::from_usize_lossy(k) / T::lit(2.0);
    let n = (half_k - s.re).round().max(T::zero());
    let location = half_k - n;
    let n = n.to_usize().unwrap_or(usize::MAX);
    (n, (s - Complex::new(location, T::zero())).norm())
}

fn nonpositive_integer<T: Real>(s: Complex<T>) -> Option<usize> {
    if s.im == T::zero() && s.re <= T::zero() && s.re == s.re.round() {
        (-s.re).to_usize()
    } else {
        None
    }
}

/// Value of `Z_k(s)` (sphere) or `L_k(s)` (projective) anywhere off the poles.
pub fn zeta_continuation<T: Real>(
    spec: SpaceSpec,
    s: Complex<T>,
    opts: &EvalOptions<T>,
) -> Result<EvalResult<T>> {
    opts.validate()?;
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(ZetaError::Domain("s must be finite".into()));
    }
    let k = spec.k();
    let eps = T::epsilon();
    let (tol, clamped) = opts.effective_tol();
    let mut flags = EvalFlags {
        tolerance_clamped: clamped,
        ..EvalFlags::default()
    };

    let (n_star, distance) = nearest_lattice_point(k, s);
    if distance <= opts.pole_eps {
        let r = residue(spec, n_star);
        if !r.is_zero() {
            return Err(ZetaError::AtPole {
                location: Box::new(PolePoint::new(spec, n_star).location),
                residue: Box::new(r),
            });
        }
    }

    if let Some(n) = nonpositive_integer(s) {
        match special_value(spec, n) {
            Ok(v) => {
                let value = T::from_rational(&v);
                flags.exact_routed = true;
                return Ok(EvalResult {
                    value: Complex::new(value, T::zero()),
                    error_bound: value.abs() * eps,
                    terms_used: 0,
                    flags,
                });
            }
            Err(ZetaError::Unsupported(_)) => {}
            Err(e) => return Err(e),
        }
    }

    let series = Series::<T>::new(spec);
    let nj = series.terms.len();
    let prefactor = match spec.space {
        Space::Sphere => Complex::new(series.inv_factorial, T::zero()),
        Space::Projective => (-s * T::lit(2.0) * T::LN_2()).exp() * series.inv_factorial,
    };
    let pref_abs = prefactor.norm();

    // Regularized handling of terms crossing a Hurwitz pole at s* = k/2 - n_star.
    let near = distance < T::lit(CROSSING_RADIUS);
    let s_star_exact = rat(k as i64 - 2 * n_star as i64, 2);
    let s_star = T::from_rational(&s_star_exact);
    let crossing_l = |j: usize| -> Option<usize> {
        let h = (k - 1 - j) / 2;
        (near && h <= n_star).then(|| n_star - h)
    };
    let mut lump = Complex::new(T::zero(), T::zero());
    if near {
        flags.near_cancellation = true;
        let polar = series
            .terms
            .iter()
            .fold(Rational::zero(), |acc, t| match crossing_l(t.j) {
                Some(l) => {
                    let scale =
                        rational_pow(&series.c2_exact, l) / Rational::from_integer(factorial(l));
                    acc + &t.weight_exact * scale * rising_exact(&s_star_exact, l)
                }
                None => acc,
            });
        if !polar.is_zero() {
            lump = Complex::new(T::from_rational(&polar), T::zero()) / ((s - s_star) * T::lit(2.0));
        }
    }
    let l_min = if near { n_star + 1 } else { 0 };

    let one = Complex::new(T::one(), T::zero());
    let ratio_limit = series.c2 / (series.a * series.a);
    let s_abs = s.norm();
    let mut coef = one; // (s)_l / l! c^{2l}
    let mut real_scale = T::one(); // c^{2l} / l!
    let mut sum = Complex::new(T::zero(), T::zero());
    let mut abs_sum = T::zero();
    let mut hurwitz_err = T::zero();
    let mut tail = T::infinity();
    let mut run = 0;
    let mut used = 0;
    let mut converged = false;

    for l in 0..opts.max_l {
        used = l + 1;
        let lf = T::from_usize_lossy(l);
        let budget =
            tol * T::lit(0.4) / (T::from_usize_lossy(nj) * (lf + T::one()) * (lf + T::lit(2.0)));
        for t in &series.terms {
            let w = s * T::lit(2.0) + lf * T::lit(2.0) - T::from_usize_lossy(t.j);
            let term = if crossing_l(t.j) == Some(l) {
                let regular = if w == one {
                    digamma_at_half_integer::<T>(&series.a_exact)
                        .map(|psi| Complex::new(-psi, T::zero()))
                        .ok()
                } else {
                    None
                };
                let regular = match regular {
                    Some(v) => v,
                    None => {
                        let scale = (coef * t.weight).norm() * pref_abs;
                        let hz = hurwitz_em(
                            w,
                            series.a,
                            budget / scale.max(T::min_positive_value()),
                            opts.em_order,
                            true,
                        );
                        hurwitz_err = hurwitz_err + (coef * t.weight).norm() * hz.bound;
                        flags.truncated |= hz.truncated;
                        hz.value
                    }
                };
                let polar = rising_divided_difference(s, s_star, l) * (real_scale / T::lit(2.0));
                (coef * regular + polar) * t.weight
            } else {
                let scale = (coef * t.weight).norm();
                if scale == T::zero() {
                    continue;
                }
                let hz = hurwitz_em(
                    w,
                    series.a,
                    budget / (scale * pref_abs).max(T::min_positive_value()),
                    opts.em_order,
                    false,
                );
                hurwitz_err = hurwitz_err + scale * hz.bound;
                flags.truncated |= hz.truncated;
                coef * hz.value * t.weight
            };
            abs_sum = abs_sum + term.norm();
            sum = sum + term;
        }

        // Geometric tail certificate for the terms after l.
        let sigma_min = s.re * T::lit(2.0) + lf * T::lit(2.0) - T::from_usize_lossy(k - 1);
        tail = T::infinity();
        if sigma_min > T::one() {
            let ratio = ratio_limit * T::one().max((s_abs + lf) / (lf + T::one()));
            if ratio < T::one() {
                let majorant = series.terms.iter().fold(T::zero(), |acc, t| {
                    let sigma = s.re * T::lit(2.0) + lf * T::lit(2.0) - T::from_usize_lossy(t.j);
                    acc + t.weight.abs() * zeta_majorant(sigma, series.a)
                }) * coef.norm();
                tail = majorant * ratio / (T::one() - ratio);
            }
        }
        if l >= l_min && lf > s_abs && tail * pref_abs < tol / T::lit(10.0) {
            run += 1;
            if run >= STABLE_RUN {
                converged = true;
                break;
            }
        } else {
            run = 0;
        }

        coef = coef * (s + lf) * series.c2 / (lf + T::one());
        real_scale = real_scale * series.c2 / (lf + T::one());
    }
    if !converged {
        flags.truncated = true;
    }

    let total = sum + lump;
    let value = prefactor * total;
    let rounding = eps
        * (T::lit(8.0) + T::lit(2.0) * T::from_usize_lossy(used) + s_abs)
        * (abs_sum + lump.norm());
    let error_bound =
        pref_abs * (hurwitz_err + tail + rounding) + value.norm() * eps * (s_abs + T::lit(2.0));
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(ZetaError::Domain(format!(
            "evaluation overflowed at s = {s:?}"
        )));
    }
    Ok(EvalResult {
        value,
        error_bound,
        terms_used: used,
        flags,
    })
}
