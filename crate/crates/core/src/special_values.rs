//! Exact residues and exact values at the non-positive integers.
//!
//! All candidate poles of `Z_k` and `L_k` lie on `s = k/2 - n`, `n >= 0`.
//! The residue there is
//!
//! ```text
//! Res Z_k = 1/(2 (k-1)!) sum_{h=0}^{min(n, (k-2)/2)} (-1)^{n-h} ((k-1)/2)^{2n-2h} C(n - k/2, n - h) B_{k,k-2h-1}
//! ```
//!
//! with the Hurwitz residue taken as `1/2` in the `s` variable. For `L_k` the
//! prefactor is `1/(4 (k-1)!)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Result, ZetaError};
use crate::exact::{
    bernoulli_number, binomial, binomial_rational, coefficients, factorial,
    hurwitz_zeta_nonpos_int, rational_pow, Method,
};
use crate::space::{Space, SpaceSpec};
use crate::Rational;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn alternating(exp: usize) -> Rational {
    if exp.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Candidate pole `s = k/2 - n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolePoint {
    pub n: usize,
    pub location: Rational,
}

impl PolePoint {
    pub fn new(spec: SpaceSpec, n: usize) -> Self {
        PolePoint {
            n,
            location: rat(spec.k() as i64 - 2 * n as i64, 2),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PoleEntry {
    pub point: PolePoint,
    pub residue: Rational,
}

impl PoleEntry {
    /// The function is analytic at this candidate point.
    pub fn is_regular(&self) -> bool {
        self.residue.is_zero()
    }
}

/// Exact residue of `Z_k` / `L_k` at `s = k/2 - n`; zero where the point is regular.
pub fn residue(spec: SpaceSpec, n: usize) -> Rational {
    let k = spec.k();
    let table = coefficients(spec.dim, Method::Expansion);
    let c = rat(k as i64 - 1, 2);
    let c2 = &c * &c;
    let top = rat(2 * n as i64 - k as i64, 2);
    let h_max = n.min((k - 2) / 2);
    let sum = (0..=h_max).fold(Rational::zero(), |acc, h| {
        let b = table.get(k - 2 * h - 1).expect("index in range");
        acc + alternating(n - h) * rational_pow(&c2, n - h) * binomial_rational(&top, n - h) * b
    });
    let denom = match spec.space {
        Space::Sphere => 2,
        Space::Projective => 4,
    };
    sum / int(factorial(k - 1) * BigInt::from(denom))
}

/// Every candidate pole with `n <= n_max`, with its exact residue.
pub fn pole_catalog(spec: SpaceSpec, n_max: usize) -> Vec<PoleEntry> {
    (0..=n_max)
        .map(|n| PoleEntry {
            point: PolePoint::new(spec, n),
            residue: residue(spec, n),
        })
        .collect()
}

fn unsupported(spec: SpaceSpec) -> ZetaError {
    ZetaError::Unsupported(format!(
        "no closed form in source for {spec} at non-positive integers"
    ))
}

/// `zeta(-q)` for odd `q >= 1`, i.e. `-B_{q+1} / (q+1)`.
fn riemann_at_negative_odd(q: usize) -> Rational {
    -bernoulli_number(q + 1) / int(q as u64 + 1)
}

/// Exact value of the zeta function at `s = -n`.
///
/// Odd `k` (either space): `-1` at `s = 0` and `0` at negative integers.
/// Even-`k` spheres use the finite sum over `B_{k,k-2h-1}` and Riemann zeta
/// values at negative odd integers. Even-`k` projective spaces are
/// [`ZetaError::Unsupported`].
pub fn special_value(spec: SpaceSpec, n: usize) -> Result<Rational> {
    if spec.dim.is_odd() {
        return Ok(if n == 0 {
            -Rational::one()
        } else {
            Rational::zero()
        });
    }
    match spec.space {
        Space::Sphere => Ok(even_sphere_value(spec, n)),
        Space::Projective => Err(unsupported(spec)),
    }
}

fn even_sphere_value(spec: SpaceSpec, n: usize) -> Rational {
    let k = spec.k();
    let table = coefficients(spec.dim, Method::Expansion);
    let c = rat(k as i64 - 1, 2);
    let c2 = &c * &c;
    let half = rat(1, 2);
    let mut total = Rational::zero();
    for h in 0..=(k - 2) / 2 {
        let b = table.get(k - 2 * h - 1).expect("index in range");
        // finite part: l = 0..n, Riemann zeta at the negative odd integer 2h+1+2l-2n-k
        let mut inner = Rational::zero();
        for l in 0..=n {
            let q = 2 * n + k - 2 * h - 2 * l - 1;
            let weight = alternating(l) * int(binomial(n, l)) * rational_pow(&c2, l);
            let factor = rational_pow(&half, q) - Rational::one();
            inner += weight * factor * riemann_at_negative_odd(q);
        }
        // pole-cancellation term from l = (k-2h)/2 + n
        let m = (k - 2 * h) / 2;
        let gamma_ratio = int(factorial(m - 1)) / int(factorial(m + n));
        let cancel = alternating(n)
            * int(factorial(n))
            * &half
            * gamma_ratio
            * rational_pow(&c, k - 2 * h + 2 * n);
        total += b * (inner + cancel);
    }
    let mut value = total / int(factorial(k - 1));
    if n == 0 {
        value -= Rational::one();
    }
    value
}

/// The value at `s = -n` obtained by truncating the binomial/Hurwitz series
/// exactly: the terms `l <= n` with Hurwitz values at non-positive integers,
/// plus the finite limits of the terms where a vanishing binomial factor
/// meets a Hurwitz pole. Independent of the closed forms used by
/// [`special_value`]; same support.
pub fn special_value_by_series(spec: SpaceSpec, n: usize) -> Result<Rational> {
    if spec.space == Space::Projective && spec.dim.is_even() {
        return Err(unsupported(spec));
    }
    let k = spec.k();
    let table = coefficients(spec.dim, Method::Expansion);
    let (c, a, weight_base, global) = match spec.space {
        Space::Sphere => (
            rat(k as i64 - 1, 2),
            rat(k as i64 + 1, 2),
            Rational::one(),
            Rational::one(),
        ),
        Space::Projective => (
            rat(k as i64 - 1, 4),
            rat(k as i64 + 3, 4),
            int(2),
            rational_pow(&int(2), 2 * n),
        ),
    };
    let c2 = &c * &c;
    let mut total = Rational::zero();
    for j in table.support() {
        let w = rational_pow(&weight_base, j) * table.get(j).expect("index in range");
        for l in 0..=n {
            // argument 2l - 2n - j <= -1
            let order = 2 * n + j - 2 * l;
            let hz = hurwitz_zeta_nonpos_int(order, &a)?;
            total += alternating(l) * int(binomial(n, l)) * rational_pow(&c2, l) * &w * hz;
        }
        if (j + 1) % 2 == 0 {
            let l = n + j.div_ceil(2);
            let limit = alternating(n) * int(factorial(n)) * int(factorial(l - n - 1))
                / (int(2) * int(factorial(l)));
            total += limit * rational_pow(&c2, l) * &w;
        }
    }
    Ok(global * total / int(factorial(k - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(k: usize) -> SpaceSpec {
        SpaceSpec::sphere(k).unwrap()
    }

    fn projective(k: usize) -> SpaceSpec {
        SpaceSpec::projective(k).unwrap()
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue(sphere(2), 0), rat(1, 1));
        assert_eq!(residue(projective(3), 0), rat(1, 4));
        assert_eq!(residue(sphere(4), 2), rat(0, 1));
        assert_eq!(residue(sphere(3), 1), rat(1, 4));
    }

    #[test]
    fn catalog_even_k_poles() {
        let cat = pole_catalog(sphere(4), 4);
        let poles: Vec<Rational> = cat
            .iter()
            .filter(|e| !e.is_regular())
            .map(|e| e.point.location.clone())
            .collect();
        assert_eq!(poles, vec![rat(2, 1), rat(1, 1)]);
        let cat = pole_catalog(sphere(3), 1);
        assert_eq!(cat[0].point.location, rat(3, 2));
        assert_eq!(cat[0].residue, rat(1, 2));
        assert_eq!(cat[1].point.location, rat(1, 2));
        assert_eq!(cat[1].residue, rat(1, 4));
    }

    #[test]
    fn special_value_examples() {
        assert_eq!(special_value(sphere(3), 0).unwrap(), rat(-1, 1));
        assert_eq!(special_value(sphere(5), 2).unwrap(), rat(0, 1));
        assert_eq!(special_value(sphere(2), 0).unwrap(), rat(-2, 3));
        assert!(matches!(
            special_value(projective(4), 0),
            Err(ZetaError::Unsupported(_))
        ));
        assert_eq!(special_value(projective(3), 0).unwrap(), rat(-1, 1));
    }

    #[test]
    fn z2_at_zero_matches_heat_coefficient() {
        // zeta(0) = (constant heat-kernel coefficient) - dim ker, which is 1/3 - 1 on S^2
        assert_eq!(special_value(sphere(2), 0).unwrap(), rat(1, 3) - rat(1, 1));
    }

    #[test]
    fn closed_forms_match_series_route() {
        for k in 2..=14 {
            for n in 0..=8 {
                assert_eq!(
                    special_value(sphere(k), n).unwrap(),
                    special_value_by_series(sphere(k), n).unwrap(),
                    "sphere k = {k}, n = {n}"
                );
                if k % 2 == 1 {
                    assert_eq!(
                        special_value(projective(k), n).unwrap(),
                        special_value_by_series(projective(k), n).unwrap(),
                        "projective k = {k}, n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn projective_residues_are_half() {
        for k in 2..=12 {
            for n in 0..=10 {
                assert_eq!(residue(projective(k), n) * int(2), residue(sphere(k), n));
            }
        }
    }
}
