//! Bernoulli numbers (`B_1 = -1/2`) and Bernoulli polynomials, used to
//! evaluate Hurwitz zeta values at the non-positive integers exactly.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{binomial, rational_pow};
use crate::error::{Result, ZetaError};
use crate::Rational;

#[derive(Debug, Clone)]
pub struct BernoulliCache {
    numbers: Vec<Rational>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        BernoulliCache {
            numbers: vec![Rational::one()],
        }
    }
}

impl BernoulliCache {
    pub fn with_len(len: usize) -> Self {
        let mut cache = Self::default();
        cache.extend_to(len.saturating_sub(1));
        cache
    }

    pub fn len(&self) -> usize {
        self.numbers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numbers.is_empty()
    }

    /// Extends the table so `B_0 .. B_n` are available, from
    /// `sum_{i<=n} C(n+1, i) B_i = 0`.
    pub fn extend_to(&mut self, n: usize) {
        while self.numbers.len() <= n {
            let m = self.numbers.len();
            if m >= 3 && m % 2 == 1 {
                self.numbers.push(Rational::zero());
                continue;
            }
            let acc = self
                .numbers
                .iter()
                .enumerate()
                .fold(Rational::zero(), |acc, (i, b)| {
                    acc + b * Rational::from_integer(binomial(m + 1, i))
                });
            self.numbers
                .push(-acc / Rational::from_integer(BigInt::from(m + 1)));
        }
    }

    pub fn get(&self, n: usize) -> &Rational {
        &self.numbers[n]
    }

    pub fn numbers(&self) -> &[Rational] {
        &self.numbers
    }
}

fn shared() -> &'static RwLock<BernoulliCache> {
    static CACHE: OnceLock<RwLock<BernoulliCache>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(BernoulliCache::with_len(64)))
}

/// `B_n` with the `B_1 = -1/2` convention.
pub fn bernoulli_number(n: usize) -> Rational {
    {
        let cache = shared().read().expect("bernoulli cache poisoned");
        if n < cache.len() {
            return cache.get(n).clone();
        }
    }
    let mut cache = shared().write().expect("bernoulli cache poisoned");
    cache.extend_to(n);
    cache.get(n).clone()
}

/// `B_n(a) = sum_i C(n, i) B_i a^(n-i)`.
pub fn bernoulli_polynomial(n: usize, a: &Rational) -> Rational {
    (0..=n).fold(Rational::zero(), |acc, i| {
        acc + Rational::from_integer(binomial(n, i)) * bernoulli_number(i) * rational_pow(a, n - i)
    })
}

/// `zeta(-n; a) = -B_{n+1}(a) / (n+1)` for `a > 0`.
pub fn hurwitz_zeta_nonpos_int(n: usize, a: &Rational) -> Result<Rational> {
    if !a.is_positive() {
        return Err(ZetaError::Domain(format!(
            "Hurwitz parameter must be positive, got {a}"
        )));
    }
    let order = Rational::from_integer(BigInt::from(n + 1));
    Ok(-bernoulli_polynomial(n + 1, a) / order)
}
