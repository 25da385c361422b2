//! The coefficient row `B_{k,j}`, `j = 0..k-1`, defined by
//!
//! ```text
//! (k-1)! P_k(x - (k-1)/2) = sum_j B_{k,j} x^j
//! ```
//!
//! computed three independent ways: by expanding the shifted multiplicity
//! polynomial, from the Stirling-number double sum, and by the two-step
//! recursion in `k`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use super::{binomial, stirling_first};
use crate::error::{Result, ZetaError};
use crate::scalar::Scalar;
use crate::space::Dim;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Expansion,
    Stirling,
    Recursion,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Expansion, Method::Stirling, Method::Recursion];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Expansion => "expansion",
            Method::Stirling => "stirling",
            Method::Recursion => "recursion",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = ZetaError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "expansion" => Ok(Method::Expansion),
            "stirling" => Ok(Method::Stirling),
            "recursion" => Ok(Method::Recursion),
            other => Err(ZetaError::Domain(format!(
                "unknown coefficient method `{other}`"
            ))),
        }
    }
}

/// One row `B_{k,0..k-1}` and the method that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable<T> {
    k: Dim,
    coeffs: Vec<T>,
    method: Method,
}

impl<T> CoeffTable<T> {
    pub fn dim(&self) -> Dim {
        self.k
    }

    pub fn k(&self) -> usize {
        self.k.get()
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// `B_{k,j}`; zero outside `0..k`.
    pub fn get(&self, j: usize) -> Option<&T> {
        self.coeffs.get(j)
    }

    /// Indices `j` whose coefficient can be nonzero: `1 <= j <= k-1` with
    /// `j` of opposite parity to `k`, in decreasing order `k-1, k-3, ...`.
    pub fn support(&self) -> impl Iterator<Item = usize> {
        let k = self.k.get();
        (0..k / 2).map(move |h| k - 1 - 2 * h).filter(|&j| j >= 1)
    }
}

impl<T: Scalar> CoeffTable<T> {
    /// `sum_j B_{k,j} x^j`.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn values_equal(&self, other: &CoeffTable<T>) -> bool
    where
        T: PartialEq,
    {
        self.k == other.k && self.coeffs == other.coeffs
    }
}

/// Multiplies a polynomial (ascending coefficients) by `(x + c)`.
fn mul_linear<T: Scalar>(poly: &[T], c: &T) -> Vec<T> {
    let mut out = vec![T::zero(); poly.len() + 1];
    for (d, p) in poly.iter().enumerate() {
        out[d + 1] = out[d + 1].clone() + p.clone();
        out[d] = out[d].clone() + p.clone() * c.clone();
    }
    out
}

/// Expands `(2y + k - 1)(y + 1) ... (y + k - 2)` with `y = x - (k-1)/2`.
pub fn coeffs_via_expansion<T: Scalar>(dim: Dim) -> CoeffTable<T> {
    let k = dim.get() as i64;
    let shift = T::ratio(k - 1, 2);
    // 2y + k - 1 = 2x
    let mut poly = vec![T::zero(), T::from_int(2)];
    for i in 1..=k - 2 {
        poly = mul_linear(&poly, &(T::from_int(i) - shift.clone()));
    }
    debug_assert_eq!(poly.len(), dim.get());
    CoeffTable {
        k: dim,
        coeffs: poly,
        method: Method::Expansion,
    }
}

/// `B_{k,j} = sum_{p=0}^{k-j-1} (-1)^{k+j+1} C(j+p, j) ((k-1)/2)^p (s(k, j+p+1) + s(k-1, j+p))`.
pub fn coeffs_via_stirling<T: Scalar>(dim: Dim) -> CoeffTable<T> {
    let k = dim.get();
    let half = T::ratio(k as i64 - 1, 2);
    let coeffs = (0..k)
        .map(|j| {
            let mut sum = T::zero();
            let mut power = T::one();
            for p in 0..k - j {
                let stirling = stirling_first(k, j + p + 1) + stirling_first(k - 1, j + p);
                let term = T::from_bigint(&(binomial(j + p, j) * stirling)) * power.clone();
                sum = sum + term;
                power = power * half.clone();
            }
            if (k + j + 1) % 2 == 1 {
                -sum
            } else {
                sum
            }
        })
        .collect();
    CoeffTable {
        k: dim,
        coeffs,
        method: Method::Stirling,
    }
}

/// `B_{k,j} = B_{k-2,j-2} - ((k-3)/2)^2 B_{k-2,j}` from the rows for `k = 2, 3`.
pub fn coeffs_via_recursion<T: Scalar>(dim: Dim) -> CoeffTable<T> {
    let k = dim.get();
    let mut row = if k.is_multiple_of(2) {
        vec![T::zero(), T::from_int(2)]
    } else {
        vec![T::zero(), T::zero(), T::from_int(2)]
    };
    let mut current = if k.is_multiple_of(2) { 2 } else { 3 };
    while current < k {
        current += 2;
        let c = T::ratio(current as i64 - 3, 2);
        let c2 = c.clone() * c;
        let next = (0..current)
            .map(|j| {
                let shifted = if j >= 2 {
                    row.get(j - 2).cloned().unwrap_or_else(T::zero)
                } else {
                    T::zero()
                };
                let same = row.get(j).cloned().unwrap_or_else(T::zero);
                shifted - c2.clone() * same
            })
            .collect();
        row = next;
    }
    CoeffTable {
        k: dim,
        coeffs: row,
        method: Method::Recursion,
    }
}

pub fn compute<T: Scalar>(dim: Dim, method: Method) -> CoeffTable<T> {
    match method {
        Method::Expansion => coeffs_via_expansion(dim),
        Method::Stirling => coeffs_via_stirling(dim),
        Method::Recursion => coeffs_via_recursion(dim),
    }
}

type TableCache = RwLock<HashMap<(Dim, Method), Arc<CoeffTable<Rational>>>>;

fn cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Exact table for `(k, method)`, memoized per key.
pub fn coefficients(dim: Dim, method: Method) -> Arc<CoeffTable<Rational>> {
    if let Some(table) = cache()
        .read()
        .expect("coefficient cache poisoned")
        .get(&(dim, method))
    {
        return Arc::clone(table);
    }
    let table = Arc::new(compute::<Rational>(dim, method));
    let mut guard = cache().write().expect("coefficient cache poisoned");
    Arc::clone(guard.entry((dim, method)).or_insert(table))
}

/// Whether the three methods produce entrywise-identical rows.
pub fn methods_agree(dim: Dim) -> bool {
    let reference = coefficients(dim, Method::Expansion);
    Method::ALL[1..]
        .iter()
        .all(|&m| coefficients(dim, m).values_equal(&reference))
}
