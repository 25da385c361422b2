//! Signed Stirling numbers of the first kind.
//!
//! Convention: `x (x+1) ... (x+n-1) = sum_m (-1)^(n+m) s(n,m) x^m`, which gives
//! the recurrence `s(n+1, m) = s(n, m-1) - n s(n, m)`.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Triangular table of `s(n, m)` for `0 <= m <= n <= rows-1`.
#[derive(Debug, Clone)]
pub struct StirlingCache {
    table: Vec<Vec<BigInt>>,
}

impl Default for StirlingCache {
    fn default() -> Self {
        StirlingCache {
            table: vec![vec![BigInt::one()]],
        }
    }
}

impl StirlingCache {
    /// Table holding every row up to and including `n_max`.
    pub fn with_rows(n_max: usize) -> Self {
        let mut cache = Self::default();
        cache.extend_to(n_max);
        cache
    }

    pub fn n_max(&self) -> usize {
        self.table.len() - 1
    }

    pub fn extend_to(&mut self, n_max: usize) {
        while self.table.len() <= n_max {
            let n = self.table.len() - 1;
            let prev = &self.table[n];
            let factor = BigInt::from(n);
            let row: Vec<BigInt> = (0..=n + 1)
                .map(|m| {
                    let left = if m >= 1 {
                        prev[m - 1].clone()
                    } else {
                        BigInt::zero()
                    };
                    let right = prev.get(m).map_or_else(BigInt::zero, |v| &factor * v);
                    left - right
                })
                .collect();
            self.table.push(row);
        }
    }

    /// `s(n, m)`; zero outside the triangle. Panics if `n` exceeds the table.
    pub fn get(&self, n: usize, m: usize) -> BigInt {
        assert!(
            n <= self.n_max(),
            "row {n} not cached (n_max = {})",
            self.n_max()
        );
        self.table[n].get(m).cloned().unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.table[n]
    }

    /// Returns the first `(n, m)` violating `s(n+1,m) = s(n,m-1) - n s(n,m)`.
    pub fn recurrence_violation(&self) -> Option<(usize, usize)> {
        for n in 0..self.n_max() {
            for m in 0..=n + 1 {
                let lhs = self.get(n + 1, m);
                let left = if m >= 1 {
                    self.get(n, m - 1)
                } else {
                    BigInt::zero()
                };
                let rhs = left - BigInt::from(n) * self.get(n, m);
                if lhs != rhs {
                    return Some((n + 1, m));
                }
            }
        }
        None
    }
}

fn shared() -> &'static RwLock<StirlingCache> {
    static CACHE: OnceLock<RwLock<StirlingCache>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(StirlingCache::with_rows(32)))
}

/// Signed Stirling number of the first kind `s(n, m)`.
pub fn stirling_first(n: usize, m: usize) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    {
        let cache = shared().read().expect("stirling cache poisoned");
        if n <= cache.n_max() {
            return cache.get(n, m);
        }
    }
    let mut cache = shared().write().expect("stirling cache poisoned");
    cache.extend_to(n);
    cache.get(n, m)
}
