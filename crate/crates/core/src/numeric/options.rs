use num_complex::Complex;

use crate::error::{Result, ZetaError};
use crate::scalar::Real;

/// Knobs shared by all numeric evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions<T> {
    /// Target absolute error.
    pub tol: T,
    /// Cap on the number of terms of the binomial series.
    pub max_l: usize,
    /// Rejection radius around true poles.
    pub pole_eps: T,
    /// Minimum Euler–Maclaurin correction order (even).
    pub em_order: usize,
}

impl<T: Real> Default for EvalOptions<T> {
    fn default() -> Self {
        EvalOptions {
            tol: T::lit(1e-12),
            max_l: 200,
            pole_eps: T::lit(1e-8),
            em_order: 12,
        }
    }
}

impl<T: Real> EvalOptions<T> {
    pub fn with_tol(tol: T) -> Self {
        EvalOptions {
            tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.tol.is_nan() || self.tol <= T::zero() {
            return Err(ZetaError::InvalidOptions("tol must be positive".into()));
        }
        if self.max_l < 1 {
            return Err(ZetaError::InvalidOptions("max_l must be at least 1".into()));
        }
        if self.pole_eps.is_nan() || self.pole_eps <= T::zero() {
            return Err(ZetaError::InvalidOptions(
                "pole_eps must be positive".into(),
            ));
        }
        if self.em_order < 2 || !self.em_order.is_multiple_of(2) {
            return Err(ZetaError::InvalidOptions(
                "em_order must be even and at least 2".into(),
            ));
        }
        Ok(())
    }

    /// Smallest tolerance the carrier can honour.
    pub fn tol_floor() -> T {
        T::lit(1e-14).max(T::epsilon() * T::lit(45.0))
    }

    /// Tolerance actually used, and whether it had to be raised.
    pub fn effective_tol(&self) -> (T, bool) {
        let floor = Self::tol_floor();
        if self.tol < floor {
            (floor, true)
        } else {
            (self.tol, false)
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EvalFlags {
    /// A series cap was hit before its tail bound dropped below tolerance.
    pub truncated: bool,
    /// Some Hurwitz argument sat next to its pole and was evaluated in
    /// regularized form.
    pub near_cancellation: bool,
    /// The value came from an exact rational formula.
    pub exact_routed: bool,
    /// The requested tolerance was below what the carrier supports.
    pub tolerance_clamped: bool,
}

impl EvalFlags {
    pub fn names(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.truncated {
            out.push("truncated");
        }
        if self.near_cancellation {
            out.push("near_cancellation");
        }
        if self.exact_routed {
            out.push("exact_routed");
        }
        if self.tolerance_clamped {
            out.push("tolerance_clamped");
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<T> {
    pub value: Complex<T>,
    /// Bound on `|value - true value|`; infinite when no bound could be certified.
    pub error_bound: T,
    pub terms_used: usize,
    pub flags: EvalFlags,
}

impl<T: Real> EvalResult<T> {
    /// `|self.value - reference| <= self.error_bound`.
    pub fn contains(&self, reference: Complex<T>) -> bool {
        (self.value - reference).norm() <= self.error_bound
    }
}
