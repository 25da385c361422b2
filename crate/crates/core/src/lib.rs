//! Spectral (Minakshisundaram–Pleijel) zeta functions of the round spheres
//! `S^k` and the real projective spaces `P^k`.
//!
//! The crate is split into three layers:
//!
//! * [`exact`] – big-integer / rational machinery: Stirling numbers of the
//!   first kind, Bernoulli numbers and polynomials, eigenvalue multiplicities
//!   and the coefficient table `B_{k,j}` computed three independent ways.
//! * [`special_values`] – exact residues at every candidate pole and exact
//!   values at the non-positive integers.
//! * [`numeric`] – floating-point evaluation of the Hurwitz zeta function and
//!   of the analytic continuation of `Z_k` / `L_k`, together with a direct
//!   Dirichlet-series oracle and numeric residue estimation.
//!
//! The algorithms are written against the [`Scalar`] (exact or floating field)
//! and [`Real`] (`f32` / `f64`) traits; the aliases below fix the concrete
//! carriers used by the rest of the workspace.

pub mod error;
pub mod exact;
pub mod numeric;
pub mod scalar;
pub mod space;
pub mod special_values;

pub use error::{Result, ZetaError};
pub use exact::coeffs::{CoeffTable, Method};
pub use scalar::{Real, Scalar};
pub use space::{Dim, Space, SpaceSpec};

/// Arbitrary-precision signed rational, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Exact coefficient row `B_{k,0..k-1}`.
pub type CoefficientTable = CoeffTable<Rational>;

/// Double-precision complex argument / value.
pub type ComplexValue = num_complex::Complex64;

/// Evaluation options in double precision.
pub type EvalOptions = numeric::EvalOptions<f64>;

/// Evaluation result in double precision.
pub type EvalResult = numeric::EvalResult<f64>;
