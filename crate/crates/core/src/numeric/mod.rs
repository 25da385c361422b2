//! Floating-point evaluation: Hurwitz zeta, the analytic continuation of
//! `Z_k` / `L_k`, the direct Dirichlet-series oracle and numeric residues.

pub mod continuation;
pub mod digamma;
pub mod dirichlet;
pub mod hurwitz;
pub mod options;
pub mod residue;

pub use continuation::zeta_continuation;
pub use digamma::digamma_at_half_integer;
pub use dirichlet::{dirichlet_oracle, DIRICHLET_MARGIN};
pub use hurwitz::{hurwitz_zeta, riemann_zeta};
pub use options::{EvalFlags, EvalOptions, EvalResult};
pub use residue::{limit_numeric, residue_numeric};
