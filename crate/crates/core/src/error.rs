use thiserror::Error;

use crate::Rational;

pub type Result<T> = std::result::Result<T, ZetaError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    #[error("dimension must be at least 2, got {0}")]
    InvalidDimension(usize),

    #[error("the Hurwitz zeta function has a pole at s = 1")]
    PoleAtOne,

    #[error("domain error: {0}")]
    Domain(String),

    /// The requested point is a simple pole; the exact residue is attached.
    #[error("s = {location} is a pole with residue {residue}")]
    AtPole {
        location: Box<Rational>,
        residue: Box<Rational>,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid evaluation options: {0}")]
    InvalidOptions(String),
}
