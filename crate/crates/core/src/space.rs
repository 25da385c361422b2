use std::fmt;
use std::str::FromStr;

use crate::error::{Result, ZetaError};

/// Dimension `k >= 2` of a sphere or projective space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dim(usize);

impl Dim {
    pub fn new(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(ZetaError::InvalidDimension(k));
        }
        Ok(Dim(k))
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 % 2 == 1
    }

    pub fn is_even(self) -> bool {
        self.0.is_multiple_of(2)
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    /// The round sphere `S^k`, zeta function `Z_k`.
    Sphere,
    /// Real projective space `P^k`, zeta function `L_k`.
    Projective,
}

impl Space {
    pub fn as_str(self) -> &'static str {
        match self {
            Space::Sphere => "sphere",
            Space::Projective => "projective",
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Space {
    type Err = ZetaError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sphere" | "s" => Ok(Space::Sphere),
            "projective" | "p" | "rp" => Ok(Space::Projective),
            other => Err(ZetaError::Domain(format!("unknown space `{other}`"))),
        }
    }
}

/// Selects one zeta function: `Z_k` for `S^k` or `L_k` for `P^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpaceSpec {
    pub space: Space,
    pub dim: Dim,
}

impl SpaceSpec {
    pub fn new(space: Space, k: usize) -> Result<Self> {
        Ok(SpaceSpec {
            space,
            dim: Dim::new(k)?,
        })
    }

    pub fn sphere(k: usize) -> Result<Self> {
        Self::new(Space::Sphere, k)
    }

    pub fn projective(k: usize) -> Result<Self> {
        Self::new(Space::Projective, k)
    }

    pub fn k(&self) -> usize {
        self.dim.get()
    }
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.space {
            Space::Sphere => write!(f, "S^{}", self.dim),
            Space::Projective => write!(f, "P^{}", self.dim),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_below_two_is_rejected() {
        assert_eq!(Dim::new(1), Err(ZetaError::InvalidDimension(1)));
        assert_eq!(Dim::new(0), Err(ZetaError::InvalidDimension(0)));
        assert!(Dim::new(2).is_ok());
    }

    #[test]
    fn space_parses_case_insensitively() {
        assert_eq!("Sphere".parse::<Space>().unwrap(), Space::Sphere);
        assert_eq!("projective".parse::<Space>().unwrap(), Space::Projective);
        assert!("torus".parse::<Space>().is_err());
    }
}
