//! Scalar abstractions.
//!
//! [`Scalar`] is a field the exact polynomial machinery can run over: the
//! canonical carrier is [`BigRational`], but `f64` and `f32` work as well
//! (lossy, handy for quick tables). [`Real`] is the floating carrier used by
//! the numeric evaluators.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FloatConst, FromPrimitive, Num, ToPrimitive};

pub trait Scalar: Num + Clone + Debug + std::ops::Neg<Output = Self> {
    fn from_int(n: i64) -> Self;

    fn from_bigint(n: &BigInt) -> Self;

    fn from_rational(r: &BigRational) -> Self;

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

macro_rules! impl_float_scalar {
    ($f:ty) => {
        impl Scalar for $f {
            fn from_int(n: i64) -> Self {
                n as $f
            }

            fn from_bigint(n: &BigInt) -> Self {
                n.to_f64().map_or(<$f>::NAN, |v| v as $f)
            }

            fn from_rational(r: &BigRational) -> Self {
                r.to_f64().map_or(<$f>::NAN, |v| v as $f)
            }
        }
    };
}

impl_float_scalar!(f32);
impl_float_scalar!(f64);

/// Floating point carrier for numeric evaluation: `f32` or `f64`.
pub trait Real: Float + FloatConst + FromPrimitive + Scalar + Send + Sync + 'static {
    /// Euler–Mascheroni constant.
    fn euler_gamma() -> Self;

    /// Converts an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable")
    }

    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable")
    }
}

impl Real for f32 {
    fn euler_gamma() -> Self {
        0.577_215_7
    }
}

impl Real for f64 {
    fn euler_gamma() -> Self {
        0.577_215_664_901_532_9
    }
}
