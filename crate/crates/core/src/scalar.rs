//! Scalar abstraction: every numeric routine in this crate is generic over a
//! floating-point type through [`Scalar`].

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` constant (tolerance, default, literal) to `Self`.
    fn c(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable in this scalar type")
    }

    /// Lossy view of the value as `f64`, for diagnostics.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Scalar for T where
    T: Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}
