//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst};

/// Real floating-point scalar used throughout the toolkit.
///
/// Implemented for `f32` and `f64`. All algebra is written against this trait;
/// the crate root exposes `f64` aliases for the common case.
pub trait Real:
    Float + FloatConst + Debug + Display + LowerExp + Default + Sum + Send + Sync + 'static
{
    /// Converts an `f64` literal into `Self`.
    ///
    /// Literals in this crate are all finite and in range for `f32`, so the
    /// conversion cannot fail.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from(x).expect("literal representable in scalar type")
    }

    /// Converts a count into `Self`.
    #[inline]
    fn from_usize(n: usize) -> Self {
        Self::from(n).expect("count representable in scalar type")
    }

    /// Lossy conversion for diagnostics and error payloads.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Relative difference `|a - b| / max(|a|, |b|)`, zero when both vanish.
    fn rel_diff(a: Self, b: Self) -> Self {
        let scale = a.abs().max(b.abs());
        if scale == Self::zero() {
            Self::zero()
        } else {
            (a - b).abs() / scale
        }
    }
}

impl Real for f32 {}
impl Real for f64 {}
