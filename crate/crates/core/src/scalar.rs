//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, NumAssign};

/// Real floating-point scalar: `f32` or `f64`.
///
/// All tolerances quoted in the test-suite refer to `f64`.
pub trait Real:
    Float + FloatConst + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into this scalar type.
    fn lit(x: f64) -> Self;

    /// Converts an index or count into this scalar type.
    fn from_usize(n: usize) -> Self;

    fn to_f64_lossy(self) -> f64;
}

macro_rules! impl_real {
    ($t:ty) => {
        impl Real for $t {
            #[inline]
            fn lit(x: f64) -> Self {
                x as $t
            }

            #[inline]
            fn from_usize(n: usize) -> Self {
                n as $t
            }

            #[inline]
            fn to_f64_lossy(self) -> f64 {
                self as f64
            }
        }
    };
}

impl_real!(f32);
impl_real!(f64);
