//! Scalar abstraction for the closed-form bound evaluations.
//!
//! Every formula in [`crate::bounds`] is plain real arithmetic, so the module
//! is generic over the floating-point type. `f64` is the type used everywhere
//! else in the crate (and re-exported through the aliases at the crate root);
//! `f32` instantiations exist mainly to keep the formulas honest about not
//! depending on a particular width.

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar usable by the bound formulas.
pub trait Real: Float + FloatConst + FromPrimitive + core::fmt::Debug + core::fmt::Display {
    /// Lossy conversion from an `f64` literal constant.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 literal converts to any Real")
    }
}

impl Real for f32 {}
impl Real for f64 {}
