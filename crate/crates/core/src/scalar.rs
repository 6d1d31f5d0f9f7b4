//! Scalar abstraction shared by every numerical routine in the crate.

use nalgebra::RealField;
use num_complex::Complex;
use num_traits::{FromPrimitive, ToPrimitive};

/// Real floating point type the library is generic over (`f32` or `f64`).
///
/// Tolerances scale with the precision of the type: the `f64` values are the
/// ones quoted throughout the documentation, the `f32` values are loosened
/// to what single precision can honour.
pub trait Real: RealField + Copy + FromPrimitive + ToPrimitive {
    /// Max element deviation from Hermiticity accepted by constructors.
    const HERMITIAN_TOL: Self;
    /// Max deviation of the trace from one accepted for density matrices.
    const TRACE_TOL: Self;
    /// Eigenvalues below `-POSITIVITY_TOL` trigger the positivity diagnostic.
    const POSITIVITY_TOL: Self;
    /// Accepted probability mass lost to Fock-space truncation.
    const TRUNCATION_TOL: Self;
}

impl Real for f64 {
    const HERMITIAN_TOL: f64 = 1e-12;
    const TRACE_TOL: f64 = 1e-12;
    const POSITIVITY_TOL: f64 = 1e-10;
    const TRUNCATION_TOL: f64 = 1e-6;
}

impl Real for f32 {
    const HERMITIAN_TOL: f32 = 1e-5;
    const TRACE_TOL: f32 = 1e-5;
    const POSITIVITY_TOL: f32 = 1e-5;
    const TRUNCATION_TOL: f32 = 1e-6;
}

/// Converts an `f64` literal into `T`.
#[inline]
pub fn lit<T: Real>(x: f64) -> T {
    nalgebra::convert(x)
}

/// Converts an index or count into `T`.
#[inline]
pub fn from_usize<T: Real>(n: usize) -> T {
    T::from_usize(n).expect("usize representable as a float")
}

/// Lossy view of a scalar as `f64`, used for diagnostics and error payloads.
#[inline]
pub fn to_f64<T: Real>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[inline]
pub(crate) fn modulus<T: Real>(z: Complex<T>) -> T {
    z.re.hypot(z.im)
}

/// `e^{i phase}`.
#[inline]
pub(crate) fn cis<T: Real>(phase: T) -> Complex<T> {
    let (s, c) = phase.sin_cos();
    Complex::new(c, s)
}
