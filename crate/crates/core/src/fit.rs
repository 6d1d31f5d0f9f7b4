//! Least-squares fits used to classify coherence decay laws.

use crate::error::{Error, Result};
use crate::scalar::{from_usize, Real};

/// `y ≈ intercept + slope * x` with coefficient of determination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit<T> {
    pub intercept: T,
    pub slope: T,
    pub r_squared: T,
}

/// Ordinary least squares with intercept.
pub fn linear_fit<T: Real>(x: &[T], y: &[T]) -> Result<LinearFit<T>> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch { expected: x.len(), found: y.len() });
    }
    if x.len() < 2 {
        return Err(Error::invalid("fit", "need at least two points"));
    }
    let n = from_usize::<T>(x.len());
    let mean_x = x.iter().fold(T::zero(), |a, &v| a + v) / n;
    let mean_y = y.iter().fold(T::zero(), |a, &v| a + v) / n;
    let (mut sxx, mut sxy, mut syy) = (T::zero(), T::zero(), T::zero());
    for (&xi, &yi) in x.iter().zip(y) {
        let (dx, dy) = (xi - mean_x, yi - mean_y);
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if sxx == T::zero() {
        return Err(Error::invalid("fit", "abscissae are all equal"));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let sse = x
        .iter()
        .zip(y)
        .map(|(&xi, &yi)| {
            let r = yi - intercept - slope * xi;
            r * r
        })
        .fold(T::zero(), |a, v| a + v);
    let r_squared = if syy == T::zero() { T::one() } else { T::one() - sse / syy };
    Ok(LinearFit { intercept, slope, r_squared })
}

/// Functional form of a coherence envelope `e^{-rate * t^p}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecayLaw {
    /// `e^{-γ t}`
    Exponential,
    /// `e^{-γ t²}`
    Gaussian,
}

impl DecayLaw {
    pub fn abscissa<T: Real>(self, t: T) -> T {
        match self {
            DecayLaw::Exponential => t,
            DecayLaw::Gaussian => t * t,
        }
    }
}

/// Rate `γ` of `envelope ≈ e^{-γ u}` (`u = t` or `t²`), fitted to
/// `ln envelope` through the origin since every envelope starts at one.
pub fn decay_rate<T: Real>(times: &[T], envelope: &[T], law: DecayLaw) -> Result<T> {
    if times.len() != envelope.len() {
        return Err(Error::DimensionMismatch { expected: times.len(), found: envelope.len() });
    }
    let (mut num, mut den) = (T::zero(), T::zero());
    for (&t, &e) in times.iter().zip(envelope) {
        if !(e > T::zero()) {
            return Err(Error::invalid("envelope", "must be strictly positive to take its logarithm"));
        }
        let u = law.abscissa(t);
        num += u * e.ln();
        den += u * u;
    }
    if den == T::zero() {
        return Err(Error::invalid("fit", "need a nonzero time"));
    }
    Ok(-num / den)
}

/// Regresses `ln envelope` against `t` or `t²` with a free intercept.
pub fn log_envelope_fit<T: Real>(times: &[T], envelope: &[T], law: DecayLaw) -> Result<LinearFit<T>> {
    let mut logs = Vec::with_capacity(envelope.len());
    for &e in envelope {
        if !(e > T::zero()) {
            return Err(Error::invalid("envelope", "must be strictly positive to take its logarithm"));
        }
        logs.push(e.ln());
    }
    let u: Vec<T> = times.iter().map(|&t| law.abscissa(t)).collect();
    linear_fit(&u, &logs)
}
