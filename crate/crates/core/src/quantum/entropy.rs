//! Tsallis and von Neumann entropies of density matrices.

use super::density::DensityMatrix;
use super::qexp::Extensivity;
use crate::scalar::Real;

/// `S_q = (1 - Σ λ^q) / (q - 1)` over the spectrum of `rho`, with `0^q := 0`.
///
/// `q = 1` returns the von Neumann entropy. Eigenvalues at or below zero
/// (roundoff on rank-deficient states) contribute nothing.
pub fn tsallis_entropy<T: Real>(rho: &DensityMatrix<T>, q: Extensivity<T>) -> T {
    let spectrum = rho.eigenvalues();
    if q.is_unitary() {
        return shannon_like(&spectrum);
    }
    let q = q.value();
    let sum = spectrum
        .iter()
        .filter(|&&l| l > T::zero())
        .fold(T::zero(), |acc, &l| acc + l.powf(q));
    (T::one() - sum) / (q - T::one())
}

/// `-Tr rho ln rho`.
pub fn von_neumann_entropy<T: Real>(rho: &DensityMatrix<T>) -> T {
    shannon_like(&rho.eigenvalues())
}

fn shannon_like<T: Real>(spectrum: &[T]) -> T {
    -spectrum
        .iter()
        .filter(|&&l| l > T::zero())
        .fold(T::zero(), |acc, &l| acc + l * l.ln())
}
