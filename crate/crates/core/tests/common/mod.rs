#![allow(dead_code)]

use num_complex::Complex64;
use qvn_core::quantum::{ComplexMatrix, DensityMatrix, HermitianOperator};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, dim: usize) -> ComplexMatrix<f64> {
    ComplexMatrix::from_fn(dim, dim, |_, _| {
        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    })
}

/// Hermitian matrix with entries of order `scale`.
pub fn random_hamiltonian(rng: &mut impl Rng, dim: usize, scale: f64) -> HermitianOperator<f64> {
    let a = random_matrix(rng, dim);
    let h = (&a + a.adjoint()) * Complex64::new(0.5 * scale, 0.0);
    HermitianOperator::new(h).unwrap()
}

/// Full-rank mixed state `B B† / Tr(B B†)`.
pub fn random_density(rng: &mut impl Rng, dim: usize) -> DensityMatrix<f64> {
    let b = random_matrix(rng, dim);
    let m = &b * b.adjoint();
    let tr = (0..dim).map(|k| m[(k, k)].re).sum::<f64>();
    let m = m * Complex64::new(1.0 / tr, 0.0);
    let m = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
    DensityMatrix::new(m).unwrap()
}

/// Haar-ish random unitary from the QR decomposition of a random matrix.
pub fn random_unitary(rng: &mut impl Rng, dim: usize) -> ComplexMatrix<f64> {
    random_matrix(rng, dim).qr().q()
}

pub fn max_abs(m: &ComplexMatrix<f64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
