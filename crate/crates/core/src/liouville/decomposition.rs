//! Spectral decomposition of a Hamiltonian, the frame in which every
//! propagator acts element-wise.

use nalgebra::SymmetricEigen;
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::quantum::matrix::{max_abs_diff, ComplexMatrix};
use crate::quantum::HermitianOperator;
use crate::scalar::Real;

/// Eigenvalues `E_k` (ascending, rad/s) and the unitary `U` whose columns
/// are the matching eigenvectors, so that `H = U diag(E) U†`.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyDecomposition<T: Real> {
    energies: Vec<T>,
    basis: ComplexMatrix<T>,
    source: HermitianOperator<T>,
}

/// Diagonalizes a Hermitian operator.
pub fn diagonalize<T: Real>(h: &HermitianOperator<T>) -> EnergyDecomposition<T> {
    let eig = SymmetricEigen::new(h.matrix().clone());
    let dim = h.dim();
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[a]
            .partial_cmp(&eig.eigenvalues[b])
            .expect("finite eigenvalues")
    });
    let energies = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let basis = ComplexMatrix::from_fn(dim, dim, |i, j| eig.eigenvectors[(i, order[j])]);
    EnergyDecomposition {
        energies,
        basis,
        source: h.clone(),
    }
}

/// Validates `matrix` as Hermitian and diagonalizes it.
pub fn diagonalize_matrix<T: Real>(matrix: ComplexMatrix<T>) -> Result<EnergyDecomposition<T>> {
    Ok(diagonalize(&HermitianOperator::new(matrix)?))
}

impl<T: Real> EnergyDecomposition<T> {
    pub fn energies(&self) -> &[T] {
        &self.energies
    }

    pub fn basis(&self) -> &ComplexMatrix<T> {
        &self.basis
    }

    pub fn source(&self) -> &HermitianOperator<T> {
        &self.source
    }

    pub fn dim(&self) -> usize {
        self.energies.len()
    }

    /// Bohr frequency `ω_mn = E_m - E_n`.
    pub fn transition_frequency(&self, m: usize, n: usize) -> T {
        self.energies[m] - self.energies[n]
    }

    /// Largest `|ω_mn|`, i.e. the spectral width.
    pub fn max_transition_frequency(&self) -> T {
        match (self.energies.first(), self.energies.last()) {
            (Some(&lo), Some(&hi)) => hi - lo,
            _ => T::zero(),
        }
    }

    /// `U† A U`.
    pub fn to_energy_basis(&self, a: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        self.basis.adjoint() * a * &self.basis
    }

    /// `U A U†`.
    pub fn from_energy_basis(&self, a: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        &self.basis * a * self.basis.adjoint()
    }

    /// `max |U†U - I|`.
    pub fn unitarity_error(&self) -> T {
        let n = self.dim();
        max_abs_diff(&(self.basis.adjoint() * &self.basis), &ComplexMatrix::identity(n, n))
    }

    /// `max |U diag(E) U† - H|`.
    pub fn reconstruction_error(&self) -> T {
        let n = self.dim();
        let diag = ComplexMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex::new(self.energies[i], T::zero())
            } else {
                Complex::new(T::zero(), T::zero())
            }
        });
        max_abs_diff(&self.from_energy_basis(&diag), self.source.matrix())
    }

    pub(crate) fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found });
        }
        Ok(())
    }
}
