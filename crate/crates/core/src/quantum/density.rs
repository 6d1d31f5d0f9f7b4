//! Density operators and Hermitian generators.

use nalgebra::{DVector, SymmetricEigen};
use num_complex::Complex;

use super::matrix::{check_square_finite, hermitian_deviation, trace, ComplexMatrix};
use crate::error::{Error, Result};
use crate::scalar::{from_usize, modulus, to_f64, Real};

/// Hermitian operator stored in angular-frequency units (rad/s, ħ = 1).
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator<T: Real> {
    matrix: ComplexMatrix<T>,
}

impl<T: Real> HermitianOperator<T> {
    pub fn new(matrix: ComplexMatrix<T>) -> Result<Self> {
        check_square_finite(&matrix)?;
        let deviation = hermitian_deviation(&matrix);
        if deviation > T::HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation: to_f64(deviation) });
        }
        Ok(Self { matrix })
    }

    /// Real diagonal operator `diag(values)`.
    pub fn diagonal(values: &[T]) -> Result<Self> {
        let n = values.len();
        let m = ComplexMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex::new(values[i], T::zero())
            } else {
                Complex::new(T::zero(), T::zero())
            }
        });
        Self::new(m)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.matrix
    }
}

/// Unit-trace Hermitian matrix describing a (possibly mixed) quantum state.
///
/// Positivity is not enforced at construction; see
/// [`DensityMatrix::positivity_violation`].
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T: Real> {
    matrix: ComplexMatrix<T>,
}

impl<T: Real> DensityMatrix<T> {
    pub fn new(matrix: ComplexMatrix<T>) -> Result<Self> {
        check_square_finite(&matrix)?;
        let deviation = hermitian_deviation(&matrix);
        if deviation > T::HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation: to_f64(deviation) });
        }
        let tr = trace(&matrix);
        if modulus(tr - Complex::new(T::one(), T::zero())) > T::TRACE_TOL {
            return Err(Error::TraceNotUnit { trace: to_f64(tr.re) });
        }
        Ok(Self { matrix })
    }

    /// Wraps propagator output without re-validating it, so that trace and
    /// Hermiticity drift stay observable to callers.
    pub(crate) fn from_matrix_unchecked(matrix: ComplexMatrix<T>) -> Self {
        Self { matrix }
    }

    /// `|psi><psi|` for the normalised `psi`.
    pub fn pure(psi: &DVector<Complex<T>>) -> Result<Self> {
        let norm = psi.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt();
        if !(norm > T::zero()) || !norm.is_finite() {
            return Err(Error::invalid("state vector", "norm must be positive and finite"));
        }
        let scale = Complex::new(T::one() / norm, T::zero());
        let psi = psi * scale;
        Self::new(&psi * psi.adjoint())
    }

    /// Basis projector `|k><k|` in dimension `dim`.
    pub fn basis_state(k: usize, dim: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::Index { index: k, dim });
        }
        let mut m = ComplexMatrix::zeros(dim, dim);
        m[(k, k)] = Complex::new(T::one(), T::zero());
        Self::new(m)
    }

    /// Diagonal state with the given populations.
    pub fn from_populations(probs: &[T]) -> Result<Self> {
        let n = probs.len();
        let m = ComplexMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex::new(probs[i], T::zero())
            } else {
                Complex::new(T::zero(), T::zero())
            }
        });
        Self::new(m)
    }

    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Empty);
        }
        let p = T::one() / from_usize::<T>(dim);
        Self::from_populations(&vec![p; dim])
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.matrix
    }

    pub fn trace(&self) -> Complex<T> {
        trace(&self.matrix)
    }

    /// `Tr rho^2`.
    pub fn purity(&self) -> T {
        // Tr(rho rho) = sum_ij |rho_ij|^2 for Hermitian rho
        self.matrix.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr())
    }

    pub fn hermitian_deviation(&self) -> T {
        hermitian_deviation(&self.matrix)
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<T> {
        let mut ev: Vec<T> = SymmetricEigen::new(self.matrix.clone()).eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
        ev
    }

    /// Smallest eigenvalue when it falls below `-T::POSITIVITY_TOL`.
    pub fn positivity_violation(&self) -> Option<T> {
        let min = self.eigenvalues().first().copied()?;
        (min < -T::POSITIVITY_TOL).then_some(min)
    }

    /// `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        Self::from_matrix_unchecked(self.matrix.kronecker(&other.matrix))
    }

    /// Convex combination `w * self + (1 - w) * other`.
    pub fn mix(&self, other: &Self, w: T) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        let a = Complex::new(w, T::zero());
        let b = Complex::new(T::one() - w, T::zero());
        Self::new(&self.matrix * a + &other.matrix * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn rejects_bad_trace_and_non_hermitian() {
        let m = ComplexMatrix::from_row_slice(2, 2, &[c(0.6, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.6, 0.0)]);
        assert!(matches!(DensityMatrix::new(m), Err(Error::TraceNotUnit { .. })));
        let m = ComplexMatrix::from_row_slice(2, 2, &[c(0.5, 0.0), c(0.1, 0.0), c(0.2, 0.0), c(0.5, 0.0)]);
        assert!(matches!(DensityMatrix::new(m.clone()), Err(Error::NotHermitian { .. })));
        assert!(matches!(HermitianOperator::new(m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn positivity_is_a_diagnostic_not_a_failure() {
        // eigenvalues 1.2 and -0.2
        let m = ComplexMatrix::from_row_slice(2, 2, &[c(0.5, 0.0), c(0.7, 0.0), c(0.7, 0.0), c(0.5, 0.0)]);
        let rho = DensityMatrix::new(m).unwrap();
        let v = rho.positivity_violation().unwrap();
        assert!((v + 0.2).abs() < 1e-12);
        assert!(DensityMatrix::<f64>::maximally_mixed(3).unwrap().positivity_violation().is_none());
    }

    #[test]
    fn pure_state_normalises_and_has_unit_purity() {
        let psi = DVector::from_vec(vec![c(1.0, 0.0), c(0.0, 1.0), c(2.0, 0.0)]);
        let rho = DensityMatrix::pure(&psi).unwrap();
        assert!((rho.purity() - 1.0).abs() < 1e-14);
        assert!((rho.trace().re - 1.0).abs() < 1e-15);
    }
}
