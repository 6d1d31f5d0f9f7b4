//! Dense complex matrices and the elementwise checks the operator types use.

use nalgebra::DMatrix;
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{modulus, Real};

/// Dense square complex matrix carrying density operators and Hamiltonians.
pub type ComplexMatrix<T> = DMatrix<Complex<T>>;

/// Checks that `m` is non-empty, square and finite.
pub fn check_square_finite<T: Real>(m: &ComplexMatrix<T>) -> Result<()> {
    let (rows, cols) = m.shape();
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    if rows == 0 {
        return Err(Error::Empty);
    }
    for j in 0..cols {
        for i in 0..rows {
            let z = m[(i, j)];
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::NonFinite { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// `max_ij |m_ij - conj(m_ji)|`.
pub fn hermitian_deviation<T: Real>(m: &ComplexMatrix<T>) -> T {
    let n = m.nrows();
    let mut worst = T::zero();
    for i in 0..n {
        for j in i..n {
            let d = modulus(m[(i, j)] - m[(j, i)].conj());
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

/// Largest elementwise modulus of `a - b`. Panics on shape mismatch.
pub fn max_abs_diff<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> T {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| modulus(*x - *y))
        .fold(T::zero(), |acc, d| if d > acc { d } else { acc })
}

/// Sum of the diagonal.
pub fn trace<T: Real>(m: &ComplexMatrix<T>) -> Complex<T> {
    (0..m.nrows().min(m.ncols())).fold(Complex::new(T::zero(), T::zero()), |acc, k| acc + m[(k, k)])
}

/// `(m + m^dagger) / 2`.
pub fn hermitian_part<T: Real>(m: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    let half = Complex::new(crate::scalar::lit::<T>(0.5), T::zero());
    (m + m.adjoint()) * half
}

/// `A ⊗ B`.
pub fn kron<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    a.kronecker(b)
}
