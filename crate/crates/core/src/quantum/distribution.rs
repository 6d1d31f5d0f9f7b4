//! Vibrational excitation distributions `P_n` over a truncated Fock ladder.

use crate::error::{Error, Result};
use crate::scalar::{from_usize, to_f64, Real};

/// Hard cap on the Fock dimension searched when sizing a truncation.
const MAX_DIM: usize = 1 << 20;

/// Excitation probabilities `P_0 .. P_{dim-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct NumberDistribution<T: Real> {
    probs: Vec<T>,
}

impl<T: Real> NumberDistribution<T> {
    /// Validates nonnegativity and that the total lies in `[1 - ε_trunc, 1]`.
    pub fn new(probs: Vec<T>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::Empty);
        }
        for (n, &p) in probs.iter().enumerate() {
            if !p.is_finite() || p < T::zero() {
                return Err(Error::invalid("distribution", format!("P_{n} = {} is not a probability", to_f64(p))));
            }
        }
        let total = probs.iter().fold(T::zero(), |acc, &p| acc + p);
        if total < T::one() - T::TRUNCATION_TOL || total > T::one() + T::TRACE_TOL {
            return Err(Error::invalid("distribution", format!("total mass {} outside [1 - 1e-6, 1]", to_f64(total))));
        }
        Ok(Self { probs })
    }

    pub fn probs(&self) -> &[T] {
        &self.probs
    }

    pub fn dim(&self) -> usize {
        self.probs.len()
    }

    pub fn total(&self) -> T {
        self.probs.iter().fold(T::zero(), |acc, &p| acc + p)
    }

    pub fn mean(&self) -> T {
        self.probs
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (n, &p)| acc + from_usize::<T>(n) * p)
    }

    /// `(n, P_n)` pairs with nonzero weight.
    pub fn support(&self) -> impl Iterator<Item = (usize, T)> + '_ {
        self.probs.iter().copied().enumerate().filter(|(_, p)| *p > T::zero())
    }
}

/// Number state `|n0>`: `P_n = δ_{n,n0}`.
pub fn fock_distribution<T: Real>(n0: usize, dim: usize) -> Result<NumberDistribution<T>> {
    if n0 >= dim {
        return Err(Error::Index { index: n0, dim });
    }
    let mut probs = vec![T::zero(); dim];
    probs[n0] = T::one();
    NumberDistribution::new(probs)
}

/// Poissonian weights of a coherent state with mean occupation `nbar`,
/// truncated at `dim` levels.
///
/// Fails with [`Error::Truncation`] when more than `ε_trunc = 1e-6` of the
/// mass falls beyond `dim - 1`; the error carries the smallest adequate dim.
pub fn coherent_distribution<T: Real>(nbar: T, dim: usize) -> Result<NumberDistribution<T>> {
    if !nbar.is_finite() || nbar < T::zero() {
        return Err(Error::invalid("nbar", "must be finite and nonnegative"));
    }
    if dim == 0 {
        return Err(Error::Empty);
    }
    let p0 = (-nbar).exp();
    if !(p0 > T::zero()) {
        return Err(Error::Overflow("coherent vacuum weight exp(-nbar) underflows"));
    }
    let probs = poisson_terms(nbar, p0, dim);
    let tail = T::one() - probs.iter().fold(T::zero(), |acc, &p| acc + p);
    if tail >= T::TRUNCATION_TOL {
        return Err(Error::Truncation {
            dim,
            tail: to_f64(tail),
            required: coherent_required_dim(nbar)?,
        });
    }
    NumberDistribution::new(probs)
}

/// Smallest truncation whose tail mass is below `ε_trunc`.
pub fn coherent_required_dim<T: Real>(nbar: T) -> Result<usize> {
    if !nbar.is_finite() || nbar < T::zero() {
        return Err(Error::invalid("nbar", "must be finite and nonnegative"));
    }
    let mut p = (-nbar).exp();
    if !(p > T::zero()) {
        return Err(Error::Overflow("coherent vacuum weight exp(-nbar) underflows"));
    }
    let mut partial = T::zero();
    for n in 0..MAX_DIM {
        partial += p;
        if T::one() - partial < T::TRUNCATION_TOL {
            return Ok(n + 1);
        }
        p = p * nbar / from_usize::<T>(n + 1);
    }
    Err(Error::Overflow("no truncation below the maximum Fock dimension"))
}

fn poisson_terms<T: Real>(nbar: T, p0: T, dim: usize) -> Vec<T> {
    let mut probs = Vec::with_capacity(dim);
    let mut p = p0;
    for n in 0..dim {
        probs.push(p);
        p = p * nbar / from_usize::<T>(n + 1);
    }
    probs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fock_examples() {
        assert_eq!(fock_distribution::<f64>(0, 4).unwrap().probs(), &[1.0, 0.0, 0.0, 0.0]);
        assert_eq!(fock_distribution::<f64>(2, 3).unwrap().probs(), &[0.0, 0.0, 1.0]);
        assert_eq!(fock_distribution::<f64>(5, 3), Err(Error::Index { index: 5, dim: 3 }));
    }

    #[test]
    fn coherent_vacuum_limit() {
        assert_eq!(coherent_distribution(0.0f64, 4).unwrap().probs(), &[1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn coherent_nbar_three() {
        // frozen from a 50-digit evaluation of e^-3 and e^-3 * 27/6
        const P0: f64 = 0.049787068367863942979;
        const P2: f64 = 0.22404180765538774341;
        let d = coherent_distribution(3.0f64, 30).unwrap();
        let p = d.probs();
        assert!((p[0] - P0).abs() < 1e-16);
        assert!((p[2] - P2).abs() < 1e-15);
        assert!((p[3] - P2).abs() < 1e-15);
        let argmax = (0..30).max_by(|&a, &b| p[a].partial_cmp(&p[b]).unwrap()).unwrap();
        assert!(argmax == 2 || argmax == 3);
        assert!(d.total() >= 1.0 - 1e-6);
        assert!((d.mean() - 3.0).abs() < 1e-6);
    }

    #[test]
    fn coherent_truncation_reports_required_dim() {
        assert_eq!(coherent_required_dim(3.0f64).unwrap(), 15);
        match coherent_distribution(3.0f64, 10) {
            Err(Error::Truncation { dim, required, .. }) => {
                assert_eq!(dim, 10);
                assert_eq!(required, 15);
            }
            other => panic!("expected truncation error, got {other:?}"),
        }
        assert!(coherent_distribution(3.0f64, 15).is_ok());
    }

    #[test]
    fn rejects_invalid_weights() {
        assert!(NumberDistribution::new(vec![0.5, 0.4]).is_err());
        assert!(NumberDistribution::new(vec![1.2, -0.2]).is_err());
        assert!(NumberDistribution::<f64>::new(vec![]).is_err());
    }
}
