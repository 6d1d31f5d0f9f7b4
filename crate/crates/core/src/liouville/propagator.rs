//! Element-wise propagators in the Hamiltonian eigenbasis.
//!
//! Every dynamics here maps the energy-basis coherence `ρ̃_mn(0)` to
//! `f(ω_mn, t) ρ̃_mn(0)` with `ω_mn = E_m - E_n`:
//!
//! | kind           | `f(ω, t)`                                  |
//! |----------------|--------------------------------------------|
//! | `Unitary`      | `e^{-iωt}`                                 |
//! | `QExponential` | `e_q(-iωt) = [1 + i(q-1)ωt]^{1/(1-q)}`     |
//! | `QShortTime`   | `e^{-iωt} e^{-(q-1) ω² t² / 2}`            |
//! | `Milburn`      | `e^{-iωt} e^{-τ ω² t / 2}`                 |
//!
//! Since `f(-ω, t) = conj f(ω, t)` the maps preserve Hermiticity, and since
//! `f(0, t) = 1` they leave energy populations (hence the trace) untouched.

use num_complex::Complex;

use super::decomposition::{diagonalize, EnergyDecomposition};
use crate::error::{Error, Result};
use crate::quantum::matrix::hermitian_part;
use crate::quantum::{q_exp, DensityMatrix, Extensivity, HermitianOperator};
use crate::scalar::{cis, lit, to_f64, Real};

/// `|1-q| ω_max t` above which a time point is flagged as outside the
/// short-time validity window.
pub const VALIDITY_THRESHOLD: f64 = 0.2;

/// Which dynamics to apply.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PropagatorKind<T: Real> {
    Unitary,
    QExponential(Extensivity<T>),
    QShortTime(Extensivity<T>),
    /// Intrinsic decoherence with fundamental time step `tau` (seconds).
    Milburn { tau: T },
}

impl<T: Real> PropagatorKind<T> {
    pub fn validate(&self) -> Result<()> {
        match *self {
            PropagatorKind::Unitary => Ok(()),
            PropagatorKind::QExponential(q) | PropagatorKind::QShortTime(q) => q.check_evolution(),
            PropagatorKind::Milburn { tau } => {
                if tau.is_finite() && tau >= T::zero() {
                    Ok(())
                } else {
                    Err(Error::invalid("tau", format!("must be finite and nonnegative, got {}", to_f64(tau))))
                }
            }
        }
    }

    /// `|1 - q|` for the q-variants, zero otherwise.
    pub fn extensivity_excess(&self) -> T {
        match *self {
            PropagatorKind::QExponential(q) | PropagatorKind::QShortTime(q) => q.excess().abs(),
            _ => T::zero(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PropagatorKind::Unitary => "unitary",
            PropagatorKind::QExponential(_) => "qexp",
            PropagatorKind::QShortTime(_) => "qshort",
            PropagatorKind::Milburn { .. } => "milburn",
        }
    }

    /// Multiplier applied to a coherence with Bohr frequency `omega` after
    /// time `t`.
    pub fn coherence_factor(&self, omega: T, t: T) -> Result<Complex<T>> {
        let rotation = || cis(-(omega * t));
        Ok(match *self {
            PropagatorKind::Unitary => rotation(),
            PropagatorKind::QExponential(q) => q_exp(Complex::new(T::zero(), -(omega * t)), q)?,
            PropagatorKind::QShortTime(q) => {
                let wt = omega * t;
                rotation() * (-(q.excess() * wt * wt) * lit(0.5)).exp()
            }
            PropagatorKind::Milburn { tau } => rotation() * (-(tau * omega * omega * t) * lit(0.5)).exp(),
        })
    }
}

/// Time-ordered states produced by one propagator.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionResult<T: Real> {
    pub times: Vec<T>,
    pub states: Vec<DensityMatrix<T>>,
    pub kind: PropagatorKind<T>,
    /// `|1-q| ω_max t <= VALIDITY_THRESHOLD` per time point (advisory).
    pub valid: Vec<bool>,
}

pub(crate) fn check_time<T: Real>(t: T) -> Result<()> {
    if t.is_finite() && t >= T::zero() {
        Ok(())
    } else {
        Err(Error::NegativeTime(to_f64(t)))
    }
}

pub(crate) fn check_times<T: Real>(times: &[T]) -> Result<()> {
    if let Some(&t0) = times.first() {
        check_time(t0)?;
    }
    for (i, w) in times.windows(2).enumerate() {
        check_time(w[1])?;
        if !(w[1] > w[0]) {
            return Err(Error::NonIncreasingTimes { index: i + 1 });
        }
    }
    Ok(())
}

impl<T: Real> EnergyDecomposition<T> {
    /// Applies `kind` to `rho0` for a duration `t >= 0`.
    pub fn evolve(&self, rho0: &DensityMatrix<T>, kind: PropagatorKind<T>, t: T) -> Result<DensityMatrix<T>> {
        self.check_dim(rho0.dim())?;
        kind.validate()?;
        check_time(t)?;
        let mut coherences = self.to_energy_basis(rho0.matrix());
        let dim = self.dim();
        for m in 0..dim {
            for n in (m + 1)..dim {
                let f = kind.coherence_factor(self.transition_frequency(m, n), t)?;
                coherences[(m, n)] *= f;
                coherences[(n, m)] *= f.conj();
            }
        }
        let rho = hermitian_part(&self.from_energy_basis(&coherences));
        Ok(DensityMatrix::from_matrix_unchecked(rho))
    }

    /// Evolves `rho0` to every time in `times` (strictly increasing, `>= 0`).
    pub fn evolve_series(&self, rho0: &DensityMatrix<T>, kind: PropagatorKind<T>, times: &[T]) -> Result<EvolutionResult<T>> {
        check_times(times)?;
        let states = times
            .iter()
            .map(|&t| self.evolve(rho0, kind, t))
            .collect::<Result<Vec<_>>>()?;
        Ok(EvolutionResult {
            times: times.to_vec(),
            states,
            kind,
            valid: self.validity_flags(kind.extensivity_excess(), times),
        })
    }

    pub(crate) fn validity_flags(&self, excess: T, times: &[T]) -> Vec<bool> {
        let w = self.max_transition_frequency();
        times
            .iter()
            .map(|&t| excess * w * t <= lit(VALIDITY_THRESHOLD))
            .collect()
    }
}

/// Von Neumann evolution `ρ(t) = e^{-iHt} ρ0 e^{iHt}`.
pub fn evolve_unitary<T: Real>(rho0: &DensityMatrix<T>, h: &HermitianOperator<T>, t: T) -> Result<DensityMatrix<T>> {
    diagonalize(h).evolve(rho0, PropagatorKind::Unitary, t)
}

/// Generalized evolution with the q-exponential of the Liouvillian.
pub fn evolve_qexp<T: Real>(
    rho0: &DensityMatrix<T>,
    h: &HermitianOperator<T>,
    q: Extensivity<T>,
    t: T,
) -> Result<DensityMatrix<T>> {
    diagonalize(h).evolve(rho0, PropagatorKind::QExponential(q), t)
}

/// Exact solution of the short-time (first order in `1-q`) generalized
/// equation.
pub fn evolve_qshort<T: Real>(
    rho0: &DensityMatrix<T>,
    h: &HermitianOperator<T>,
    q: Extensivity<T>,
    t: T,
) -> Result<DensityMatrix<T>> {
    diagonalize(h).evolve(rho0, PropagatorKind::QShortTime(q), t)
}

/// Solution of the Milburn double-commutator equation.
pub fn evolve_milburn<T: Real>(rho0: &DensityMatrix<T>, h: &HermitianOperator<T>, tau: T, t: T) -> Result<DensityMatrix<T>> {
    diagonalize(h).evolve(rho0, PropagatorKind::Milburn { tau }, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::matrix::max_abs_diff;
    use crate::quantum::ComplexMatrix;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn two_level(w: f64) -> HermitianOperator<f64> {
        HermitianOperator::diagonal(&[0.0, w]).unwrap()
    }

    fn plus_state() -> DensityMatrix<f64> {
        let m = ComplexMatrix::from_row_slice(2, 2, &[c(0.5, 0.0), c(0.3, 0.2), c(0.3, -0.2), c(0.5, 0.0)]);
        DensityMatrix::new(m).unwrap()
    }

    fn q(v: f64) -> Extensivity<f64> {
        Extensivity::evolution(v).unwrap()
    }

    #[test]
    fn zero_time_is_identity() {
        let h = two_level(3.0);
        let rho = plus_state();
        for kind in [
            PropagatorKind::Unitary,
            PropagatorKind::QExponential(q(1.2)),
            PropagatorKind::QShortTime(q(1.2)),
            PropagatorKind::Milburn { tau: 0.4 },
        ] {
            let out = diagonalize(&h).evolve(&rho, kind, 0.0).unwrap();
            assert!(max_abs_diff(out.matrix(), rho.matrix()) < 1e-15);
        }
    }

    #[test]
    fn degenerate_limits_reduce_to_unitary() {
        let h = two_level(1.7);
        let rho = plus_state();
        let u = evolve_unitary(&rho, &h, 2.3).unwrap();
        let a = evolve_qexp(&rho, &h, q(1.0), 2.3).unwrap();
        let b = evolve_qshort(&rho, &h, q(1.0), 2.3).unwrap();
        let m = evolve_milburn(&rho, &h, 0.0, 2.3).unwrap();
        for other in [a, b, m] {
            assert!(max_abs_diff(other.matrix(), u.matrix()) < 1e-12);
        }
    }

    #[test]
    fn two_level_envelopes() {
        // energies [0, w]: the (0, 1) coherence has ω_01 = -w
        let (w, t) = (2.0, 1.5);
        let h = two_level(w);
        let rho = plus_state();
        let coh0 = rho.matrix()[(0, 1)].norm();
        let (qv, tau) = (1.3, 0.05);

        let qe = evolve_qexp(&rho, &h, q(qv), t).unwrap();
        let s = (qv - 1.0) * w * t;
        let expected = (1.0 + s * s).powf(-1.0 / (2.0 * (qv - 1.0)));
        assert!((qe.matrix()[(0, 1)].norm() / coh0 - expected).abs() < 1e-12);

        let qs = evolve_qshort(&rho, &h, q(qv), t).unwrap();
        let expected = (-(qv - 1.0) * w * w * t * t / 2.0).exp();
        assert!((qs.matrix()[(0, 1)].norm() / coh0 - expected).abs() < 1e-12);

        let mb = evolve_milburn(&rho, &h, tau, t).unwrap();
        let expected = (-tau * w * w * t / 2.0).exp();
        assert!((mb.matrix()[(0, 1)].norm() / coh0 - expected).abs() < 1e-12);
    }

    #[test]
    fn stationary_states_do_not_move() {
        let h = HermitianOperator::diagonal(&[0.0, 1.0, 4.0]).unwrap();
        let rho = DensityMatrix::from_populations(&[0.2, 0.5, 0.3]).unwrap();
        for kind in [
            PropagatorKind::Unitary,
            PropagatorKind::QExponential(q(1.5)),
            PropagatorKind::QShortTime(q(1.5)),
            PropagatorKind::Milburn { tau: 1.0 },
        ] {
            for t in [0.1, 1.0, 10.0] {
                let out = diagonalize(&h).evolve(&rho, kind, t).unwrap();
                assert!(max_abs_diff(out.matrix(), rho.matrix()) < 1e-15);
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let h = two_level(1.0);
        let rho = plus_state();
        let d = diagonalize(&h);
        assert!(matches!(d.evolve(&rho, PropagatorKind::Unitary, -1.0), Err(Error::NegativeTime(_))));
        assert!(d.evolve(&rho, PropagatorKind::Milburn { tau: -0.1 }, 1.0).is_err());
        let low = Extensivity::new(0.9).unwrap();
        assert!(d.evolve(&rho, PropagatorKind::QExponential(low), 1.0).is_err());
        let big = DensityMatrix::<f64>::maximally_mixed(3).unwrap();
        assert!(matches!(d.evolve(&big, PropagatorKind::Unitary, 1.0), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(
            d.evolve_series(&rho, PropagatorKind::Unitary, &[0.0, 1.0, 1.0]),
            Err(Error::NonIncreasingTimes { index: 2 })
        ));
    }

    #[test]
    fn validity_flags_follow_threshold() {
        let h = two_level(10.0);
        let d = diagonalize(&h);
        // |1-q| ω_max t = 0.1 * 10 * t ; threshold 0.2 reached at t = 0.2
        let res = d
            .evolve_series(&plus_state(), PropagatorKind::QShortTime(q(1.1)), &[0.0, 0.1, 0.19, 0.25])
            .unwrap();
        assert_eq!(res.valid, vec![true, true, true, false]);
        let res = d.evolve_series(&plus_state(), PropagatorKind::Unitary, &[0.0, 100.0]).unwrap();
        assert_eq!(res.valid, vec![true, true]);
    }
}
