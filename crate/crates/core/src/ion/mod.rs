//! Blue-sideband Rabi oscillations of a single trapped ion.
//!
//! The resonant dynamics couples `|g,n>` to `|e,n+1>` with the
//! Laguerre-dressed Rabi frequency `Ω_n`. Ground-state probabilities are
//! available from the empirical exponential-damping fit, from the closed
//! Gaussian-damping q-model, and by evolving each two-level block with any
//! [`PropagatorKind`](crate::liouville::PropagatorKind).

mod blocks;
mod probability;
mod rabi;

pub use blocks::{blue_sideband_block, pg_from_propagator, CHANNEL_ENVELOPE, CHANNEL_PG};
pub use probability::{pg_empirical, pg_qmodel, RabiSum};
pub use rabi::{rabi_frequencies, rabi_frequency};

use crate::error::{Error, Result};
use crate::quantum::{coherent_distribution, fock_distribution, NumberDistribution};
use crate::scalar::{from_usize, lit, to_f64, Real};

/// Trap and drive parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IonConfig<T> {
    /// Coupling `Ω/2π` in Hz.
    pub omega_over_2pi: T,
    /// Lamb-Dicke parameter.
    pub eta: T,
    /// Fock-space truncation.
    pub dim: usize,
}

impl<T: Real> IonConfig<T> {
    pub fn new(omega_over_2pi: T, eta: T, dim: usize) -> Result<Self> {
        let cfg = Self { omega_over_2pi, eta, dim };
        cfg.validate()?;
        Ok(cfg)
    }

    /// `Ω/2π = 500 kHz`, `η = 0.202`, 30 Fock levels.
    pub fn figure1() -> Self {
        Self {
            omega_over_2pi: lit(5e5),
            eta: lit(0.202),
            dim: 30,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.omega_over_2pi > T::zero()) || !self.omega_over_2pi.is_finite() {
            return Err(Error::invalid("omega", format!("must be positive, got {}", to_f64(self.omega_over_2pi))));
        }
        if !(self.eta > T::zero() && self.eta < T::one()) {
            return Err(Error::invalid("eta", format!("must lie in (0, 1), got {}", to_f64(self.eta))));
        }
        if self.dim == 0 {
            return Err(Error::invalid("dim", "must be at least 1"));
        }
        Ok(())
    }

    /// Angular coupling `Ω = 2π · omega_over_2pi` (rad/s).
    pub fn coupling(&self) -> T {
        T::two_pi() * self.omega_over_2pi
    }
}

/// Empirical damping `γ_n = γ_0 (n+1)^exponent`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmpiricalDecay<T> {
    /// `γ_0` in s⁻¹.
    pub gamma0: T,
    pub exponent: T,
}

impl<T: Real> EmpiricalDecay<T> {
    pub fn new(gamma0: T, exponent: T) -> Result<Self> {
        if !(gamma0 >= T::zero()) || !gamma0.is_finite() {
            return Err(Error::invalid("gamma0", format!("must be nonnegative, got {}", to_f64(gamma0))));
        }
        if !exponent.is_finite() {
            return Err(Error::invalid("exponent", "must be finite"));
        }
        Ok(Self { gamma0, exponent })
    }

    /// `γ_0 = 11.9·10³ s⁻¹`, exponent `0.7`.
    pub fn figure1() -> Self {
        Self {
            gamma0: lit(11.9e3),
            exponent: lit(0.7),
        }
    }

    pub fn undamped() -> Self {
        Self {
            gamma0: T::zero(),
            exponent: lit(0.7),
        }
    }

    pub fn rate(&self, n: usize) -> T {
        self.gamma0 * from_usize::<T>(n + 1).powf(self.exponent)
    }
}

/// Motional state the ion is prepared in (internal state `|g>`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialVibrationalState<T> {
    Fock(usize),
    Coherent(T),
}

impl<T: Real> InitialVibrationalState<T> {
    pub fn distribution(&self, dim: usize) -> Result<NumberDistribution<T>> {
        match *self {
            InitialVibrationalState::Fock(n0) => fock_distribution(n0, dim),
            InitialVibrationalState::Coherent(nbar) => coherent_distribution(nbar, dim),
        }
    }
}
