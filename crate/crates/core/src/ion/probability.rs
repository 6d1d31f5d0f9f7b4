//! Closed-form ground-state probabilities.

use super::rabi::rabi_frequencies;
use super::{EmpiricalDecay, IonConfig};
use crate::error::Result;
use crate::liouville::propagator::check_time;
use crate::quantum::{Extensivity, NumberDistribution};
use crate::scalar::{lit, Real};

/// Occupied levels of a distribution paired with their Rabi frequencies,
/// ready to evaluate either damping model at many times.
#[derive(Debug, Clone, PartialEq)]
pub struct RabiSum<T> {
    /// `(n, P_n, Ω_n)` for every `P_n > 0`, in increasing `n`.
    terms: Vec<(usize, T, T)>,
}

impl<T: Real> RabiSum<T> {
    pub fn new(dist: &NumberDistribution<T>, cfg: &IonConfig<T>) -> Result<Self> {
        cfg.validate()?;
        let freqs = rabi_frequencies(cfg, dist.dim())?;
        let terms = dist.support().map(|(n, p)| (n, p, freqs[n])).collect();
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[(usize, T, T)] {
        &self.terms
    }

    /// `½[1 + Σ P_n cos(2Ω_n t) e^{-γ_n t}]`.
    pub fn empirical(&self, decay: &EmpiricalDecay<T>, t: T) -> Result<T> {
        check_time(t)?;
        Ok(self.sum(t, |n, _| (-(decay.rate(n) * t)).exp()))
    }

    /// `½[1 + Σ P_n cos(2Ω_n t) e^{-γ_{n,q} t²}]`, `γ_{n,q} = (q-1)Ω_n²/2`.
    pub fn qmodel(&self, q: Extensivity<T>, t: T) -> Result<T> {
        check_time(t)?;
        q.check_evolution()?;
        Ok(self.sum(t, |_, w| (-(qmodel_rate(q, w) * t * t)).exp()))
    }

    /// Population-weighted damping factor `Σ P_n e^{-γ_n t}`.
    pub fn empirical_envelope(&self, decay: &EmpiricalDecay<T>, t: T) -> Result<T> {
        check_time(t)?;
        Ok(self.weighted(|n, _| (-(decay.rate(n) * t)).exp()))
    }

    /// Population-weighted damping factor `Σ P_n e^{-γ_{n,q} t²}`.
    pub fn qmodel_envelope(&self, q: Extensivity<T>, t: T) -> Result<T> {
        check_time(t)?;
        q.check_evolution()?;
        Ok(self.weighted(|_, w| (-(qmodel_rate(q, w) * t * t)).exp()))
    }

    fn sum<F: Fn(usize, T) -> T>(&self, t: T, damping: F) -> T {
        let two: T = lit(2.0);
        let osc = self.weighted(|n, w| (two * w * t).cos() * damping(n, w));
        (T::one() + osc) * lit(0.5)
    }

    fn weighted<F: Fn(usize, T) -> T>(&self, f: F) -> T {
        self.terms.iter().fold(T::zero(), |acc, &(n, p, w)| acc + p * f(n, w))
    }
}

/// `γ_{n,q} = (q-1) Ω_n² / 2`.
pub fn qmodel_rate<T: Real>(q: Extensivity<T>, rabi: T) -> T {
    q.excess() * rabi * rabi * lit(0.5)
}

/// Ground-state probability with empirical exponential damping.
pub fn pg_empirical<T: Real>(
    dist: &NumberDistribution<T>,
    cfg: &IonConfig<T>,
    decay: &EmpiricalDecay<T>,
    t: T,
) -> Result<T> {
    RabiSum::new(dist, cfg)?.empirical(decay, t)
}

/// Ground-state probability predicted by the q-model (Gaussian damping).
pub fn pg_qmodel<T: Real>(dist: &NumberDistribution<T>, cfg: &IonConfig<T>, q: Extensivity<T>, t: T) -> Result<T> {
    RabiSum::new(dist, cfg)?.qmodel(q, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ion::rabi_frequency;
    use crate::quantum::{coherent_distribution, fock_distribution};

    fn q(v: f64) -> Extensivity<f64> {
        Extensivity::evolution(v).unwrap()
    }

    #[test]
    fn starts_in_ground_state() {
        let cfg = IonConfig::<f64>::figure1();
        for dist in [fock_distribution(0, 30).unwrap(), coherent_distribution(3.0, 30).unwrap()] {
            let e = pg_empirical(&dist, &cfg, &EmpiricalDecay::figure1(), 0.0).unwrap();
            let m = pg_qmodel(&dist, &cfg, q(1.001), 0.0).unwrap();
            // the truncated coherent sum misses < 1e-6 of the mass
            assert!((e - 1.0).abs() < 1e-6 && (m - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn undamped_flopping() {
        let cfg = IonConfig::<f64>::figure1();
        let dist = fock_distribution(0, 30).unwrap();
        let w0 = rabi_frequency(0, &cfg).unwrap();
        for k in 0..50 {
            let t = k as f64 * 1.1e-6;
            let expected = 0.5 * (1.0 + (2.0 * w0 * t).cos());
            let e = pg_empirical(&dist, &cfg, &EmpiricalDecay::undamped(), t).unwrap();
            let m = pg_qmodel(&dist, &cfg, q(1.0), t).unwrap();
            assert!((e - expected).abs() < 1e-14);
            assert_eq!(e, m);
        }
    }

    #[test]
    fn damping_factors_at_54_microseconds() {
        let cfg = IonConfig::<f64>::figure1();
        let rs = RabiSum::new(&fock_distribution(0, 30).unwrap(), &cfg).unwrap();
        let t = 54e-6;
        // e^{-11.9e3 * 54e-6}, frozen from a 50-digit evaluation
        let env = rs.empirical_envelope(&EmpiricalDecay::figure1(), t).unwrap();
        assert!((env - 0.52592324444531810041).abs() < 1e-15);
        // e^{-0.0005 Ω_0² t²}, frozen from a 50-digit evaluation
        let env = rs.qmodel_envelope(q(1.001), t).unwrap();
        assert!((env - 0.56910612763298733764).abs() < 1e-13);
    }

    #[test]
    fn rejects_negative_time() {
        let cfg = IonConfig::<f64>::figure1();
        let dist = fock_distribution(0, 5).unwrap();
        assert!(pg_empirical(&dist, &cfg, &EmpiricalDecay::figure1(), -1e-6).is_err());
    }
}
