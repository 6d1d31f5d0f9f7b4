use super::IonConfig;
use crate::error::Result;
use crate::quantum::{laguerre_assoc, laguerre_sequence};
use crate::scalar::{from_usize, lit, Real};

/// `Ω_n = Ω e^{-η²/2} η L_n^1(η²) / √(n+1)` in rad/s.
pub fn rabi_frequency<T: Real>(n: usize, cfg: &IonConfig<T>) -> Result<T> {
    let eta2 = cfg.eta * cfg.eta;
    let lag = laguerre_assoc(n as u64, T::one(), eta2)?;
    Ok(prefactor(cfg) * lag / from_usize::<T>(n + 1).sqrt())
}

/// `Ω_0 .. Ω_{count-1}`.
pub fn rabi_frequencies<T: Real>(cfg: &IonConfig<T>, count: usize) -> Result<Vec<T>> {
    let eta2 = cfg.eta * cfg.eta;
    let pre = prefactor(cfg);
    Ok(laguerre_sequence(count, T::one(), eta2)?
        .into_iter()
        .enumerate()
        .map(|(n, l)| pre * l / from_usize::<T>(n + 1).sqrt())
        .collect())
}

fn prefactor<T: Real>(cfg: &IonConfig<T>) -> T {
    let eta2 = cfg.eta * cfg.eta;
    cfg.coupling() * (-eta2 * lit(0.5)).exp() * cfg.eta
}

#[cfg(test)]
mod tests {
    use super::*;

    // Ω_0 for η = 0.202, Ω/2π = 500 kHz, frozen from a 50-digit evaluation
    const OMEGA0: f64 = 621785.75200545920282913525629673;

    #[test]
    fn ground_rabi_frequency() {
        let w0 = rabi_frequency(0, &IonConfig::<f64>::figure1()).unwrap();
        assert!((w0 - OMEGA0).abs() < 1e-9);
        assert!((w0 / (2.0 * std::f64::consts::PI) - 98960.2759757802).abs() < 1e-6);
    }

    #[test]
    fn vanishes_with_eta() {
        let cfg = IonConfig { eta: 1e-12, ..IonConfig::<f64>::figure1() };
        for n in 0..10 {
            assert!(rabi_frequency(n, &cfg).unwrap().abs() < 1e-4);
        }
    }

    #[test]
    fn ratio_is_independent_of_coupling() {
        let a = IonConfig::<f64>::figure1();
        let b = IonConfig { omega_over_2pi: 1.3e6, ..a };
        let eta2 = a.eta * a.eta;
        for n in 1..20 {
            let ra = rabi_frequency(n, &a).unwrap() / rabi_frequency(0, &a).unwrap();
            let rb = rabi_frequency(n, &b).unwrap() / rabi_frequency(0, &b).unwrap();
            let expected = laguerre_assoc(n as u64, 1.0, eta2).unwrap() / ((n + 1) as f64).sqrt();
            assert!((ra - rb).abs() < 1e-14 * ra.abs());
            assert!((ra - expected).abs() < 1e-13 * expected.abs());
        }
    }

    #[test]
    fn sequence_matches_pointwise() {
        let cfg = IonConfig::<f64>::figure1();
        let all = rabi_frequencies(&cfg, 30).unwrap();
        for (n, w) in all.iter().enumerate() {
            assert_eq!(*w, rabi_frequency(n, &cfg).unwrap());
        }
    }
}
