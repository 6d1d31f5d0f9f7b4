//! Closed forms for a single q-exponential coherence factor and the
//! short-time validity horizon.

use crate::error::{Error, Result};
use crate::quantum::Extensivity;
use crate::scalar::{lit, to_f64, Real};

/// `|e_q(-iωt)| = (1 + (q-1)² ω² t²)^{-1/(2(q-1))}`; `1` at `q = 1`.
pub fn coherence_envelope<T: Real>(omega: T, q: Extensivity<T>, t: T) -> T {
    if q.is_unitary() {
        return T::one();
    }
    let s = q.excess() * omega * t;
    (-(s * s).ln_1p() / (q.excess() * lit(2.0))).exp()
}

/// `arg e_q(-iωt) = -arctan((q-1)ωt) / (q-1)`; `-ωt` at `q = 1`.
pub fn coherence_phase<T: Real>(omega: T, q: Extensivity<T>, t: T) -> T {
    if q.is_unitary() {
        return -(omega * t);
    }
    -(q.excess() * omega * t).atan() / q.excess()
}

/// Time at which `|1-q| ω t` reaches `threshold`.
pub fn validity_horizon<T: Real>(q: Extensivity<T>, omega_char: T, threshold: T) -> Result<T> {
    if q.is_unitary() {
        return Err(Error::DivergentHorizon);
    }
    if !(omega_char > T::zero()) || !omega_char.is_finite() {
        return Err(Error::invalid("omega_char", format!("must be positive, got {}", to_f64(omega_char))));
    }
    if !(threshold >= T::zero()) || !threshold.is_finite() {
        return Err(Error::invalid("threshold", format!("must be nonnegative, got {}", to_f64(threshold))));
    }
    Ok(threshold / (q.excess().abs() * omega_char))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::q_exp;
    use num_complex::Complex;
    use proptest::prelude::*;

    fn q(v: f64) -> Extensivity<f64> {
        Extensivity::new(v).unwrap()
    }

    #[test]
    fn origin_values() {
        assert_eq!(coherence_envelope(5.0, q(1.3), 0.0), 1.0);
        assert_eq!(coherence_phase(5.0, q(1.3), 0.0), 0.0);
    }

    #[test]
    fn small_time_expansion() {
        // (q-1)ωt = 1e-3
        let (qv, w) = (1.01f64, 2.0f64);
        let t = 1e-3 / ((qv - 1.0) * w);
        let gauss = (-(qv - 1.0) * w * w * t * t / 2.0).exp();
        let env = coherence_envelope(w, q(qv), t);
        // relative correction is (q-1)^3 ω^4 t^4 / 4 ≈ 2.5e-5
        let rel = env / gauss - 1.0;
        assert!(rel > 0.0 && rel < 3e-5, "{rel}");
        let phase = coherence_phase(w, q(qv), t);
        // relative correction (q-1)^2 ω^2 t^2 / 3 ≈ 3.3e-7
        assert!((phase / (-w * t) - 1.0).abs() < 4e-7);
    }

    #[test]
    fn horizon_values() {
        let omega = 2.0 * std::f64::consts::PI * 5e5;
        let h = validity_horizon(q(1.001), omega, 0.17).unwrap();
        // 0.17 / (0.001 * 2π * 5e5), frozen from a 50-digit evaluation; the
        // binary value of 1.001 - 1 is off by ~1e-13 relative
        assert!((h / 5.4112680651244414e-5 - 1.0).abs() < 1e-12);
        assert_eq!(validity_horizon(q(1.001), omega, 0.0).unwrap(), 0.0);
        assert_eq!(validity_horizon(q(1.0), omega, 0.17), Err(Error::DivergentHorizon));
        assert!(validity_horizon(q(1.001), 0.0, 0.17).is_err());
    }

    proptest! {
        #[test]
        fn envelope_matches_q_exponential_modulus(w in -50.0f64..50.0, qv in 1.001f64..3.0, t in 0.0f64..20.0) {
            let z = q_exp(Complex::new(0.0, -w * t), q(qv)).unwrap();
            prop_assert!((z.norm() - coherence_envelope(w, q(qv), t)).abs() < 1e-12);
        }

        #[test]
        fn envelope_strictly_decreasing(w in 0.1f64..50.0, qv in 1.001f64..3.0, t in 0.0f64..5.0, dt in 1e-3f64..1.0) {
            prop_assume!(coherence_envelope(w, q(qv), t + dt) > 1e-300);
            prop_assert!(coherence_envelope(w, q(qv), t + dt) < coherence_envelope(w, q(qv), t));
            prop_assert!(coherence_envelope(-w, q(qv), t + dt) < coherence_envelope(-w, q(qv), t));
        }
    }
}
