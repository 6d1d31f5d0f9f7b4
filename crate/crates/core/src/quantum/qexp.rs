//! The q-deformed exponential `e_q(x) = [1 + (1-q) x]^{1/(1-q)}`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{cis, lit, modulus, to_f64, Real};

/// Largest |1/(1-q)| evaluated by repeated squaring instead of the polar form.
const MAX_INTEGER_EXPONENT: i64 = 1 << 20;

/// Tsallis extensivity parameter `q`.
///
/// Any finite value is accepted by [`Extensivity::new`]; evolution routines
/// additionally require `q >= 1` via [`Extensivity::check_evolution`].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Extensivity<T: Real>(T);

impl<T: Real> Extensivity<T> {
    pub fn new(q: T) -> Result<Self> {
        if !q.is_finite() {
            return Err(Error::invalid("q", "must be finite"));
        }
        Ok(Self(q))
    }

    /// `q >= 1`, the range in which the generalized evolution is defined.
    pub fn evolution(q: T) -> Result<Self> {
        let q = Self::new(q)?;
        q.check_evolution()?;
        Ok(q)
    }

    /// The ordinary (extensive) case `q = 1`.
    pub fn unitary() -> Self {
        Self(T::one())
    }

    pub fn value(self) -> T {
        self.0
    }

    pub fn is_unitary(self) -> bool {
        self.0 == T::one()
    }

    /// `q - 1`.
    pub fn excess(self) -> T {
        self.0 - T::one()
    }

    pub fn check_evolution(self) -> Result<()> {
        if self.0 < T::one() {
            return Err(Error::invalid(
                "q",
                format!("evolution requires q >= 1, got {}", to_f64(self.0)),
            ));
        }
        Ok(())
    }
}

/// `e^x` for complex `x`.
pub fn complex_exp<T: Real>(x: Complex<T>) -> Complex<T> {
    cis(x.im) * x.re.exp()
}

/// Principal-branch q-exponential of a complex argument.
///
/// `q = 1` is routed to the ordinary exponential. Integer exponents
/// `1/(1-q)` are evaluated exactly by repeated multiplication, everything
/// else through the polar form of the base with the argument in `(-π, π]`.
pub fn q_exp<T: Real>(x: Complex<T>, q: Extensivity<T>) -> Result<Complex<T>> {
    if q.is_unitary() {
        return Ok(complex_exp(x));
    }
    let one_minus_q = T::one() - q.value();
    let exponent = T::one() / one_minus_q;
    let u = x * one_minus_q;
    let base = u + T::one();
    let zero = T::zero();

    if base.re == zero && base.im == zero {
        return if exponent < zero {
            Err(Error::Pole { exponent: to_f64(exponent) })
        } else {
            Ok(Complex::new(zero, zero))
        };
    }

    if exponent.round() == exponent && exponent.abs() <= lit(MAX_INTEGER_EXPONENT as f64) {
        let k = exponent.to_i64().expect("bounded integer exponent");
        return Ok(integer_power(base, k));
    }

    if base.im == zero && base.re < zero {
        return Err(Error::BranchCut {
            base: to_f64(base.re),
            exponent: to_f64(exponent),
        });
    }

    // ln|base| without cancellation when the base is close to one
    let log_modulus = if modulus(u) < lit(0.5) {
        (u.re * lit(2.0) + u.norm_sqr()).ln_1p() * lit(0.5)
    } else {
        modulus(base).ln()
    };
    let arg = u.im.atan2(base.re);
    Ok(cis(exponent * arg) * (exponent * log_modulus).exp())
}

fn integer_power<T: Real>(base: Complex<T>, k: i64) -> Complex<T> {
    let mut result = Complex::new(T::one(), T::zero());
    let mut factor = base;
    let mut n = k.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            result *= factor;
        }
        factor = factor * factor;
        n >>= 1;
    }
    if k < 0 {
        Complex::new(T::one(), T::zero()) / result
    } else {
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn q(v: f64) -> Extensivity<f64> {
        Extensivity::new(v).unwrap()
    }

    #[test]
    fn worked_values() {
        assert_eq!(q_exp(c(0.0, 0.0), q(1.7)).unwrap(), c(1.0, 0.0));
        let e = q_exp(c(1.0, 0.0), q(1.0)).unwrap();
        assert_eq!(e, c(std::f64::consts::E, 0.0));
        assert_eq!(q_exp(c(1.0, 0.0), q(0.5)).unwrap(), c(2.25, 0.0));
        assert_eq!(q_exp(c(0.0, -1.0), q(2.0)).unwrap(), c(0.5, -0.5));
    }

    #[test]
    fn pole_and_branch_cut() {
        // q = 2: base 1 - x vanishes at x = 1 with exponent -1
        assert_eq!(q_exp(c(1.0, 0.0), q(2.0)), Err(Error::Pole { exponent: -1.0 }));
        // q = 3: base 1 - 2x = -1 at x = 1 with exponent -1/2
        assert!(matches!(q_exp(c(1.0, 0.0), q(3.0)), Err(Error::BranchCut { .. })));
        // integer exponent crosses the negative axis without trouble: (1 - 2)^(-1) = -1
        assert_eq!(q_exp(c(2.0, 0.0), q(2.0)).unwrap(), c(-1.0, 0.0));
        // q = 0.5: base 1 + x/2 = 0 at x = -2, positive exponent 2 gives 0
        assert_eq!(q_exp(c(-2.0, 0.0), q(0.5)).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn evolution_parameter_rejects_q_below_one() {
        assert!(Extensivity::evolution(0.99).is_err());
        assert!(Extensivity::evolution(1.0).is_ok());
        assert!(Extensivity::<f64>::new(f64::NAN).is_err());
    }

    #[test]
    fn converges_linearly_to_exp_at_q_one() {
        let points = [c(1.0, 0.0), c(-3.0, 2.0), c(0.5, -4.0), c(5.0, 0.0), c(0.0, -5.0)];
        for x in points {
            let exact = complex_exp(x);
            for sign in [1.0, -1.0] {
                let err = |eps: f64| (q_exp(x, q(1.0 + sign * eps)).unwrap() - exact).norm();
                let (e1, e2) = (err(1e-4), err(5e-5));
                let ratio = e1 / e2;
                assert!((ratio - 2.0).abs() < 0.2, "x = {x}, ratio {ratio}");
                // C = err / eps stays bounded
                assert!(e1 / 1e-4 < 1e4 * exact.norm().max(1.0));
            }
        }
    }

    #[test]
    fn is_not_multiplicative() {
        let qq = q(2.0);
        let lhs = q_exp(c(0.1, 0.0), qq).unwrap() * q_exp(c(0.1, 0.0), qq).unwrap();
        let rhs = q_exp(c(0.2, 0.0), qq).unwrap();
        assert!((lhs - rhs).norm() > 1e-12);
    }

    #[test]
    fn single_precision_agrees() {
        let v = q_exp(Complex::new(0.3f32, -0.7), Extensivity::new(1.3f32).unwrap()).unwrap();
        let w = q_exp(c(0.3, -0.7), q(1.3)).unwrap();
        assert!((v.re as f64 - w.re).abs() < 1e-6 && (v.im as f64 - w.im).abs() < 1e-6);
    }

    proptest! {
        #[test]
        fn conjugate_symmetry(re in -3.0f64..3.0, im in -3.0f64..3.0, qv in 1.0f64..3.0) {
            let a = q_exp(c(re, im), q(qv)).unwrap();
            let b = q_exp(c(re, -im), q(qv));
            // the conjugate argument may sit on the cut only when im == 0
            if let Ok(b) = b {
                prop_assert!((a.conj() - b).norm() <= 1e-12 * a.norm().max(1.0));
            }
        }

        #[test]
        fn matches_polar_formula(re in -0.4f64..2.0, im in -2.0f64..2.0, qv in 1.05f64..2.5) {
            let x = c(re, im);
            let base = c(1.0, 0.0) + x * (1.0 - qv);
            let expected = base.powf(1.0 / (1.0 - qv));
            let got = q_exp(x, q(qv)).unwrap();
            prop_assert!((got - expected).norm() <= 1e-10 * expected.norm().max(1.0));
        }
    }
}
