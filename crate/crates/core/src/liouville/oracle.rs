//! Direct integration of the generalized von Neumann equation
//! `dρ/dt = L / (1 + (1-q) L t) ρ`, independent of the closed-form
//! q-exponential propagator.

use num_complex::Complex;

use super::decomposition::{diagonalize, EnergyDecomposition};
use super::propagator::{check_times, EvolutionResult, PropagatorKind};
use crate::error::{Error, Result};
use crate::quantum::matrix::hermitian_part;
use crate::quantum::{DensityMatrix, Extensivity, HermitianOperator};
use crate::scalar::{from_usize, lit, to_f64, Real};

/// One classical fourth-order Runge-Kutta step for `y' = f(t, y)`.
pub fn rk4_step<T, Y, F>(f: &F, t: T, y: &Y, h: T) -> Y
where
    T: Real,
    Y: Clone + std::ops::Add<Output = Y> + std::ops::Mul<T, Output = Y>,
    F: Fn(T, &Y) -> Y,
{
    let half = h * lit(0.5);
    let k1 = f(t, y);
    let k2 = f(t + half, &(y.clone() + k1.clone() * half));
    let k3 = f(t + half, &(y.clone() + k2.clone() * half));
    let k4 = f(t + h, &(y.clone() + k3.clone() * h));
    let two: T = lit(2.0);
    y.clone() + (k1 + k2 * two + k3 * two + k4) * (h / lit(6.0))
}

/// Integrates `y' = f(t, y)` from `t0` to `t1` in equal steps no longer
/// than `dt_max`.
pub fn rk4_integrate<T, Y, F>(f: &F, t0: T, t1: T, y0: Y, dt_max: T) -> Y
where
    T: Real,
    Y: Clone + std::ops::Add<Output = Y> + std::ops::Mul<T, Output = Y>,
    F: Fn(T, &Y) -> Y,
{
    let span = t1 - t0;
    if span <= T::zero() {
        return y0;
    }
    let steps = (span / dt_max).ceil().to_usize().unwrap_or(1).max(1);
    let h = span / from_usize::<T>(steps);
    let mut y = y0;
    for k in 0..steps {
        y = rk4_step(f, t0 + h * from_usize::<T>(k), &y, h);
    }
    y
}

/// RK4 integration of the generalized von Neumann equation on `times`.
///
/// Each energy-basis coherence obeys the scalar ODE
/// `dρ̃_mn/dt = -iω_mn / (1 + i(q-1)ω_mn t) ρ̃_mn`, integrated from
/// `t = 0` with steps of at most `dt_max`.
pub fn integrate_generalized_vn<T: Real>(
    rho0: &DensityMatrix<T>,
    h: &HermitianOperator<T>,
    q: Extensivity<T>,
    times: &[T],
    dt_max: T,
) -> Result<EvolutionResult<T>> {
    integrate_in_frame(&diagonalize(h), rho0, q, times, dt_max)
}

/// As [`integrate_generalized_vn`] with a precomputed decomposition.
pub fn integrate_in_frame<T: Real>(
    frame: &EnergyDecomposition<T>,
    rho0: &DensityMatrix<T>,
    q: Extensivity<T>,
    times: &[T],
    dt_max: T,
) -> Result<EvolutionResult<T>> {
    if !(dt_max > T::zero()) || !dt_max.is_finite() {
        return Err(Error::StepSize(to_f64(dt_max)));
    }
    q.check_evolution()?;
    frame.check_dim(rho0.dim())?;
    check_times(times)?;

    let dim = frame.dim();
    let initial = frame.to_energy_basis(rho0.matrix());
    let mut snapshots = vec![initial.clone(); times.len()];
    let excess = q.excess();

    for m in 0..dim {
        for n in (m + 1)..dim {
            let omega = frame.transition_frequency(m, n);
            let rate = move |t: T, y: &Complex<T>| {
                let generator = Complex::new(T::zero(), -omega);
                let denom = Complex::new(T::one(), excess * omega * t);
                generator / denom * *y
            };
            let mut y = initial[(m, n)];
            let mut t_now = T::zero();
            for (k, &t) in times.iter().enumerate() {
                y = rk4_integrate(&rate, t_now, t, y, dt_max);
                t_now = t;
                snapshots[k][(m, n)] = y;
                snapshots[k][(n, m)] = y.conj();
            }
        }
    }

    let states = snapshots
        .iter()
        .map(|s| DensityMatrix::from_matrix_unchecked(hermitian_part(&frame.from_energy_basis(s))))
        .collect();
    let kind = PropagatorKind::QExponential(q);
    Ok(EvolutionResult {
        times: times.to_vec(),
        states,
        kind,
        valid: frame.validity_flags(kind.extensivity_excess(), times),
    })
}
