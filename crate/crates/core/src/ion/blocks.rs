//! Two-level blue-sideband blocks evolved with the liouville propagators.

use num_complex::Complex;

use super::rabi::rabi_frequencies;
use super::{InitialVibrationalState, IonConfig};
use crate::error::Result;
use crate::liouville::{diagonalize, PropagatorKind};
use crate::quantum::{ComplexMatrix, DensityMatrix, HermitianOperator};
use crate::scalar::{lit, modulus, Real};
use crate::series::TimeSeries;

/// Ground-state probability channel.
pub const CHANNEL_PG: &str = "pg";
/// Population-weighted modulus of the dressed-state coherence, normalised
/// to one at `t = 0`.
pub const CHANNEL_ENVELOPE: &str = "envelope";

/// `H_n = Ω_n σ_x` on `span{|g,n>, |e,n+1>}` (rad/s, ħ = 1).
pub fn blue_sideband_block<T: Real>(n: usize, cfg: &IonConfig<T>) -> Result<HermitianOperator<T>> {
    cfg.validate()?;
    let w = rabi_frequencies(cfg, n + 1)?[n];
    block(w)
}

fn block<T: Real>(w: T) -> Result<HermitianOperator<T>> {
    let z = Complex::new(T::zero(), T::zero());
    let c = Complex::new(w, T::zero());
    HermitianOperator::new(ComplexMatrix::from_row_slice(2, 2, &[z, c, c, z]))
}

/// Ground-state probability obtained by evolving `|g,n><g,n|` under each
/// block `H_n` with `kind` and summing with weights `P_n`.
///
/// Returns channels [`CHANNEL_PG`] and [`CHANNEL_ENVELOPE`].
pub fn pg_from_propagator<T: Real>(
    state: InitialVibrationalState<T>,
    cfg: &IonConfig<T>,
    kind: PropagatorKind<T>,
    times: &[T],
) -> Result<TimeSeries<T>> {
    cfg.validate()?;
    kind.validate()?;
    let mut series = TimeSeries::new(times.to_vec())?;
    let dist = state.distribution(cfg.dim)?;
    let freqs = rabi_frequencies(cfg, dist.dim())?;
    let ground = DensityMatrix::basis_state(0, 2)?;

    let mut pg = vec![T::zero(); times.len()];
    let mut envelope = vec![T::zero(); times.len()];
    let two: T = lit(2.0);
    for (n, p) in dist.support() {
        let frame = diagonalize(&block(freqs[n])?);
        for (k, &t) in times.iter().enumerate() {
            let rho = frame.evolve(&ground, kind, t)?;
            pg[k] += p * rho.matrix()[(0, 0)].re;
            let dressed = frame.to_energy_basis(rho.matrix());
            envelope[k] += p * two * modulus(dressed[(0, 1)]);
        }
    }
    let half: T = lit(0.5);
    // the closed forms add ½ for the whole ladder, including truncated mass
    let missing = T::one() - dist.total();
    for v in pg.iter_mut() {
        *v += missing * half;
    }
    series.push_channel(CHANNEL_PG, pg)?;
    series.push_channel(CHANNEL_ENVELOPE, envelope)?;
    series.metadata.set("propagator", kind.name());
    Ok(series)
}
