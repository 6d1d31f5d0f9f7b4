//! Nonextensive generalization of the von Neumann equation.
//!
//! Density operators evolve under one of four element-wise propagators in
//! the Hamiltonian eigenbasis: unitary, the q-exponential propagator, its
//! short-time approximation, and Milburn-type intrinsic decoherence. The
//! [`ion`] module applies them to blue-sideband Rabi oscillations of a
//! trapped ion.
//!
//! All numerics are generic over [`Real`] (`f32` or `f64`). Hamiltonians
//! are stored as angular frequencies with ħ = 1 and times are in seconds.

pub mod error;
pub mod fit;
pub mod ion;
pub mod liouville;
pub mod quantum;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use scalar::Real;

pub type ComplexMatrix64 = quantum::ComplexMatrix<f64>;
pub type DensityMatrix64 = quantum::DensityMatrix<f64>;
pub type DensityMatrix32 = quantum::DensityMatrix<f32>;
pub type HermitianOperator64 = quantum::HermitianOperator<f64>;
pub type HermitianOperator32 = quantum::HermitianOperator<f32>;
pub type Extensivity64 = quantum::Extensivity<f64>;
pub type NumberDistribution64 = quantum::NumberDistribution<f64>;
pub type EnergyDecomposition64 = liouville::EnergyDecomposition<f64>;
pub type PropagatorKind64 = liouville::PropagatorKind<f64>;
pub type EvolutionResult64 = liouville::EvolutionResult<f64>;
pub type IonConfig64 = ion::IonConfig<f64>;
pub type EmpiricalDecay64 = ion::EmpiricalDecay<f64>;
pub type InitialVibrationalState64 = ion::InitialVibrationalState<f64>;
pub type TimeSeries64 = series::TimeSeries<f64>;
