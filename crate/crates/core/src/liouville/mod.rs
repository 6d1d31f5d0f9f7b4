//! Density-operator propagators: unitary, q-exponential, short-time
//! q-approximation and Milburn intrinsic decoherence.

pub mod decomposition;
pub mod envelope;
pub mod oracle;
pub mod propagator;

pub use decomposition::{diagonalize, diagonalize_matrix, EnergyDecomposition};
pub use envelope::{coherence_envelope, coherence_phase, validity_horizon};
pub use oracle::{integrate_generalized_vn, integrate_in_frame, rk4_integrate, rk4_step};
pub use propagator::{
    evolve_milburn, evolve_qexp, evolve_qshort, evolve_unitary, EvolutionResult, PropagatorKind, VALIDITY_THRESHOLD,
};
