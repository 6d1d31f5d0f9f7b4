//! Foundational numerics: operators, the q-exponential, excitation
//! distributions, Laguerre polynomials and entropies.

pub mod density;
pub mod distribution;
pub mod entropy;
pub mod laguerre;
pub mod matrix;
pub mod qexp;

pub use density::{DensityMatrix, HermitianOperator};
pub use distribution::{coherent_distribution, coherent_required_dim, fock_distribution, NumberDistribution};
pub use entropy::{tsallis_entropy, von_neumann_entropy};
pub use laguerre::{laguerre_assoc, laguerre_sequence};
pub use matrix::ComplexMatrix;
pub use qexp::{complex_exp, q_exp, Extensivity};
