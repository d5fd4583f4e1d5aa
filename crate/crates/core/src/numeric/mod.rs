//! Scalars, tolerances, the Hermitian eigensolver and the deterministic RNG.

mod eig;
mod rng;
mod scalar;
mod tolerance;

pub use eig::{herm_eig, HermEig, MAX_SWEEPS};
pub use rng::RngStream;
pub use scalar::{approx_eq, cabs, complex_leq, is_finite, CScalar};
pub use tolerance::Tolerance;
