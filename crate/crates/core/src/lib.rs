//! Finite-dimensional complex Hilbert spaces.
//!
//! Vectors live in `ℓ₂({0..n-1})` ([`HVec`]), bounded operators are
//! dimension-checked complex matrices ([`HOp`]) and closed subspaces are kept
//! as canonical orthonormal spanning lists ([`Subspace`]). The
//! [`lemma_suite`] module holds a registry of randomized numerical checks of
//! the algebraic laws these objects satisfy.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod error;
pub mod hop;
pub mod hsub;
pub mod hvec;
pub mod lemma_suite;
pub mod numeric;

pub use error::{Error, Result};
pub use hop::{HOp, PartialMap};
pub use hsub::Subspace;
pub use hvec::HVec;
pub use numeric::{approx_eq, complex_leq, herm_eig, CScalar, HermEig, RngStream, Tolerance};
