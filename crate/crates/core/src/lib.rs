//! Exact computations around plane-curve invariants and the discriminant and
//! branch curves of (1,3)-polarized abelian surfaces.
//!
//! Everything is exact: rationals are arbitrary precision and the only
//! algebraic number in play is a primitive cube root of unity `rho`.

pub mod chow;
pub mod cli;
pub mod corpus;
pub mod curve;
pub mod error;
pub mod heisenberg;
pub mod pluecker;
pub mod polynomials;
pub mod scalars;

pub use error::{Error, Result};
