//! Exact computer algebra for two-parameter quantum groups of classical type.
//!
//! The crate builds the objects attached to a bicharacter twist of a quantum
//! group and checks the identities relating them: root systems and Lyndon
//! words, root vectors and PBW monomials in a free algebra, the Hopf pairing,
//! the skew bicharacter `ζ`, finite and affine R-matrices, and the first
//! fundamental representations. All arithmetic is exact.

// Index loops mirror the matrix formulas they implement.
#![allow(clippy::needless_range_loop)]

pub mod affine;
pub mod bicharacter;
pub mod error;
pub mod freealgebra;
pub mod hopfpairing;
pub mod linalg;
pub mod lyndon;
pub mod report;
pub mod reps;
pub mod rmatrix;
pub mod rootsystem;
pub mod scalars;
pub mod sparse;

pub use error::{Error, Result};
