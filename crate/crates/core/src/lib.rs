//! Exact enumeration of rhombus tilings, plane partitions and fully packed
//! loop configurations through determinants of lattice-path transfer matrices.
//!
//! Every count is computed with arbitrary-precision integers or integer
//! Laurent polynomials in three variables: `mu` (winding loops), `u`
//! (diagram size) and `s`, a sixth root of `q`, so that the fractional
//! `q`-powers carried by the decorated transfer matrices stay integral.
//!
//! The [`oracles`] module holds brute-force ground truth (path families,
//! plane partitions, hook products) that shares no code path with the
//! determinant engine.

pub mod asymptotics;
pub mod error;
pub mod exact;
pub mod fpl;
pub mod oracles;
pub mod partition;
pub mod qcounts;
pub mod tiling;
pub mod transfer;

pub use error::{Error, Result};
pub use exact::{binomial, q_binomial, IntMatrix, LaurentPoly, Matrix, Monomial, PolyMatrix, Ring};
pub use num_bigint::BigInt;
pub use partition::{FrobeniusCoords, Partition};
