//! Exact arithmetic: zero-extended binomials, Laurent polynomials, dense
//! matrices and fraction-free determinants.

mod binom;
mod det;
mod matrix;
mod poly;
mod ring;

pub use binom::{binomial, multichoose, q_binomial};
pub use det::{char_poly, det, det_one_plus_mu, MuLift};
pub use matrix::{IntMatrix, Matrix, PolyMatrix};
pub use poly::{LaurentPoly, Monomial};
pub use ring::Ring;
