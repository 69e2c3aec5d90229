//! Brute-force ground truth, independent of the determinant engine.
//!
//! Every enumerator takes an explicit step budget and fails with
//! [`Error::Budget`](crate::Error::Budget) instead of truncating.

pub mod linalg;
pub mod paths;
pub mod plane;
pub mod schur;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use linalg::{cofactor_det, principal_minor_sums};
pub use paths::{
    count_nonintersecting_families, lgv_matrix, parse_points, signed_family_sum, wall_path_count, Constraint,
    PathProblem, Point,
};
pub use plane::{enumerate_cspp, enumerate_cspp_poly, enumerate_plane_partitions, PlanePartition};
pub use schur::{
    hook_content_dimension, principal_specialization, selfconjugate_dimensions_by_rank, selfconjugate_schur_sum,
    SchurWeight,
};

/// Default enumeration budget.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Number of `n x n` alternating sign matrices, `prod_{k<n} (3k+1)! / (n+k)!`.
pub fn asm_number(n: usize) -> BigInt {
    let n = n as u64;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..n {
        num *= factorial(3 * k + 1);
        den *= factorial(n + k);
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn asm_numbers() {
        let want = [1u64, 1, 2, 7, 42, 429, 7436, 218348, 10850216];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(asm_number(n), BigInt::from(*w), "n={n}");
        }
    }
}
