//! Fully packed loop configurations counted by link pattern.
//!
//! `(a, b | e | c, d)` denotes bundles of `a`, `b`, `c`, `d` nested arches
//! with a bundle of `e` arches separating `{a, b}` from `{c, d}`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{binomial, det, det_one_plus_mu, IntMatrix, LaurentPoly, Matrix, PolyMatrix};
use crate::tiling::macmahon_product;
use crate::transfer;

/// A link pattern family with a determinant formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    Nested3 { a: usize, b: usize, c: usize },
    Nested4 { a: usize, b: usize, c: usize, d: usize },
    Nested5 { a: usize, b: usize, e: usize, c: usize, d: usize },
    /// Half-turn symmetric, `(a, b | e | b, a)`.
    HalfTurn { a: usize, b: usize, e: usize },
    /// Vertically symmetric, `e` odd.
    Vertical { a: usize, b: usize, e: usize },
    /// Symmetric under both reflections, `(a, 1, a | e | a, 1, a)`, `e` odd.
    HorizontalVertical { a: usize, e: usize },
}

impl Pattern {
    pub fn count(&self) -> Result<BigInt> {
        match *self {
            Pattern::Nested3 { a, b, c } => Ok(fpl_nested3(a, b, c)),
            Pattern::Nested4 { a, b, c, d } => fpl_nested4(a, b, c, d),
            Pattern::Nested5 { a, b, e, c, d } => fpl_nested5(a, b, e, c, d),
            Pattern::HalfTurn { a, b, e } => fpl_halfturn(a, b, e),
            Pattern::Vertical { a, b, e } => fpl_vertical(a, b, e),
            Pattern::HorizontalVertical { a, e } => fpl_hv(a, e),
        }
    }
}

/// Three nested bundles: the MacMahon box count.
pub fn fpl_nested3(a: usize, b: usize, c: usize) -> BigInt {
    macmahon_product(a, b, c)
}

fn mu_coefficient(p: &LaurentPoly, d: usize) -> Result<BigInt> {
    let c = p.mu_coeff(d as u32);
    c.as_constant()
        .or_else(|| c.is_zero().then(BigInt::default))
        .ok_or_else(|| Error::Consistency(format!("mu^{d} coefficient {c} is not an integer")))
}

/// `det(I + M)` where `M` already carries `mu`.
fn det_one_plus(m: &PolyMatrix) -> Result<LaurentPoly> {
    det(&m.plus_identity()?)
}

/// `(a, b, c, d)`: the `mu^d` coefficient of
/// `det(I + T(b+c, a+d) T(a+d, c+d) U(c+d, b+c))`.
///
/// The block shapes need `b >= d`; otherwise the pattern is rotated to `(c, d, a, b)`.
pub fn fpl_nested4(a: usize, b: usize, c: usize, d: usize) -> Result<BigInt> {
    if b < d {
        return fpl_nested4(c, d, a, b);
    }
    let left = IntMatrix::product(&[&transfer::t(b + c, a + d), &transfer::t(a + d, c + d)])?.to_poly();
    let m = left.mul(&transfer::u_block(c + d, b + c)?)?;
    mu_coefficient(&det_one_plus(&m)?, d)
}

/// `(a, b | e | c, d)`: the `mu^d` coefficient of
/// `det(I + T(b+c, a+d) T(a+d, c+d+e) U^(e)(c+d+e, b+c))`.
///
/// As for four bundles, `b < d` is handled by the rotation to `(c, d | e | a, b)`.
pub fn fpl_nested5(a: usize, b: usize, e: usize, c: usize, d: usize) -> Result<BigInt> {
    if b < d {
        return fpl_nested5(c, d, e, a, b);
    }
    let left = IntMatrix::product(&[&transfer::t(b + c, a + d), &transfer::t(a + d, c + d + e)])?.to_poly();
    let m = left.mul(&transfer::u_e_block(c + d + e, b + c, e)?)?;
    mu_coefficient(&det_one_plus(&m)?, d)
}

/// Half-turn symmetric configurations: the `mu^b` coefficient of
/// `det(I + mu T_e(a+b))`.
pub fn fpl_halfturn(a: usize, b: usize, e: usize) -> Result<BigInt> {
    let n = a + b;
    mu_coefficient(&det_one_plus_mu(&transfer::t_hole(e, n, n))?, b)
}

fn require_odd(e: usize) -> Result<()> {
    if e.is_multiple_of(2) {
        return Err(Error::Parameter(format!("separator size e={e} must be odd")));
    }
    Ok(())
}

/// Vertically symmetric configurations, by reflection against a wall:
/// `det [C(2b+e+j-1, b-j+i) - C(2b+e+j-1, b-j-i+1)]_{i,j <= a}`.
pub fn fpl_vertical(a: usize, b: usize, e: usize) -> Result<BigInt> {
    require_odd(e)?;
    let (b, e) = (b as i64, e as i64);
    let m = Matrix::from_fn(a, a, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        let n = 2 * b + e + j - 1;
        binomial(n, b - j + i) - binomial(n, b - j - i + 1)
    });
    det(&m)
}

/// Configurations symmetric under both reflections:
/// `det [C(2a+h-j+1, a-2j+i+1) - C(2a+h-j+1, a-2j-i+2)]_{i,j <= a}` with `h = (e-1)/2`.
pub fn fpl_hv(a: usize, e: usize) -> Result<BigInt> {
    require_odd(e)?;
    let h = (e as i64 - 1) / 2;
    let n_a = a as i64;
    let m = Matrix::from_fn(a, a, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        let n = 2 * n_a + h - j + 1;
        binomial(n, n_a - 2 * j + i + 1) - binomial(n, n_a - 2 * j - i + 2)
    });
    det(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::{glued_lozenge_poly, glued_lozenge_total};

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn three_and_four_bundles() {
        assert_eq!(fpl_nested3(1, 1, 1), int(2));
        assert_eq!(fpl_nested3(4, 4, 4), int(232848));
        assert_eq!(fpl_nested4(1, 1, 1, 1).unwrap(), int(7));
        assert_eq!(fpl_nested4(2, 2, 2, 2).unwrap(), int(3504));
    }

    #[test]
    fn five_bundles_against_enumerated_values() {
        // Values from exhaustive enumeration of FPL link patterns on grids up to 6 x 6.
        let cases = [
            ((1, 1, 1, 1, 1), 14),
            ((2, 1, 1, 1, 1), 41),
            ((1, 2, 1, 1, 1), 41),
            ((1, 1, 2, 1, 1), 23),
            ((1, 1, 1, 2, 1), 41),
            ((1, 1, 1, 1, 2), 41),
            ((2, 1, 0, 1, 2), 60),
            ((0, 1, 2, 2, 1), 10),
        ];
        for ((a, b, e, c, d), want) in cases {
            assert_eq!(fpl_nested5(a, b, e, c, d).unwrap(), int(want), "{:?}", (a, b, e, c, d));
        }
    }

    #[test]
    fn empty_separator_reduces_to_four_bundles() {
        assert_eq!(fpl_nested5(2, 1, 0, 1, 2).unwrap(), fpl_nested4(2, 1, 1, 2).unwrap());
        for a in 0..=2 {
            for b in 0..=2 {
                for c in 0..=2 {
                    for d in 0..=2 {
                        assert_eq!(fpl_nested5(a, b, 0, c, d).unwrap(), fpl_nested4(a, b, c, d).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn half_turn() {
        assert_eq!(fpl_halfturn(1, 1, 0).unwrap(), int(3));
        let total: BigInt = (0..=3).map(|b| fpl_halfturn(3 - b, b, 0).unwrap()).sum();
        assert_eq!(total, glued_lozenge_total(3));
        assert_eq!(total, int(20));
        for n in 0..=5usize {
            let p = glued_lozenge_poly(n).unwrap();
            for b in 0..=n {
                assert_eq!(fpl_halfturn(n - b, b, 0).unwrap(), mu_coefficient(&p, b).unwrap());
            }
        }
        for a in 0..=4 {
            for e in 0..=3 {
                let top = fpl_halfturn(0, a, e).unwrap();
                assert_eq!(top, det(&transfer::t_hole(e, a, a)).unwrap());
            }
        }
    }

    #[test]
    fn symmetric_classes() {
        assert_eq!(fpl_vertical(0, 3, 1).unwrap(), int(1));
        assert_eq!(fpl_vertical(1, 1, 1).unwrap(), int(2));
        assert!(matches!(fpl_vertical(1, 1, 2), Err(Error::Parameter(_))));
        assert_eq!(fpl_hv(0, 5).unwrap(), int(1));
        assert!(matches!(fpl_hv(1, 0), Err(Error::Parameter(_))));
        for a in 0..=3 {
            for b in 0..=3 {
                for e in [1, 3, 5] {
                    assert!(fpl_vertical(a, b, e).unwrap() >= int(0));
                }
            }
            assert!(fpl_hv(a, 3).unwrap() >= int(0));
        }
    }

    #[test]
    fn pattern_dispatch() {
        assert_eq!(Pattern::Nested3 { a: 2, b: 2, c: 2 }.count().unwrap(), int(20));
        assert_eq!(Pattern::Nested4 { a: 1, b: 1, c: 1, d: 1 }.count().unwrap(), int(7));
        assert!(Pattern::Vertical { a: 1, b: 1, e: 4 }.count().is_err());
    }
}
