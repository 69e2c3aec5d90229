//! q-weighted generating functions: one power of `q` per unit cube.
//!
//! The decorated matrices carry fractional powers of `q`; each result is
//! checked to be an honest polynomial in `q` before it is returned.

use crate::error::{Error, Result};
use crate::exact::{det, det_one_plus_mu, LaurentPoly, Monomial, PolyMatrix};
use crate::transfer::{q_t, q_w, rescale_q, theta};

/// Fails unless every power of `q` is a non-negative integer.
pub fn assert_q_polynomial(p: &LaurentPoly, what: &str) -> Result<()> {
    if let Some((m, _)) = p.terms().find(|(m, _)| m.s < 0 || m.s % 6 != 0) {
        return Err(Error::Consistency(format!(
            "{what}: term q^({}/6) leaves the polynomial ring",
            m.s
        )));
    }
    Ok(())
}

fn checked(p: LaurentPoly, what: &str) -> Result<LaurentPoly> {
    assert_q_polynomial(&p, what)?;
    Ok(p)
}

fn wwtw(a: usize) -> PolyMatrix {
    let w = q_w(a, a);
    PolyMatrix::product(&[&w, &w.transpose(), &w]).expect("square factors")
}

/// `det(I + mu t(a,b) t(b,c) t(c,a))`: plane partitions in the box by volume
/// (`q`) and winding loops (`mu`).
pub fn q_mu_hexagon(a: usize, b: usize, c: usize) -> Result<LaurentPoly> {
    let m = PolyMatrix::product(&[&q_t(a, b), &q_t(b, c), &q_t(c, a)])?;
    checked(det_one_plus_mu(&m)?, "q_mu_hexagon")
}

/// `q_mu_hexagon` at `mu = 1`.
pub fn q_macmahon(a: usize, b: usize, c: usize) -> Result<LaurentPoly> {
    checked(q_mu_hexagon(a, b, c)?.subs_mu_one(), "q_macmahon")
}

fn one_minus_q(k: usize) -> LaurentPoly {
    &LaurentPoly::one() - &LaurentPoly::q_pow(k as i32)
}

/// `prod_{i,j,k} (1 - q^{i+j+k-1}) / (1 - q^{i+j+k-2})`.
pub fn q_macmahon_product(a: usize, b: usize, c: usize) -> Result<LaurentPoly> {
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                num = &num * &one_minus_q(i + j + k - 1);
                den = &den * &one_minus_q(i + j + k - 2);
            }
        }
    }
    checked(num.div_exact(&den)?, "q_macmahon_product")
}

/// Cyclically symmetric plane partitions: `det(I + mu t(a))` with `q -> q^3`.
pub fn q_cspp(a: usize) -> Result<LaurentPoly> {
    checked(det_one_plus_mu(&rescale_q(&q_t(a, a), 3))?, "q_cspp")
}

/// Glued half-hexagon: `det(I + mu w w^t w)` with `q -> q^2`.
pub fn q_half_hexagon(a: usize) -> Result<LaurentPoly> {
    checked(det_one_plus_mu(&rescale_q(&wwtw(a), 2))?, "q_half_hexagon")
}

/// `det(I + q^{-1/2} theta w w^t w)`, a polynomial in `q` and `u`.
pub fn q_poincare(a: usize) -> Result<LaurentPoly> {
    let m = theta(a).mul(&wwtw(a))?.scale(&LaurentPoly::s_pow(-3));
    checked(det(&m.plus_identity()?)?, "q_poincare")
}

/// `q^k mu^d u^e` shorthand for tests and callers assembling expected values.
pub fn monomial(mu: u32, u: u32, q: i32) -> LaurentPoly {
    LaurentPoly::monomial(Monomial::new(mu, u, 6 * q), 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::{glued_lozenge_poly, half_hexagon_poly, hexagon_winding_poly, poincare_polynomial};

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn macmahon() {
        assert_eq!(q_macmahon(1, 1, 1).unwrap(), poly("1 + q"));
        assert_eq!(q_mu_hexagon(1, 1, 1).unwrap(), poly("1 + mu*q"));
        assert_eq!(q_macmahon(2, 2, 2).unwrap().eval_all_one(), 20.into());
        for (a, b, c) in [(1, 2, 3), (2, 2, 2), (3, 1, 2), (0, 2, 2)] {
            assert_eq!(q_macmahon(a, b, c).unwrap(), q_macmahon_product(a, b, c).unwrap());
        }
    }

    #[test]
    fn collapse_at_q_one() {
        for a in 0..=3 {
            for b in 0..=3 {
                assert_eq!(
                    q_mu_hexagon(a, b, 2).unwrap().subs_q_one(),
                    hexagon_winding_poly(a, b, 2).unwrap()
                );
            }
            assert_eq!(q_cspp(a).unwrap().subs_q_one(), glued_lozenge_poly(a).unwrap());
            assert_eq!(q_half_hexagon(a).unwrap().subs_q_one(), half_hexagon_poly(a).unwrap());
            assert_eq!(q_poincare(a).unwrap().subs_q_one(), poincare_polynomial(a).unwrap());
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(q_cspp(1).unwrap(), poly("1 + mu*q"));
        assert_eq!(q_cspp(2).unwrap().subs_q_one(), poly("1 + 3*mu + mu^2"));
        assert_eq!(q_half_hexagon(1).unwrap(), poly("1 + mu*q"));
        assert_eq!(
            q_half_hexagon(2).unwrap(),
            poly("1 + mu*q + mu*q^3 + mu*q^5 + mu*q^7 + mu^2*q^8")
        );
        assert_eq!(q_half_hexagon(3).unwrap().eval_all_one(), 36.into());
        assert_eq!(q_poincare(1).unwrap(), poly("1 + u"));
    }

    #[test]
    fn purity_check_rejects_fractional_powers() {
        assert!(assert_q_polynomial(&poly("1 + q^(1/2)"), "x").is_err());
        assert!(assert_q_polynomial(&poly("q^-1"), "x").is_err());
        assert!(assert_q_polynomial(&poly("mu*u*q^3"), "x").is_ok());
        assert_eq!(monomial(1, 0, 2), poly("mu*q^2"));
    }
}
