use num_bigint::BigInt;

use super::matrix::{Matrix, PolyMatrix};
use super::poly::LaurentPoly;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Exact determinant.
///
/// Sizes up to 3 are expanded directly; larger matrices go through Bareiss
/// fraction-free elimination, whose divisions are exact in any integral
/// domain. The 0x0 determinant is 1.
pub fn det<R: Ring>(m: &Matrix<R>) -> Result<R> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let g = |i, j| m.get(i, j);
    Ok(match m.rows() {
        0 => R::one(),
        1 => g(0, 0).clone(),
        2 => g(0, 0).mul(g(1, 1)).sub(&g(0, 1).mul(g(1, 0))),
        3 => {
            let minor = |a: usize, b: usize, c: usize, d: usize| {
                g(1, a).mul(g(2, b)).sub(&g(1, c).mul(g(2, d)))
            };
            g(0, 0)
                .mul(&minor(1, 2, 2, 1))
                .sub(&g(0, 1).mul(&minor(0, 2, 2, 0)))
                .add(&g(0, 2).mul(&minor(0, 1, 1, 0)))
        }
        _ => bareiss(m.clone())?,
    })
}

fn bareiss<R: Ring>(mut a: Matrix<R>) -> Result<R> {
    let n = a.rows();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(R::zero()),
            }
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            let lead = a.get(i, k).clone();
            for j in k + 1..n {
                let v = a.get(i, j).mul(&pivot).sub(&lead.mul(a.get(k, j)));
                a.set(i, j, v.div_exact(&prev)?);
            }
            a.set(i, k, R::zero());
        }
        prev = pivot;
    }
    let d = a.get(n - 1, n - 1).clone();
    Ok(if negate { d.neg() } else { d })
}

/// Coefficient domains that embed into [`LaurentPoly`].
pub trait MuLift: Ring {
    fn lift(&self) -> LaurentPoly;
}

impl MuLift for BigInt {
    fn lift(&self) -> LaurentPoly {
        LaurentPoly::constant(self.clone())
    }
}

impl MuLift for LaurentPoly {
    fn lift(&self) -> LaurentPoly {
        self.clone()
    }
}

/// `det(I + mu*M)`. The coefficient of `mu^d` is the sum of all `d x d`
/// principal minors of `M`.
pub fn det_one_plus_mu<R: MuLift>(m: &Matrix<R>) -> Result<LaurentPoly> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "det(I + mu*M) of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let lifted: PolyMatrix = m.map(|e| e.lift());
    if lifted.entries().iter().any(LaurentPoly::contains_mu) {
        return Err(Error::DomainClash);
    }
    det(&lifted.scale(&LaurentPoly::mu()).plus_identity()?)
}

/// Characteristic polynomial `det(x I - M)`, coefficients in increasing
/// powers of `x`, by the division-free Samuelson-Berkowitz recursion.
///
/// This shares nothing with [`det`] and serves as an independent route.
pub fn char_poly<R: Ring>(m: &Matrix<R>) -> Result<Vec<R>> {
    if !m.is_square() {
        return Err(Error::Dimension("characteristic polynomial of a non-square matrix".into()));
    }
    let n = m.rows();
    // Highest degree first while iterating.
    let mut p: Vec<R> = vec![R::one()];
    for k in 1..=n {
        let a = m.get(k - 1, k - 1).clone();
        // Column above the new diagonal entry, then repeatedly multiplied by
        // the leading (k-1)x(k-1) block.
        let mut col: Vec<R> = (0..k - 1).map(|i| m.get(i, k - 1).clone()).collect();
        let mut toeplitz = vec![R::one(), a.neg()];
        for _ in 0..k - 1 {
            let rc = (0..k - 1).fold(R::zero(), |acc, j| acc.add(&m.get(k - 1, j).mul(&col[j])));
            toeplitz.push(rc.neg());
            col = (0..k - 1)
                .map(|i| (0..k - 1).fold(R::zero(), |acc, j| acc.add(&m.get(i, j).mul(&col[j]))))
                .collect();
        }
        let next: Vec<R> = (0..=k)
            .map(|i| {
                (0..k).filter(|&j| j <= i).fold(R::zero(), |acc, j| {
                    acc.add(&toeplitz[i - j].mul(&p[j]))
                })
            })
            .collect();
        p = next;
    }
    p.reverse();
    Ok(p)
}
