//! Hook-content products for `GL(a)` characters of Young diagrams.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, Monomial};
use crate::partition::Partition;

fn hooks_and_contents(y: &Partition) -> Vec<(usize, i64)> {
    let conj = y.conjugate();
    y.boxes()
        .map(|(i, j)| {
            let hook = y.part(i) - j + conj.part(j) - i + 1;
            (hook, j as i64 - i as i64)
        })
        .collect()
}

/// `prod_{boxes} (a + content) / hook`, the dimension of the `GL(a)` module of shape `y`.
/// Zero when `y` has more than `a` rows.
pub fn hook_content_dimension(y: &Partition, a: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (hook, content) in hooks_and_contents(y) {
        num *= a as i64 + content;
        den *= hook;
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "hook-content quotient not integral");
    q
}

/// Dense polynomial times `(1 - q^k)`.
fn mul_one_minus(p: &mut Vec<BigInt>, k: usize) {
    p.resize(p.len() + k, BigInt::zero());
    for i in (k..p.len()).rev() {
        let v = p[i - k].clone();
        p[i] -= v;
    }
}

/// Dense polynomial divided by `(1 - q^k)`; fails unless the division is exact.
fn div_one_minus(p: &mut Vec<BigInt>, k: usize) -> Result<()> {
    let n = p.len();
    if n < k {
        return if p.iter().all(Zero::is_zero) { Ok(()) } else { Err(Error::InexactDivision) };
    }
    // Quotient c satisfies c_i = p_i + c_{i-k}; the last k power-series
    // coefficients must vanish.
    for i in k..n {
        let v = p[i - k].clone();
        p[i] += v;
    }
    if p[n - k..].iter().any(|v| !v.is_zero()) {
        return Err(Error::InexactDivision);
    }
    p.truncate(n - k);
    Ok(())
}

/// `s_y(1, q, ..., q^(a-1)) = q^{n(y)} prod (1 - q^{a+c}) / (1 - q^h)`.
pub fn principal_specialization(y: &Partition, a: usize) -> LaurentPoly {
    if y.len() > a {
        return LaurentPoly::zero();
    }
    let mut p = vec![BigInt::one()];
    let hc = hooks_and_contents(y);
    for &(_, content) in &hc {
        mul_one_minus(&mut p, (a as i64 + content) as usize);
    }
    for &(hook, _) in &hc {
        div_one_minus(&mut p, hook).expect("q-hook-content quotient not polynomial");
    }
    let n_y: usize = y.parts().iter().enumerate().map(|(i, r)| i * r).sum();
    LaurentPoly::from_q_coeffs(&p).mul_monomial(Monomial::q(n_y as i32))
}

/// Weighting of the self-conjugate sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurWeight {
    /// `dim_Y u^{|Y|}`.
    Unit,
    /// `s_Y(1, q, ..., q^{a-1}) u^{|Y|}`.
    Principal,
    /// `q^{(|Y| - rank Y)/2} s_Y(1, q, ..., q^{a-1}) u^{|Y|}`.
    PrincipalTwisted,
}

/// Sum over self-conjugate `Y` in the `a x a` square. The square holds `2^a`
/// such diagrams, which is checked against `budget`.
pub fn selfconjugate_schur_sum(a: usize, weight: SchurWeight, budget: u64) -> Result<LaurentPoly> {
    if a >= 63 || (1u64 << a) > budget {
        return Err(Error::Budget { budget });
    }
    let mut total = LaurentPoly::zero();
    for y in Partition::self_conjugate_in_box(a) {
        let size = y.size() as u32;
        let coeff = match weight {
            SchurWeight::Unit => LaurentPoly::constant(hook_content_dimension(&y, a)),
            SchurWeight::Principal => principal_specialization(&y, a),
            SchurWeight::PrincipalTwisted => {
                let twist = (y.size() - y.frobenius_rank()) / 2;
                principal_specialization(&y, a).mul_monomial(Monomial::q(twist as i32))
            }
        };
        total += &coeff.mul_monomial(Monomial::new(0, size, 0));
    }
    Ok(total)
}

/// Entry `d` is the total dimension of self-conjugate `Y` in the `a x a`
/// square with Frobenius rank `d`.
pub fn selfconjugate_dimensions_by_rank(a: usize, budget: u64) -> Result<Vec<BigInt>> {
    if a >= 63 || (1u64 << a) > budget {
        return Err(Error::Budget { budget });
    }
    let mut out = vec![BigInt::zero(); a + 1];
    for y in Partition::self_conjugate_in_box(a) {
        out[y.frobenius_rank()] += hook_content_dimension(&y, a);
    }
    Ok(out)
}
