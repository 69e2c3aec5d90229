//! Rhombus tilings of hexagons and of domains glued along their edges.
//!
//! Every count is a generating polynomial in `mu`, the winding number of
//! De Bruijn loops around the gluing point; totals are `mu := 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, det, det_one_plus_mu, IntMatrix, LaurentPoly, Matrix};
use crate::partition::{FrobeniusCoords, Partition};
use crate::transfer;

/// A tiling domain. Sides are measured in unit rhombi.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    Hexagon { a: usize, b: usize, c: usize },
    GluedLozenge { a: usize },
    GluedHalfHexagon { a: usize },
    HexagonHole { a: usize, b: usize, c: usize, m: usize },
    HexagonChopped { a: usize, b: usize, c: usize, m: usize, p: usize, q: usize },
    HexagonBroken { a1: usize, a2: usize, b1: usize, b2: usize, c1: usize, c2: usize },
}

impl Region {
    pub fn validate(&self) -> Result<()> {
        if let Region::HexagonChopped { a, b, c, m, p, q } = *self {
            check_chopped(a, b, c, m, p, q)?;
        }
        Ok(())
    }

    /// Winding generating polynomial of the domain.
    pub fn winding_poly(&self) -> Result<LaurentPoly> {
        match *self {
            Region::Hexagon { a, b, c } => hexagon_winding_poly(a, b, c),
            Region::GluedLozenge { a } => glued_lozenge_poly(a),
            Region::GluedHalfHexagon { a } => half_hexagon_poly(a),
            Region::HexagonHole { a, b, c, m } => hexagon_hole_poly(a, b, c, m),
            Region::HexagonChopped { a, b, c, m, p, q } => hexagon_chopped_poly(a, b, c, m, p, q),
            Region::HexagonBroken { a1, a2, b1, b2, c1, c2 } => hexagon_broken_poly(a1, a2, b1, b2, c1, c2),
        }
    }
}

/// `prod_{i<=a, j<=b, k<=c} (i+j+k-1)/(i+j+k-2)`.
pub fn macmahon_product(a: usize, b: usize, c: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                num *= i + j + k - 1;
                den *= i + j + k - 2;
            }
        }
    }
    exact_quotient(num, den)
}

fn exact_quotient(num: BigInt, den: BigInt) -> BigInt {
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "product formula is not integral");
    q
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Tilings of the `a x b x c` hexagon whose parallel De Bruijn lines are
/// counted by `det H_{b,c}(a)`.
pub fn parallel_det(a: usize, b: usize, c: usize) -> BigInt {
    det(&transfer::h(b, c, a)).expect("square by construction")
}

/// `det(I + mu T(a,b) T(b,c) T(c,a))`; the `mu^d` coefficient counts tilings
/// with `d` De Bruijn loops around the center.
pub fn hexagon_winding_poly(a: usize, b: usize, c: usize) -> Result<LaurentPoly> {
    let m = IntMatrix::product(&[&transfer::t(a, b), &transfer::t(b, c), &transfer::t(c, a)])?;
    det_one_plus_mu(&m)
}

/// Lozenge glued along two consecutive edges, `det(I + mu T(a))`.
pub fn glued_lozenge_poly(a: usize) -> Result<LaurentPoly> {
    det_one_plus_mu(&transfer::t(a, a))
}

/// `prod_{n<a} (3n+2)(3n)! n! / ((2n)! (2n+1)!)`.
pub fn glued_lozenge_total(a: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for n in 0..a {
        num *= BigInt::from(3 * n + 2) * factorial(3 * n) * factorial(n);
        den *= factorial(2 * n) * factorial(2 * n + 1);
    }
    exact_quotient(num, den)
}

fn wwtw(a: usize) -> IntMatrix {
    let w = transfer::w(a, a);
    IntMatrix::product(&[&w, &w.transpose(), &w]).expect("square factors")
}

/// Half-hexagon glued along its two cut edges, `det(I + mu W W^t W)`.
pub fn half_hexagon_poly(a: usize) -> Result<LaurentPoly> {
    det_one_plus_mu(&wwtw(a))
}

pub fn half_hexagon_total(a: usize) -> Result<BigInt> {
    Ok(half_hexagon_poly(a)?.eval_all_one())
}

/// Closed product for the half-hexagon total, split by the parity of `a`.
pub fn half_hexagon_closed_form(a: usize) -> BigInt {
    if a == 0 {
        return BigInt::one();
    }
    // F_j = (4j+3)! (j+1)! j! / ((2j+2)! ((2j+1)!)^2), squared in both branches.
    let f = |j: usize| -> (BigInt, BigInt) {
        let num = factorial(4 * j + 3) * factorial(j + 1) * factorial(j);
        let den = factorial(2 * j + 2) * factorial(2 * j + 1).pow(2);
        (num.pow(2), den.pow(2))
    };
    let n = a / 2;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    if a.is_multiple_of(2) {
        num <<= n;
        for j in 0..n.saturating_sub(1) {
            let (fnum, fden) = f(j);
            num *= fnum;
            den *= fden;
        }
        num *= factorial(4 * n - 1) * factorial(n) * factorial(n - 1);
        den *= factorial(2 * n) * factorial(2 * n - 1).pow(2);
    } else {
        num <<= n + 1;
        for j in 0..n {
            let (fnum, fden) = f(j);
            num *= fnum;
            den *= fden;
        }
    }
    exact_quotient(num, den)
}

fn check_box(y: &Partition, a: usize) -> Result<()> {
    if y.len() > a {
        return Err(Error::Parameter(format!("{y} has more than {a} rows")));
    }
    Ok(())
}

/// `dim_Y` of `GL(a)` by the dual Jacobi-Trudi determinant `det C(a, lambda'_i + j - i)`.
pub fn schur_dimension(y: &Partition, a: usize) -> Result<BigInt> {
    check_box(y, a)?;
    let conj = y.conjugate();
    let n = a.max(y.part(1));
    let m = Matrix::from_fn(n, n, |i, j| {
        binomial(a as i64, conj.part(i + 1) as i64 + j as i64 - i as i64)
    });
    det(&m)
}

/// `dim_Y` by the Jacobi-Trudi determinant `det C(a + lambda_i + j - i - 1, lambda_i + j - i)`.
pub fn schur_dimension_h(y: &Partition, a: usize) -> Result<BigInt> {
    check_box(y, a)?;
    let m = Matrix::from_fn(a, a, |i, j| {
        let k = y.part(i + 1) as i64 + j as i64 - i as i64;
        binomial(a as i64 + k - 1, k)
    });
    det(&m)
}

/// Diagram of the endpoint list `2a >= n_1 > ... > n_a > 0`, `lambda'_i = n_i - a - 1 + i`.
pub fn endpoints_to_partition(n: &[usize], a: usize) -> Result<Partition> {
    if n.len() != a {
        return Err(Error::Parameter(format!("expected {a} endpoints, got {}", n.len())));
    }
    if n.windows(2).any(|w| w[0] <= w[1]) || n.iter().any(|&v| v == 0 || v > 2 * a) {
        return Err(Error::Parameter(format!(
            "endpoints {n:?} must be strictly decreasing in (0, {}]",
            2 * a
        )));
    }
    let conj: Vec<usize> = n.iter().enumerate().map(|(i, &v)| v + i - a).collect();
    Ok(Partition::new(conj)?.conjugate())
}

/// Half-hexagon tilings with fixed De Bruijn endpoints, `det C(a, n_i - (a+1-j))`.
pub fn half_hexagon_fixed_endpoints(n: &[usize], a: usize) -> Result<BigInt> {
    endpoints_to_partition(n, a)?;
    let m = Matrix::from_fn(a, a, |i, j| {
        binomial(a as i64, n[i] as i64 - (a as i64 - j as i64))
    });
    det(&m)
}

/// Half-hexagon tilings with winding-line endpoints `(m; p)`: the minor of
/// `W W^t W` on rows `m` and columns `p`.
pub fn half_hexagon_fixed_frobenius(fc: &FrobeniusCoords, a: usize) -> Result<BigInt> {
    if fc.m().iter().chain(fc.p()).any(|&v| v > a) {
        return Err(Error::Parameter(format!("{fc} does not fit in {a} x {a}")));
    }
    let rows: Vec<usize> = fc.m().iter().map(|v| v - 1).collect();
    let cols: Vec<usize> = fc.p().iter().map(|v| v - 1).collect();
    det(&wwtw(a).select(&rows, &cols))
}

pub fn frobenius_to_partition(fc: &FrobeniusCoords) -> Partition {
    fc.to_partition()
}

/// `det(I + theta W W^t W)` with `theta = diag(u, u^3, ..., u^(2a-1))`.
pub fn poincare_polynomial(a: usize) -> Result<LaurentPoly> {
    let m = transfer::theta(a).mul(&wwtw(a).to_poly())?;
    det(&m.plus_identity()?)
}

/// Hexagon with a central triangular hole of side `m`.
pub fn hexagon_hole_poly(a: usize, b: usize, c: usize, m: usize) -> Result<LaurentPoly> {
    let prod = IntMatrix::product(&[
        &transfer::t_hole(m, a, b),
        &transfer::t_hole(m, b, c),
        &transfer::t_hole(m, c, a),
    ])?;
    det_one_plus_mu(&prod)
}

fn check_chopped(a: usize, b: usize, c: usize, m: usize, p: usize, q: usize) -> Result<()> {
    if m < a.max(b) || p < b.max(c) || q < a.max(c) {
        return Err(Error::Parameter(format!(
            "chopped hexagon needs m >= max(a,b), p >= max(b,c), q >= max(a,c); got a={a} b={b} c={c} m={m} p={p} q={q}"
        )));
    }
    Ok(())
}

/// Hexagon with three corners chopped by the ceilings `m`, `p`, `q`.
pub fn hexagon_chopped_poly(a: usize, b: usize, c: usize, m: usize, p: usize, q: usize) -> Result<LaurentPoly> {
    check_chopped(a, b, c, m, p, q)?;
    let prod = IntMatrix::product(&[
        &transfer::t_ceiling(m, a, b),
        &transfer::t_ceiling(p, b, c),
        &transfer::t_ceiling(q, c, a),
    ])?;
    det_one_plus_mu(&prod)
}

/// Hexagon with rectangular chops along a broken ceiling.
pub fn hexagon_broken_poly(
    a1: usize,
    a2: usize,
    b1: usize,
    b2: usize,
    c1: usize,
    c2: usize,
) -> Result<LaurentPoly> {
    let prod = IntMatrix::product(&[
        &transfer::broken(a1, a2, b1, b2)?,
        &transfer::broken(b1, b2, c1, c2)?,
        &transfer::broken(c1, c2, a1, a2)?,
    ])?;
    det_one_plus_mu(&prod)
}
