//! Transfer matrices of lattice paths with left and up steps.
//!
//! Builders take explicit shapes; entry formulas are written with 1-based
//! indices `i, j` and converted on the fly.

use crate::error::{Error, Result};
use crate::exact::{binomial, multichoose, q_binomial, IntMatrix, LaurentPoly, Matrix, Monomial, PolyMatrix};

/// Elementary integer transfer matrices. All sizes are row/column counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Elementary {
    /// Half-corner matrix, `a x b`, entries `C(i-1, j-1)`.
    W { a: usize, b: usize },
    /// Corner matrix, `a x b`, entries `C(i+j-2, i-1)`.
    T { a: usize, b: usize },
    /// Parallel matrix `H_{b,c}(a)`, `a x a`, entries `C(b+c, b+j-i)`.
    H { b: usize, c: usize, a: usize },
    /// Anti-diagonal permutation of size `b`.
    P { b: usize },
    /// `Z_b(a)`, `a x a`, entries `C(b, i-j)`.
    Z { b: usize, a: usize },
    /// `X_m(a)`, `a x a`, entries `C(m-1+i-j, i-j)` with `X_0 = I`.
    X { m: usize, a: usize },
    /// Corner matrix around a triangular hole of side `m`, entries `C(m+i+j-2, j-1)`.
    Hole { m: usize, a: usize, b: usize },
    /// Corner matrix under the ceiling `m`, entries `C(i+j-2, i-1) - C(i+j-2, m)`.
    CeilingT { m: usize, a: usize, b: usize },
    /// Half-corner matrix under the ceiling `m`, entries `C(i-1, j-1) - C(i-1, m+1-j)`.
    CeilingW { m: usize, a: usize, b: usize },
    /// Shifted corner matrix `T_{m,p}(a,b)`, entries `C(m+i+p+j-2, m+i-1)`.
    Shifted { m: usize, p: usize, a: usize, b: usize },
}

fn ci(n: i64, k: i64) -> num_bigint::BigInt {
    binomial(n, k)
}

impl Elementary {
    pub fn shape(&self) -> (usize, usize) {
        match *self {
            Elementary::W { a, b }
            | Elementary::T { a, b }
            | Elementary::Hole { a, b, .. }
            | Elementary::CeilingT { a, b, .. }
            | Elementary::CeilingW { a, b, .. }
            | Elementary::Shifted { a, b, .. } => (a, b),
            Elementary::H { a, .. } | Elementary::Z { a, .. } | Elementary::X { a, .. } => (a, a),
            Elementary::P { b } => (b, b),
        }
    }

    pub fn build(&self) -> IntMatrix {
        let (rows, cols) = self.shape();
        Matrix::from_fn(rows, cols, |i0, j0| {
            let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
            match *self {
                Elementary::W { .. } => ci(i - 1, j - 1),
                Elementary::T { .. } => ci(i + j - 2, i - 1),
                Elementary::H { b, c: cc, .. } => {
                    let (b, cc) = (b as i64, cc as i64);
                    ci(b + cc, b + j - i)
                }
                Elementary::P { b } => {
                    if j == b as i64 + 1 - i {
                        1.into()
                    } else {
                        0.into()
                    }
                }
                Elementary::Z { b, .. } => ci(b as i64, i - j),
                Elementary::X { m, .. } => multichoose(m as i64, i - j),
                Elementary::Hole { m, .. } => ci(m as i64 + i + j - 2, j - 1),
                Elementary::CeilingT { m, .. } => ci(i + j - 2, i - 1) - ci(i + j - 2, m as i64),
                Elementary::CeilingW { m, .. } => ci(i - 1, j - 1) - ci(i - 1, m as i64 + 1 - j),
                Elementary::Shifted { m, p, .. } => {
                    let (m, p) = (m as i64, p as i64);
                    ci(m + i + p + j - 2, m + i - 1)
                }
            }
        })
    }
}

pub fn w(a: usize, b: usize) -> IntMatrix {
    Elementary::W { a, b }.build()
}

pub fn t(a: usize, b: usize) -> IntMatrix {
    Elementary::T { a, b }.build()
}

pub fn h(b: usize, c: usize, a: usize) -> IntMatrix {
    Elementary::H { b, c, a }.build()
}

pub fn p(b: usize) -> IntMatrix {
    Elementary::P { b }.build()
}

pub fn z(b: usize, a: usize) -> IntMatrix {
    Elementary::Z { b, a }.build()
}

pub fn x(m: usize, a: usize) -> IntMatrix {
    Elementary::X { m, a }.build()
}

pub fn t_hole(m: usize, a: usize, b: usize) -> IntMatrix {
    Elementary::Hole { m, a, b }.build()
}

pub fn t_ceiling(m: usize, a: usize, b: usize) -> IntMatrix {
    Elementary::CeilingT { m, a, b }.build()
}

pub fn w_ceiling(m: usize, a: usize, b: usize) -> IntMatrix {
    Elementary::CeilingW { m, a, b }.build()
}

pub fn t_shifted(m: usize, p: usize, a: usize, b: usize) -> IntMatrix {
    Elementary::Shifted { m, p, a, b }.build()
}

/// `U(p, q) = [ T(p, q-p) | mu X_{q-p}(p) ]`, shape `p x q`.
pub fn u_block(p: usize, q: usize) -> Result<PolyMatrix> {
    if p > q {
        return Err(Error::Parameter(format!("U(p,q) needs p <= q, got p={p}, q={q}")));
    }
    u_e_block(p, q, 0)
}

/// `U^(e)(p, q)`: left block `T(p, q-p+e)`, right block `mu X_{q-p+2e}(p-e)`
/// under an `e x (p-e)` zero block. Shape `p x q`.
pub fn u_e_block(p: usize, q: usize, e: usize) -> Result<PolyMatrix> {
    if e > p || q + e < p {
        return Err(Error::Parameter(format!(
            "U^(e)(p,q) needs e <= p and q-p+e >= 0, got p={p}, q={q}, e={e}"
        )));
    }
    let left = t(p, q + e - p).to_poly();
    let mu = LaurentPoly::mu();
    let xm = x(q + 2 * e - p, p - e).to_poly().scale(&mu);
    let right = Matrix::zeros(e, p - e).vstack(&xm)?;
    left.hstack(&right)
}

/// Transfer matrix of a hexagon side cut by a broken ceiling, shape
/// `(a1+a2) x (b1+b2)`:
///
/// ```text
/// [ T(a1,b1)           T_{0,b1}(a1,b2)          ]
/// [ T_{a1,0}(a2,b1)    T(a2,b1) T(b1,a1) T(a1,b2) ]
/// ```
pub fn broken(a1: usize, a2: usize, b1: usize, b2: usize) -> Result<IntMatrix> {
    let top = t(a1, b1).hstack(&t_shifted(0, b1, a1, b2))?;
    let corner = IntMatrix::product(&[&t(a2, b1), &t(b1, a1), &t(a1, b2)])?;
    let bottom = t_shifted(a1, 0, a2, b1).hstack(&corner)?;
    top.vstack(&bottom)
}

/// q-decorated half-corner matrix, `a x b`, entries
/// `s^(1 + 3(i-1) + 3(j-1)^2) [i-1 choose j-1]_q`.
pub fn q_w(a: usize, b: usize) -> PolyMatrix {
    Matrix::from_fn(a, b, |i, j| {
        let e = 1 + 3 * i as i32 + 3 * (j * j) as i32;
        q_binomial(i as i64, j as i64).mul_monomial(Monomial::new(0, 0, e))
    })
}

/// q-decorated corner matrix, `a x b`, entries
/// `s^(2 + 3(i+j-2)) [i+j-2 choose i-1]_q`.
pub fn q_t(a: usize, b: usize) -> PolyMatrix {
    Matrix::from_fn(a, b, |i, j| {
        let e = 2 + 3 * (i + j) as i32;
        q_binomial((i + j) as i64, i as i64).mul_monomial(Monomial::new(0, 0, e))
    })
}

/// `diag(u, u^3, ..., u^(2a-1))`.
pub fn theta(a: usize) -> PolyMatrix {
    Matrix::diagonal(
        (0..a)
            .map(|i| LaurentPoly::monomial(Monomial::new(0, 2 * i as u32 + 1, 0), 1))
            .collect(),
    )
}

/// `q -> q^k` applied entrywise.
pub fn rescale_q(m: &PolyMatrix, k: i32) -> PolyMatrix {
    m.map(|e| e.scale_s(k))
}
