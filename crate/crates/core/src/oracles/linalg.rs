//! Textbook linear algebra kept apart from the elimination code.

use crate::error::{Error, Result};
use crate::exact::{Matrix, Ring};

/// Laplace expansion along the first row. Exponential; meant for `n <= 7`.
pub fn cofactor_det<R: Ring>(m: &Matrix<R>) -> Result<R> {
    if !m.is_square() {
        return Err(Error::Dimension("cofactor expansion of a non-square matrix".into()));
    }
    let all: Vec<usize> = (0..m.rows()).collect();
    Ok(expand(m, &all, &all))
}

fn expand<R: Ring>(m: &Matrix<R>, rows: &[usize], cols: &[usize]) -> R {
    let Some((&r, rest)) = rows.split_first() else {
        return R::one();
    };
    let mut acc = R::zero();
    for (k, &c) in cols.iter().enumerate() {
        let e = m.get(r, c);
        if e.is_zero() {
            continue;
        }
        let minor: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = e.mul(&expand(m, rest, &minor));
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Entry `d` is the sum of all `d x d` principal minors, enumerated subset by subset.
pub fn principal_minor_sums<R: Ring>(m: &Matrix<R>) -> Result<Vec<R>> {
    if !m.is_square() {
        return Err(Error::Dimension("principal minors of a non-square matrix".into()));
    }
    let n = m.rows();
    if n >= 24 {
        return Err(Error::Dimension(format!("{n} rows give too many principal minors")));
    }
    let mut sums = vec![R::zero(); n + 1];
    for mask in 0u32..(1u32 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let d = expand(m, &idx, &idx);
        sums[idx.len()] = sums[idx.len()].add(&d);
    }
    Ok(sums)
}
