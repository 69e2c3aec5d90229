//! Plane partitions in a box, enumerated one by one.

use num_bigint::BigInt;
use num_traits::Zero;

use super::paths::Budget;
use crate::error::{Error, Result};
use crate::exact::LaurentPoly;

/// An `a x b` array of heights at most `c`, weakly decreasing along rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanePartition {
    heights: Vec<Vec<usize>>,
    c: usize,
}

impl PlanePartition {
    pub fn new(heights: Vec<Vec<usize>>, c: usize) -> Result<Self> {
        let b = heights.first().map_or(0, Vec::len);
        if heights.iter().any(|r| r.len() != b) {
            return Err(Error::Dimension("ragged plane partition".into()));
        }
        for (i, row) in heights.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let bad = v > c
                    || (j > 0 && row[j - 1] < v)
                    || (i > 0 && heights[i - 1][j] < v);
                if bad {
                    return Err(Error::Parameter(format!("not a plane partition at ({i},{j})")));
                }
            }
        }
        Ok(PlanePartition { heights, c })
    }

    pub fn heights(&self) -> &[Vec<usize>] {
        &self.heights
    }

    /// Number of unit cubes.
    pub fn volume(&self) -> usize {
        self.heights.iter().flatten().sum()
    }

    fn has_cube(&self, i: usize, j: usize, k: usize) -> bool {
        k < self.heights[i][j]
    }

    /// Invariant under the cyclic permutation of the three axes; requires a cube.
    pub fn is_cyclically_symmetric(&self) -> bool {
        let n = self.heights.len();
        if self.heights.iter().any(|r| r.len() != n) || self.c != n {
            return false;
        }
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| self.has_cube(i, j, k) == self.has_cube(j, k, i)))
        })
    }
}

/// Calls `visit` on every plane partition in the `a x b x c` box.
pub fn for_each_plane_partition(
    a: usize,
    b: usize,
    c: usize,
    budget: u64,
    mut visit: impl FnMut(&PlanePartition),
) -> Result<u64> {
    // All weakly decreasing rows of length b with entries <= c.
    let mut rows: Vec<Vec<usize>> = Vec::new();
    fn gen(b: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == b {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max {
            cur.push(v);
            gen(b, v, cur, out);
            cur.pop();
        }
    }
    gen(b, c, &mut Vec::new(), &mut rows);

    let mut budget = Budget::new(budget);
    let mut pp = PlanePartition { heights: Vec::with_capacity(a), c };
    fn fill(
        a: usize,
        rows: &[Vec<usize>],
        pp: &mut PlanePartition,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&PlanePartition),
    ) -> Result<()> {
        if pp.heights.len() == a {
            budget.tick()?;
            visit(pp);
            return Ok(());
        }
        for r in rows {
            let fits = pp
                .heights
                .last()
                .is_none_or(|above| above.iter().zip(r).all(|(x, y)| y <= x));
            if fits {
                pp.heights.push(r.clone());
                fill(a, rows, pp, budget, visit)?;
                pp.heights.pop();
            }
        }
        Ok(())
    }
    fill(a, &rows, &mut pp, &mut budget, &mut visit)?;
    Ok(budget.used())
}

fn histogram(volumes: impl IntoIterator<Item = usize>) -> LaurentPoly {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for v in volumes {
        if coeffs.len() <= v {
            coeffs.resize(v + 1, BigInt::zero());
        }
        coeffs[v] += 1;
    }
    LaurentPoly::from_q_coeffs(&coeffs)
}

/// `sum q^volume` over plane partitions in the `a x b x c` box.
pub fn enumerate_plane_partitions(a: usize, b: usize, c: usize, budget: u64) -> Result<LaurentPoly> {
    let mut vols = Vec::new();
    for_each_plane_partition(a, b, c, budget, |pp| vols.push(pp.volume()))?;
    Ok(histogram(vols))
}

/// `sum q^volume` over cyclically symmetric plane partitions in the `n`-cube.
pub fn enumerate_cspp_poly(n: usize, budget: u64) -> Result<LaurentPoly> {
    let mut vols = Vec::new();
    for_each_plane_partition(n, n, n, budget, |pp| {
        if pp.is_cyclically_symmetric() {
            vols.push(pp.volume());
        }
    })?;
    Ok(histogram(vols))
}

pub fn enumerate_cspp(n: usize, budget: u64) -> Result<BigInt> {
    Ok(enumerate_cspp_poly(n, budget)?.eval_all_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: u64 = 10_000_000;

    #[test]
    fn small_boxes() {
        assert_eq!(enumerate_plane_partitions(1, 1, 1, B).unwrap(), "1 + q".parse().unwrap());
        assert_eq!(enumerate_plane_partitions(2, 2, 2, B).unwrap().eval_all_one(), 20.into());
        assert_eq!(enumerate_plane_partitions(3, 2, 1, B).unwrap().eval_all_one(), 10.into());
        assert_eq!(enumerate_plane_partitions(0, 3, 3, B).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn cyclic_symmetry() {
        assert_eq!(enumerate_cspp(1, B).unwrap(), 2.into());
        assert_eq!(enumerate_cspp(2, B).unwrap(), 5.into());
        assert_eq!(enumerate_cspp(3, B).unwrap(), 20.into());
        assert_eq!(
            enumerate_cspp_poly(2, B).unwrap(),
            "1 + q + q^4 + q^7 + q^8".parse().unwrap()
        );
    }

    #[test]
    fn validation_and_budget() {
        assert!(PlanePartition::new(vec![vec![1, 2]], 2).is_err());
        assert!(PlanePartition::new(vec![vec![1], vec![2]], 2).is_err());
        assert!(PlanePartition::new(vec![vec![3]], 2).is_err());
        let pp = PlanePartition::new(vec![vec![2, 1], vec![1, 0]], 2).unwrap();
        assert_eq!(pp.volume(), 4);
        assert!(pp.is_cyclically_symmetric());
        assert_eq!(enumerate_plane_partitions(3, 3, 3, 5), Err(Error::Budget { budget: 5 }));
    }
}
