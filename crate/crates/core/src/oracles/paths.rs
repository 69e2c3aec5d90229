//! Lattice paths with unit steps left `(-1, 0)` and up `(0, 1)`, counted by
//! dynamic programming (single paths) and by explicit backtracking (families
//! of vertex-disjoint paths).
//!
//! Constraints are predicates on visited points, so every family count below
//! is a count in a finite acyclic digraph and the signed family sum equals the
//! determinant of single-path counts.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{IntMatrix, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    fn height(self) -> i64 {
        self.x + self.y
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Region restriction. The height of `(x, y)` is `x + y`; a left step lowers
/// it by one, an up step raises it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    None,
    /// Height at most `m + 1`.
    Ceiling(i64),
    /// Height at least 1.
    Wall,
    /// Removes every quadrant `{x <= c.x, y >= c.y}` for the listed corners.
    BrokenCeiling(Vec<Point>),
}

impl Constraint {
    pub fn allows(&self, p: Point) -> bool {
        match self {
            Constraint::None => true,
            Constraint::Ceiling(m) => p.height() <= m + 1,
            Constraint::Wall => p.height() >= 1,
            Constraint::BrokenCeiling(corners) => !corners.iter().any(|c| p.x <= c.x && p.y >= c.y),
        }
    }
}

impl FromStr for Constraint {
    type Err = Error;

    /// `none`, `wall`, `ceiling:M` or `broken:(x,y),(x,y),...`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, arg) = s.split_once(':').map_or((s, None), |(k, a)| (k.trim(), Some(a)));
        match (kind, arg) {
            ("none", None) => Ok(Constraint::None),
            ("wall", None) => Ok(Constraint::Wall),
            ("ceiling", Some(m)) => {
                let m: i64 = m
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad ceiling height {m:?}")))?;
                if m.abs() > MAX_COORD {
                    return Err(Error::Parse(format!("ceiling height {m} out of range")));
                }
                Ok(Constraint::Ceiling(m))
            }
            ("broken", Some(pts)) => Ok(Constraint::BrokenCeiling(parse_points(pts)?)),
            _ => Err(Error::Parse(format!("unknown constraint {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathProblem {
    pub starts: Vec<Point>,
    pub ends: Vec<Point>,
    pub constraint: Constraint,
}

impl PathProblem {
    pub fn new(starts: Vec<Point>, ends: Vec<Point>, constraint: Constraint) -> Result<Self> {
        if starts.len() != ends.len() {
            return Err(Error::Dimension(format!(
                "{} starts but {} ends",
                starts.len(),
                ends.len()
            )));
        }
        Ok(PathProblem { starts, ends, constraint })
    }

    /// De Bruijn lines of the `a x b x c` hexagon: `S_i = (c+i, i)`,
    /// `E_j = (j, b+j)`, so that the single-path count is `C(b+c, b+j-i)`.
    pub fn hexagon(a: usize, b: usize, c: usize) -> Self {
        let (b, c) = (b as i64, c as i64);
        PathProblem {
            starts: (1..=a as i64).map(|i| Point::new(c + i, i)).collect(),
            ends: (1..=a as i64).map(|j| Point::new(j, b + j)).collect(),
            constraint: Constraint::None,
        }
    }
}

/// Budgeted step counter shared by the enumerators.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::Budget { budget: self.limit });
        }
        Ok(())
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

/// Number of constrained paths from `start` to `end`, by dynamic programming
/// over the bounding rectangle.
pub fn wall_path_count(start: Point, end: Point, constraint: &Constraint, budget: u64) -> Result<BigInt> {
    if end.x > start.x || end.y < start.y {
        return Ok(BigInt::zero());
    }
    let w = (start.x - end.x) as u64 + 1;
    let h = (end.y - start.y) as u64 + 1;
    if w.saturating_mul(h) > budget {
        return Err(Error::Budget { budget });
    }
    let (w, h) = (w as usize, h as usize);
    // ways[dx][dy] = paths from start to (start.x - dx, start.y + dy).
    let mut ways = vec![vec![BigInt::zero(); h]; w];
    for dx in 0..w {
        for dy in 0..h {
            let p = Point::new(start.x - dx as i64, start.y + dy as i64);
            if !constraint.allows(p) {
                continue;
            }
            ways[dx][dy] = if dx == 0 && dy == 0 {
                BigInt::one()
            } else {
                let mut v = BigInt::zero();
                if dx > 0 {
                    v += &ways[dx - 1][dy];
                }
                if dy > 0 {
                    v += &ways[dx][dy - 1];
                }
                v
            };
        }
    }
    Ok(ways[w - 1][h - 1].clone())
}

/// Matrix of single-path counts `start_i -> end_j`.
pub fn lgv_matrix(problem: &PathProblem, budget: u64) -> Result<IntMatrix> {
    let n = problem.starts.len();
    let mut rows = Vec::with_capacity(n);
    for s in &problem.starts {
        let mut row = Vec::with_capacity(n);
        for e in &problem.ends {
            row.push(wall_path_count(*s, *e, &problem.constraint, budget)?);
        }
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

struct FamilySearch<'a> {
    problem: &'a PathProblem,
    targets: Vec<Point>,
    used: HashSet<Point>,
    budget: Budget,
    count: BigInt,
}

impl FamilySearch<'_> {
    fn reachable(&self, p: Point, end: Point) -> bool {
        p.x >= end.x && p.y <= end.y
    }

    fn run_path(&mut self, k: usize) -> Result<()> {
        if k == self.targets.len() {
            self.count += 1;
            return Ok(());
        }
        let start = self.problem.starts[k];
        let end = self.targets[k];
        if !self.reachable(start, end) || !self.problem.constraint.allows(start) || self.used.contains(&start) {
            return Ok(());
        }
        self.used.insert(start);
        self.walk(k, start, end)?;
        self.used.remove(&start);
        Ok(())
    }

    fn walk(&mut self, k: usize, at: Point, end: Point) -> Result<()> {
        self.budget.tick()?;
        if at == end {
            return self.run_path(k + 1);
        }
        for next in [Point::new(at.x - 1, at.y), Point::new(at.x, at.y + 1)] {
            if self.reachable(next, end) && self.problem.constraint.allows(next) && !self.used.contains(&next) {
                self.used.insert(next);
                self.walk(k, next, end)?;
                self.used.remove(&next);
            }
        }
        Ok(())
    }
}

fn count_for_targets(problem: &PathProblem, targets: Vec<Point>, budget: &mut Budget) -> Result<BigInt> {
    let mut search = FamilySearch {
        problem,
        targets,
        used: HashSet::new(),
        budget: Budget::new(budget.limit.saturating_sub(budget.used)),
        count: BigInt::zero(),
    };
    let res = search.run_path(0);
    budget.used += search.budget.used;
    match res {
        Err(Error::Budget { .. }) => Err(Error::Budget { budget: budget.limit }),
        other => other.map(|_| search.count),
    }
}

/// Number of families of vertex-disjoint paths with path `i` running from
/// `starts[i]` to `ends[i]`, by exhaustive backtracking.
pub fn count_nonintersecting_families(problem: &PathProblem, budget: u64) -> Result<BigInt> {
    count_for_targets(problem, problem.ends.clone(), &mut Budget::new(budget))
}

/// `sum_sigma sign(sigma) #families(start_i -> end_sigma(i))` over all
/// permutations; the right-hand side of the LGV lemma without any
/// compatibility assumption.
pub fn signed_family_sum(problem: &PathProblem, budget: u64) -> Result<BigInt> {
    let n = problem.ends.len();
    let mut budget = Budget::new(budget);
    let mut total = BigInt::zero();
    for (perm, sign) in permutations(n) {
        let targets = perm.iter().map(|&j| problem.ends[j]).collect();
        let c = count_for_targets(problem, targets, &mut budget)?;
        if sign {
            total += c;
        } else {
            total -= c;
        }
    }
    Ok(total)
}

/// Every permutation of `0..n` with its sign (`true` for even).
pub fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(cur: &mut Vec<usize>, rest: &mut Vec<usize>, even: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        if rest.is_empty() {
            out.push((cur.clone(), even));
            return;
        }
        for idx in 0..rest.len() {
            let v = rest.remove(idx);
            cur.push(v);
            // Picking the idx-th smallest remaining element adds idx inversions.
            go(cur, rest, even ^ (idx % 2 == 1), out);
            cur.pop();
            rest.insert(idx, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), true, &mut out);
    out
}

/// Largest coordinate magnitude accepted by [`parse_points`].
const MAX_COORD: i64 = 1 << 20;

/// Parses `(x,y),(x,y),...`; whitespace is ignored.
pub fn parse_points(s: &str) -> Result<Vec<Point>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = compact.as_str();
    loop {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected `(` at {rest:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse("unclosed point".into()))?;
        out.push(body[..close].parse()?);
        rest = &body[close + 1..];
        if rest.is_empty() {
            return Ok(out);
        }
        rest = rest
            .strip_prefix(',')
            .ok_or_else(|| Error::Parse(format!("expected `,` at {rest:?}")))?;
    }
}

impl FromStr for Point {
    type Err = Error;

    /// `x,y` with optional parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(s);
        let (x, y) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected `x,y`, got {s:?}")))?;
        let coord = |t: &str| -> Result<i64> {
            let v: i64 = t
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coordinate {t:?}")))?;
            if v.abs() > MAX_COORD {
                return Err(Error::Parse(format!("coordinate {v} out of range")));
            }
            Ok(v)
        };
        Ok(Point::new(coord(x)?, coord(y)?))
    }
}
