//! Young diagrams in row and Frobenius form.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest part or length accepted by the text parsers.
const MAX_PARSED: usize = 1 << 12;

/// A partition `lambda_1 >= lambda_2 >= ... > 0`. Trailing zeros are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parameter(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of non-zero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `lambda_i` with 1-based `i`; 0 past the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&r| r >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Length of the main diagonal.
    pub fn frobenius_rank(&self) -> usize {
        self.parts.iter().enumerate().take_while(|(i, &r)| r > *i).count()
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let d = self.frobenius_rank();
        let mut m: Vec<usize> = (0..d).map(|i| self.parts[i] - i).collect();
        let mut p: Vec<usize> = (0..d).map(|i| conj.parts[i] - i).collect();
        m.reverse();
        p.reverse();
        FrobeniusCoords { m, p }
    }

    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(1) <= cols
    }

    /// Boxes `(row, col)`, 1-based, in reading order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (1..=r).map(move |j| (i + 1, j)))
    }

    /// Every partition inside a `rows x cols` rectangle, in lexicographic order of parts.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn go(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            if cur.len() == rows {
                return;
            }
            for v in 1..=max {
                cur.push(v);
                go(rows, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(rows, cols, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Self-conjugate partitions inside the `a x a` square, built from
    /// strictly decreasing diagonal hook lengths.
    pub fn self_conjugate_in_box(a: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << a) {
            let m: Vec<usize> = (1..=a).filter(|k| mask >> (k - 1) & 1 == 1).collect();
            let fc = FrobeniusCoords { p: m.clone(), m };
            out.push(fc.to_partition());
        }
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let v: usize = t
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {t:?}")))?;
            if v > MAX_PARSED {
                return Err(Error::Parse(format!("{v} exceeds {MAX_PARSED}")));
            }
            Ok(v)
        })
        .collect()
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(s)
}

impl FromStr for Partition {
    type Err = Error;

    /// `3,2,1`, optionally parenthesised; `()` or the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list(strip_parens(s))?;
        if parts.len() > MAX_PARSED {
            return Err(Error::Parse("too many parts".into()));
        }
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Frobenius characteristics `(m; p)` with `m_i = lambda_i - i + 1` and
/// `p_i = lambda'_i - i + 1` over the diagonal, each list strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FrobeniusCoords {
    m: Vec<usize>,
    p: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn new(m: Vec<usize>, p: Vec<usize>) -> Result<Self> {
        if m.len() != p.len() {
            return Err(Error::Parameter(format!(
                "Frobenius lists of unequal length {} and {}",
                m.len(),
                p.len()
            )));
        }
        for l in [&m, &p] {
            if l.first() == Some(&0) || l.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parameter(format!(
                    "{l:?} is not a strictly increasing list of positive integers"
                )));
            }
        }
        Ok(FrobeniusCoords { m, p })
    }

    pub fn self_conjugate(m: Vec<usize>) -> Result<Self> {
        FrobeniusCoords::new(m.clone(), m)
    }

    pub fn m(&self) -> &[usize] {
        &self.m
    }

    pub fn p(&self) -> &[usize] {
        &self.p
    }

    /// Number of diagonal hooks.
    pub fn rank(&self) -> usize {
        self.m.len()
    }

    /// `sum (m_i + p_i - 1)`.
    pub fn size(&self) -> usize {
        self.m.iter().zip(&self.p).map(|(a, b)| a + b - 1).sum()
    }

    pub fn to_partition(&self) -> Partition {
        let d = self.rank();
        // Row i (0-based) of the diagonal part has m_{d-1-i} + i boxes; column j likewise.
        let rows: Vec<usize> = (0..d).map(|i| self.m[d - 1 - i] + i).collect();
        let cols: Vec<usize> = (0..d).map(|j| self.p[d - 1 - j] + j).collect();
        let height = cols.first().copied().unwrap_or(0);
        let mut parts = rows;
        for i in d..height {
            parts.push(cols.iter().filter(|&&h| h > i).count());
        }
        Partition { parts }
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |l: &[usize]| l.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", join(&self.m), join(&self.p))
    }
}

impl FromStr for FrobeniusCoords {
    type Err = Error;

    /// `1,3;1,2` (arms; legs), optionally parenthesised.
    fn from_str(s: &str) -> Result<Self> {
        let (m, p) = strip_parens(s)
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected `m;p`, got {s:?}")))?;
        FrobeniusCoords::new(parse_list(m)?, parse_list(p)?).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_is_an_involution() {
        for y in Partition::all_in_box(4, 5) {
            assert_eq!(y.conjugate().conjugate(), y);
            assert!(y.conjugate().fits_in(5, 4));
        }
        assert_eq!(part("3,1").conjugate(), part("2,1,1"));
    }

    #[test]
    fn box_enumeration_counts() {
        // C(r + c, r) partitions fit in an r x c rectangle.
        assert_eq!(Partition::all_in_box(2, 2).len(), 6);
        assert_eq!(Partition::all_in_box(3, 4).len(), 35);
        assert_eq!(Partition::all_in_box(0, 4), vec![Partition::empty()]);
        for a in 0..=6 {
            let sc = Partition::self_conjugate_in_box(a);
            assert_eq!(sc.len(), 1 << a);
            assert!(sc.iter().all(|y| y.is_self_conjugate() && y.fits_in(a, a)));
        }
    }

    #[test]
    fn frobenius_round_trip() {
        for y in Partition::all_in_box(5, 5) {
            let fc = y.frobenius();
            assert_eq!(fc.to_partition(), y);
            assert_eq!(fc.size(), y.size());
            assert_eq!(fc.rank(), y.frobenius_rank());
            assert_eq!(FrobeniusCoords::new(fc.m().to_vec(), fc.p().to_vec()).unwrap(), fc);
        }
        let fc: FrobeniusCoords = "1;1".parse().unwrap();
        assert_eq!(fc.to_partition(), part("1"));
        // (3,1): arms 3, legs 2.
        assert_eq!(part("3,1").frobenius(), "3;2".parse().unwrap());
    }

    #[test]
    fn self_conjugate_sizes() {
        let fc = FrobeniusCoords::self_conjugate(vec![1, 3]).unwrap();
        assert_eq!(fc.size(), 1 + 5);
        assert_eq!(fc.to_partition(), part("3,2,1"));
    }

    #[test]
    fn parsing() {
        assert_eq!(part("()"), Partition::empty());
        assert_eq!(part(""), Partition::empty());
        assert_eq!(part("(2,2,0)"), part("2,2"));
        assert_eq!(part("3,1").to_string(), "(3,1)");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        assert!("99999".parse::<Partition>().is_err());
        assert!("2,1;1".parse::<FrobeniusCoords>().is_err());
        assert!("1,1;1,2".parse::<FrobeniusCoords>().is_err());
        assert!("0;1".parse::<FrobeniusCoords>().is_err());
        let fc: FrobeniusCoords = "(1,3;1,2)".parse().unwrap();
        assert_eq!(fc.to_string(), "(1,3;1,2)");
        assert_eq!(";".parse::<FrobeniusCoords>().unwrap().rank(), 0);
    }
}
