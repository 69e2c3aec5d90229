//! Determinant formulas for FPL link patterns against exhaustive enumeration.
//!
//! Every alternating sign matrix of size `n <= 6` is turned into its fully
//! packed loop configuration and the boundary connectivity is read off.

use std::collections::HashMap;

use detcount::fpl::{fpl_nested3, fpl_nested4, fpl_nested5};
use detcount::oracles::asm_number;
use detcount::BigInt;

fn asms(n: usize) -> Vec<Vec<Vec<i8>>> {
    fn rows_for(n: usize, colsum: &[i8]) -> Vec<Vec<i8>> {
        fn rec(n: usize, colsum: &[i8], j: usize, s: i8, row: &mut Vec<i8>, out: &mut Vec<Vec<i8>>) {
            if j == n {
                if s == 1 {
                    out.push(row.clone());
                }
                return;
            }
            for v in [-1i8, 0, 1] {
                let (ns, nc) = (s + v, colsum[j] + v);
                if (0..=1).contains(&ns) && (0..=1).contains(&nc) {
                    row.push(v);
                    rec(n, colsum, j + 1, ns, row, out);
                    row.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(n, colsum, 0, 0, &mut Vec::new(), &mut out);
        out
    }
    fn rec(n: usize, colsum: Vec<i8>, mat: &mut Vec<Vec<i8>>, out: &mut Vec<Vec<Vec<i8>>>) {
        if mat.len() == n {
            if colsum.iter().all(|&c| c == 1) {
                out.push(mat.clone());
            }
            return;
        }
        for r in rows_for(n, &colsum) {
            let next = colsum.iter().zip(&r).map(|(c, v)| c + v).collect();
            mat.push(r);
            rec(n, next, mat, out);
            mat.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, vec![0; n], &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Node {
    V(usize, usize),
    Left(usize),
    Right(usize),
    Top(usize),
    Bottom(usize),
}

/// Partner index of each external edge, numbered clockwise from the top-left.
fn link_pattern(a: &[Vec<i8>]) -> Vec<usize> {
    let n = a.len();
    let inside = |i: isize, j: isize| i >= 0 && j >= 0 && (i as usize) < n && (j as usize) < n;
    // An edge is occupied when its head is an even vertex or its tail is odd.
    let occupied = |head: (isize, isize), tail: (isize, isize)| {
        (inside(head.0, head.1) && (head.0 + head.1) % 2 == 0) || (inside(tail.0, tail.1) && (tail.0 + tail.1) % 2 != 0)
    };
    let mut adj: HashMap<Node, Vec<Node>> = HashMap::new();
    let mut add = |u: Node, v: Node| {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    };
    for i in 0..n as isize {
        let mut s = 0;
        for j in 0..=n as isize {
            let right = s == 0;
            let (head, tail) = if right { ((i, j), (i, j - 1)) } else { ((i, j - 1), (i, j)) };
            if occupied(head, tail) {
                let l = if inside(i, j - 1) { Node::V(i as usize, j as usize - 1) } else { Node::Left(i as usize) };
                let r = if inside(i, j) { Node::V(i as usize, j as usize) } else { Node::Right(i as usize) };
                add(l, r);
            }
            if (j as usize) < n {
                s += a[i as usize][j as usize];
            }
        }
    }
    for j in 0..n as isize {
        let mut t = 0;
        for i in 0..=n as isize {
            let down = t == 1;
            let (head, tail) = if down { ((i, j), (i - 1, j)) } else { ((i - 1, j), (i, j)) };
            if occupied(head, tail) {
                let up = if inside(i - 1, j) { Node::V(i as usize - 1, j as usize) } else { Node::Top(j as usize) };
                let dn = if inside(i, j) { Node::V(i as usize, j as usize) } else { Node::Bottom(j as usize) };
                add(up, dn);
            }
            if (i as usize) < n {
                t += a[i as usize][j as usize];
            }
        }
    }
    let order = (0..n)
        .map(Node::Top)
        .chain((0..n).map(Node::Right))
        .chain((0..n).rev().map(Node::Bottom))
        .chain((0..n).rev().map(Node::Left));
    let ext: Vec<Node> = order.filter(|x| adj.contains_key(x)).collect();
    assert_eq!(ext.len(), 2 * n);
    let idx: HashMap<Node, usize> = ext.iter().enumerate().map(|(k, &x)| (x, k)).collect();
    let mut pairs = vec![usize::MAX; 2 * n];
    for &x in &ext {
        if pairs[idx[&x]] != usize::MAX {
            continue;
        }
        let (mut prev, mut cur) = (None, x);
        loop {
            let next = *adj[&cur].iter().find(|&&y| Some(y) != prev).expect("path continues");
            prev = Some(cur);
            cur = next;
            if !matches!(cur, Node::V(..)) {
                break;
            }
        }
        pairs[idx[&x]] = idx[&cur];
        pairs[idx[&cur]] = idx[&x];
    }
    pairs
}

fn from_parens(s: &str) -> Vec<usize> {
    let mut stack = Vec::new();
    let mut p = vec![0; s.len()];
    for (k, ch) in s.chars().enumerate() {
        if ch == '(' {
            stack.push(k);
        } else {
            let o = stack.pop().expect("balanced");
            p[o] = k;
            p[k] = o;
        }
    }
    p
}

fn nest(k: usize) -> String {
    "(".repeat(k) + &")".repeat(k)
}

struct Census {
    by_size: Vec<HashMap<Vec<usize>, u64>>,
}

impl Census {
    fn new(max_n: usize) -> Self {
        let by_size = (0..=max_n)
            .map(|n| {
                let mut counts = HashMap::new();
                if n == 0 {
                    counts.insert(Vec::new(), 1);
                    return counts;
                }
                for a in asms(n) {
                    *counts.entry(link_pattern(&a)).or_insert(0) += 1;
                }
                counts
            })
            .collect();
        Census { by_size }
    }

    fn count(&self, pattern: &str) -> BigInt {
        let n = pattern.len() / 2;
        BigInt::from(self.by_size[n].get(&from_parens(pattern)).copied().unwrap_or(0))
    }
}

fn tuples(len: usize, total: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=total)
        .flat_map(|first| {
            tuples(len - 1, total - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

#[test]
fn census_sizes_are_asm_numbers() {
    let census = Census::new(6);
    for (n, counts) in census.by_size.iter().enumerate() {
        let total: u64 = counts.values().sum();
        assert_eq!(BigInt::from(total), asm_number(n), "n={n}");
    }
}

#[test]
fn nested_bundles_match_enumeration() {
    let census = Census::new(6);
    for n in 1..=6 {
        for t in tuples(3, n) {
            let pat = nest(t[0]) + &nest(t[1]) + &nest(t[2]);
            assert_eq!(fpl_nested3(t[0], t[1], t[2]), census.count(&pat), "{t:?}");
        }
        for t in tuples(4, n) {
            let pat = nest(t[0]) + &nest(t[1]) + &nest(t[2]) + &nest(t[3]);
            assert_eq!(fpl_nested4(t[0], t[1], t[2], t[3]).unwrap(), census.count(&pat), "{t:?}");
        }
        for t in tuples(5, n) {
            let (a, b, e, c, d) = (t[0], t[1], t[2], t[3], t[4]);
            let pat = nest(a) + &nest(b) + &"(".repeat(e) + &nest(c) + &nest(d) + &")".repeat(e);
            assert_eq!(fpl_nested5(a, b, e, c, d).unwrap(), census.count(&pat), "{t:?}");
        }
    }
}

#[test]
fn small_arches_give_the_previous_asm_number() {
    let census = Census::new(6);
    for p in 1..=6 {
        assert_eq!(census.count(&"()".repeat(p)), asm_number(p - 1), "p={p}");
    }
    // Five separate small arches are not the separated five-bundle pattern.
    assert_eq!(census.count(&"()".repeat(5)), BigInt::from(42));
    assert_eq!(fpl_nested5(1, 1, 1, 1, 1).unwrap(), census.count("()()(()())"));
}
