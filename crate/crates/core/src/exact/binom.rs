use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::LaurentPoly;

/// `C(n, k)`, zero-extended: 0 whenever `n < 0`, `k < 0` or `k > n`.
///
/// The reflection-principle and ceiling matrices rely on the zero extension
/// to drop out-of-range terms without special cases.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Number of size-`k` multisets from `m` kinds, `C(m-1+k, k)` with the
/// convention that the empty multiset exists for every `m >= 0`.
pub fn multichoose(m: i64, k: i64) -> BigInt {
    if m < 0 || k < 0 {
        return BigInt::zero();
    }
    if k == 0 {
        return BigInt::one();
    }
    binomial(m - 1 + k, k)
}

/// Gaussian binomial `[a choose b]_q` as a polynomial in `q`; 0 outside `0 <= b <= a`.
pub fn q_binomial(a: i64, b: i64) -> LaurentPoly {
    LaurentPoly::from_q_coeffs(&q_binomial_coeffs(a, b))
}

/// Dense coefficients of `[a choose b]_q`, built from
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
pub(crate) fn q_binomial_coeffs(a: i64, b: i64) -> Vec<BigInt> {
    if a < 0 || b < 0 || b > a {
        return Vec::new();
    }
    let (a, b) = (a as usize, b as usize);
    // row[k] holds [n, k] for the current n.
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=a {
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity((n + 1).min(b + 1));
        for k in 0..=n.min(b) {
            let deg = k * (n - k);
            let mut c = vec![BigInt::zero(); deg + 1];
            if k >= 1 {
                for (i, v) in row[k - 1].iter().enumerate() {
                    c[i] += v;
                }
            }
            if k < n && k < row.len() {
                for (i, v) in row[k].iter().enumerate() {
                    c[i + k] += v;
                }
            }
            next.push(c);
        }
        row = next;
    }
    row.swap_remove(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(1, -1), BigInt::zero());
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn pascal_rule_on_zero_extended_domain() {
        for n in -50..=50i64 {
            for k in -50..=50i64 {
                // The zero extension breaks Pascal's rule only at (0, 0).
                if n == 0 && k == 0 {
                    continue;
                }
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k) + binomial(n - 1, k - 1),
                    "C({n},{k})"
                );
            }
        }
    }

    #[test]
    fn multichoose_keeps_the_empty_multiset() {
        assert_eq!(multichoose(0, 0), BigInt::one());
        assert_eq!(multichoose(0, 3), BigInt::zero());
        assert_eq!(multichoose(3, 2), BigInt::from(6));
        assert_eq!(multichoose(1, 5), BigInt::one());
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(2, 1), "1 + q".parse().unwrap());
        assert_eq!(q_binomial(4, 2), "1 + q + 2*q^2 + q^3 + q^4".parse().unwrap());
        assert!(q_binomial(3, 5).is_zero());
        assert!(q_binomial(-1, 0).is_zero());
        assert_eq!(q_binomial(5, 0), LaurentPoly::one());
    }

    #[test]
    fn q_binomial_is_palindromic_and_specializes() {
        for a in 0..12 {
            for b in 0..=a {
                let c = q_binomial_coeffs(a, b);
                assert_eq!(c.len() as i64, b * (a - b) + 1);
                let mut rev = c.clone();
                rev.reverse();
                assert_eq!(c, rev);
                assert_eq!(c.iter().sum::<BigInt>(), binomial(a, b));
            }
        }
    }
}
