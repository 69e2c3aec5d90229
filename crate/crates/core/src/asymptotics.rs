//! Growth of FPL counts `()_r^p` (`p` bundles of `r` nested arches) against
//! `log # ~ kappa r^2 ((p-1)^2 - 1)` with `kappa = log(27/16) / 2`.
//!
//! Logarithms of exact counts are evaluated in decimal fixed point, so counts
//! with thousands of digits never pass through floating point.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{char_poly, IntMatrix};
use crate::fpl::{fpl_nested4, fpl_nested5};
use crate::oracles::asm_number;
use crate::tiling::macmahon_product;
use crate::transfer;

/// Extra digits carried through intermediate steps and dropped at the end.
const GUARD_DIGITS: u32 = 12;

/// Default number of decimal digits for reported logarithms.
pub const DEFAULT_DIGITS: u32 = 30;

/// Fixed-point decimal `scaled / 10^digits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal {
    scaled: BigInt,
    digits: u32,
}

fn pow10(d: u32) -> BigInt {
    BigInt::from(10u32).pow(d)
}

impl Decimal {
    pub fn from_int(v: impl Into<BigInt>, digits: u32) -> Self {
        Decimal { scaled: v.into() * pow10(digits), digits }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Truncates toward zero to `digits` decimals.
    pub fn truncate(&self, digits: u32) -> Decimal {
        if digits >= self.digits {
            return Decimal { scaled: &self.scaled * pow10(digits - self.digits), digits };
        }
        let scaled = &self.scaled / pow10(self.digits - digits);
        Decimal { scaled, digits }
    }

    pub fn div_int(&self, d: impl Into<BigInt>) -> Decimal {
        Decimal { scaled: &self.scaled / d.into(), digits: self.digits }
    }

    pub fn mul_int(&self, m: impl Into<BigInt>) -> Decimal {
        Decimal { scaled: &self.scaled * m.into(), digits: self.digits }
    }

    /// Quotient at the precision of `self`.
    pub fn div(&self, other: &Decimal) -> Result<Decimal> {
        if other.scaled.is_zero() {
            return Err(Error::Parameter("division by zero".into()));
        }
        let num = &self.scaled * pow10(other.digits);
        Ok(Decimal { scaled: num / &other.scaled, digits: self.digits })
    }

    pub fn add(&self, other: &Decimal) -> Decimal {
        let d = self.digits.max(other.digits);
        let (a, b) = (self.truncate(d), other.truncate(d));
        Decimal { scaled: a.scaled + b.scaled, digits: d }
    }

    pub fn sub(&self, other: &Decimal) -> Decimal {
        self.add(&Decimal { scaled: -other.scaled.clone(), digits: other.digits })
    }

    pub fn to_f64(&self) -> f64 {
        self.to_string().parse().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (int, frac) = self.scaled.abs().div_rem(&pow10(self.digits));
        let sign = if self.scaled.sign() == Sign::Minus { "-" } else { "" };
        if self.digits == 0 {
            return write!(f, "{sign}{int}");
        }
        write!(f, "{sign}{int}.{:0>width$}", frac.to_string(), width = self.digits as usize)
    }
}

/// `atanh(num/den)` for `0 <= num/den < 1`, at `digits` decimals.
fn atanh_ratio(num: &BigInt, den: &BigInt, digits: u32) -> Decimal {
    let one = pow10(digits);
    let z = num * &one / den;
    let z2 = &z * &z / &one;
    let mut term = z;
    let mut sum = BigInt::zero();
    let mut k = 1u64;
    while !term.is_zero() {
        sum += &term / k;
        term = term * &z2 / &one;
        k += 2;
    }
    Decimal { scaled: sum, digits }
}

/// Natural logarithm of `num/den > 0` to `digits` decimals (truncated).
pub fn ln_ratio(num: &BigInt, den: &BigInt, digits: u32) -> Result<Decimal> {
    if !num.is_positive() || !den.is_positive() {
        return Err(Error::Parameter(format!("log of non-positive ratio {num}/{den}")));
    }
    let work = digits + GUARD_DIGITS;
    // Reduce to a ratio in [1, 2) by a power of two, then
    // ln(m) = 2 atanh((m - 1)/(m + 1)) and ln 2 = 2 atanh(1/3).
    let shift = num.bits() as i64 - den.bits() as i64;
    let (mut n, mut d) = (num.clone(), den.clone());
    if shift >= 0 {
        d <<= shift as u64;
    } else {
        n <<= (-shift) as u64;
    }
    let mut k = shift;
    if n < d {
        n <<= 1u64;
        k -= 1;
    }
    let ln_m = atanh_ratio(&(&n - &d), &(&n + &d), work).mul_int(2);
    let ln2 = atanh_ratio(&BigInt::one(), &BigInt::from(3), work).mul_int(2);
    Ok(ln_m.add(&ln2.mul_int(k)).truncate(digits))
}

pub fn ln_bigint(x: &BigInt, digits: u32) -> Result<Decimal> {
    ln_ratio(x, &BigInt::one(), digits)
}

/// `kappa = log(27/16) / 2 = atanh(11/43)`.
pub fn kappa(digits: u32) -> Decimal {
    atanh_ratio(&BigInt::from(11), &BigInt::from(43), digits + GUARD_DIGITS).truncate(digits)
}

/// Exact count of `()_r^p` where a determinant formula is available.
///
/// `r = 1` is the ASM number `A_{p-1}`; `p = 2, 3, 4` come from the trivial
/// pattern, the MacMahon product and the four-bundle determinant. Everything
/// else is reference data only.
pub fn count_p_r(p: usize, r: usize) -> Result<BigInt> {
    if p == 0 || r == 0 {
        return Err(Error::Parameter(format!("p and r must be positive, got p={p} r={r}")));
    }
    match (p, r) {
        (_, 1) => Ok(asm_number(p - 1)),
        (1, _) | (2, _) => Ok(BigInt::one()),
        (3, _) => Ok(macmahon_product(r, r, r)),
        (4, _) => fpl_nested4(r, r, r, r),
        _ => Err(Error::Unsupported(format!(
            "no determinant formula for ()^{p}_{r}; the reference value is data only"
        ))),
    }
}

/// The five-bundle determinant evaluated on equal bundles `(r, r | r | r, r)`.
pub fn five_bundle_determinant(r: usize) -> Result<BigInt> {
    fpl_nested5(r, r, r, r, r)
}

/// Growth estimates from one exact count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthEstimate {
    pub p: usize,
    pub r: usize,
    pub count: BigInt,
    pub log_count: Decimal,
    /// `log # / (r^2 ((p-1)^2 - 1))`, to be compared with `kappa`; absent for `p = 2`.
    pub kappa_ratio: Option<Decimal>,
    /// `log # / (r^2 log(27/16))`, the row exponent `alpha_p`.
    pub alpha: Decimal,
}

pub fn conjecture_ratio(p: usize, r: usize, digits: u32) -> Result<GrowthEstimate> {
    let count = count_p_r(p, r)?;
    growth_estimate(p, r, count, digits)
}

pub fn growth_estimate(p: usize, r: usize, count: BigInt, digits: u32) -> Result<GrowthEstimate> {
    let work = digits + GUARD_DIGITS;
    let log_count = ln_bigint(&count, work)?;
    let r2 = (r * r) as u64;
    let norm = ((p as i64 - 1).pow(2) - 1) * r2 as i64;
    let kappa_ratio = (norm != 0).then(|| log_count.div_int(norm).truncate(digits));
    let ln27_16 = kappa(work).mul_int(2);
    let alpha = log_count.div_int(r2).div(&ln27_16)?.truncate(digits);
    Ok(GrowthEstimate { p, r, count, log_count: log_count.truncate(digits), kappa_ratio, alpha })
}

/// `log A_n / (kappa n^2)`, which tends to 1.
pub fn asm_growth_ratio(n: usize, digits: u32) -> Result<Decimal> {
    if n == 0 {
        return Err(Error::Parameter("n must be positive".into()));
    }
    let work = digits + GUARD_DIGITS;
    let log_a = ln_bigint(&asm_number(n), work)?;
    let denom = kappa(work).mul_int((n * n) as u64);
    Ok(log_a.div(&denom)?.truncate(digits))
}

/// Coefficient of `x^r` in `det(x I + T(2r)^2)`.
pub fn four_arch_middle(r: usize) -> Result<BigInt> {
    let t = transfer::t(2 * r, 2 * r);
    let neg_sq = IntMatrix::product(&[&t, &t])?.scale(&BigInt::from(-1));
    let coeffs = char_poly(&neg_sq)?;
    Ok(coeffs[r].clone())
}

/// Where a reference table value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// Reproduced by [`count_p_r`].
    Computed,
    /// Shipped as data; no formula in this crate produces it.
    DataOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub p: usize,
    pub r: usize,
    pub value: BigInt,
    pub source: Source,
}

const TABLE1: &[(usize, usize, &str)] = &[
    (2, 1, "1"),
    (2, 2, "1"),
    (2, 3, "1"),
    (2, 4, "1"),
    (3, 1, "2"),
    (3, 2, "20"),
    (3, 3, "980"),
    (3, 4, "232848"),
    (4, 1, "7"),
    (4, 2, "3504"),
    (4, 3, "118565449"),
    (4, 4, "266866085641550"),
    (5, 1, "42"),
    (5, 2, "5100260"),
    (5, 3, "1637273349805800"),
    (6, 1, "429"),
    (6, 2, "60908609580"),
    (7, 1, "7436"),
    (7, 2, "5939300380261111"),
    (8, 1, "218348"),
    (8, 2, "4717858636573174999768"),
];

/// Reference counts of `()_r^p`, each tagged with its source.
pub fn table1_reference() -> Vec<TableEntry> {
    TABLE1
        .iter()
        .map(|&(p, r, v)| TableEntry {
            p,
            r,
            value: v.parse().expect("table literal"),
            source: if r == 1 || p <= 4 { Source::Computed } else { Source::DataOnly },
        })
        .collect()
}

pub fn table1_lookup(p: usize, r: usize) -> Option<TableEntry> {
    table1_reference().into_iter().find(|e| e.p == p && e.r == r)
}
