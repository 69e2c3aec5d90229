use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent triple `mu^mu * u^u * s^s` with `s^6 = q`.
///
/// Ordering is lexicographic in `(mu, u, s)`; it is a monomial order on the
/// Laurent group, which is what exact division relies on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub mu: u32,
    pub u: u32,
    pub s: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { mu: 0, u: 0, s: 0 };

    pub fn new(mu: u32, u: u32, s: i32) -> Self {
        Monomial { mu, u, s }
    }

    /// Monomial in `q` alone, `q^k = s^(6k)`.
    pub fn q(k: i32) -> Self {
        Monomial { mu: 0, u: 0, s: 6 * k }
    }

    fn checked_mul(self, other: Monomial) -> Option<Monomial> {
        Some(Monomial {
            mu: self.mu.checked_add(other.mu)?,
            u: self.u.checked_add(other.u)?,
            s: self.s.checked_add(other.s)?,
        })
    }

    fn mul(self, other: Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    fn checked_div(self, other: Monomial) -> Option<Monomial> {
        Some(Monomial {
            mu: self.mu.checked_sub(other.mu)?,
            u: self.u.checked_sub(other.u)?,
            s: self.s.checked_sub(other.s)?,
        })
    }
}

/// Integer Laurent polynomial in `mu`, `u` (non-negative powers) and `s`
/// (any power, `s^6 = q`). No zero coefficient is ever stored, so structural
/// equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::monomial(Monomial::ONE, c)
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn mu() -> Self {
        LaurentPoly::monomial(Monomial::new(1, 0, 0), 1)
    }

    pub fn u() -> Self {
        LaurentPoly::monomial(Monomial::new(0, 1, 0), 1)
    }

    /// `s^k = q^(k/6)`.
    pub fn s_pow(k: i32) -> Self {
        LaurentPoly::monomial(Monomial::new(0, 0, k), 1)
    }

    pub fn q_pow(k: i32) -> Self {
        LaurentPoly::monomial(Monomial::q(k), 1)
    }

    /// Builds a polynomial from arbitrary terms, merging repeats and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (m, c) in terms {
            p.add_term(m, &c.into());
        }
        p
    }

    /// `sum_k coeffs[k] q^k`.
    pub fn from_q_coeffs(coeffs: &[BigInt]) -> Self {
        LaurentPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::q(k as i32), c.clone())),
        )
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mu: u32, u: u32, s: i32) -> BigInt {
        self.terms
            .get(&Monomial::new(mu, u, s))
            .cloned()
            .unwrap_or_default()
    }

    /// The value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// Lex-largest term.
    pub fn leading(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn contains_mu(&self) -> bool {
        self.terms.keys().any(|m| m.mu > 0)
    }

    pub fn contains_u(&self) -> bool {
        self.terms.keys().any(|m| m.u > 0)
    }

    pub fn mu_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.mu).max()
    }

    /// All `s`-exponents are multiples of 6: no fractional power of `q` survives.
    pub fn is_q_integral(&self) -> bool {
        self.terms.keys().all(|m| m.s % 6 == 0)
    }

    /// No negative power of `s`.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.s >= 0)
    }

    /// Coefficient of `mu^d` as a polynomial in the remaining variables.
    pub fn mu_coeff(&self, d: u32) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.mu == d)
                .map(|(m, c)| (Monomial { mu: 0, ..*m }, c.clone()))
                .collect(),
        }
    }

    /// Coefficients of `mu^0, mu^1, ..., mu^deg`.
    pub fn mu_coeffs(&self) -> Vec<LaurentPoly> {
        match self.mu_degree() {
            None => Vec::new(),
            Some(deg) => (0..=deg).map(|d| self.mu_coeff(d)).collect(),
        }
    }

    fn substitute(&self, f: impl Fn(Monomial) -> Monomial) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (f(*m), c.clone())))
    }

    pub fn subs_mu_one(&self) -> LaurentPoly {
        self.substitute(|m| Monomial { mu: 0, ..m })
    }

    pub fn subs_u_one(&self) -> LaurentPoly {
        self.substitute(|m| Monomial { u: 0, ..m })
    }

    /// `q := 1`, i.e. `s := 1`.
    pub fn subs_q_one(&self) -> LaurentPoly {
        self.substitute(|m| Monomial { s: 0, ..m })
    }

    /// Sum of all coefficients: every variable set to 1.
    pub fn eval_all_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `q -> q^k` (every `s`-exponent times `k`).
    pub fn scale_s(&self, k: i32) -> LaurentPoly {
        self.substitute(|m| Monomial { s: m.s * k, ..m })
    }

    pub fn mul_monomial(&self, m: Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    /// Dense coefficient list of a polynomial in `q` alone with non-negative powers.
    pub fn q_coeffs(&self) -> Result<Vec<BigInt>> {
        let mut out: Vec<BigInt> = Vec::new();
        for (m, c) in &self.terms {
            if m.mu != 0 || m.u != 0 || m.s < 0 || m.s % 6 != 0 {
                return Err(Error::Consistency(format!(
                    "{self} is not a polynomial in q alone"
                )));
            }
            let k = (m.s / 6) as usize;
            if out.len() <= k {
                out.resize(k + 1, BigInt::zero());
            }
            out[k] = c.clone();
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> LaurentPoly {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn add_term(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn sub_shifted(&mut self, other: &LaurentPoly, shift: Monomial, scale: &BigInt) {
        for (m, c) in &other.terms {
            let t = m.mul(shift);
            let slot = self.terms.entry(t).or_insert_with(BigInt::zero);
            *slot -= c * scale;
            if slot.is_zero() {
                self.terms.remove(&t);
            }
        }
    }

    fn exponent_box(&self) -> [(i64, i64); 3] {
        let mut b = [(i64::MAX, i64::MIN); 3];
        for m in self.terms.keys() {
            for (slot, v) in b.iter_mut().zip([m.mu as i64, m.u as i64, m.s as i64]) {
                slot.0 = slot.0.min(v);
                slot.1 = slot.1.max(v);
            }
        }
        b
    }

    /// Exact division in `Z[mu, u, s, 1/s]`.
    ///
    /// Long division by the lex-leading term. The per-variable degree of a
    /// product is additive, so every quotient exponent must lie in the box
    /// `[min(self) - min(d), max(self) - max(d)]`; anything outside it proves
    /// the division inexact and also bounds the loop.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (dlead, dcoeff) = divisor.leading().ok_or(Error::InexactDivision)?;
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if divisor.terms.len() == 1 {
            let mut out = BTreeMap::new();
            for (m, c) in &self.terms {
                let qm = m.checked_div(dlead).ok_or(Error::InexactDivision)?;
                out.insert(qm, super::ring::Ring::div_exact(c, dcoeff)?);
            }
            return Ok(LaurentPoly { terms: out });
        }
        let nb = self.exponent_box();
        let db = divisor.exponent_box();
        let bounds: Vec<(i64, i64)> = nb
            .iter()
            .zip(db.iter())
            .map(|(n, d)| (n.0 - d.0, n.1 - d.1))
            .collect();
        if bounds.iter().any(|(lo, hi)| lo > hi) {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((lead, lc)) = rem.leading() {
            let qm = lead.checked_div(dlead).ok_or(Error::InexactDivision)?;
            let within = [qm.mu as i64, qm.u as i64, qm.s as i64]
                .iter()
                .zip(bounds.iter())
                .all(|(v, (lo, hi))| lo <= v && v <= hi);
            if !within {
                return Err(Error::InexactDivision);
            }
            let (qc, r) = lc.div_rem(dcoeff);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            rem.sub_shifted(divisor, qm, &qc);
            quot.terms.insert(qm, qc);
        }
        Ok(quot)
    }
}

impl super::ring::Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }

    fn one() -> Self {
        LaurentPoly::one()
    }

    fn from_i64(v: i64) -> Self {
        LaurentPoly::constant(v)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        LaurentPoly::div_exact(self, divisor)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.sub_shifted(rhs, Monomial::ONE, &BigInt::one());
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(*mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn write_q_power(f: &mut fmt::Formatter<'_>, s: i32) -> fmt::Result {
    let g = s.gcd(&6);
    let (num, den) = (s / g, 6 / g);
    match (num, den) {
        (1, 1) => write!(f, "q"),
        (n, 1) => write!(f, "q^{n}"),
        (n, d) => write!(f, "q^({n}/{d})"),
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in increasing `(mu, u, s)` order, e.g. `1 + 3*mu + mu^2*q^(1/3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mut factors = 0;
            if !mag.is_one() || *m == Monomial::ONE {
                write!(f, "{mag}")?;
                factors += 1;
            }
            let sep = |f: &mut fmt::Formatter<'_>, n: &mut i32| {
                let r = if *n > 0 { write!(f, "*") } else { Ok(()) };
                *n += 1;
                r
            };
            if m.mu > 0 {
                sep(f, &mut factors)?;
                match m.mu {
                    1 => write!(f, "mu")?,
                    k => write!(f, "mu^{k}")?,
                }
            }
            if m.u > 0 {
                sep(f, &mut factors)?;
                match m.u {
                    1 => write!(f, "u")?,
                    k => write!(f, "u^{k}")?,
                }
            }
            if m.s != 0 {
                sep(f, &mut factors)?;
                write_q_power(f, m.s)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Largest exponent magnitude accepted by the text parser.
const MAX_PARSED_EXPONENT: i64 = 1 << 20;

struct PolyParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn err<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!("{what} at byte {}", self.pos)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        // ASCII digits are valid UTF-8.
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn small_int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let d = self.digits()?;
        let v: i64 = match d.parse() {
            Ok(v) if v <= MAX_PARSED_EXPONENT => v,
            _ => return self.err("exponent too large"),
        };
        Ok(if neg { -v } else { v })
    }

    /// Exponent as a rational `num/den`.
    fn exponent(&mut self) -> Result<(i64, i64)> {
        if self.eat(b'(') {
            let num = self.small_int()?;
            let den = if self.eat(b'/') { self.small_int()? } else { 1 };
            if !self.eat(b')') {
                return self.err("expected ')'");
            }
            if den == 0 {
                return self.err("zero denominator");
            }
            Ok((num, den))
        } else {
            Ok((self.small_int()?, 1))
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        (start != self.pos).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn factor(&mut self, coeff: &mut BigInt, mono: &mut Monomial) -> Result<()> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let d = self.digits()?;
                *coeff *= BigInt::from_str(d).map_err(|e| Error::Parse(e.to_string()))?;
                Ok(())
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let name = self.ident().unwrap();
                let (num, den) = if self.eat(b'^') { self.exponent()? } else { (1, 1) };
                let whole = |p: &Self| -> Result<i64> {
                    if num % den != 0 {
                        return p.err("fractional exponent");
                    }
                    Ok(num / den)
                };
                let overflow = || Error::Parse("exponent overflow".into());
                match name {
                    "mu" | "u" => {
                        let e = whole(self)?;
                        let e = u32::try_from(e)
                            .map_err(|_| Error::Parse(format!("negative power of {name}")))?;
                        let slot = if name == "mu" { &mut mono.mu } else { &mut mono.u };
                        *slot = slot.checked_add(e).ok_or_else(overflow)?;
                    }
                    "q" | "s" => {
                        let scale = if name == "q" { 6 } else { 1 };
                        if (num * scale) % den != 0 {
                            return self.err("q-exponent not a multiple of 1/6");
                        }
                        let e = i32::try_from(num * scale / den).map_err(|_| overflow())?;
                        mono.s = mono.s.checked_add(e).ok_or_else(overflow)?;
                    }
                    _ => return self.err("unknown variable"),
                }
                Ok(())
            }
            _ => self.err("expected a number or variable"),
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut coeff = BigInt::one();
        let mut mono = Monomial::ONE;
        self.factor(&mut coeff, &mut mono)?;
        while self.eat(b'*') {
            self.factor(&mut coeff, &mut mono)?;
        }
        Ok((mono, coeff))
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        let mut negative = self.eat(b'-');
        if !negative {
            self.eat(b'+');
        }
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, &if negative { -c } else { c });
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return self.err("trailing input");
        }
        Ok(out)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) syntax: `+`/`-` separated terms of
    /// `*`-joined integers and powers of `mu`, `u`, `q` (exponent `k`, `-k` or
    /// `(n/d)` with `6n/d` integral) and `s`.
    fn from_str(s: &str) -> Result<Self> {
        PolyParser { src: s.as_bytes(), pos: 0 }.poly()
    }
}
