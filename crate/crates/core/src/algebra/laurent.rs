//! Sparse Laurent polynomials in `q^{1/2}` with exact rational coefficients.
//!
//! Exponents are stored doubled: the key `k` stands for `q^{k/2}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use super::series::TruncSeries;
use crate::error::ParseError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfLaurent {
    terms: BTreeMap<i64, BigRational>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    /// `c · q^{half_exp/2}`.
    pub fn monomial(c: BigRational, half_exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(half_exp, c);
        }
        Self { terms }
    }

    /// `sign · q^{half_exp/2}` with an integer coefficient.
    pub fn int_monomial(c: i64, half_exp: i64) -> Self {
        Self::monomial(BigRational::from_integer(c.into()), half_exp)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::int_monomial(1, 2)
    }

    /// `q^{1/2} - q^{-1/2}`.
    pub fn z() -> Self {
        Self::int_monomial(1, 1) - Self::int_monomial(1, -1)
    }

    /// Builds a polynomial from `(half_exp, coefficient)` pairs; repeated exponents accumulate.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(k, c)| (k, BigRational::from_integer(c.into()))),
        )
    }

    fn add_term(&mut self, k: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Iterates `(half_exp, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, half_exp: i64) -> BigRational {
        self.terms
            .get(&half_exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Single nonzero term, i.e. a unit of the Laurent ring.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Inverse of a monomial; `None` for anything that is not a unit.
    pub fn inverse_monomial(&self) -> Option<Self> {
        if !self.is_monomial() {
            return None;
        }
        let (k, c) = self.terms.iter().next()?;
        Some(Self::monomial(c.recip(), -k))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplies by `q^{shift/2}`.
    pub fn shift(&self, half_shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (k + half_shift, v.clone())).collect(),
        }
    }

    /// Integer power; negative powers are only defined for monomials.
    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inverse_monomial()? } else { self.clone() };
        let mut acc = Self::one();
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &b;
            }
            n >>= 1;
            if n > 0 {
                b = &b * &b;
            }
        }
        Some(acc)
    }

    /// The mirror substitution `q ↦ q^{-1}`.
    pub fn involute(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (-k, v.clone())).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Substitutes `q = e^x` and expands through `x^order`.
    pub fn expand(&self, order: usize) -> TruncSeries {
        let mut coeffs = vec![BigRational::zero(); order + 1];
        let two = BigInt::from(2);
        for (k, c) in &self.terms {
            // (k/2)^t / t!
            let rate = BigRational::new(BigInt::from(*k), two.clone());
            let mut term = c.clone();
            for (t, slot) in coeffs.iter_mut().enumerate() {
                if t > 0 {
                    term = term * &rate / BigRational::from_integer(BigInt::from(t));
                }
                *slot += &term;
            }
        }
        TruncSeries::from_coeffs(coeffs)
    }

    /// Exact quotient `self / divisor` in the Laurent ring, or `None` when it does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(inv) = divisor.inverse_monomial() {
            return Some(self * &inv);
        }
        // Long division on the highest exponent; stop once the remainder is
        // narrower than the divisor.
        let (d_top, d_lead) = divisor.terms.iter().next_back().map(|(k, c)| (*k, c.clone()))?;
        let d_bottom = divisor.min_exp()?;
        let d_span = d_top - d_bottom;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let (Some(r_top), Some(r_bottom)) = (rem.max_exp(), rem.min_exp()) {
            if r_top - r_bottom < d_span {
                return None;
            }
            let c = rem.coeff(r_top) / &d_lead;
            let t = Self::monomial(c, r_top - d_top);
            rem -= &(&t * divisor);
            quot += &t;
        }
        Some(quot)
    }

    /// Sum `-(q^{(2n-1)/2} + ... + q^{-(2n-1)/2})` style ratio `(q^{-n} - q^{n}) / (q^{1/2} - q^{-1/2})`.
    pub fn homfly_unlink_ratio(n: i64) -> Self {
        let num = Self::int_monomial(1, -2 * n) - Self::int_monomial(1, 2 * n);
        num.div_exact(&Self::z())
            .expect("q^-n - q^n is divisible by q^(1/2) - q^(-1/2)")
    }
}

impl From<i64> for HalfLaurent {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<BigRational> for HalfLaurent {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&HalfLaurent> for HalfLaurent {
    fn add_assign(&mut self, rhs: &HalfLaurent) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl SubAssign<&HalfLaurent> for HalfLaurent {
    fn sub_assign(&mut self, rhs: &HalfLaurent) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, -c.clone());
        }
    }
}

impl Add<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&HalfLaurent> for &HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                out.add_term(ka + kb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        HalfLaurent {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<HalfLaurent> for HalfLaurent {
            type Output = HalfLaurent;
            fn $m(self, rhs: HalfLaurent) -> HalfLaurent {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&HalfLaurent> for HalfLaurent {
            type Output = HalfLaurent;
            fn $m(self, rhs: &HalfLaurent) -> HalfLaurent {
                (&self).$m(rhs)
            }
        }
        impl $tr<HalfLaurent> for &HalfLaurent {
            type Output = HalfLaurent;
            fn $m(self, rhs: HalfLaurent) -> HalfLaurent {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

impl std::iter::Sum for HalfLaurent {
    fn sum<I: Iterator<Item = HalfLaurent>>(iter: I) -> Self {
        iter.fold(HalfLaurent::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_power(k: i64) -> String {
    match k {
        0 => String::new(),
        2 => "q".to_string(),
        k if k % 2 == 0 => format!("q^{}", k / 2),
        k => format!("q^({}/2)", k),
    }
}

/// Ascending exponents, e.g. `-q^-4 + q^-3 + q^-1`, `2*q^(3/2)`, `1/2 - q`.
impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let power = fmt_power(*k);
            if power.is_empty() {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&power)?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), power)?;
            }
        }
        Ok(())
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ParseError> {
    let bad = || ParseError::Polynomial(format!("bad coefficient `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_power(s: &str) -> Result<i64, ParseError> {
    let bad = || ParseError::Polynomial(format!("bad power `{s}`"));
    if s == "q" {
        return Ok(2);
    }
    let rest = s.strip_prefix("q^").ok_or_else(bad)?;
    if let Some(inner) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let (n, d) = inner.split_once('/').ok_or_else(bad)?;
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        match d.trim() {
            "2" => Ok(n),
            "1" => Ok(2 * n),
            _ => Err(bad()),
        }
    } else {
        let e: i64 = rest.parse().map_err(|_| bad())?;
        Ok(2 * e)
    }
}

fn parse_term(s: &str) -> Result<(i64, BigRational), ParseError> {
    if s.is_empty() {
        return Err(ParseError::Polynomial("empty term".into()));
    }
    if let Some((c, p)) = s.split_once('*') {
        Ok((parse_power(p.trim())?, parse_rational(c.trim())?))
    } else if s.starts_with('q') {
        Ok((parse_power(s)?, BigRational::one()))
    } else {
        Ok((0, parse_rational(s)?))
    }
}

impl FromStr for HalfLaurent {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseError::Polynomial("empty input".into()));
        }
        // Split on top-level '+'/'-' that are not part of an exponent.
        let mut out = HalfLaurent::zero();
        let bytes: Vec<char> = s.chars().collect();
        let mut sign_neg = false;
        let mut start = 0;
        let mut i = 0;
        if bytes[0] == '-' || bytes[0] == '+' {
            sign_neg = bytes[0] == '-';
            start = 1;
            i = 1;
        }
        let mut depth = 0;
        while i <= bytes.len() {
            let at_end = i == bytes.len();
            let ch = if at_end { ' ' } else { bytes[i] };
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            let is_sep = !at_end
                && depth == 0
                && (ch == '+' || ch == '-')
                && i > start
                && bytes[i - 1] != '^';
            if at_end || is_sep {
                let text: String = bytes[start..i].iter().collect();
                let (k, c) = parse_term(text.trim())?;
                out.add_term(k, if sign_neg { -c } else { c });
                if !at_end {
                    sign_neg = ch == '-';
                    start = i + 1;
                }
            }
            i += 1;
        }
        Ok(out)
    }
}

impl HalfLaurent {
    /// Integer coefficients as `(half_exp, i64)`; `None` when a coefficient is fractional or too large.
    pub fn to_int_terms(&self) -> Option<Vec<(i64, i64)>> {
        self.terms
            .iter()
            .map(|(k, c)| {
                if c.is_integer() {
                    c.numer().to_i64().map(|v| (*k, v))
                } else {
                    None
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> HalfLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn square_of_z() {
        let z = HalfLaurent::z();
        assert_eq!(&z * &z, p("q^-1 - 2 + q"));
    }

    #[test]
    fn multiply_by_one_and_difference_of_squares() {
        let a = p("3*q^(5/2) - q^-1");
        assert_eq!(&a * &HalfLaurent::one(), a);
        assert_eq!(p("q - 1") * p("q + 1"), p("q^2 - 1"));
    }

    #[test]
    fn involution() {
        assert_eq!(p("q^2 - q").involute(), p("q^-2 - q^-1"));
        let pal = p("q - 1 + q^-1");
        assert_eq!(pal.involute(), pal);
        let a = p("2*q^(3/2) - 1/3*q^-5");
        assert_eq!(a.involute().involute(), a);
    }

    #[test]
    fn value_at_one() {
        assert_eq!(p("q - 1 + q^-1").eval_one(), BigRational::one());
        let six_one = p("q^-4 - q^-3 + q^-2 - 2*q^-1 + 2 - q + q^2");
        assert_eq!(six_one.eval_one(), BigRational::one());
        assert!(HalfLaurent::zero().eval_one().is_zero());
    }

    #[test]
    fn expansion_examples() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let e = HalfLaurent::q().expand(2);
        assert_eq!(e.coeffs(), &[r(1, 1), r(1, 1), r(1, 2)]);
        let e = HalfLaurent::z().expand(1);
        assert_eq!(e.coeffs(), &[r(0, 1), r(1, 1)]);
        let e = HalfLaurent::one().expand(5);
        assert_eq!(e.coeff(0), r(1, 1));
        assert!((1..=5).all(|t| e.coeff(t).is_zero()));
    }

    #[test]
    fn display_format() {
        assert_eq!(p("-q^-4 + q^-3 + q^-1").to_string(), "-q^-4 + q^-3 + q^-1");
        assert_eq!(
            p("q^-4 - q^-3 + q^-2 - 2*q^-1 + 2 - q + q^2").to_string(),
            "q^-4 - q^-3 + q^-2 - 2*q^-1 + 2 - q + q^2"
        );
        assert_eq!(HalfLaurent::z().to_string(), "-q^(-1/2) + q^(1/2)");
        assert_eq!(HalfLaurent::zero().to_string(), "0");
        assert_eq!(p("1/2*q^(3/2) - 3/4").to_string(), "-3/4 + 1/2*q^(3/2)");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<HalfLaurent>().is_err());
        assert!("q^x".parse::<HalfLaurent>().is_err());
        assert!("3*t".parse::<HalfLaurent>().is_err());
        assert!("1/0".parse::<HalfLaurent>().is_err());
    }

    #[test]
    fn exact_division() {
        let a = p("q^2 - 1");
        assert_eq!(a.div_exact(&p("q - 1")), Some(p("q + 1")));
        assert_eq!(p("q^2 + 1").div_exact(&p("q - 1")), None);
        let d = p("-q^(1/2) - q^(-1/2)");
        let x = p("q^3 - 2*q^(1/2) + 7");
        assert_eq!((&x * &d).div_exact(&d), Some(x));
    }

    #[test]
    fn unlink_ratio_values() {
        assert!(HalfLaurent::homfly_unlink_ratio(0).is_zero());
        assert_eq!(HalfLaurent::homfly_unlink_ratio(1), p("-q^(-1/2) - q^(1/2)"));
        assert_eq!(
            HalfLaurent::homfly_unlink_ratio(-2),
            p("q^(-3/2) + q^(-1/2) + q^(1/2) + q^(3/2)")
        );
    }

    #[test]
    fn monomial_powers() {
        let g = p("-2*q^(1/2)");
        assert_eq!(g.pow(-2).unwrap(), p("1/4*q^-1"));
        assert_eq!(g.pow(3).unwrap(), p("-8*q^(3/2)"));
        assert!(p("q + 1").pow(-1).is_none());
    }
}
