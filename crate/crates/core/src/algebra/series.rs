use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, One, Zero};

/// Power series in `x` truncated after `x^order`, with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Order is `coeffs.len() - 1`; an empty vector is treated as the order-0 zero series.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^t`; zero beyond the truncation order.
    pub fn coeff(&self, t: usize) -> BigRational {
        self.coeffs.get(t).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Drops terms above `order`, padding with zeros if needed.
    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    /// Index of the first nonzero coefficient, or `None` if the series vanishes through its order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return None;
        }
        let n = self.order();
        let mut inv = vec![BigRational::zero(); n + 1];
        inv[0] = c0.recip();
        for t in 1..=n {
            let mut acc = BigRational::zero();
            for s in 1..=t {
                acc += &self.coeffs[s] * &inv[t - s];
            }
            inv[t] = -acc / &c0;
        }
        Some(Self { coeffs: inv })
    }

    fn combine(&self, rhs: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        let n = self.order().min(rhs.order());
        Self {
            coeffs: (0..=n).map(|t| f(&self.coeffs[t], &rhs.coeffs[t])).collect(),
        }
    }
}

impl Add<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.combine(rhs, |a, b| a - b)
    }
}

/// Cauchy product truncated at the smaller of the two orders.
impl Mul<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|t| {
                (0..=t).fold(BigRational::zero(), |acc, s| {
                    acc + &self.coeffs[s] * &rhs.coeffs[t - s]
                })
            })
            .collect();
        TruncSeries { coeffs }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(t, c)| format!("u{}={}", t, c))
            .collect();
        f.write_str(&parts.join(" "))
    }
}
