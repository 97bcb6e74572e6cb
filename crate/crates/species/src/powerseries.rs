//! Truncated univariate power series over exact rationals. All arithmetic is
//! exact; the truncation order is explicit and never extended silently.

use crate::error::Error;
use crate::Result;
use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Exact signed rational of unbounded magnitude. `num_rational` keeps values
/// in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// A power series truncated at an explicit order: coefficients of
/// x^0 .. x^order are tracked, everything above is unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// The constant series 1 truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// The series x truncated at `order` (which must be >= 1).
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[1] = Rational::one();
        s
    }

    /// Build from explicit coefficients; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series tracks at least x^0");
        PowerSeries { coeffs }
    }

    /// Build from integer coefficients, mostly for tests and goldens.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        PowerSeries {
            coeffs: coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^i; panics if i exceeds the truncation order.
    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, i: usize, value: Rational) {
        self.coeffs[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Re-truncate to a (smaller or equal) order.
    pub fn truncated(&self, order: usize) -> Self {
        PowerSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        PowerSeries { coeffs }
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        PowerSeries { coeffs }
    }

    /// Cauchy product truncated at the smaller operand order.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        PowerSeries { coeffs }
    }

    pub fn scale(&self, factor: &Rational) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// exp(f) for f with zero constant term, via the derivative recurrence
    /// g_n = (1/n) sum_{j=1..n} j f_j g_{n-j}.
    pub fn exp(&self) -> Result<PowerSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpNonzeroConstant);
        }
        let order = self.order();
        let mut g = vec![Rational::zero(); order + 1];
        g[0] = Rational::one();
        for n in 1..=order {
            let mut acc = Rational::zero();
            for j in 1..=n {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc += Rational::from_integer(j.into()) * &self.coeffs[j] * &g[n - j];
            }
            g[n] = acc / Rational::from_integer(n.into());
        }
        Ok(PowerSeries { coeffs: g })
    }

    /// f(x^i), truncated at f's own order: coefficient of x^{i m} is the
    /// m-th coefficient of f, all others zero.
    pub fn substitute_power(&self, i: usize) -> PowerSeries {
        assert!(i >= 1, "substitution exponent must be positive");
        let order = self.order();
        let mut coeffs = vec![Rational::zero(); order + 1];
        let mut m = 0;
        while i * m <= order {
            coeffs[i * m] = self.coeffs[m].clone();
            m += 1;
        }
        PowerSeries { coeffs }
    }

    /// Extract the coefficients as nonnegative integers; errors if any
    /// coefficient is negative or non-integral, which signals a formula bug
    /// upstream.
    pub fn integer_coeffs(&self) -> Result<Vec<BigUint>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_integer() || c.is_negative() {
                return Err(Error::NonIntegralCount {
                    index: i,
                    value: c.to_string(),
                });
            }
            out.push(c.to_integer().to_biguint().expect("nonnegative"));
        }
        Ok(out)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::add(self, rhs)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::sub(self, rhs)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::mul(self, rhs)
    }
}

/// Convenience for tests: rational from a (num, den) pair.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
