//! Exact integer polynomials in one variable `t`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A polynomial with `i64` coefficients, stored lowest degree first.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and structural equality is polynomial equality.
/// Arithmetic is checked: overflow is an error, never a wrap.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^degree`
    pub fn monomial(c: i64, degree: usize) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        IntPolynomial { coeffs }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `t^d`, zero beyond the degree.
    pub fn coeff(&self, d: usize) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|d| {
                self.coeff(d)
                    .checked_add(other.coeff(d))
                    .ok_or(Error::Overflow("polynomial addition"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                c.checked_neg()
                    .ok_or(Error::Overflow("polynomial negation"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPolynomial { coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_neg()?)
    }

    /// Cauchy product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a
                    .checked_mul(b)
                    .ok_or(Error::Overflow("polynomial multiplication"))?;
                coeffs[i + j] = coeffs[i + j]
                    .checked_add(term)
                    .ok_or(Error::Overflow("polynomial multiplication"))?;
            }
        }
        Ok(Self::new(coeffs))
    }

    pub fn checked_scale(&self, c: i64) -> Result<Self> {
        self.checked_mul(&Self::constant(c))
    }

    /// Multiplies by `t^d`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; d];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    /// `c * (1 + sign*t)^e`, where `sign` is `+1` or `-1`.
    pub fn binomial_power(c: i64, sign: Sign, e: usize) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(e + 1);
        let mut binom: i64 = 1;
        for d in 0..=e {
            let signed = match sign {
                Sign::Plus => binom,
                Sign::Minus if d % 2 == 1 => -binom,
                Sign::Minus => binom,
            };
            coeffs.push(
                signed
                    .checked_mul(c)
                    .ok_or(Error::Overflow("binomial power"))?,
            );
            if d < e {
                // C(e, d+1) = C(e, d) * (e - d) / (d + 1), exact at each step
                binom = (binom as i128 * (e - d) as i128 / (d + 1) as i128)
                    .try_into()
                    .map_err(|_| Error::Overflow("binomial coefficient"))?;
            }
        }
        Ok(Self::new(coeffs))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl From<Vec<i64>> for IntPolynomial {
    fn from(coeffs: Vec<i64>) -> Self {
        Self::new(coeffs)
    }
}

impl From<IntPolynomial> for Vec<i64> {
    fn from(p: IntPolynomial) -> Self {
        p.coeffs
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let abs = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (d, abs) {
                (0, _) => write!(f, "{abs}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{abs}t")?,
                (_, 1) => write!(f, "t^{d}")?,
                _ => write!(f, "{abs}t^{d}")?,
            }
        }
        Ok(())
    }
}
