//! Rescaled Chebyshev polynomials `P_n(x) = 2 T_n(x/2)`, which have integer
//! coefficients: `P_0 = 2`, `P_1 = x`, `P_n = x P_{n-1} - P_{n-2}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Integer polynomial in one variable, coefficients indexed by degree. The
/// leading coefficient is nonzero unless the polynomial is zero (empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    pub fn x() -> Self {
        Self::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn sub(&self, other: &IntPolynomial) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => f.write_str("x")?,
                1 => write!(f, "{mag}x")?,
                _ if mag.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

pub fn cheb_rescaled(n: usize) -> IntPolynomial {
    cheb_rescaled_table(n).swap_remove(n)
}

/// `[P_0, ..., P_n]`.
pub fn cheb_rescaled_table(n: usize) -> Vec<IntPolynomial> {
    let mut table = vec![IntPolynomial::constant(2)];
    if n >= 1 {
        table.push(IntPolynomial::x());
    }
    for i in 2..=n {
        let next = table[i - 1].mul_x().sub(&table[i - 2]);
        table.push(next);
    }
    table
}

/// Closed form for a single Chebyshev coefficient.
///
/// - `Even`: coefficient of `x^(2k)` in `P_{2n}`,
///   `2n (-1)^(n-k) (n+k-1)! / ((n-k)! (2k)!)`, requires `n >= 1`.
/// - `Odd`: coefficient of `x^(2k+1)` in `P_{2n+1}`,
///   `(-1)^(n-k) (2n+1) (n+k)! / ((n-k)! (2k+1)!)`.
pub fn cheb_coeff_closed(n: u64, k: u64, parity: Parity) -> Result<BigInt> {
    if k > n {
        return Err(Error::IndexOutOfRange { n: n as usize, k: k as usize });
    }
    let (numerator, denominator) = match parity {
        Parity::Even => {
            if n == 0 {
                return Err(Error::InvalidArgument("even closed form requires n >= 1".into()));
            }
            // (n+k-1)!/(n-k)! is 1/n at k = 0, so divide by full factorials.
            (
                BigInt::from(2 * n) * rational::factorial(n + k - 1),
                rational::factorial(n - k) * rational::factorial(2 * k),
            )
        }
        Parity::Odd => {
            (BigInt::from(2 * n + 1) * rational::rising_range(n - k + 1, n + k), rational::factorial(2 * k + 1))
        }
    };
    debug_assert!((&numerator % &denominator).is_zero());
    let magnitude = numerator / denominator;
    Ok(if (n - k).is_multiple_of(2) { magnitude } else { -magnitude })
}
