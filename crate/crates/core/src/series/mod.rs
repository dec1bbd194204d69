//! Truncated power series in `q` with exact rational coefficients.
//!
//! A [`QSeries`] of order `N` knows its coefficients of `q^0 ..= q^N`
//! exactly and nothing beyond. Binary operations on series of different
//! orders return a series of the smaller order.

mod divisors;
mod product;

pub use divisors::{divisor_sigma, eisenstein, sigma_table};
pub use product::pochhammer_inf;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// Builds a series whose order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector: a series always tracks at least `q^0`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series tracks at least the constant term");
        QSeries { coeffs }
    }

    pub fn from_integers<I, T>(values: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_coeffs(values.into_iter().map(|v| Rational::from_integer(v.into())).collect())
    }

    pub fn zero(order: usize) -> Self {
        QSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, Rational::one(), order)
    }

    /// `c * q^exponent`, which is the zero series when `exponent > order`.
    pub fn monomial(exponent: usize, c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `q^n`. Panics if `n` exceeds the order, since that
    /// coefficient is unknown rather than zero.
    pub fn coeff(&self, n: usize) -> &Rational {
        assert!(n <= self.order(), "coefficient q^{n} is beyond order {}", self.order());
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        QSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Copy with `delta` added to the coefficient of `q^exponent`; a no-op
    /// beyond the order.
    pub fn perturbed(&self, exponent: usize, delta: &Rational) -> Self {
        let mut s = self.clone();
        if let Some(c) = s.coeffs.get_mut(exponent) {
            *c += delta;
        }
        s
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Numerators over a common denominator: `self = numerators / denominator`.
    pub fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let den = rational::common_denominator(&self.coeffs);
        let nums = self
            .coeffs
            .iter()
            .map(|c| {
                if c.denom() == &den {
                    c.numer().clone()
                } else {
                    c.numer() * (&den / c.denom())
                }
            })
            .collect();
        (nums, den)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Integer coefficients, failing if any coefficient has a denominator.
    pub fn require_integral(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                rational::as_integer(c).cloned().ok_or_else(|| {
                    Error::InvalidArgument(format!("coefficient of q^{n} is not an integer: {c}"))
                })
            })
            .collect()
    }

    /// Truncated product. Schoolbook convolution over integer numerators.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let order = self.order().min(other.order());
        let (a, da) = self.truncate(order).integer_form();
        let (b, db) = other.truncate(order).integer_form();
        let conv = convolve(&a, &b, order);
        let den = da * db;
        QSeries::from_coeffs(conv.into_iter().map(|c| Rational::new(c, den.clone())).collect())
    }

    pub fn square(&self) -> QSeries {
        self.mul(self)
    }

    pub fn pow(&self, e: u32) -> QSeries {
        let mut result = QSeries::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        result
    }

    /// Multiplicative inverse to the same order.
    pub fn inverse(&self) -> Result<QSeries> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NonInvertible);
        }
        let (a, den) = self.integer_form();
        if a[0].abs().is_one() {
            // a = A / den with A a unit-constant integer series, so
            // 1/a = den * (1/A) and 1/A has integer coefficients.
            let inv = integer_unit_inverse(&a);
            let den = Rational::from_integer(den);
            return Ok(QSeries::from_coeffs(
                inv.into_iter().map(|c| Rational::from_integer(c) * &den).collect(),
            ));
        }
        let n = self.order();
        let b0 = self.coeffs[0].recip();
        let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
        b.push(b0.clone());
        for k in 1..=n {
            let mut acc = Rational::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &b[k - i];
                }
            }
            b.push(-(acc * &b0));
        }
        Ok(QSeries::from_coeffs(b))
    }

    /// The operator `q d/dq`: multiplies the coefficient of `q^n` by `n`.
    pub fn q_derivative(&self) -> QSeries {
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c * Rational::from_integer(BigInt::from(n)))
                .collect(),
        }
    }

    /// Substitutes `q -> q^m`. The order becomes `m * order`; coefficients
    /// at exponents not divisible by `m` are zero.
    pub fn substitute(&self, m: usize) -> QSeries {
        assert!(m >= 1, "substitution exponent must be positive");
        let mut out = QSeries::zero(self.order() * m);
        for (n, c) in self.coeffs.iter().enumerate() {
            out.coeffs[n * m] = c.clone();
        }
        out
    }

    /// First exponent `n <= min order` where the two series differ.
    pub fn first_difference(&self, other: &QSeries) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&n| self.coeffs[n] != other.coeffs[n])
    }
}

fn convolve(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

fn integer_unit_inverse(a: &[BigInt]) -> Vec<BigInt> {
    let sign = a[0].clone();
    let mut b: Vec<BigInt> = Vec::with_capacity(a.len());
    b.push(sign.clone());
    for k in 1..a.len() {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            if !a[i].is_zero() {
                acc += &a[i] * &b[k - i];
            }
        }
        // a0 = ±1, so dividing by a0 is multiplying by it.
        b.push(-(acc * &sign));
    }
    b
}

fn zip_with(a: &QSeries, b: &QSeries, f: impl Fn(&Rational, &Rational) -> Rational) -> QSeries {
    let order = a.order().min(b.order());
    QSeries { coeffs: (0..=order).map(|n| f(&a.coeffs[n], &b.coeffs[n])).collect() }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        QSeries::mul(self, rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries({self})")
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let mag = c.abs();
            match n {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}*")?,
            }
            match n {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for QSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr { order: self.order(), coeffs: self.coeffs.iter().map(rational::to_string).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SeriesRepr::deserialize(d)?;
        if repr.coeffs.len() != repr.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} requires {} coefficients, found {}",
                repr.order,
                repr.order + 1,
                repr.coeffs.len()
            )));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| rational::parse(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(QSeries { coeffs })
    }
}
