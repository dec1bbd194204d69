//! Rational helpers shared by the series kernel and the serializers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders as `p/q`, or `p` when the denominator is one. Never contains
/// whitespace.
pub fn to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn parse(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| err())?;
            let q: BigInt = q.parse().map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(p, q))
        }
        None => t.parse::<BigInt>().map(Rational::from_integer).map_err(|_| err()),
    }
}

/// The integer value of `r` if its denominator is one.
pub fn as_integer(r: &Rational) -> Option<&BigInt> {
    r.denom().is_one().then(|| r.numer())
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| if r.denom().is_one() { acc } else { acc.lcm(r.denom()) })
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `lo * (lo + 1) * ... * hi`, empty product when `lo > hi`.
pub fn rising_range(lo: u64, hi: u64) -> BigInt {
    (lo..=hi).fold(BigInt::one(), |acc, i| acc * i)
}

pub mod serde_str {
    //! `"p/q"` string encoding for serde.
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(serde::de::Error::custom)
    }
}
