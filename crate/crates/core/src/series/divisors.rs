use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::QSeries;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// `sigma_k(n)`, the sum of the `k`-th powers of the divisors of `n`.
pub fn divisor_sigma(n: u64, k: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut total = BigUint::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += BigUint::from(d).pow(k);
            let e = n / d;
            if e != d {
                total += BigUint::from(e).pow(k);
            }
        }
        d += 1;
    }
    Ok(total)
}

/// `sigma_k(n)` for `n = 1..=len`, computed by a divisor sieve. Index 0
/// holds zero.
pub fn sigma_table(k: u32, len: usize) -> Vec<BigUint> {
    let mut table = vec![BigUint::zero(); len + 1];
    for d in 1..=len {
        let p = if k == 0 { BigUint::one() } else { BigUint::from(d).pow(k) };
        for m in (d..=len).step_by(d) {
            table[m] += &p;
        }
    }
    table
}

/// Eisenstein series `E2`, `E4`, `E6` truncated at `order`.
///
/// The constants `-24`, `240`, `-504` are `2 / zeta(1 - w)` for
/// `zeta(-1) = -1/12`, `zeta(-3) = 1/120`, `zeta(-5) = -1/252`.
pub fn eisenstein(weight: u32, order: usize) -> Result<QSeries> {
    let (scale, k): (i64, u32) = match weight {
        2 => (-24, 1),
        4 => (240, 3),
        6 => (-504, 5),
        w => return Err(Error::UnsupportedWeight(w)),
    };
    let sigma = sigma_table(k, order);
    let scale = num_bigint::BigInt::from(scale);
    let coeffs = sigma
        .into_iter()
        .enumerate()
        .map(|(n, s)| {
            if n == 0 {
                Rational::one()
            } else {
                Rational::from_integer(&scale * num_bigint::BigInt::from(s))
            }
        })
        .collect();
    Ok(QSeries::from_coeffs(coeffs))
}
