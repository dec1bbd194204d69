//! Three series routes to `A_k` and `C_k`.
//!
//! - direct: the defining sum over increasing tuples of Lambert-type terms;
//! - explicit: theta-type sum divided by eta-type products;
//! - recurrence: repeated application of the `q d/dq` recurrence from `A_1`
//!   (resp. `C_1`).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Family;
use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};
use crate::series::{pochhammer_inf, QSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Direct,
    Explicit,
    Recurrence,
}

pub fn generate(family: Family, k: usize, order: usize, method: Method) -> Result<QSeries> {
    match method {
        Method::Direct => Ok(gen_direct(family, k, order)),
        Method::Explicit => gen_explicit(family, k, order),
        Method::Recurrence => gen_recurrence(family, k, order),
    }
}

/// `A_k` or `C_k` from the defining sum.
///
/// The sum over `m_1 < ... < m_k` of `prod L(m_i)`, with
/// `L(m) = q^p / (1 - q^p)^2 = sum_s s q^(s p)` and `p` the `m`-th part, is
/// the `x^k` coefficient of `prod_m (1 + x L(m))`. Parts are folded in one
/// at a time; a part larger than `order` cannot contribute. `k = 0` is the
/// empty product `1`.
pub fn gen_direct(family: Family, k: usize, order: usize) -> QSeries {
    // partial[j] holds the elementary symmetric sum of degree j over the
    // parts seen so far.
    let mut partial: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); order + 1]; k + 1];
    partial[0][0] = BigInt::one();
    let mut i = 1u64;
    loop {
        let p = family.part(i) as usize;
        if p > order || k == 0 {
            break;
        }
        // Degree j needs j parts; with the j - 1 smallest the tuple already
        // reaches the threshold, so skip degrees that cannot fit yet.
        for j in (1..=k.min(i as usize)).rev() {
            let (lower, upper) = partial.split_at_mut(j);
            let src = &lower[j - 1];
            let dst = &mut upper[0];
            for s in 1..=order / p {
                let shift = s * p;
                let weight = BigInt::from(s);
                for n in shift..=order {
                    if !src[n - shift].is_zero() {
                        dst[n] += &src[n - shift] * &weight;
                    }
                }
            }
        }
        i += 1;
    }
    QSeries::from_integers(partial.swap_remove(k))
}

/// `A_k` or `C_k` from the closed theta-sum formulas, `k >= 1`.
///
/// `A_k = (-1)^k / ((2k+1)! (q;q)^3) * sum_{n>=k} (-1)^n (2n+1) (n+k)!/(n-k)! q^(n(n+1)/2)`
///
/// `C_k = (-1)^k (-q;q) / ((2k)! (q;q)) * sum_{n>=k} (-1)^n 2n (n+k-1)!/(n-k)! q^(n^2)`
pub fn gen_explicit(family: Family, k: usize, order: usize) -> Result<QSeries> {
    if k == 0 {
        return Err(Error::InvalidArgument("explicit formula requires k >= 1".into()));
    }
    let kk = k as u64;
    let mut theta = vec![BigInt::zero(); order + 1];
    let mut n = kk;
    loop {
        let exponent = match family {
            Family::A => (n * (n + 1) / 2) as usize,
            Family::C => (n * n) as usize,
        };
        if exponent > order {
            break;
        }
        let weight = match family {
            // (2n+1) (n+k)!/(n-k)!
            Family::A => BigInt::from(2 * n + 1) * rational::rising_range(n - kk + 1, n + kk),
            // 2n (n+k-1)!/(n-k)!
            Family::C => BigInt::from(2 * n) * rational::rising_range(n - kk + 1, n + kk - 1),
        };
        theta[exponent] = if n.is_multiple_of(2) { weight } else { -weight };
        n += 1;
    }
    let (denominator, prefactor) = match family {
        Family::A => {
            let euler = pochhammer_inf(&int(1), 1, 1, order)?;
            (rational::factorial(2 * kk + 1), euler.pow(3).inverse()?)
        }
        Family::C => {
            let euler = pochhammer_inf(&int(1), 1, 1, order)?;
            let plus = pochhammer_inf(&int(-1), 1, 1, order)?;
            (rational::factorial(2 * kk), plus.mul(&euler.inverse()?))
        }
    };
    let sign = if k.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let scale = Rational::new(sign, denominator);
    Ok(QSeries::from_integers(theta).mul(&prefactor).scale(&scale))
}

/// One step of the recurrence, producing the `k`-th series from the
/// `(k-1)`-th and the seed (`A_1` or `C_1`):
///
/// `A_k = ((6 A_1 + k(k-1)) A_{k-1} - 2 q d/dq A_{k-1}) / ((2k+1) 2k)`
///
/// `C_k = ((2 C_1 + (k-1)^2) C_{k-1} - q d/dq C_{k-1}) / (2k (2k-1))`
///
/// At `k = 1` with `prev = 1` this reproduces the seed, so it is a
/// consistency identity there rather than a constructor.
pub fn recurrence_step(family: Family, k: usize, seed: &QSeries, prev: &QSeries) -> QSeries {
    assert!(k >= 1, "recurrence starts at k = 1");
    let k = k as i64;
    let order = seed.order().min(prev.order());
    let (seed_scale, shift, deriv_scale, divisor) = match family {
        Family::A => (6, k * (k - 1), 2, (2 * k + 1) * 2 * k),
        Family::C => (2, (k - 1) * (k - 1), 1, 2 * k * (2 * k - 1)),
    };
    let factor = &seed.scale(&int(seed_scale)) + &QSeries::monomial(0, int(shift), order);
    let lhs = factor.mul(prev);
    let rhs = prev.q_derivative().scale(&int(deriv_scale));
    (&lhs - &rhs).scale(&Rational::new(BigInt::one(), BigInt::from(divisor)))
}

/// `A_k` or `C_k` by the recurrence, seeded with `gen_direct(family, 1, order)`.
pub fn gen_recurrence(family: Family, k: usize, order: usize) -> Result<QSeries> {
    if k == 0 {
        return Err(Error::InvalidArgument("recurrence requires k >= 1".into()));
    }
    let seed = gen_direct(family, 1, order);
    Ok(recurrence_from_seed(family, k, &seed))
}

pub(crate) fn recurrence_from_seed(family: Family, k: usize, seed: &QSeries) -> QSeries {
    let mut current = seed.clone();
    for j in 2..=k {
        current = recurrence_step(family, j, seed, &current);
    }
    current
}
