use num_bigint::BigInt;
use num_traits::Zero;

use super::QSeries;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Truncated product `prod_{j >= 0} (1 - c q^(offset + j*step))`.
///
/// Instances: `(q;q)_inf = (1,1,1)`, `(q^2;q^2)_inf = (1,2,2)`,
/// `(-q;q)_inf = (-1,1,1)`, `(q;q^2)_inf = (1,1,2)`. Factors whose exponent
/// exceeds `order` are skipped; they only touch higher coefficients.
pub fn pochhammer_inf(c: &Rational, offset: usize, step: usize, order: usize) -> Result<QSeries> {
    if offset == 0 {
        return Err(Error::ZeroOffset);
    }
    if step == 0 {
        return Err(Error::ZeroStep);
    }
    let exponents = (offset..=order).step_by(step);
    if let Some(ci) = rational::as_integer(c) {
        let mut acc = vec![BigInt::zero(); order + 1];
        acc[0] = BigInt::from(1);
        for e in exponents {
            for n in (e..=order).rev() {
                if !acc[n - e].is_zero() {
                    let t = ci * &acc[n - e];
                    acc[n] -= t;
                }
            }
        }
        return Ok(QSeries::from_integers(acc));
    }
    let mut acc = QSeries::one(order).into_coeffs();
    for e in exponents {
        for n in (e..=order).rev() {
            if !acc[n - e].is_zero() {
                let t = c * &acc[n - e];
                acc[n] -= t;
            }
        }
    }
    Ok(QSeries::from_coeffs(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn euler_function_head() {
        let p = pochhammer_inf(&int(1), 1, 1, 12).unwrap();
        let mut expected = vec![0i64; 13];
        for (e, c) in [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1)] {
            expected[e] = c;
        }
        assert_eq!(p, QSeries::from_integers(expected));
    }

    #[test]
    fn order_zero_is_one() {
        assert_eq!(pochhammer_inf(&int(1), 1, 1, 0).unwrap(), QSeries::one(0));
    }

    #[test]
    fn zero_offset_rejected() {
        assert_eq!(pochhammer_inf(&int(1), 0, 1, 5), Err(Error::ZeroOffset));
        assert_eq!(pochhammer_inf(&int(1), 1, 0, 5), Err(Error::ZeroStep));
    }

    #[test]
    fn rational_parameter_matches_factor_product() {
        let c = Rational::new(2.into(), 3.into());
        let got = pochhammer_inf(&c, 2, 3, 11).unwrap();
        let mut expected = QSeries::one(11);
        for e in [2usize, 5, 8, 11] {
            let factor = &QSeries::one(11) - &QSeries::monomial(e, c.clone(), 11);
            expected = expected.mul(&factor);
        }
        assert_eq!(got, expected);
    }
}
