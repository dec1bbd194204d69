//! The bivariate theta series
//! `F(x,q) = sum_{n>=0} P_{2n+1}(x) q^(n^2+n)` and
//! `G(x,q) = 1 + sum_{n>=1} P_{2n}(x) q^(n^2)`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::chebyshev::{cheb_rescaled_table, Parity};
use crate::rational::Rational;
use crate::series::QSeries;

/// Polynomial in `x` with truncated q-series coefficients. All entries
/// share one q-order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivarSeries {
    x_coeffs: Vec<QSeries>,
}

impl BivarSeries {
    pub fn zero(x_degree_bound: usize, q_order: usize) -> Self {
        BivarSeries { x_coeffs: vec![QSeries::zero(q_order); x_degree_bound + 1] }
    }

    /// Entries are truncated to the smallest q-order among them.
    pub fn from_entries(entries: Vec<QSeries>) -> Self {
        assert!(!entries.is_empty(), "a bivariate series has at least the x^0 entry");
        let order = entries.iter().map(QSeries::order).min().unwrap_or(0);
        BivarSeries { x_coeffs: entries.into_iter().map(|e| e.truncate(order)).collect() }
    }

    /// `c * x^d`; the zero series when `d` exceeds the bound.
    pub fn x_monomial(d: usize, c: Rational, x_degree_bound: usize, q_order: usize) -> Self {
        let mut b = Self::zero(x_degree_bound, q_order);
        if d <= x_degree_bound {
            b.x_coeffs[d] = QSeries::monomial(0, c, q_order);
        }
        b
    }

    pub fn x_degree_bound(&self) -> usize {
        self.x_coeffs.len() - 1
    }

    pub fn q_order(&self) -> usize {
        self.x_coeffs[0].order()
    }

    /// Coefficient of `x^d`. Panics above the degree bound.
    pub fn entry(&self, d: usize) -> &QSeries {
        &self.x_coeffs[d]
    }

    pub fn entries(&self) -> &[QSeries] {
        &self.x_coeffs
    }

    pub fn with_entry(&self, d: usize, value: QSeries) -> Self {
        let mut x_coeffs = self.x_coeffs.clone();
        x_coeffs[d] = value;
        Self::from_entries(x_coeffs)
    }

    /// Product truncated in both `x` (to the smaller degree bound) and `q`.
    pub fn mul(&self, other: &BivarSeries) -> Self {
        let d = self.x_degree_bound().min(other.x_degree_bound());
        let order = self.q_order().min(other.q_order());
        let mut out = vec![QSeries::zero(order); d + 1];
        for (i, a) in self.x_coeffs.iter().enumerate().take(d + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.x_coeffs.iter().enumerate().take(d + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &a.mul(b);
                }
            }
        }
        BivarSeries { x_coeffs: out }
    }

    /// x-degrees of the given parity whose entry is not the zero series.
    /// A series with only odd powers of `x` has no nonzero even entries.
    pub fn nonzero_entries_of_parity(&self, parity: Parity) -> Vec<usize> {
        let rem = match parity {
            Parity::Even => 0,
            Parity::Odd => 1,
        };
        (0..self.x_coeffs.len()).filter(|d| d % 2 == rem && !self.x_coeffs[*d].is_zero()).collect()
    }
}

fn accumulate(
    x_degree_bound: usize,
    q_order: usize,
    terms: impl Iterator<Item = (usize, usize)>,
) -> BivarSeries {
    // (chebyshev index, q exponent) pairs
    let terms: Vec<_> = terms.take_while(|&(_, e)| e <= q_order).collect();
    let max_index = terms.iter().map(|&(i, _)| i).max().unwrap_or(0);
    let table = cheb_rescaled_table(max_index);
    let mut grid = vec![vec![BigInt::zero(); q_order + 1]; x_degree_bound + 1];
    for (index, exponent) in terms {
        for (d, c) in table[index].coeffs().iter().enumerate().take(x_degree_bound + 1) {
            grid[d][exponent] += c;
        }
    }
    BivarSeries { x_coeffs: grid.into_iter().map(QSeries::from_integers).collect() }
}

/// `F(x,q)` with x-degrees above `x_degree_bound` dropped.
pub fn theta_f(x_degree_bound: usize, q_order: usize) -> BivarSeries {
    accumulate(x_degree_bound, q_order, (0..).map(|n| (2 * n + 1, n * n + n)))
}

/// `G(x,q)` with x-degrees above `x_degree_bound` dropped.
pub fn theta_g(x_degree_bound: usize, q_order: usize) -> BivarSeries {
    let mut g = accumulate(x_degree_bound, q_order, (1..).map(|n| (2 * n, n * n)));
    let constant = &g.x_coeffs[0] + &QSeries::one(q_order);
    g.x_coeffs[0] = constant;
    g
}

impl From<QSeries> for BivarSeries {
    fn from(s: QSeries) -> Self {
        BivarSeries { x_coeffs: vec![s] }
    }
}
