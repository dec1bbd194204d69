//! Incremental fraction-free Gaussian elimination over the integers.
//!
//! Equations arrive one at a time as rational rows, are cleared to integer
//! rows, and are reduced against the stored pivot rows by cross
//! multiplication followed by removal of the row content. Stored rows are
//! kept mutually reduced: each is zero at every other row's pivot column.
//! Pivots are the first nonzero column in column order, so the result is
//! reproducible for a fixed column order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Insertion {
    /// The equation raised the rank; its pivot column is given.
    Independent { pivot: usize },
    /// Implied by the equations already present.
    Redundant,
    /// Contradicts the equations already present. Not stored.
    Inconsistent,
}

#[derive(Debug, Clone)]
struct PivotRow {
    pivot: usize,
    /// `unknowns` coefficients followed by the right-hand side.
    entries: Vec<BigInt>,
}

#[derive(Debug, Clone)]
pub struct EchelonSystem {
    unknowns: usize,
    rows: Vec<PivotRow>,
}

impl EchelonSystem {
    pub fn new(unknowns: usize) -> Self {
        EchelonSystem { unknowns, rows: Vec::new() }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_determined(&self) -> bool {
        self.rank() == self.unknowns
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.pivot).collect()
    }

    /// Adds `sum_j coeffs[j] * x_j = rhs`.
    pub fn add_equation(&mut self, coeffs: &[Rational], rhs: &Rational) -> Insertion {
        assert_eq!(coeffs.len(), self.unknowns, "equation width must match the unknown count");
        let den = rational::common_denominator(coeffs.iter().chain(std::iter::once(rhs)));
        let mut row: Vec<BigInt> = coeffs
            .iter()
            .chain(std::iter::once(rhs))
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        remove_content(&mut row);

        for stored in &self.rows {
            let factor = row[stored.pivot].clone();
            if factor.is_zero() {
                continue;
            }
            let lead = &stored.entries[stored.pivot];
            for (x, y) in row.iter_mut().zip(&stored.entries) {
                *x = lead * &*x - &factor * y;
            }
            remove_content(&mut row);
        }

        let Some(pivot) = row[..self.unknowns].iter().position(|c| !c.is_zero()) else {
            return if row[self.unknowns].is_zero() { Insertion::Redundant } else { Insertion::Inconsistent };
        };
        if row[pivot].is_negative() {
            row.iter_mut().for_each(|x| *x = -&*x);
        }
        for stored in &mut self.rows {
            let factor = stored.entries[pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, y) in stored.entries.iter_mut().zip(&row) {
                *x = &row[pivot] * &*x - &factor * y;
            }
            remove_content(&mut stored.entries);
        }
        self.rows.push(PivotRow { pivot, entries: row });
        Insertion::Independent { pivot }
    }

    /// A solution with every free unknown set to zero, so its support lies
    /// on the pivot columns.
    pub fn solution(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.unknowns];
        for row in &self.rows {
            x[row.pivot] = Rational::new(row.entries[self.unknowns].clone(), row.entries[row.pivot].clone());
        }
        x
    }
}

fn remove_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        row.iter_mut().for_each(|x| *x = &*x / &g);
    }
}

/// `sum_j coeffs[j] * x[j]`.
pub(crate) fn dot(coeffs: &[Rational], x: &[Rational]) -> Rational {
    coeffs.iter().zip(x).filter(|(_, v)| !v.is_zero()).map(|(c, v)| c * v).sum()
}
