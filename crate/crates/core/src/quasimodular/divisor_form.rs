//! Fits `a_{n,k} = sum_{j=1..k} p_j(n) * sigma_{2j-1}(n)` with polynomials
//! `p_j` of bounded degree and rational coefficients.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::decompose::SolveStage;
use super::linsolve::{dot, EchelonSystem, Insertion};
use crate::error::{Error, Result};
use crate::macmahon::{gen_direct, Family};
use crate::rational::{self, Rational};
use crate::series::sigma_table;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorFit {
    pub k: usize,
    pub degree_bound: usize,
    pub verified_order: usize,
    /// `polynomials[j - 1][i]` is the coefficient of `n^i` in `p_j`.
    #[serde(with = "table_serde")]
    pub polynomials: Vec<Vec<Rational>>,
    pub ambiguous: bool,
}

impl DivisorFit {
    /// The fitted value at `n >= 1`.
    pub fn evaluate(&self, n: u64) -> Rational {
        let nn = Rational::from_integer(BigInt::from(n));
        self.polynomials
            .iter()
            .enumerate()
            .map(|(j, p)| {
                let sigma = crate::series::divisor_sigma(n, 2 * j as u32 + 1).expect("n >= 1");
                let value = p.iter().rev().fold(Rational::zero(), |acc, c| acc * &nn + c);
                value * Rational::from_integer(sigma.into())
            })
            .sum()
    }

    /// Actual degree of `p_j`, `None` when `p_j` vanishes.
    pub fn degree(&self, j: usize) -> Option<usize> {
        self.polynomials[j - 1].iter().rposition(|c| !c.is_zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorFitFailure {
    pub stage: SolveStage,
    pub witness_n: usize,
    #[serde(with = "rational::serde_str")]
    pub target_value: Rational,
    #[serde(with = "rational::serde_str")]
    pub fitted_value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DivisorFitOutcome {
    Fit(DivisorFit),
    Failure(DivisorFitFailure),
}

impl DivisorFitOutcome {
    pub fn fit(&self) -> Option<&DivisorFit> {
        match self {
            DivisorFitOutcome::Fit(f) => Some(f),
            DivisorFitOutcome::Failure(_) => None,
        }
    }

    pub fn failure(&self) -> Option<&DivisorFitFailure> {
        match self {
            DivisorFitOutcome::Fit(_) => None,
            DivisorFitOutcome::Failure(f) => Some(f),
        }
    }
}

/// Solves for the `p_j` on the leading `n` (four equations past the
/// unknown count) and checks the result for every `1 <= n <= order`.
pub fn fit_divisor_form(k: usize, degree_bound: usize, order: usize) -> Result<DivisorFitOutcome> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let target = gen_direct(Family::A, k, order);
    let sigmas: Vec<Vec<Rational>> = (1..=k)
        .map(|j| {
            sigma_table(2 * j as u32 - 1, order)
                .into_iter()
                .map(|s| Rational::from_integer(s.into()))
                .collect()
        })
        .collect();
    let unknowns = k * (degree_bound + 1);
    let equation = |n: usize| -> Vec<Rational> {
        let nn = Rational::from_integer(BigInt::from(n));
        let mut row = Vec::with_capacity(unknowns);
        for sigma in &sigmas {
            let mut power = sigma[n].clone();
            for _ in 0..=degree_bound {
                row.push(power.clone());
                power *= &nn;
            }
        }
        row
    };
    let failure = |stage, n: usize, fitted: Rational| {
        DivisorFitOutcome::Failure(DivisorFitFailure {
            stage,
            witness_n: n,
            target_value: target.coeff(n).clone(),
            fitted_value: fitted,
        })
    };

    let mut system = EchelonSystem::new(unknowns);
    let solve_rows = (unknowns + 4).min(order);
    for n in 1..=solve_rows {
        let row = equation(n);
        if system.add_equation(&row, target.coeff(n)) == Insertion::Inconsistent {
            return Ok(failure(SolveStage::Solve, n, dot(&row, &system.solution())));
        }
    }
    for n in solve_rows + 1..=order {
        let row = equation(n);
        if system.is_determined() {
            let fitted = dot(&row, &system.solution());
            if &fitted != target.coeff(n) {
                return Ok(failure(SolveStage::Verify, n, fitted));
            }
        } else if system.add_equation(&row, target.coeff(n)) == Insertion::Inconsistent {
            return Ok(failure(SolveStage::Verify, n, dot(&row, &system.solution())));
        }
    }
    let solution = system.solution();
    Ok(DivisorFitOutcome::Fit(DivisorFit {
        k,
        degree_bound,
        verified_order: order,
        polynomials: solution.chunks(degree_bound + 1).map(<[Rational]>::to_vec).collect(),
        ambiguous: !system.is_determined(),
    }))
}

mod table_serde {
    use super::Rational;
    use crate::rational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(t: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<Vec<String>> = t.iter().map(|row| row.iter().map(rational::to_string).collect()).collect();
        strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let strings = Vec::<Vec<String>>::deserialize(d)?;
        strings
            .iter()
            .map(|row| row.iter().map(|s| rational::parse(s)).collect::<crate::Result<Vec<_>>>())
            .collect::<crate::Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)
    }
}
