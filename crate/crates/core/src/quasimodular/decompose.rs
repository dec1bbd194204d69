use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::linsolve::{dot, EchelonSystem, Insertion};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::series::{eisenstein, QSeries};

/// `E2^a E4^b E6^c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QMMonomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl QMMonomial {
    pub const ONE: QMMonomial = QMMonomial { a: 0, b: 0, c: 0 };

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        QMMonomial { a, b, c }
    }

    pub fn weight(&self) -> u32 {
        2 * self.a + 4 * self.b + 6 * self.c
    }
}

impl fmt::Display for QMMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("E2", self.a), ("E4", self.b), ("E6", self.c)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// All monomials of weight at most `weight_bound`, by ascending weight and,
/// within a weight, by descending power of `E2` then of `E4`.
pub fn monomial_basis(weight_bound: u32) -> Result<Vec<QMMonomial>> {
    if !weight_bound.is_multiple_of(2) {
        return Err(Error::OddWeightBound(weight_bound));
    }
    let mut basis = Vec::new();
    for w in (0..=weight_bound).step_by(2) {
        for a in (0..=w / 2).rev() {
            for b in (0..=(w - 2 * a) / 4).rev() {
                let rest = w - 2 * a - 4 * b;
                if rest % 6 == 0 {
                    basis.push(QMMonomial::new(a, b, rest / 6));
                }
            }
        }
    }
    Ok(basis)
}

/// The three generators at a common order. Normally the true Eisenstein
/// series; replaceable so that verification can run against perturbed
/// generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EisensteinGenerators {
    pub e2: QSeries,
    pub e4: QSeries,
    pub e6: QSeries,
}

impl EisensteinGenerators {
    pub fn standard(order: usize) -> Self {
        EisensteinGenerators {
            e2: eisenstein(2, order).expect("weight 2 is supported"),
            e4: eisenstein(4, order).expect("weight 4 is supported"),
            e6: eisenstein(6, order).expect("weight 6 is supported"),
        }
    }

    pub fn order(&self) -> usize {
        self.e2.order().min(self.e4.order()).min(self.e6.order())
    }

    /// Series for every monomial in `basis`, sharing power computations.
    pub fn evaluate_basis(&self, basis: &[QMMonomial]) -> Vec<QSeries> {
        let order = self.order();
        let max = |f: fn(&QMMonomial) -> u32| basis.iter().map(f).max().unwrap_or(0);
        let powers = |g: &QSeries, top: u32| {
            let mut v = vec![QSeries::one(order)];
            for _ in 0..top {
                let next = v.last().expect("nonempty").mul(g);
                v.push(next);
            }
            v
        };
        let p2 = powers(&self.e2, max(|m| m.a));
        let p4 = powers(&self.e4, max(|m| m.b));
        let p6 = powers(&self.e6, max(|m| m.c));
        basis
            .iter()
            .map(|m| {
                let mut s = p2[m.a as usize].clone();
                if m.b > 0 {
                    s = s.mul(&p4[m.b as usize]);
                }
                if m.c > 0 {
                    s = s.mul(&p6[m.c as usize]);
                }
                s
            })
            .collect()
    }
}

/// A target written exactly as a rational combination of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QMDecomposition {
    /// Nonzero terms in basis order.
    pub terms: Vec<Term>,
    pub weight_bound: u32,
    pub verified_order: usize,
    #[serde(rename = "target")]
    pub target_description: String,
    /// Set when the coefficients through `verified_order` do not pin the
    /// combination down; the reported one has support on pivot columns.
    pub ambiguous: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(flatten)]
    pub monomial: QMMonomial,
    #[serde(with = "rational::serde_str")]
    pub coefficient: Rational,
}

impl QMDecomposition {
    pub fn coefficient(&self, m: QMMonomial) -> Rational {
        self.terms.iter().find(|t| t.monomial == m).map(|t| t.coefficient.clone()).unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn with_description(mut self, description: impl Into<String>) -> Self {
        self.target_description = description.into();
        self
    }
}

impl fmt::Display for QMDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let body: Vec<String> = self.terms.iter().map(|t| format!("({})*{}", t.coefficient, t.monomial)).collect();
        f.write_str(&body.join(" + "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveStage {
    /// The first `basis + 5` coefficient equations are already inconsistent.
    Solve,
    /// A solution of the leading equations fails at a later coefficient.
    Verify,
}

/// No combination at this weight bound matches the target. The witness is
/// the first exponent whose equation cannot be met given all lower ones;
/// `fitted_coefficient` is what the best candidate produces there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoSolution {
    pub stage: SolveStage,
    pub witness_exponent: usize,
    #[serde(with = "rational::serde_str")]
    pub target_coefficient: Rational,
    #[serde(with = "rational::serde_str")]
    pub fitted_coefficient: Rational,
    pub weight_bound: u32,
    #[serde(rename = "target")]
    pub target_description: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    Found(QMDecomposition),
    NoSolution(NoSolution),
}

impl Decomposition {
    pub fn found(&self) -> Option<&QMDecomposition> {
        match self {
            Decomposition::Found(d) => Some(d),
            Decomposition::NoSolution(_) => None,
        }
    }

    pub fn no_solution(&self) -> Option<&NoSolution> {
        match self {
            Decomposition::Found(_) => None,
            Decomposition::NoSolution(n) => Some(n),
        }
    }
}

/// Writes `target` as a rational combination of `E2^a E4^b E6^c` with
/// `2a + 4b + 6c <= weight_bound`, certified through `q^order`.
pub fn decompose(target: &QSeries, weight_bound: u32, order: usize) -> Result<Decomposition> {
    decompose_with(target, weight_bound, order, &EisensteinGenerators::standard(order))
}

/// [`decompose`] against caller-supplied generators.
pub fn decompose_with(
    target: &QSeries,
    weight_bound: u32,
    order: usize,
    generators: &EisensteinGenerators,
) -> Result<Decomposition> {
    let basis = monomial_basis(weight_bound)?;
    if order < 2 * basis.len() {
        return Err(Error::InvalidArgument(format!(
            "order {order} is below twice the basis size {}",
            basis.len()
        )));
    }
    if target.order() < order || generators.order() < order {
        return Err(Error::InvalidArgument(format!("inputs must be known through q^{order}")));
    }
    let columns = generators.evaluate_basis(&basis);
    let equation = |n: usize| -> Vec<Rational> { columns.iter().map(|s| s.coeff(n).clone()).collect() };
    let no_solution = |stage, n: usize, fitted: Rational| {
        Decomposition::NoSolution(NoSolution {
            stage,
            witness_exponent: n,
            target_coefficient: target.coeff(n).clone(),
            fitted_coefficient: fitted,
            weight_bound,
            target_description: "target".into(),
        })
    };

    // Solve on the leading coefficients, four equations past the basis size.
    let mut system = EchelonSystem::new(basis.len());
    let solve_rows = (basis.len() + 4).min(order);
    for n in 0..=solve_rows {
        let row = equation(n);
        if system.add_equation(&row, target.coeff(n)) == Insertion::Inconsistent {
            let fitted = dot(&row, &system.solution());
            return Ok(no_solution(SolveStage::Solve, n, fitted));
        }
    }

    // Verify through `order`. While the solution is not unique, later
    // equations may still narrow it, so keep eliminating.
    for n in solve_rows + 1..=order {
        let row = equation(n);
        if system.is_determined() {
            let fitted = dot(&row, &system.solution());
            if &fitted != target.coeff(n) {
                return Ok(no_solution(SolveStage::Verify, n, fitted));
            }
        } else if system.add_equation(&row, target.coeff(n)) == Insertion::Inconsistent {
            let fitted = dot(&row, &system.solution());
            return Ok(no_solution(SolveStage::Verify, n, fitted));
        }
    }

    let solution = system.solution();
    let terms = basis
        .iter()
        .zip(solution)
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| Term { monomial: *m, coefficient: c })
        .collect();
    Ok(Decomposition::Found(QMDecomposition {
        terms,
        weight_bound,
        verified_order: order,
        target_description: "target".into(),
        ambiguous: !system.is_determined(),
    }))
}

/// Sum of `coefficient * E2^a E4^b E6^c` to the given order.
pub fn eval_decomposition(d: &QMDecomposition, order: usize) -> QSeries {
    let generators = EisensteinGenerators::standard(order);
    let basis: Vec<QMMonomial> = d.terms.iter().map(|t| t.monomial).collect();
    let columns = generators.evaluate_basis(&basis);
    d.terms
        .iter()
        .zip(&columns)
        .fold(QSeries::zero(order), |acc, (t, s)| &acc + &s.scale(&t.coefficient))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn m(a: u32, b: u32, c: u32) -> QMMonomial {
        QMMonomial::new(a, b, c)
    }

    #[test]
    fn basis_examples() {
        assert_eq!(monomial_basis(0).unwrap(), vec![m(0, 0, 0)]);
        assert_eq!(monomial_basis(4).unwrap(), vec![m(0, 0, 0), m(1, 0, 0), m(2, 0, 0), m(0, 1, 0)]);
        let six = monomial_basis(6).unwrap();
        assert_eq!(six.len(), 7);
        assert_eq!(&six[4..], &[m(3, 0, 0), m(1, 1, 0), m(0, 0, 1)]);
        assert_eq!(monomial_basis(3), Err(Error::OddWeightBound(3)));
    }

    #[test]
    fn basis_weights_are_sorted() {
        let basis = monomial_basis(20).unwrap();
        assert!(basis.windows(2).all(|w| w[0].weight() <= w[1].weight()));
        assert!(basis.iter().all(|m| m.weight() <= 20));
    }

    #[test]
    fn e4_is_a_basis_element() {
        let e4 = eisenstein(4, 50).unwrap();
        let d = decompose(&e4, 4, 50).unwrap();
        let d = d.found().expect("E4 decomposes");
        assert_eq!(d.terms, vec![Term { monomial: m(0, 1, 0), coefficient: int(1) }]);
        assert!(!d.ambiguous);
    }

    #[test]
    fn constant_cannot_match_e2() {
        let e2 = eisenstein(2, 20).unwrap();
        let d = decompose(&e2, 0, 20).unwrap();
        let fail = d.no_solution().unwrap();
        assert_eq!(fail.stage, SolveStage::Solve);
        assert_eq!(fail.witness_exponent, 1);
        assert_eq!(fail.target_coefficient, int(-24));
        assert_eq!(fail.fitted_coefficient, int(0));
    }

    #[test]
    fn verify_stage_failure_is_located() {
        let target = eisenstein(4, 60).unwrap().perturbed(40, &int(1));
        let fail = decompose(&target, 4, 60).unwrap().no_solution().cloned().unwrap();
        assert_eq!(fail.stage, SolveStage::Verify);
        assert_eq!(fail.witness_exponent, 40);
    }

    #[test]
    fn evaluation_examples() {
        let one = QMDecomposition {
            terms: vec![Term { monomial: QMMonomial::ONE, coefficient: int(1) }],
            weight_bound: 0,
            verified_order: 5,
            target_description: String::new(),
            ambiguous: false,
        };
        assert_eq!(eval_decomposition(&one, 5), QSeries::one(5));
        let e2 = QMDecomposition { terms: vec![Term { monomial: m(1, 0, 0), coefficient: int(1) }], ..one };
        assert_eq!(eval_decomposition(&e2, 2), QSeries::from_integers([1, -24, -72]));
    }

    #[test]
    fn precondition_on_order() {
        let e4 = eisenstein(4, 5).unwrap();
        assert!(decompose(&e4, 4, 5).is_err());
    }
}
