//! Polynomials in `E2, E4, E6` with the derivation `D = q d/dq`, acting by
//!
//! - `D E2 = (E2^2 - E4) / 12`
//! - `D E4 = (E2 E4 - E6) / 3`
//! - `D E6 = (E2 E6 - E4^2) / 2`
//!
//! Running the `A_k` recurrence here, from `A_1 = (1 - E2)/24`, gives each
//! `A_k` as an explicit element of the ring without solving anything.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::decompose::{EisensteinGenerators, QMDecomposition, QMMonomial, Term};
use crate::rational::{int, Rational};
use crate::series::QSeries;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QMPolynomial {
    terms: BTreeMap<QMMonomial, Rational>,
}

impl QMPolynomial {
    pub fn constant(c: Rational) -> Self {
        Self::term(QMMonomial::ONE, c)
    }

    pub fn term(m: QMMonomial, c: Rational) -> Self {
        let mut p = QMPolynomial::default();
        p.add_term(m, c);
        p
    }

    fn add_term(&mut self, m: QMMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn coefficient(&self, m: QMMonomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QMMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(QMMonomial::weight).max().unwrap_or(0)
    }

    pub fn add(&self, other: &QMPolynomial) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = QMPolynomial::default();
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }

    pub fn mul(&self, other: &QMPolynomial) -> Self {
        let mut out = QMPolynomial::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(QMMonomial::new(m1.a + m2.a, m1.b + m2.b, m1.c + m2.c), c1 * c2);
            }
        }
        out
    }

    /// `q d/dq` by the product rule and the generator identities.
    pub fn derivative(&self) -> Self {
        let mut out = QMPolynomial::default();
        let r = |p: i64, q: i64| Rational::new(p.into(), q.into());
        for (m, c) in &self.terms {
            let QMMonomial { a, b, c: e } = *m;
            if a > 0 {
                let scale = c * int(a as i64);
                out.add_term(QMMonomial::new(a + 1, b, e), &scale * r(1, 12));
                out.add_term(QMMonomial::new(a - 1, b + 1, e), &scale * r(-1, 12));
            }
            if b > 0 {
                let scale = c * int(b as i64);
                out.add_term(QMMonomial::new(a + 1, b, e), &scale * r(1, 3));
                out.add_term(QMMonomial::new(a, b - 1, e + 1), &scale * r(-1, 3));
            }
            if e > 0 {
                let scale = c * int(e as i64);
                out.add_term(QMMonomial::new(a + 1, b, e), &scale * r(1, 2));
                out.add_term(QMMonomial::new(a, b + 2, e - 1), &scale * r(-1, 2));
            }
        }
        out
    }

    /// Evaluates against the given generators.
    pub fn eval(&self, generators: &EisensteinGenerators) -> QSeries {
        let basis: Vec<QMMonomial> = self.terms.keys().copied().collect();
        let columns = generators.evaluate_basis(&basis);
        self.terms
            .values()
            .zip(&columns)
            .fold(QSeries::zero(generators.order()), |acc, (c, s)| &acc + &s.scale(c))
    }

    /// Terms listed in the same order as [`super::monomial_basis`].
    pub fn to_decomposition(&self, verified_order: usize) -> QMDecomposition {
        let mut terms: Vec<Term> =
            self.terms.iter().map(|(m, c)| Term { monomial: *m, coefficient: c.clone() }).collect();
        terms.sort_by_key(|t| (t.monomial.weight(), std::cmp::Reverse(t.monomial.a), std::cmp::Reverse(t.monomial.b)));
        let weight_bound = self.max_weight();
        QMDecomposition {
            terms,
            weight_bound,
            verified_order,
            target_description: "symbolic".into(),
            ambiguous: false,
        }
    }
}

/// `A_k` as a polynomial in `E2, E4, E6`; `k = 0` gives `1`.
pub fn symbolic_a(k: usize) -> QMPolynomial {
    let one = QMPolynomial::constant(int(1));
    if k == 0 {
        return one;
    }
    let inv24 = Rational::new(1.into(), 24.into());
    let a1 = one.add(&QMPolynomial::term(QMMonomial::new(1, 0, 0), int(-1))).scale(&inv24);
    let mut current = a1.clone();
    for j in 2..=k as i64 {
        let factor = a1.scale(&int(6)).add(&QMPolynomial::constant(int(j * (j - 1))));
        let next = factor.mul(&current).add(&current.derivative().scale(&int(-2)));
        current = next.scale(&Rational::new(1.into(), ((2 * j + 1) * 2 * j).into()));
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivation_matches_series_derivative() {
        let g = EisensteinGenerators::standard(40);
        for m in [QMMonomial::new(1, 0, 0), QMMonomial::new(0, 1, 0), QMMonomial::new(0, 0, 1), QMMonomial::new(2, 1, 1)] {
            let p = QMPolynomial::term(m, int(1));
            assert_eq!(p.derivative().eval(&g), p.eval(&g).q_derivative(), "{m}");
        }
    }

    #[test]
    fn a1_and_a2() {
        let a1 = symbolic_a(1);
        assert_eq!(a1.coefficient(QMMonomial::ONE), Rational::new(1.into(), 24.into()));
        assert_eq!(a1.coefficient(QMMonomial::new(1, 0, 0)), Rational::new((-1).into(), 24.into()));
        let a2 = symbolic_a(2);
        assert_eq!(a2.max_weight(), 4);
    }
}
