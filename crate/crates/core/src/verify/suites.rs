use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{compare, inject, Fault, Intermediate, Mismatch, VerificationReport};
use crate::error::{Error, Result};
use crate::macmahon::{gen_direct, gen_explicit, oracle, theta_f, theta_g, Family};
use crate::macmahon::recurrence_from_seed;
use crate::quasimodular::{decompose_with, monomial_basis, symbolic_a, Decomposition, EisensteinGenerators};
use crate::rational::{self, int, Rational};
use crate::series::{pochhammer_inf, QSeries};

/// Oracle cross-checks cover `n <= ORACLE_PREFIX`.
pub const ORACLE_PREFIX: usize = 40;

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn first_by_exponent(candidates: impl IntoIterator<Item = Option<Mismatch>>) -> Option<Mismatch> {
    candidates.into_iter().flatten().min_by_key(|m| m.q_exponent)
}

fn jacobi_cube(order: usize) -> QSeries {
    pochhammer_inf(&int(1), 2, 2, order).expect("valid offset").pow(3)
}

fn theta_quotient(order: usize) -> QSeries {
    let euler = pochhammer_inf(&int(1), 1, 1, order).expect("valid offset");
    let plus = pochhammer_inf(&int(-1), 1, 1, order).expect("valid offset");
    euler.mul(&plus.inverse().expect("unit constant term"))
}

/// `F(x,q) = (q^2;q^2)^3 sum_k A_k(q^2) x^(2k+1)` for `k <= k_max`, plus
/// vanishing of the even x-degrees.
pub fn verify_theorem_f(k_max: usize, order: usize) -> Result<VerificationReport> {
    verify_theorem_f_with(k_max, order, None)
}

pub fn verify_theorem_f_with(k_max: usize, order: usize, fault: Option<&Fault>) -> Result<VerificationReport> {
    let start = Instant::now();
    let bound = 2 * k_max + 1;
    let theta = theta_f(bound, order);
    let prefactor = inject(fault, Intermediate::Prefactor, jacobi_cube(order));
    // A_k at half order covers q^order after q -> q^2.
    let half = order.div_ceil(2);
    let mut mismatch = None;
    for d in 0..=bound {
        let lhs = inject(fault, Intermediate::ThetaEntry { x_degree: d }, theta.entry(d).clone());
        let rhs = if d % 2 == 0 {
            QSeries::zero(order)
        } else {
            let k = d / 2;
            let a_k = inject(fault, Intermediate::FamilySeries { k }, gen_direct(Family::A, k, half));
            prefactor.mul(&a_k.substitute(2))
        };
        let context = if d % 2 == 0 {
            format!("even x-degree {d} must vanish")
        } else {
            format!("theta vs (q^2;q^2)^3 A_{}(q^2)", d / 2)
        };
        if let Some(m) = compare(&lhs, &rhs, Some(d), &context) {
            mismatch = Some(m);
            break;
        }
    }
    Ok(VerificationReport::new(
        "theorem-F",
        params([("k_max", k_max.to_string())]),
        order,
        mismatch,
        start.elapsed(),
    ))
}

/// `G(x,q) = (q;q)/(-q;q) sum_k C_k(q) x^(2k)` for `k <= k_max`, plus
/// vanishing of the odd x-degrees.
pub fn verify_theorem_g(k_max: usize, order: usize) -> Result<VerificationReport> {
    verify_theorem_g_with(k_max, order, None)
}

pub fn verify_theorem_g_with(k_max: usize, order: usize, fault: Option<&Fault>) -> Result<VerificationReport> {
    let start = Instant::now();
    let bound = 2 * k_max + 1;
    let theta = theta_g(bound, order);
    let prefactor = inject(fault, Intermediate::Prefactor, theta_quotient(order));
    let mut mismatch = None;
    for d in 0..=bound {
        let lhs = inject(fault, Intermediate::ThetaEntry { x_degree: d }, theta.entry(d).clone());
        let rhs = if d % 2 == 1 {
            QSeries::zero(order)
        } else {
            let k = d / 2;
            let c_k = inject(fault, Intermediate::FamilySeries { k }, gen_direct(Family::C, k, order));
            prefactor.mul(&c_k)
        };
        let context = if d % 2 == 1 {
            format!("odd x-degree {d} must vanish")
        } else {
            format!("theta vs (q;q)/(-q;q) C_{}(q)", d / 2)
        };
        if let Some(m) = compare(&lhs, &rhs, Some(d), &context) {
            mismatch = Some(m);
            break;
        }
    }
    Ok(VerificationReport::new(
        "theorem-G",
        params([("k_max", k_max.to_string())]),
        order,
        mismatch,
        start.elapsed(),
    ))
}

/// Direct, explicit and recurrence routes agree through `order`, and the
/// direct route matches the enumeration oracle for `n <= min(order, 40)`.
pub fn verify_method_agreement(family: Family, k: usize, order: usize) -> Result<VerificationReport> {
    verify_method_agreement_with(family, k, order, None)
}

pub fn verify_method_agreement_with(
    family: Family,
    k: usize,
    order: usize,
    fault: Option<&Fault>,
) -> Result<VerificationReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("method agreement requires k >= 1".into()));
    }
    let start = Instant::now();
    let direct = inject(fault, Intermediate::Direct, gen_direct(family, k, order));
    let explicit = inject(fault, Intermediate::Explicit, gen_explicit(family, k, order)?);
    let seed = if k == 1 { direct.clone() } else { gen_direct(family, 1, order) };
    let recurrence = inject(fault, Intermediate::Recurrence, recurrence_from_seed(family, k, &seed));

    let prefix = order.min(ORACLE_PREFIX);
    let mut oracle_values = vec![Rational::zero(); prefix + 1];
    for (n, value) in oracle_values.iter_mut().enumerate().skip(1) {
        *value = Rational::from_integer(BigInt::from(oracle(family, n as u64, k as u32)?));
    }
    let oracle_series = inject(fault, Intermediate::Oracle, QSeries::from_coeffs(oracle_values));

    let mismatch = first_by_exponent([
        compare(&direct, &explicit, None, "direct vs explicit"),
        compare(&direct, &recurrence, None, "direct vs recurrence"),
        compare(&direct.truncate(prefix), &oracle_series, None, "direct vs oracle"),
    ]);
    Ok(VerificationReport::new(
        format!("agreement/{family}/k={k}"),
        params([("family", family.to_string()), ("k", k.to_string()), ("oracle_prefix", prefix.to_string())]),
        order,
        mismatch,
        start.elapsed(),
    ))
}

/// Each `A_k`, `k <= k_max`, decomposes in `Q[E2,E4,E6]` at weight `2k`.
///
/// Before decomposing, the generators are checked against their derivative
/// identities and each `A_k` against the polynomial obtained by running the
/// recurrence symbolically from `A_1 = (1 - E2)/24`. Membership alone does
/// not notice a target shifted by a ring element such as a constant.
pub fn verify_quasimodularity(k_max: usize, order: usize) -> Result<VerificationReport> {
    verify_quasimodularity_with(k_max, order, None)
}

pub fn verify_quasimodularity_with(k_max: usize, order: usize, fault: Option<&Fault>) -> Result<VerificationReport> {
    if k_max == 0 {
        return Err(Error::InvalidArgument("quasimodularity requires k_max >= 1".into()));
    }
    let start = Instant::now();
    let standard = EisensteinGenerators::standard(order);
    let generators = EisensteinGenerators {
        e2: inject(fault, Intermediate::Eisenstein { weight: 2 }, standard.e2),
        e4: inject(fault, Intermediate::Eisenstein { weight: 4 }, standard.e4),
        e6: inject(fault, Intermediate::Eisenstein { weight: 6 }, standard.e6),
    };
    let mut mismatch = generator_identities(&generators, order);
    let mut sizes = Vec::new();
    for k in 1..=k_max {
        if mismatch.is_some() {
            break;
        }
        let target = inject(fault, Intermediate::Target { k }, gen_direct(Family::A, k, order));
        // The recurrence run symbolically from A_1 = (1 - E2)/24.
        let expected = symbolic_a(k).eval(&generators);
        mismatch = compare(&target, &expected, None, &format!("A_{k} vs its symbolic form in E2, E4, E6"));
        if mismatch.is_some() {
            break;
        }
        let weight = 2 * k as u32;
        match decompose_with(&target, weight, order, &generators)? {
            Decomposition::Found(d) => sizes.push(format!("{k}:{}", d.len())),
            Decomposition::NoSolution(fail) => {
                mismatch = Some(Mismatch {
                    x_degree: None,
                    q_exponent: fail.witness_exponent,
                    lhs_coefficient: fail.target_coefficient,
                    rhs_coefficient: fail.fitted_coefficient,
                    context: format!("A_{k} at weight {weight}, {:?} stage", fail.stage).to_lowercase(),
                });
            }
        }
    }
    Ok(VerificationReport::new(
        "quasimodular",
        params([("k_max", k_max.to_string()), ("decomposition_sizes", sizes.join(","))]),
        order,
        mismatch,
        start.elapsed(),
    ))
}

/// Closure of the generators under `q d/dq`:
/// `D E2 = (E2^2 - E4)/12`, `D E4 = (E2 E4 - E6)/3`, `D E6 = (E2 E6 - E4^2)/2`.
///
/// Ring membership alone cannot see a shift of a generator by a constant,
/// since that leaves the weight-filtered span unchanged; these identities
/// pin every coefficient.
fn generator_identities(g: &EisensteinGenerators, order: usize) -> Option<Mismatch> {
    let inv = |p: i64| Rational::new(1.into(), p.into());
    let checks = [
        ("D E2 vs (E2^2 - E4)/12", &g.e2, (&g.e2.square() - &g.e4).scale(&inv(12))),
        ("D E4 vs (E2 E4 - E6)/3", &g.e4, (&g.e2.mul(&g.e4) - &g.e6).scale(&inv(3))),
        ("D E6 vs (E2 E6 - E4^2)/2", &g.e6, (&g.e2.mul(&g.e6) - &g.e4.square()).scale(&inv(2))),
    ];
    checks.into_iter().find_map(|(context, series, rhs)| {
        compare(&series.q_derivative().truncate(order), &rhs, None, context)
    })
}

/// `C_k` against the level-one basis at weight `2k`. Expected to fail; the
/// report records where.
pub fn probe_family_c_quasimodularity(k: usize, order: usize) -> Result<VerificationReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("probe requires k >= 1".into()));
    }
    let start = Instant::now();
    let target = gen_direct(Family::C, k, order);
    let weight = 2 * k as u32;
    let mismatch = match decompose_with(&target, weight, order, &EisensteinGenerators::standard(order))? {
        Decomposition::Found(_) => None,
        Decomposition::NoSolution(fail) => Some(Mismatch {
            x_degree: None,
            q_exponent: fail.witness_exponent,
            lhs_coefficient: fail.target_coefficient,
            rhs_coefficient: fail.fitted_coefficient,
            context: format!("C_{k} in level-one basis at weight {weight}"),
        }),
    };
    Ok(VerificationReport::new(
        format!("probe/C/k={k}"),
        params([("k", k.to_string()), ("basis_size", monomial_basis(weight)?.len().to_string())]),
        order,
        mismatch,
        start.elapsed(),
    ))
}

/// `f_0 = sum (-1)^n (2n+1) q^(n^2+n)`.
fn f0_sum(order: usize) -> QSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    for n in (0..).take_while(|n| n * n + n <= order) {
        coeffs[n * n + n] = int(if n % 2 == 0 { 1 } else { -1 } * (2 * n as i64 + 1));
    }
    QSeries::from_coeffs(coeffs)
}

/// `g_0 = 1 + 2 sum_{n>=1} (-1)^n q^(n^2)`.
fn g0_sum(order: usize) -> QSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = int(1);
    for n in (1..).take_while(|n| n * n <= order) {
        coeffs[n * n] = int(if n % 2 == 0 { 2 } else { -2 });
    }
    QSeries::from_coeffs(coeffs)
}

/// The two `k = 0` identities from their alternating sums, independent of
/// the Chebyshev machinery: `f_0 = (q^2;q^2)^3` and `g_0 = (q;q)/(-q;q)`.
pub fn verify_seed_identities(order: usize) -> Vec<VerificationReport> {
    let start = Instant::now();
    let f = compare(&f0_sum(order), &jacobi_cube(order), None, "f0 sum vs (q^2;q^2)^3");
    let f = VerificationReport::new("seed/f0", BTreeMap::new(), order, f, start.elapsed());
    let start = Instant::now();
    let g = compare(&g0_sum(order), &theta_quotient(order), None, "g0 sum vs (q;q)/(-q;q)");
    let g = VerificationReport::new("seed/g0", BTreeMap::new(), order, g, start.elapsed());
    vec![f, g]
}

/// `f_k = (-1)^k/(2k+1)! D_k ... D_1 f_0` with `D_l = q d/dq - l(l-1)`, and
/// `g_k = (-1)^k/(2k)! D'_k ... D'_1 g_0` with `D'_l = q d/dq - (l-1)^2`,
/// checked against the x-coefficients of `F` and `G`.
pub fn verify_operator_chain(family: Family, k_max: usize, order: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let (theta, mut current) = match family {
        Family::A => (theta_f(2 * k_max + 1, order), f0_sum(order)),
        Family::C => (theta_g(2 * k_max, order), g0_sum(order)),
    };
    let mut mismatch = None;
    for k in 0..=k_max {
        if k > 0 {
            let kk = k as i64;
            let shift = match family {
                Family::A => kk * (kk - 1),
                Family::C => (kk - 1) * (kk - 1),
            };
            current = &current.q_derivative() - &current.scale(&int(shift));
        }
        let (degree, factorial) = match family {
            Family::A => (2 * k + 1, rational::factorial(2 * k as u64 + 1)),
            Family::C => (2 * k, rational::factorial(2 * k as u64)),
        };
        let sign = if k % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        let predicted = current.scale(&Rational::new(sign, factorial));
        if let Some(m) = compare(theta.entry(degree), &predicted, Some(degree), &format!("operator chain k={k}")) {
            mismatch = Some(m);
            break;
        }
    }
    let name = match family {
        Family::A => "operator-chain/F",
        Family::C => "operator-chain/G",
    };
    Ok(VerificationReport::new(name, params([("k_max", k_max.to_string())]), order, mismatch, start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_identities_pass() {
        for r in verify_seed_identities(60) {
            assert!(r.passed(), "{}", r.summary_line());
        }
    }

    #[test]
    fn operator_chains_pass() {
        for family in Family::ALL {
            let r = verify_operator_chain(family, 4, 80).unwrap();
            assert!(r.passed(), "{}", r.summary_line());
        }
    }

    #[test]
    fn theorem_f_fault_lands_on_doubled_exponent() {
        let fault = Fault::new(Intermediate::FamilySeries { k: 1 }, 3);
        let r = verify_theorem_f_with(1, 50, Some(&fault)).unwrap();
        let m = r.first_mismatch().expect("fault detected");
        assert_eq!((m.x_degree, m.q_exponent), (Some(3), 6));
    }

    #[test]
    fn agreement_rejects_k_zero() {
        assert!(verify_method_agreement(Family::A, 0, 10).is_err());
    }
}
