//! Exit criteria. Every check is exact; each prints one PASS/FAIL line.

use std::time::Instant;

use qdiv_core::macmahon::{
    cheb_coeff_closed, cheb_rescaled_table, gen_direct, gen_explicit, gen_recurrence, oracle, Family, Parity,
};
use qdiv_core::quasimodular::{decompose, eval_decomposition, QMMonomial};
use qdiv_core::rational::int;
use qdiv_core::series::pochhammer_inf;
use qdiv_core::verify::{
    verify_method_agreement_with, verify_quasimodularity_with, verify_seed_identities, verify_theorem_f,
    verify_theorem_f_with, verify_theorem_g, verify_theorem_g_with, Fault, Intermediate, VerificationReport,
    ORACLE_PREFIX,
};
use qdiv_core::{BigInt, QSeries, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn oracle_equivalence() -> Outcome {
    let mut checked = 0;
    for family in Family::ALL {
        for k in 1..=4usize {
            let direct = gen_direct(family, k, 40);
            for n in 1..=40usize {
                let expected = Rational::from_integer(BigInt::from(oracle(family, n as u64, k as u32).unwrap()));
                if direct.coeff(n) != &expected {
                    return Err(format!("{family} k={k} n={n}: direct {} oracle {expected}", direct.coeff(n)));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} coefficients"))
}

fn route_agreement() -> Outcome {
    for family in Family::ALL {
        for k in 1..=5 {
            let direct = gen_direct(family, k, 150);
            let explicit = gen_explicit(family, k, 150).unwrap();
            let recurrence = gen_recurrence(family, k, 150).unwrap();
            if let Some(n) = direct.first_difference(&explicit) {
                return Err(format!("{family} k={k}: direct vs explicit at q^{n}"));
            }
            if let Some(n) = direct.first_difference(&recurrence) {
                return Err(format!("{family} k={k}: direct vs recurrence at q^{n}"));
            }
        }
    }
    Ok("k=1..5, order 150, A and C".into())
}

fn require(report: &VerificationReport) -> Result<(), String> {
    if report.passed() {
        Ok(())
    } else {
        Err(report.summary_line())
    }
}

fn theorem_f() -> Outcome {
    require(&verify_theorem_f(4, 100).unwrap())?;
    require(&verify_theorem_f(0, 500).unwrap())?;
    require(&verify_seed_identities(500)[0])?;
    Ok("k_max 4 @ 100; f0 = (q^2;q^2)^3 @ 500".into())
}

fn theorem_g() -> Outcome {
    require(&verify_theorem_g(4, 100).unwrap())?;
    require(&verify_theorem_g(0, 500).unwrap())?;
    require(&verify_seed_identities(500)[1])?;
    Ok("k_max 4 @ 100; g0 = (q;q)/(-q;q) @ 500".into())
}

fn chebyshev_closed_forms() -> Outcome {
    let table = cheb_rescaled_table(61);
    for n in 0..=30usize {
        for k in 0..=n {
            if n >= 1 && cheb_coeff_closed(n as u64, k as u64, Parity::Even).unwrap() != table[2 * n].coeff(2 * k) {
                return Err(format!("even n={n} k={k}"));
            }
            if cheb_coeff_closed(n as u64, k as u64, Parity::Odd).unwrap() != table[2 * n + 1].coeff(2 * k + 1) {
                return Err(format!("odd n={n} k={k}"));
            }
        }
    }
    Ok("n <= 30, both parities".into())
}

fn quasimodularity() -> Outcome {
    let mut sizes = Vec::new();
    for k in 1..=5usize {
        let target = gen_direct(Family::A, k, 200);
        let d = decompose(&target, 2 * k as u32, 200).unwrap();
        let Some(d) = d.found() else {
            return Err(format!("A_{k}: {:?}", d.no_solution()));
        };
        if eval_decomposition(d, 200) != target {
            return Err(format!("A_{k}: nonzero residual"));
        }
        if k == 1 {
            let expected = [(QMMonomial::ONE, Rational::new(1.into(), 24.into())), (QMMonomial::new(1, 0, 0), Rational::new((-1).into(), 24.into()))];
            let got: Vec<_> = d.terms.iter().map(|t| (t.monomial, t.coefficient.clone())).collect();
            if got != expected {
                return Err(format!("A_1 = {d}"));
            }
        }
        sizes.push(d.len().to_string());
    }
    Ok(format!("term counts {}", sizes.join(",")))
}

fn euler_pentagonal() -> Outcome {
    let order = 200;
    let euler = pochhammer_inf(&int(1), 1, 1, order).unwrap();
    let mut pentagonal = std::collections::BTreeMap::new();
    for j in 1i64.. {
        let p = (j * (3 * j - 1) / 2) as usize;
        if p > order {
            break;
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        pentagonal.insert(p, sign);
        let p2 = (j * (3 * j + 1) / 2) as usize;
        if p2 <= order {
            pentagonal.insert(p2, sign);
        }
    }
    pentagonal.insert(0, 1);
    for n in 0..=order {
        let expected = int(pentagonal.get(&n).copied().unwrap_or(0));
        if euler.coeff(n) != &expected {
            return Err(format!("q^{n}: {} expected {expected}", euler.coeff(n)));
        }
    }
    Ok(format!("{} nonzero terms", pentagonal.len()))
}

/// Every single +1 perturbation of every named intermediate must flip the
/// suite to fail, with the mismatch located inside the checked order.
fn fault_injection() -> Outcome {
    let mut runs = 0usize;
    let mut check = |label: String, report: VerificationReport| -> Result<(), String> {
        runs += 1;
        match report.first_mismatch() {
            Some(m) if !report.passed() && m.q_exponent <= report.checked_order => Ok(()),
            _ => Err(format!("{label}: not detected ({})", report.summary_line())),
        }
    };

    let (k_max, order) = (2usize, 40usize);
    let mut theta_faults = vec![(Intermediate::Prefactor, order)];
    theta_faults.extend((0..=2 * k_max + 1).map(|d| (Intermediate::ThetaEntry { x_degree: d }, order)));
    let mut f_faults = theta_faults.clone();
    f_faults.extend((0..=k_max).map(|k| (Intermediate::FamilySeries { k }, order / 2)));
    let mut g_faults = theta_faults;
    g_faults.extend((0..=k_max).map(|k| (Intermediate::FamilySeries { k }, order)));
    for (intermediate, top) in f_faults {
        for e in 0..=top {
            let fault = Fault::new(intermediate, e);
            check(format!("theorem-F {fault:?}"), verify_theorem_f_with(k_max, order, Some(&fault)).unwrap())?;
        }
    }
    for (intermediate, top) in g_faults {
        for e in 0..=top {
            let fault = Fault::new(intermediate, e);
            check(format!("theorem-G {fault:?}"), verify_theorem_g_with(k_max, order, Some(&fault)).unwrap())?;
        }
    }

    for family in Family::ALL {
        for k in [1usize, 2] {
            for (intermediate, top) in [
                (Intermediate::Direct, order),
                (Intermediate::Explicit, order),
                (Intermediate::Recurrence, order),
                (Intermediate::Oracle, order.min(ORACLE_PREFIX)),
            ] {
                for e in 0..=top {
                    let fault = Fault::new(intermediate, e);
                    let report = verify_method_agreement_with(family, k, order, Some(&fault)).unwrap();
                    check(format!("agreement {family} k={k} {fault:?}"), report)?;
                }
            }
        }
    }

    let (qm_k, qm_order) = (2usize, 30usize);
    let mut qm_faults: Vec<Intermediate> = (1..=qm_k).map(|k| Intermediate::Target { k }).collect();
    qm_faults.extend([2, 4, 6].map(|weight| Intermediate::Eisenstein { weight }));
    for intermediate in qm_faults {
        for e in 0..=qm_order {
            let fault = Fault::new(intermediate, e);
            let report = verify_quasimodularity_with(qm_k, qm_order, Some(&fault)).unwrap();
            check(format!("quasimodular {fault:?}"), report)?;
        }
    }
    Ok(format!("{runs} perturbations detected"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("oracle equivalence (n<=40, k<=4)", oracle_equivalence),
        ("explicit/recurrence agreement (order 150, k<=5)", route_agreement),
        ("F identity (k<=4 @100, seed @500)", theorem_f),
        ("G identity (k<=4 @100, seed @500)", theorem_g),
        ("Chebyshev closed forms (n<=30)", chebyshev_closed_forms),
        ("quasi-modular decomposition (k<=5 @200)", quasimodularity),
        ("Euler pentagonal support (order 200)", euler_pentagonal),
        ("fault injection", fault_injection),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!("PASS  {name}: {detail} [{secs:.2}s]"),
            Err(why) => {
                println!("FAIL  {name}: {why} [{secs:.2}s]");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn constant_series_sanity() {
    assert_eq!(gen_direct(Family::A, 0, 5), QSeries::one(5));
}
