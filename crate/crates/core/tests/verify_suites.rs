use qdiv_core::macmahon::Family;
use qdiv_core::verify::{
    probe_family_c_quasimodularity, verify_method_agreement, verify_quasimodularity, verify_theorem_f,
    verify_theorem_f_with, verify_theorem_g, Fault, Intermediate,
};
use qdiv_core::Status;

#[test]
fn theorem_f_examples() {
    assert!(verify_theorem_f(0, 50).unwrap().passed());
    assert!(verify_theorem_f(4, 100).unwrap().passed());
    let fault = Fault::new(Intermediate::FamilySeries { k: 1 }, 3);
    let r = verify_theorem_f_with(1, 50, Some(&fault)).unwrap();
    assert_eq!(r.status(), Status::Fail);
    let m = r.first_mismatch().unwrap();
    assert_eq!(m.x_degree, Some(3));
    assert_eq!(m.q_exponent, 6);
}

#[test]
fn theorem_g_examples() {
    assert!(verify_theorem_g(0, 100).unwrap().passed());
    assert!(verify_theorem_g(4, 100).unwrap().passed());
}

#[test]
fn agreement_examples() {
    for (family, k) in [(Family::A, 3), (Family::C, 3), (Family::A, 1)] {
        let r = verify_method_agreement(family, k, 150).unwrap();
        assert!(r.passed(), "{}", r.summary_line());
    }
}

#[test]
fn quasimodularity_examples() {
    let r = verify_quasimodularity(1, 100).unwrap();
    assert!(r.passed());
    assert_eq!(r.parameters["decomposition_sizes"], "1:2");
    let r = verify_quasimodularity(5, 200).unwrap();
    assert!(r.passed(), "{}", r.summary_line());
    let probe = probe_family_c_quasimodularity(1, 100).unwrap();
    assert_eq!(probe.status(), Status::Fail);
}

#[test]
fn reports_are_deterministic() {
    let a = verify_theorem_g(2, 60).unwrap();
    let b = verify_theorem_g(2, 60).unwrap();
    assert!(a.same_outcome(&b));
    let fault = Fault::new(Intermediate::Prefactor, 7);
    let a = verify_theorem_f_with(2, 60, Some(&fault)).unwrap();
    let b = verify_theorem_f_with(2, 60, Some(&fault)).unwrap();
    assert!(a.same_outcome(&b));
    assert_eq!(
        serde_json::to_value(&a).unwrap()["first_mismatch"],
        serde_json::to_value(&b).unwrap()["first_mismatch"]
    );
}

#[test]
fn report_json_schema() {
    let r = verify_theorem_f(1, 20).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["checked_order", "elapsed_seconds", "first_mismatch", "identity_name", "parameters", "status"]
    );
    assert_eq!(v["status"], "pass");
    assert!(v["first_mismatch"].is_null());
}
