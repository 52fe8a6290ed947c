use super::*;
use num_rational::BigRational;

#[test]
fn checker_keeps_smallest_witness() {
    let mut ck = Checker::new();
    ck.eq("a", 3, Some(1), &1, &2);
    ck.eq("b", 2, Some(5), &1, &3);
    ck.eq("c", 2, Some(4), &1, &4);
    ck.eq("d", 1, None, &1, &1);
    let r = ck.finish("t", "n <= 3".into(), vec![]);
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.checks, 4);
    let w = r.witness.unwrap();
    assert_eq!((w.check.as_str(), w.n, w.k), ("c", 2, Some(4)));
    assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("1", "4"));
}

#[test]
fn passing_report_has_no_witness() {
    let mut ck = Checker::new();
    ck.eq("a", 0, None, &1, &1);
    let r = ck.finish("t", "n <= 0".into(), vec![]);
    assert!(r.passed() && r.witness.is_none());
}

#[test]
fn registry_names_are_unique() {
    let names: Vec<_> = registry().iter().map(|i| i.name).collect();
    let mut sorted = names.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), names.len());
    assert!(identity_by_name("matrix_inverse").is_some());
    assert!(identity_by_name("nope").is_none());
}

#[test]
fn params_range() {
    let p = VerifyParams::default();
    assert_eq!(p.range(10, 14), 10);
    let p = VerifyParams {
        max_n: Some(20),
        ..p
    };
    assert_eq!(p.range(10, 14), 14);
    let p = VerifyParams {
        max_n: Some(3),
        ..p
    };
    assert_eq!(p.range(10, 14), 3);
}

#[test]
fn small_ranges_pass() {
    let p = VerifyParams {
        max_n: Some(4),
        trials: 3,
        ..Default::default()
    };
    for r in run_all(&p) {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn report_json_round_trip() {
    let r = verify_operator_equals_moments(3);
    let text = serde_json::to_string(&r).unwrap();
    assert!(text.contains(r#""status":"pass""#));
    let back: VerifyReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
}

#[test]
fn numeric_check_is_deterministic() {
    let a = verify_double_sum_numeric(4, 5, 7);
    let b = verify_double_sum_numeric(4, 5, 7);
    assert_eq!(a, b);
    assert!(a.passed(), "{a}");
    assert_eq!(a.checks, 25);
}

#[test]
fn double_sum_small_cases() {
    let r = |a: i64| BigRational::from_integer(a.into());
    // n = 1 gives x
    assert_eq!(lucas::double_sum(1, &r(2), &r(1), &r(1)), Some(r(1)));
    assert_eq!(lucas::double_sum(0, &r(3), &r(2), &r(5)), Some(r(1)));
    assert_eq!(lucas::double_sum(2, &r(1), &r(1), &r(1)), None);
}

#[test]
fn tabulated_value_discrepancy_is_reported() {
    let r = verify_value_at_q_minus_one_over_q(5);
    assert!(r.passed(), "{r}");
    assert!(
        r.notes.iter().any(|n| n.contains("k = 3j+2: q^k F_(2k+1)")),
        "{:?}",
        r.notes
    );
}
