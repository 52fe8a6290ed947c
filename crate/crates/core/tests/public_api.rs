//! End-to-end use of the public API across modules.

use proptest::prelude::*;
use qhermite::families::{family_by_name, new_qhermite, FamilyError, FAMILY_NAMES};
use qhermite::identities::{identity_by_name, registry, run_identities, Status, VerifyParams};
use qhermite::json::{xspoly_from_json, xspoly_to_json, zpoly_from_json, zpoly_to_json};
use qhermite::moments::{
    contract, hankel_det, hankel_lambda_product, moments, sfraction_from_series, NamedSpec,
};
use qhermite::mpoly::{apply_operator_power, XSFrac, XSPoly};
use qhermite::oracle::{c_table, c_table_recurrence, enumerate_matchings, OracleError, MAX_N};
use qhermite::qfield::QScalar;

#[test]
fn every_registered_family_builds() {
    for name in FAMILY_NAMES {
        let t = family_by_name(name, 5).unwrap();
        assert_eq!(t.len(), 6, "{name}");
        assert!(
            t.entries[0].as_constant().is_some(),
            "{name}: p_0 = {}",
            t.entries[0]
        );
    }
    assert!(matches!(
        family_by_name("missing", 3),
        Err(FamilyError::Unknown { .. })
    ));
}

#[test]
fn operator_moments_and_matchings_agree() {
    let spec = NamedSpec::NewH.jspec();
    let mu = moments(&spec, 7);
    for (n, m) in mu.iter().enumerate() {
        let op = apply_operator_power(&QScalar::one(), &QScalar::from_int(-1), n);
        assert_eq!(&op, m);
        // H_n(0,-1) sums q^(c+cr) over perfect matchings only
        let at = m.subst_values(&QScalar::zero(), &QScalar::from_int(-1));
        let want = c_table(n)
            .unwrap()
            .get(&0)
            .cloned()
            .unwrap_or_else(QScalar::zero);
        assert_eq!(at, want, "n={n}");
    }
}

#[test]
fn oracle_cap_and_recurrence() {
    assert_eq!(
        enumerate_matchings(MAX_N + 1).err(),
        Some(OracleError::CapExceeded {
            n: MAX_N + 1,
            cap: MAX_N
        })
    );
    for n in 0..=9 {
        assert_eq!(c_table(n).unwrap(), c_table_recurrence(n), "n={n}");
    }
}

#[test]
fn hankel_product_law_for_every_spec() {
    for named in NamedSpec::all() {
        let spec = named.jspec();
        let mu = moments(&spec, 8);
        for n in 0..=4 {
            assert_eq!(
                hankel_det(&mu, n, 0).unwrap(),
                hankel_lambda_product(&spec, n),
                "{} n={n}",
                named.name()
            );
        }
    }
}

#[test]
fn extraction_round_trips_through_contraction() {
    let spec = NamedSpec::ContH.jspec();
    let mu = moments(&spec, 9);
    let j = contract(&sfraction_from_series(&mu, 9).unwrap());
    for n in 0..=4 {
        assert_eq!(j.b(n), XSFrac::from_poly(spec.b(n)));
    }
    assert!(sfraction_from_series(&moments(&NamedSpec::Crossing.jspec(), 5), 5).is_err());
}

#[test]
fn json_round_trips_families_and_orthogonal_polynomials() {
    for p in new_qhermite(7).entries {
        assert_eq!(xspoly_from_json(&xspoly_to_json(&p)).unwrap(), p);
    }
    for p in qhermite::families::orth_poly_sequence(&NamedSpec::H.jspec(), 4) {
        assert_eq!(zpoly_from_json(&zpoly_to_json(&p)).unwrap(), p);
    }
}

#[test]
fn identities_run_by_name() {
    let params = VerifyParams {
        max_n: Some(5),
        ..VerifyParams::default()
    };
    let ids: Vec<_> = ["crossing_moments", "w_moments"]
        .iter()
        .map(|n| identity_by_name(n).unwrap())
        .collect();
    let reports = run_identities(&ids, &params);
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|r| r.status == Status::Pass));
    assert!(identity_by_name("missing").is_none());
    assert_eq!(registry().len(), 16);
}

fn small_poly() -> impl Strategy<Value = XSPoly> {
    proptest::collection::vec((0u32..4, 0u32..3, -3i64..=3, 0i64..3), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(xd, sd, c, e)| XSPoly::monomial(xd, sd, QScalar::monomial(c, e)))
            .fold(XSPoly::zero(), |acc, t| &acc + &t)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qderivative_is_q_leibniz(p in small_poly(), r in small_poly()) {
        let q = QScalar::q();
        let lhs = (&p * &r).qderiv_x();
        let rhs = &(&p.qderiv_x() * &r) + &(&p.subst_x_scale(&q) * &r.qderiv_x());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip(p in small_poly()) {
        prop_assert_eq!(xspoly_from_json(&xspoly_to_json(&p)).unwrap(), p);
    }
}
