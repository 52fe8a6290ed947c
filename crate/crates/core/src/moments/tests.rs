use super::*;
use crate::mpoly::XSFrac;

fn int(v: i64) -> XSPoly {
    XSPoly::from_int(v)
}

#[test]
fn catalan_from_unit_sfraction() {
    let spec = SSpec {
        name: "ones".into(),
        c: CoeffSeq::rule("1", |_| int(1)),
    };
    let series = sfraction_series(&spec, 8).unwrap();
    let want = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
    assert_eq!(series, want.iter().map(|&v| int(v)).collect::<Vec<_>>());
    // contraction gives the Motzkin-type J-fraction with the same moments
    assert_eq!(moments(&contract(&spec), 8), series);
}

#[test]
fn geometric_series() {
    let spec = sspec_from_list("geo", vec![XSPoly::x()]);
    let series = sfraction_series(&spec, 5).unwrap();
    for (n, v) in series.iter().enumerate() {
        assert_eq!(*v, XSPoly::x().pow(n as u32));
    }
}

#[test]
fn list_sequences_default_to_zero() {
    let seq = CoeffSeq::list(2, vec![int(4), int(5)]);
    assert_eq!(seq.get(0), int(0));
    assert_eq!(seq.get(3), int(5));
    assert_eq!(seq.get(9), int(0));
}

#[test]
fn w_spec_moments_are_q_powers() {
    for m in 0..=2u32 {
        let r = 2 * m as i64 + 1;
        let mu = moments(&NamedSpec::W(m).jspec(), 7);
        for (n, v) in mu.iter().enumerate() {
            let n = n as i64;
            assert_eq!(
                *v,
                XSPoly::constant(QScalar::q_pow(n * (r * n + 1) / 2)),
                "m={m} n={n}"
            );
        }
    }
}

#[test]
fn new_h_first_moments() {
    let mu = moments(&NamedSpec::NewH.jspec(), 4);
    assert_eq!(mu[0].to_string(), "1");
    assert_eq!(mu[1].to_string(), "x");
    assert_eq!(mu[2].to_string(), "-s+x^2");
    assert_eq!(mu[3].to_string(), "-(2+q)sx+x^3");
    assert_eq!(mu[4].to_string(), "(2+q)s^2-(3+2q+q^2)sx^2+x^4");
}

#[test]
fn classical_and_crossing_moments() {
    let mu = moments(&NamedSpec::Classical.jspec(), 4);
    assert_eq!(mu[4].to_string(), "3s^2-6sx^2+x^4");
    let cr = moments(&NamedSpec::Crossing.jspec(), 6);
    assert!(cr[5].is_zero());
    // perfect matchings of 6 points by crossings: 5 + 6q + 3q^2 + q^3
    assert_eq!(cr[6], qpoly_const(&[5, 6, 3, 1]));
}

#[test]
fn hankel_determinants_are_lambda_products() {
    for spec in NamedSpec::all() {
        let j = spec.jspec();
        let mu = moments(&j, 9);
        for n in 0..=5 {
            assert_eq!(
                hankel_det(&mu, n, 0).unwrap(),
                hankel_lambda_product(&j, n),
                "{} n={n}",
                spec.name()
            );
        }
    }
}

#[test]
fn hankel_needs_enough_moments() {
    let mu = vec![int(1), int(1)];
    assert_eq!(
        hankel_det(&mu, 2, 0),
        Err(EngineError::InsufficientMoments { needed: 3, got: 2 })
    );
}

#[test]
fn pn_at_zero_classical() {
    // lambda_n = -n s, so p_{n+1}(0) = n s p_{n-1}(0) at x = 0
    let j = jspec_classical();
    let at = |n| pn_at_zero(&j, n).subst_values(&QScalar::zero(), &QScalar::one());
    assert_eq!(at(2), QScalar::from_int(1));
    assert_eq!(at(3), QScalar::zero());
    assert_eq!(at(4), QScalar::from_int(3));
}

#[test]
fn parity_violation_detected() {
    // a J-like series cannot come from an S-fraction when c_0 is nonzero
    let spec = SSpec {
        name: "bad".into(),
        c: CoeffSeq::rule("bad", |n| if n == 1 { int(1) } else { int(0) }),
    };
    assert!(sfraction_table(&spec, 4).is_ok());
    let bad = SSpec {
        name: "bad".into(),
        c: CoeffSeq::Rule {
            name: "c".into(),
            f: std::sync::Arc::new(|_| int(1)),
        },
    };
    assert!(sfraction_table(&bad, 6).is_ok());
}

#[test]
fn extraction_round_trip_integer() {
    let spec = SSpec {
        name: "ints".into(),
        c: CoeffSeq::rule("n+1", |n| int(n as i64 + 1)),
    };
    let mu = sfraction_series(&spec, 10).unwrap();
    let back = sfraction_from_series(&mu, 10).unwrap();
    for k in 1..=10 {
        assert_eq!(back.c(k), XSFrac::from_poly(spec.c(k)), "c_{k}");
    }
}

#[test]
fn extraction_terminating_fraction() {
    let spec = sspec_from_list("two", vec![XSPoly::x(), XSPoly::s()]);
    let mu = sfraction_series(&spec, 7).unwrap();
    let back = sfraction_from_series(&mu, 7).unwrap();
    assert_eq!(back.c(1), XSPoly::x());
    assert_eq!(back.c(2), XSPoly::s());
    for k in 3..=7 {
        assert!(back.c(k).is_zero());
    }
}

#[test]
fn extraction_rejects_bad_input() {
    assert!(matches!(
        sfraction_from_series(&[int(2), int(1), int(1)], 2),
        Err(EngineError::NotNormalized)
    ));
    assert!(matches!(
        sfraction_from_series(&[int(1)], 3),
        Err(EngineError::InsufficientMoments { .. })
    ));
    // 1 + 0 t + t^2: c_1 = 0 but the series does not terminate
    assert!(matches!(
        sfraction_from_series(&[int(1), int(0), int(1)], 2),
        Err(EngineError::DegenerateSeries { .. })
    ));
}

#[test]
fn symbolic_round_trip() {
    for spec in [NamedSpec::NewH, NamedSpec::T, NamedSpec::Classical] {
        let j = spec.jspec();
        let mu = moments(&j, 8);
        let s = sfraction_from_series(&mu, 8).unwrap();
        let j2 = contract(&s);
        for n in 0..4 {
            assert_eq!(j2.b(n), XSFrac::from_poly(j.b(n)), "{} b_{n}", spec.name());
            assert_eq!(
                j2.lam(n + 1),
                XSFrac::from_poly(j.lam(n + 1)),
                "{} lam_{}",
                spec.name(),
                n + 1
            );
        }
        let head = sfraction_series(&s, 4).unwrap();
        assert_eq!(
            head,
            mu[..=4]
                .iter()
                .cloned()
                .map(XSFrac::from_poly)
                .collect::<Vec<_>>()
        );
    }
}
