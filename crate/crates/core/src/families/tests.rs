use super::*;
use crate::moments::{jspec_cont_h, jspec_new_h, moments, pn_at_zero};
use crate::mpoly::apply_operator_power;
use num_bigint::BigInt;
use num_rational::BigRational;

fn strings(t: &FamilyTable) -> Vec<String> {
    t.entries.iter().map(|p| p.to_string()).collect()
}

#[test]
fn classical_first_terms() {
    assert_eq!(
        strings(&hermite_classical(5)),
        [
            "1",
            "x",
            "-s+x^2",
            "-3sx+x^3",
            "3s^2-6sx^2+x^4",
            "15s^2x-10sx^3+x^5"
        ]
    );
    assert_eq!(hermite_classical(0).len(), 1);
    for n in 0..=12 {
        assert_eq!(
            hermite_classical_explicit(n),
            hermite_classical(12).entries[n],
            "n={n}"
        );
    }
}

#[test]
fn new_qhermite_first_terms() {
    assert_eq!(
        strings(&new_qhermite(5)),
        [
            "1",
            "x",
            "-s+x^2",
            "-(2+q)sx+x^3",
            "(2+q)s^2-(3+2q+q^2)sx^2+x^4",
            "(5+6q+3q^2+q^3)s^2x-(4+3q+2q^2+q^3)sx^3+x^5"
        ]
    );
}

#[test]
fn cont_qhermite_first_terms() {
    let t = cont_qhermite(6);
    assert_eq!(t.entries[4].to_string(), "(1+q+q^2)s^2-(3+2q+q^2)sx^2+x^4");
    assert_eq!(
        t.entries[5].to_string(),
        "(3+4q+4q^2+3q^3+q^4)s^2x-(4+3q+2q^2+q^3)sx^3+x^5"
    );
    // x = 0, n = 6: (-s)^3 [5]!!
    let at0 = t.entries[6].subst_values(&QScalar::zero(), &QScalar::one());
    assert_eq!(at0, -qdoublefact_odd(3));
}

#[test]
fn h_first_terms_and_explicit_sum() {
    let t = disc_qhermite_ii_rescaled(12);
    assert_eq!(
        strings(&disc_qhermite_ii_rescaled(4)),
        [
            "1",
            "x",
            "-s+qx^2",
            "-(1+q+q^2)sx+q^3x^3",
            "(1+q+q^2)s^2-(q+q^2+2q^3+q^4+q^5)sx^2+q^6x^4"
        ]
    );
    for n in 0..=12 {
        assert_eq!(h_explicit(n), t.entries[n], "n={n}");
    }
}

#[test]
fn disc_i_steps() {
    let t = disc_qhermite_i(3);
    assert_eq!(t.entries[1], XSPoly::x());
    assert_eq!(t.entries[2].to_string(), "-(1-q)s+x^2");
}

#[test]
fn w_satisfies_its_recurrence() {
    let w: Vec<XSPoly> = (0..=12).map(h_wn).collect();
    assert_eq!(w[0], XSPoly::one());
    assert_eq!(w[1], XSPoly::x());
    for n in 1..12 {
        let k = n as i64;
        let b = term(
            &qp(k - 1) * &(&(&qp(k) + &qp(k + 1)) - &QScalar::one()),
            1,
            0,
        );
        let lam = (&s() + &term(&qp(2 * k - 2) * &(&QScalar::one() - &QScalar::q()), 2, 0))
            .scale(&(&qp(k - 1) * &qint(n)));
        assert_eq!(w[n + 1], &(&b * &w[n]) + &(&lam * &w[n - 1]), "n={n}");
    }
}

#[test]
fn orthogonal_polynomials_of_new_h() {
    let p = orth_poly_sequence(&jspec_new_h(), 3);
    assert_eq!(p[0].to_string(), "1");
    assert_eq!(p[1].to_string(), "z-x");
    assert_eq!(p[2].to_string(), "z^2-(1+q)xz+(s+qx^2)");
    assert_eq!(
        p[3].to_string(),
        "z^3-(1+q+q^2)xz^2+((2+q)s+(q+q^2+q^3)x^2)z-((1+q+q^2)sx+q^3x^3)"
    );
}

#[test]
fn rescaled_asc_sum_matches_recurrence() {
    let p = orth_poly_sequence(&jspec_new_h(), 7);
    for (n, pn) in p.iter().enumerate() {
        assert_eq!(&asc_explicit_rescaled(n).unwrap(), pn, "n={n}");
    }
    // generic constructor: (a, b, c) = (x, 0, -s) gives the same sequence,
    // (x, -s, 0) gives the continuous family's
    assert_eq!(al_salam_chihara(XSPoly::x(), XSPoly::zero(), -s(), 7), p);
    let cont = orth_poly_sequence(&jspec_cont_h(), 7);
    assert_eq!(al_salam_chihara(XSPoly::x(), -s(), XSPoly::zero(), 7), cont);
}

#[test]
fn t_family_is_rescaled_new_h() {
    let t = t_family(10);
    let h = new_qhermite(10).subst_s_scale(&(&QScalar::q() - &QScalar::one()));
    assert_eq!(
        t,
        FamilyTable {
            name: "t_family".into(),
            entries: h.entries
        }
    );
    assert_eq!(t.entries[2].to_string(), "(1-q)s+x^2");
    assert_eq!(
        t.entries[4],
        apply_operator_power(&QScalar::one(), &(&QScalar::one() - &QScalar::q()), 4)
    );
}

#[test]
fn lucas_and_fibonacci() {
    let l = lucas_classical(12);
    let f = fib_classical(12);
    assert_eq!(l.entries[0], XSPoly::one());
    assert_eq!(l.entries[2].to_string(), "2s+x^2");
    assert_eq!(lucas_explicit(4).to_string(), "2s^2+4sx^2+x^4");
    assert!(f.entries[0].is_zero());
    assert!(f.entries[1].is_one());
    for n in 0..=12 {
        assert_eq!(lucas_explicit(n), l.entries[n], "l n={n}");
        assert_eq!(fib_explicit(n), f.entries[n], "f n={n}");
    }
}

#[test]
fn q_lucas_and_q_fibonacci() {
    let l = qlucas(12);
    let f = qfib(12);
    assert_eq!(l.entries[2].to_string(), "(1+q)s+x^2");
    assert_eq!(f.entries[3].to_string(), "qs+x^2");
    assert!(f.entries[1].is_one());
    assert_eq!(
        l,
        FamilyTable {
            name: "qlucas".into(),
            entries: qlucas_operator(12).entries
        }
    );
    assert_eq!(
        f,
        FamilyTable {
            name: "qfib".into(),
            entries: qfib_operator(12).entries
        }
    );
}

#[test]
fn chebyshev_and_r() {
    let t = chebyshev_t(3);
    assert_eq!(t.entries[2].to_string(), "-1+2x^2");
    let r = r_family(8);
    assert_eq!(r.entries[1], XSPoly::x());
    assert_eq!(r.entries[2].to_string(), "s+qx^2");
    let spec = jspec_cont_h();
    for n in 0..=8 {
        let sign = if n % 2 == 0 { QScalar::one() } else { int(-1) };
        assert_eq!(r.entries[n], pn_at_zero(&spec, n).scale(&sign), "n={n}");
    }
}

#[test]
fn q_derivative_identity() {
    let h = disc_qhermite_ii_rescaled(12);
    for n in 1..=12 {
        assert_eq!(
            h.entries[n].qderiv_x(),
            h.entries[n - 1]
                .subst_x_scale(&QScalar::q())
                .scale(&qint(n)),
            "n={n}"
        );
    }
}

#[test]
fn parity() {
    let fams = [
        new_qhermite(12),
        cont_qhermite(12),
        disc_qhermite_ii_rescaled(12),
    ];
    for f in &fams {
        for (n, p) in f.entries.iter().enumerate() {
            assert!(p.has_x_parity(n as u32), "{} n={n}", f.name);
        }
    }
}

#[test]
fn q_to_one_gives_classical() {
    let one = BigRational::from_integer(BigInt::from(1));
    let h = new_qhermite(10);
    let c = hermite_classical(10);
    for n in 0..=10 {
        let at_one = h.entries[n].map_coeffs(|v| QScalar::from_ratio(&v.eval_at(&one).unwrap()));
        assert_eq!(at_one, c.entries[n], "n={n}");
    }
}

#[test]
fn l_recurrences() {
    let l = disc_qhermite_ii_rescaled(13).subst_s_scale(&(&QScalar::one() - &QScalar::q()));
    let x2s = &x().pow(2) + &s();
    for n in 0..=12 {
        let lhs = &(&s() * &l.entries[n]) + &(&x() * &l.entries[n + 1]);
        assert_eq!(
            lhs,
            &x2s * &l.entries[n].subst_x_scale(&QScalar::q()),
            "basic n={n}"
        );
        if n >= 1 {
            let lhs = &l.entries[n + 1] - &(&x() * &l.entries[n]);
            let rhs = (&(&x() * &l.entries[n]) + &(&s() * &l.entries[n - 1]))
                .scale(&(&qp(n as i64) - &QScalar::one()));
            assert_eq!(lhs, rhs, "l1 n={n}");
        }
    }
}

#[test]
fn moments_are_the_families() {
    assert_eq!(moments(&jspec_new_h(), 10), new_qhermite(10).entries);
    assert_eq!(moments(&jspec_cont_h(), 10), cont_qhermite(10).entries);
}

#[test]
fn registry() {
    for name in FAMILY_NAMES {
        assert_eq!(family_by_name(name, 3).unwrap().len(), 4, "{name}");
    }
    let err = family_by_name("nope", 3).unwrap_err();
    assert!(err.to_string().contains("new_qhermite"));
}
