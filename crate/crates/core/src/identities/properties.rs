//! Specializations and structural properties of the families and the
//! continued-fraction engine.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{int, qp, s, x, Checker, VerifyReport};
use crate::families::{
    cont_qhermite, disc_qhermite_ii_rescaled, hermite_classical, new_qhermite, orth_poly_sequence,
};
use crate::moments::{
    contract, hankel_det, hankel_lambda_product, jspec_new_h, moments, pn_at_zero,
    sfraction_from_series, stieltjes_table, NamedSpec,
};
use crate::mpoly::{XSFrac, ZPoly};
use crate::oracle::c_triangle;
use crate::qfield::{binomial, qbinom, qint, QScalar};

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// - `H_n(x,s|q)` at `q = 1` is the classical Hermite polynomial;
/// - at `q = 0`, `c(2n,2k) = C(2n,n-k) - C(2n,n-k-1)`;
/// - `μ_2n` of the new q-Hermite J-fraction at `q = 1, x = 0, s = -1` is `(2n-1)!!`.
pub fn verify_specializations(n_max: usize) -> VerifyReport {
    let mut ck = Checker::new();
    let one = rat(1);
    let h = new_qhermite(n_max);
    let c = hermite_classical(n_max);
    for n in 0..=n_max {
        let at_one = h.entries[n].map_coeffs(|v| match v.eval_at(&one) {
            Ok(r) => QScalar::from_ratio(&r),
            Err(_) => v.clone(),
        });
        ck.eq("q -> 1", n, None, &at_one, &c.entries[n]);
    }

    let n_cat = n_max.min(6);
    let tri = c_triangle(2 * n_cat);
    let zero = rat(0);
    for n in 0..=n_cat {
        for k in 0..=n {
            let got = tri[2 * n][2 * k].eval_at(&zero).ok();
            let (ni, ki) = (n as i64, k as i64);
            let want = rat(binomial(2 * ni, ni - ki) - binomial(2 * ni, ni - ki - 1));
            ck.record(
                "Catalan triangle at q = 0",
                n,
                Some(k),
                got.as_ref() == Some(&want),
                || (format!("{got:?}"), want.to_string()),
            );
        }
    }

    let mu = moments(&jspec_new_h(), 2 * n_cat);
    for n in 0..=n_cat {
        let got = mu[2 * n].eval_rational(&one, &zero, &rat(-1)).ok();
        let want = rat((1..=n as i64).map(|i| 2 * i - 1).product());
        ck.record(
            "μ_2n(q=1, x=0, s=-1) = (2n-1)!!",
            n,
            None,
            got.as_ref() == Some(&want),
            || (format!("{got:?}"), want.to_string()),
        );
    }
    ck.finish(
        "specializations",
        format!("q -> 1 n <= {n_max}, q = 0 and (2n-1)!! n <= {n_cat}"),
        vec![],
    )
}

/// Structural properties:
/// - q-Leibniz rule `D_q(pr) = D_q(p) r + p(qx) D_q(r)` on family members;
/// - parity of `H_n`, `H̃_n`, `h_n`; `H_n(0,1) = 0` for odd `n`;
/// - `D_q h_n = [n] h_(n-1)(qx)`;
/// - with `L_n = h_n(x,(1-q)s)`: `s L_n + x L_(n+1) = (x^2+s) L_n(qx)` and
///   `L_(n+1) - x L_n = (q^n - 1)(x L_n + s L_(n-1))`;
/// - Pascal rule and symmetry of the Gaussian binomials;
/// - for every named J-fraction: Hankel product law, shifted Hankel determinant
///   `d(n,1) = d(n,0)(-1)^n p_n(0)`, tableau linearity `sum_k a(n,k) p_k(z) = z^n`,
///   and the round trip contract(extract(moments)) for those with an S-fraction.
pub fn verify_properties(n_max: usize) -> VerifyReport {
    let mut ck = Checker::new();
    let mut notes = vec![];
    let q = QScalar::q();
    let hn = new_qhermite(n_max);
    let ht = cont_qhermite(n_max);
    let h = disc_qhermite_ii_rescaled(n_max + 1);

    let n_lb = n_max.min(6);
    for i in 0..=n_lb {
        for j in 0..=n_lb {
            let (p, r) = (&hn.entries[i], &h.entries[j]);
            let lhs = (p * r).qderiv_x();
            let rhs = &(&p.qderiv_x() * r) + &(&p.subst_x_scale(&q) * &r.qderiv_x());
            ck.eq("q-Leibniz", i, Some(j), &lhs, &rhs);
        }
    }

    for n in 0..=n_max {
        let ok = [&hn.entries[n], &ht.entries[n], &h.entries[n]]
            .iter()
            .all(|p| p.has_x_parity(n as u32));
        ck.record("parity", n, None, ok, || {
            ("mixed parity".into(), format!("x-degree ≡ {n} mod 2"))
        });
        if n % 2 == 1 {
            let v = hn.entries[n].subst_values(&QScalar::zero(), &QScalar::one());
            ck.eq("H_n(0,1) = 0 for odd n", n, None, &v, &QScalar::zero());
        }
        if n >= 1 {
            let rhs = h.entries[n - 1].subst_x_scale(&q).scale(&qint(n));
            ck.eq(
                "D_q h_n = [n] h_(n-1)(qx)",
                n,
                None,
                &h.entries[n].qderiv_x(),
                &rhs,
            );
        }
    }

    let l = h.subst_s_scale(&(&QScalar::one() - &q));
    let x2s = &x().pow(2) + &s();
    for n in 0..=n_max {
        let lhs = &(&s() * &l.entries[n]) + &(&x() * &l.entries[n + 1]);
        ck.eq(
            "s L_n + x L_(n+1) = (x^2+s) L_n(qx)",
            n,
            None,
            &lhs,
            &(&x2s * &l.entries[n].subst_x_scale(&q)),
        );
        if n >= 1 {
            let lhs = &l.entries[n + 1] - &(&x() * &l.entries[n]);
            let rhs = (&(&x() * &l.entries[n]) + &(&s() * &l.entries[n - 1]))
                .scale(&(&qp(n as i64) - &QScalar::one()));
            ck.eq(
                "L_(n+1) - x L_n = (q^n-1)(x L_n + s L_(n-1))",
                n,
                None,
                &lhs,
                &rhs,
            );
        }
    }

    for n in 0..=n_max as i64 {
        for k in 0..=n {
            ck.eq(
                "Gaussian binomial symmetry",
                n as usize,
                Some(k as usize),
                &qbinom(n, k),
                &qbinom(n, n - k),
            );
            if 0 < k && k < n {
                let rhs = &qbinom(n - 1, k - 1) + &(&qp(k) * &qbinom(n - 1, k));
                ck.eq(
                    "Pascal rule",
                    n as usize,
                    Some(k as usize),
                    &qbinom(n, k),
                    &rhs,
                );
            }
        }
    }

    let n_hk = n_max.min(5);
    let n_tab = n_max.min(8);
    let n_rt = n_max.min(8);
    for named in NamedSpec::all() {
        let name = named.name();
        let spec = named.jspec();
        let len = (2 * n_hk).max(n_tab).max(2 * n_rt + 1);
        let mu = moments(&spec, len);
        for n in 0..=n_hk {
            let d0 = hankel_det(&mu, n, 0).expect("enough moments");
            ck.eq(
                &format!("{name}: Hankel product law"),
                n,
                None,
                &d0,
                &hankel_lambda_product(&spec, n),
            );
            let d1 = hankel_det(&mu, n, 1).expect("enough moments");
            let sign = if n % 2 == 0 { int(1) } else { int(-1) };
            ck.eq(
                &format!("{name}: shifted Hankel"),
                n,
                None,
                &d1,
                &(&d0 * &pn_at_zero(&spec, n).scale(&sign)),
            );
        }
        let ps = orth_poly_sequence(&spec, n_tab);
        let table = stieltjes_table(&spec, n_tab);
        for n in 0..=n_tab {
            let lhs = (0..=n)
                .map(|k| ps[k].scale(table.get(n, k).expect("in range")))
                .fold(ZPoly::zero(), |acc, p| &acc + &p);
            let zn = (0..n).fold(ZPoly::one(), |acc, _| acc.mul_z());
            ck.eq(&format!("{name}: tableau linearity"), n, None, &lhs, &zn);
        }
        if named == NamedSpec::Crossing {
            notes.push(format!(
                "{name}: no round trip, its odd moments vanish so it has no S-fraction"
            ));
            continue;
        }
        // h's Hankel minors grow too fast for fraction arithmetic without a gcd
        let n_rt = if named == NamedSpec::H {
            n_rt.min(4)
        } else {
            n_rt
        };
        let count = 2 * n_rt + 1;
        match sfraction_from_series(&mu[..=count], count) {
            Ok(sf) => {
                let j = contract(&sf);
                for n in 0..=n_rt {
                    ck.eq(
                        &format!("{name}: round trip b_n"),
                        n,
                        None,
                        &j.b(n),
                        &XSFrac::from_poly(spec.b(n)),
                    );
                    if n >= 1 {
                        ck.eq(
                            &format!("{name}: round trip λ_n"),
                            n,
                            None,
                            &j.lam(n),
                            &XSFrac::from_poly(spec.lam(n)),
                        );
                    }
                }
            }
            Err(e) => {
                ck.record(&format!("{name}: round trip"), 0, None, false, || {
                    (e.to_string(), "S-fraction".into())
                });
            }
        }
    }
    ck.finish(
        "properties",
        format!(
            "n <= {n_max}; Leibniz n <= {n_lb}; Hankel n <= {n_hk}; tableau n <= {n_tab}; round trip n <= {n_rt} (h: n <= {})",
            n_rt.min(4)
        ),
        notes,
    )
}
