//! J-fraction, S-fraction and Hankel identities of `H_n`, `h_n`, `T_n` and the
//! pure-`q` family `w(m)`.

use super::{int, qp, s, term, x, Checker, VerifyReport};
use crate::families::{disc_qhermite_ii_rescaled, h_wn, new_qhermite, t_family};
use crate::moments::{
    contract, hankel_det, jspec_h, jspec_new_h, jspec_t, jspec_w, moments, pn_at_zero,
    sfraction_from_series, sfraction_table, stieltjes_table, CoeffSeq, SSpec,
};
use crate::mpoly::{XSFrac, XSPoly};
use crate::qfield::{choose2, qbinom, qfact, QScalar};

fn sign_pow(e: usize) -> QScalar {
    if e.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// `(-s)^C(n,2) prod_{j<n} [j]!`.
fn new_h_hankel0(n: usize) -> XSPoly {
    let e = choose2(n as i64) as usize;
    let c: QScalar = (0..n).map(qfact).product();
    term(&c * &sign_pow(e), 0, e)
}

/// Hankel determinants of the new q-Hermite moments:
/// `det(H_{i+j}) = (-s)^C(n,2) prod_{j<n}[j]!` and
/// `det(H_{i+j+1}) = h_n(x,-s;q) det(H_{i+j})`, together with
/// `h_n(x,-s;q) = (-1)^n P_n(0)`.
pub fn verify_hankel_new_h(n_max: usize) -> VerifyReport {
    let mut ck = Checker::new();
    let mu = moments(&jspec_new_h(), 2 * n_max);
    let h_neg = disc_qhermite_ii_rescaled(n_max).subst_s_scale(&int(-1));
    let spec = jspec_new_h();
    for n in 0..=n_max {
        let d0 = hankel_det(&mu, n, 0).expect("enough moments");
        let want0 = new_h_hankel0(n);
        ck.eq("shift 0", n, None, &d0, &want0);
        let d1 = hankel_det(&mu, n, 1).expect("enough moments");
        ck.eq("shift 1", n, None, &d1, &(&h_neg.entries[n] * &want0));
        let p0 = pn_at_zero(&spec, n).scale(&sign_pow(n));
        ck.eq("h_n(x,-s) = (-1)^n P_n(0)", n, None, &h_neg.entries[n], &p0);
    }
    ck.finish("hankel_new_h", format!("n <= {n_max}"), vec![])
}

/// `(-1)^C(n,2) q^C(n,3) prod_{j<n} [j]! (s + q^(2j)(1-q)x^2)^(n-1-j)`.
fn h_hankel0(n: usize) -> XSPoly {
    let n_i = n as i64;
    let c3 = n_i * (n_i - 1) * (n_i - 2) / 6;
    let head = &sign_pow(choose2(n_i) as usize) * &qp(c3);
    let one_minus_q = &QScalar::one() - &QScalar::q();
    (0..n)
        .map(|j| {
            let factor = &s() + &term(&qp(2 * j as i64) * &one_minus_q, 2, 0);
            factor.pow((n - 1 - j) as u32).scale(&qfact(j))
        })
        .fold(XSPoly::constant(head), |acc, f| &acc * &f)
}

/// The rescaled discrete q-Hermite II polynomials `h_n` are the moments of
/// `b_n = q^(n-1)(q^n + q^(n+1) - 1)x`, `λ_n = -q^(n-1)[n](s + q^(2n-2)(1-q)x^2)`;
/// their Hankel determinants factor as stated with `d(n,1)/d(n,0) = w(n)`, and
/// the Stieltjes tableau is `a(n,k) = [n choose k] h_(n-k)(q^k x, s)`.
pub fn verify_h_family(n_max: usize) -> VerifyReport {
    let mut ck = Checker::new();
    let spec = jspec_h();
    let n_det = n_max.min(4);
    let n_tab = n_max.min(8);
    let len = n_max.max(2 * n_det);
    let h = disc_qhermite_ii_rescaled(len);
    let mu = moments(&spec, len);
    for n in 0..=n_max {
        ck.eq("moments = h_n", n, None, &mu[n], &h.entries[n]);
    }
    for n in 0..=n_det {
        let d0 = hankel_det(&mu, n, 0).expect("enough moments");
        let want0 = h_hankel0(n);
        ck.eq("shift 0", n, None, &d0, &want0);
        let d1 = hankel_det(&mu, n, 1).expect("enough moments");
        ck.eq("d(n,1) = d(n,0) w(n)", n, None, &d1, &(&d0 * &h_wn(n)));
        let p0 = pn_at_zero(&spec, n).scale(&sign_pow(n));
        ck.eq("w(n) = (-1)^n p_n(0)", n, None, &h_wn(n), &p0);
    }
    let table = stieltjes_table(&spec, n_tab);
    for n in 0..=n_tab {
        for k in 0..=n {
            let want = h.entries[n - k]
                .subst_x_scale(&qp(k as i64))
                .scale(&qbinom(n as i64, k as i64));
            ck.eq(
                "tableau",
                n,
                Some(k),
                table.get(n, k).expect("in range"),
                &want,
            );
        }
    }
    ck.finish(
        "h_family",
        format!("moments n <= {n_max}, determinants n <= {n_det}, tableau n <= {n_tab}"),
        vec![],
    )
}

/// `T_n = (x + (1-q)s D_q)^n 1`:
/// - moments of `b_n = q^n x`, `λ_n = (1-q^n)s`;
/// - `T_n(x,s) = H_n(x,(q-1)s|q)`;
/// - the S-fraction coefficients satisfy `c_2n L_n = (1-q^n) s L_(n-1)` and
///   `c_(2n+1) L_n = L_(n+1)` with `L_n = h_n(x,(1-q)s;q)`, and contract back to
///   the J-fraction;
/// - `G(x,t) = sum T_n t^n` satisfies
///   `(1 - ((x^2+s)/x) t) G(x,t) = 1 - (s/x) t G(qx,t)`, i.e.
///   `x T_n - (x^2+s) T_(n-1) + s T_(n-1)(qx) = 0`.
pub fn verify_t_fraction(n_max: usize) -> VerifyReport {
    let mut ck = Checker::new();
    let spec = jspec_t();
    let n_s = n_max.min(6);
    let len = n_max.max(2 * n_s + 1);
    let t = t_family(len);
    let mu = moments(&spec, n_max);
    let one_minus_q = &QScalar::one() - &QScalar::q();
    let h = new_qhermite(n_max).subst_s_scale(&-&one_minus_q);
    for n in 0..=n_max {
        ck.eq("moments = T_n", n, None, &mu[n], &t.entries[n]);
        ck.eq("T_n = H_n(x,(q-1)s)", n, None, &t.entries[n], &h.entries[n]);
    }

    let count = 2 * n_s + 1;
    let l = disc_qhermite_ii_rescaled(n_s + 1).subst_s_scale(&one_minus_q);
    let mut notes = vec![];
    match sfraction_from_series(&t.entries[..=count], count) {
        Ok(sf) => {
            // cross-multiplied: c = num/den, check num * lhs_factor == den * rhs
            let cross = |ck: &mut Checker,
                         label: &str,
                         n: usize,
                         c: &XSFrac,
                         mul: &XSPoly,
                         want: &XSPoly| {
                let lhs = c.numer() * mul;
                let rhs = c.denom() * want;
                ck.record(label, n, None, lhs == rhs, || {
                    (format!("({c}) * ({mul})"), want.to_string())
                });
            };
            for n in 0..=n_s {
                if n >= 1 {
                    let want = (&s() * &l.entries[n - 1]).scale(&(&QScalar::one() - &qp(n as i64)));
                    cross(
                        &mut ck,
                        "c_2n L_n = (1-q^n) s L_(n-1)",
                        n,
                        &sf.c(2 * n),
                        &l.entries[n],
                        &want,
                    );
                }
                cross(
                    &mut ck,
                    "c_(2n+1) L_n = L_(n+1)",
                    n,
                    &sf.c(2 * n + 1),
                    &l.entries[n],
                    &l.entries[n + 1],
                );
            }
            let j = contract(&sf);
            for n in 0..=n_s {
                ck.eq(
                    "contracted b_n",
                    n,
                    None,
                    &j.b(n),
                    &XSFrac::from_poly(spec.b(n)),
                );
                if n >= 1 {
                    ck.eq(
                        "contracted λ_n",
                        n,
                        None,
                        &j.lam(n),
                        &XSFrac::from_poly(spec.lam(n)),
                    );
                }
            }
        }
        Err(e) => {
            ck.record("S-fraction extraction", 0, None, false, || {
                (e.to_string(), "coefficients".into())
            });
            notes.push(format!("extraction failed: {e}"));
        }
    }

    let x2s = &x().pow(2) + &s();
    for n in 1..=n_max {
        let prev = &t.entries[n - 1];
        let lhs = &(&x() * &t.entries[n]) - &(&x2s * prev);
        let rhs = -&(&s() * &prev.subst_x_scale(&QScalar::q()));
        ck.eq("functional equation", n, None, &lhs, &rhs);
    }
    ck.finish(
        "t_fraction",
        format!("moments and functional equation n <= {n_max}, S-coefficients n <= {n_s}"),
        notes,
    )
}

/// `q^(n((2m+1)n+1)/2)`.
fn w_moment(m: u32, n: usize) -> QScalar {
    let r = 2 * m as i64 + 1;
    let n = n as i64;
    qp(n * (r * n + 1) / 2)
}

/// The J-fraction `jspec_w(m)` has moments `q^(n((2m+1)n+1)/2)`; the S-fraction
/// `c_2n = q^((2m+1)n-m)(q^((2m+1)n)-1)`, `c_(2n+1) = q^((2m+1)(2n+1)-m)` contracts
/// to it, and its table is `A(2n,2k) = w_n/w_k [n choose k]_(q^(2m+1))`,
/// `A(2n+1,2k+1) = w_(n+1)/w_(k+1) [n choose k]_(q^(2m+1))`.
pub fn verify_w_moments(m_max: u32, n_max: usize) -> VerifyReport {
    let mut ck = Checker::new();
    for m in 0..=m_max {
        let spec = jspec_w(m);
        let mu = moments(&spec, n_max);
        for n in 0..=n_max {
            ck.eq(
                &format!("m={m} moments"),
                n,
                None,
                &mu[n],
                &XSPoly::constant(w_moment(m, n)),
            );
        }
        let r = 2 * m as i64 + 1;
        let m_i = m as i64;
        let sspec = SSpec {
            name: format!("w({m})"),
            c: CoeffSeq::rule("c", move |k| {
                let n = (k / 2) as i64;
                let v = if k % 2 == 0 {
                    &qp(r * n - m_i) * &(&qp(r * n) - &QScalar::one())
                } else {
                    qp(r * (2 * n + 1) - m_i)
                };
                XSPoly::constant(v)
            }),
        };
        let j = contract(&sspec);
        for n in 0..=n_max {
            ck.eq(
                &format!("m={m} contracted b_n"),
                n,
                None,
                &j.b(n),
                &spec.b(n),
            );
            ck.eq(
                &format!("m={m} contracted λ_n"),
                n,
                None,
                &j.lam(n),
                &spec.lam(n),
            );
        }
        let table = match sfraction_table(&sspec, 2 * n_max + 1) {
            Ok(t) => t,
            Err(e) => {
                ck.record(&format!("m={m} A-table"), 0, None, false, || {
                    (e.to_string(), "table".into())
                });
                continue;
            }
        };
        for n in 0..=n_max {
            for k in 0..=n {
                let gb = qbinom(n as i64, k as i64).subst_q_pow(r);
                let even = &(&w_moment(m, n) / &w_moment(m, k)) * &gb;
                let got = table.get(2 * n, 2 * k).expect("in range");
                ck.eq(
                    &format!("m={m} A(2n,2k)"),
                    n,
                    Some(k),
                    got,
                    &XSPoly::constant(even),
                );
                let odd = &(&w_moment(m, n + 1) / &w_moment(m, k + 1)) * &gb;
                let got = table.get(2 * n + 1, 2 * k + 1).expect("in range");
                ck.eq(
                    &format!("m={m} A(2n+1,2k+1)"),
                    n,
                    Some(k),
                    got,
                    &XSPoly::constant(odd),
                );
            }
        }
    }
    ck.finish("w_moments", format!("m <= {m_max}, n <= {n_max}"), vec![])
}
