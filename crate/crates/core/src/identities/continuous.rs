//! The continuous q-Hermite polynomials as moments, their Hankel determinants,
//! the companion polynomials `r(n)`, and the Chebyshev expansion of `x^2n`.

use super::{int, qp, x, Checker, VerifyReport};
use crate::families::{chebyshev_t, cont_qhermite, r_family};
use crate::moments::{hankel_det, jspec_cont_h, moments, pn_at_zero, stieltjes_table};
use crate::mpoly::XSPoly;
use crate::qfield::{binomial, choose2, qbinom, qdoublefact_odd, qfact, QScalar};

/// `p(0, s)` with `s` kept symbolic.
fn at_x_zero(p: &XSPoly) -> XSPoly {
    XSPoly::from_terms(
        p.terms()
            .filter(|(m, _)| m.x == 0)
            .map(|(m, c)| (*m, c.clone())),
    )
}

fn sign_pow(e: usize) -> QScalar {
    if e.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// Checks, for `b_n = x q^n`, `λ_n = -s q^(n-1) [n]`:
/// - the moments are `H̃_n(x,s|q)` and the tableau is `[n choose k] H̃_(n-k)`;
/// - `d(n,0) = (-s)^C(n,2) q^C(n,3) prod_{j<n} [j]!` and `d(n,1) = d(n,0) r(n)`,
///   where `r(n) = (-1)^n p_n(0)`;
/// - `r(n)` at `q -> q^2` equals `q^(n(n-2)) H̃_n(xq, -s | q^-2)`;
/// - `H̃_2n(0,s) = (-s)^n [2n-1]!!` and `H̃_2n+1(0,s) = 0`;
/// - `x^2n = sum_(j=-n..n) C(2n,n+j) T_2|j|(x/2)`.
pub fn verify_continuous_family(n_max: usize) -> VerifyReport {
    let mut ck = Checker::new();
    let spec = jspec_cont_h();
    let n_det = n_max.min(5);
    let n_r = n_max.min(8);
    let n_zero = n_max.min(6);
    let n_tab = n_max.min(8);
    let len = n_max.max(2 * n_det).max(2 * n_zero + 1);
    let ht = cont_qhermite(len);
    let mu = moments(&spec, len);
    for n in 0..=n_max {
        ck.eq("moments = H̃_n", n, None, &mu[n], &ht.entries[n]);
    }
    let table = stieltjes_table(&spec, n_tab);
    for n in 0..=n_tab {
        for k in 0..=n {
            let want = ht.entries[n - k].scale(&qbinom(n as i64, k as i64));
            ck.eq(
                "tableau",
                n,
                Some(k),
                table.get(n, k).expect("in range"),
                &want,
            );
        }
    }

    let r = r_family(n_r.max(n_det));
    for n in 0..=n_r.max(n_det) {
        let p0 = pn_at_zero(&spec, n).scale(&sign_pow(n));
        ck.eq("r(n) = (-1)^n p_n(0)", n, None, &r.entries[n], &p0);
    }
    for n in 0..=n_det {
        let ni = n as i64;
        let e = choose2(ni) as usize;
        let c = &(&sign_pow(e) * &qp(ni * (ni - 1) * (ni - 2) / 6))
            * &(0..n).map(qfact).product::<QScalar>();
        let want0 = XSPoly::monomial(0, e as u32, c);
        let d0 = hankel_det(&mu, n, 0).expect("enough moments");
        ck.eq("d(n,0)", n, None, &d0, &want0);
        let d1 = hankel_det(&mu, n, 1).expect("enough moments");
        ck.eq(
            "d(n,1) = d(n,0) r(n)",
            n,
            None,
            &d1,
            &(&want0 * &r.entries[n]),
        );
    }
    for n in 0..=n_r {
        let ni = n as i64;
        let lhs = r.entries[n].map_coeffs(|c| c.subst_q_pow(2));
        let rhs = ht.entries[n]
            .map_coeffs(|c| c.subst_q_pow(-2))
            .subst_x_scale(&QScalar::q())
            .subst_s_scale(&int(-1))
            .scale(&qp(ni * (ni - 2)));
        ck.eq("r(n) at q^2", n, None, &lhs, &rhs);
    }
    for n in 0..=n_zero {
        let want = XSPoly::monomial(0, n as u32, &sign_pow(n) * &qdoublefact_odd(n));
        ck.eq("H̃_2n(0,s)", n, None, &at_x_zero(&ht.entries[2 * n]), &want);
        ck.eq(
            "H̃_2n+1(0,s)",
            n,
            None,
            &at_x_zero(&ht.entries[2 * n + 1]),
            &XSPoly::zero(),
        );
    }
    let t = chebyshev_t(2 * n_r);
    let half = &QScalar::one() / &int(2);
    for n in 0..=n_r {
        let ni = n as i64;
        let rhs: XSPoly = (-ni..=ni)
            .map(|j| {
                t.entries[2 * j.unsigned_abs() as usize]
                    .subst_x_scale(&half)
                    .scale(&int(binomial(2 * ni, ni + j)))
            })
            .sum();
        ck.eq("Chebyshev expansion", n, None, &x().pow(2 * n as u32), &rhs);
    }
    ck.finish(
        "continuous_family",
        format!(
            "moments n <= {n_max}, tableau n <= {n_tab}, determinants n <= {n_det}, r(n) n <= {n_r}, values at 0 n <= {n_zero}"
        ),
        vec![],
    )
}
