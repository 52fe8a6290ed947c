//! Identities tying the new q-Hermite polynomials to the matching statistics.

use std::collections::BTreeMap;

use super::{int, qp, term, x, Checker, VerifyReport};
use crate::families::{cont_qhermite, new_qhermite};
use crate::moments::{jspec_crossing, jspec_new_h, moments};
use crate::mpoly::XSPoly;
use crate::oracle::{b_table_from, c_table};
use crate::qfield::{binomial, choose2, qbinom, qint, QScalar};

/// Oracle rows `c(n, ·, q)` for `n = 0..=n_max`.
fn oracle_rows(n_max: usize) -> Vec<BTreeMap<usize, QScalar>> {
    (0..=n_max)
        .map(|n| c_table(n).expect("callers stay within the enumeration cap"))
        .collect()
}

fn entry(row: &BTreeMap<usize, QScalar>, k: usize) -> QScalar {
    row.get(&k).cloned().unwrap_or_else(QScalar::zero)
}

/// `sum_k c(n,k,q) x^k (-s)^((n-k)/2)`.
fn matching_polynomial(n: usize, row: &BTreeMap<usize, QScalar>) -> XSPoly {
    row.iter()
        .map(|(&k, c)| {
            let e = (n - k) / 2;
            let sign = if e.is_multiple_of(2) { int(1) } else { int(-1) };
            term(c * &sign, k, e)
        })
        .sum()
}

/// `H_n = (x - s D_q)^n 1` equals the J-fraction moments with `b_n = x q^n`,
/// `λ_n = -s [n]`, and the generating polynomial of matchings of `[n]`
/// weighted by `q^(c + cr) x^(isolated) (-s)^(edges)`.
pub fn verify_operator_equals_moments(n_max: usize) -> VerifyReport {
    let mut ck = Checker::new();
    let h = new_qhermite(n_max);
    let mu = moments(&jspec_new_h(), n_max);
    let rows = oracle_rows(n_max);
    for n in 0..=n_max {
        ck.eq("operator = moments", n, None, &h.entries[n], &mu[n]);
        ck.eq(
            "operator = matchings",
            n,
            None,
            &h.entries[n],
            &matching_polynomial(n, &rows[n]),
        );
    }
    ck.finish("operator_equals_moments", format!("n <= {n_max}"), vec![])
}

/// `C = (c(i,j,q))` and `B̂ = (b(i,j,q)(-1)^((i-j)/2))` are mutually inverse, and
/// `x^n = sum_k c(n,k,q) s^((n-k)/2) H̃_k(x,s|q)`.
pub fn verify_matrix_inverse(n_max: usize) -> VerifyReport {
    let mut ck = Checker::new();
    let rows = oracle_rows(n_max);
    let ht = cont_qhermite(n_max);
    // B̂(i,j) is the coefficient of x^j s^((i-j)/2) in H̃_i
    let bhat: Vec<BTreeMap<usize, QScalar>> = (0..=n_max)
        .map(|i| {
            b_table_from(&ht.entries[i], i)
                .into_iter()
                .map(|(j, b)| (j, if ((i - j) / 2) % 2 == 0 { b } else { -b }))
                .collect()
        })
        .collect();
    for i in 0..=n_max {
        for j in 0..=i {
            let v: QScalar = (j..=i)
                .map(|k| &entry(&rows[i], k) * &entry(&bhat[k], j))
                .sum();
            let want = if i == j {
                QScalar::one()
            } else {
                QScalar::zero()
            };
            ck.eq("C * B̂ = I", i, Some(j), &v, &want);
        }
    }
    for n in 0..=n_max {
        let rhs: XSPoly = rows[n]
            .iter()
            .map(|(&k, c)| &ht.entries[k] * &term(c.clone(), 0, (n - k) / 2))
            .sum();
        ck.eq("x^n expansion", n, None, &x().pow(n as u32), &rhs);
    }
    ck.finish("matrix_inverse", format!("n <= {n_max}"), vec![])
}

/// `[k+2j]/[k+j]`, read as 1 when `k = j = 0`.
fn ratio(k: usize, j: usize) -> QScalar {
    if k + j == 0 {
        QScalar::one()
    } else {
        &qint(k + 2 * j) / &qint(k + j)
    }
}

fn half_binomial(n: usize, top: i64) -> i64 {
    // binomial(n, top/2) for even top >= 0, zero otherwise
    if top < 0 || top % 2 != 0 {
        0
    } else {
        binomial(n as i64, top / 2)
    }
}

fn sign(j: usize) -> QScalar {
    if j.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// For `k ≡ n (mod 2)`, `(1-q)^((n-k)/2) c(n,k,q)` equals
/// `sum_j C(n,(n-k-2j)/2) (-1)^j q^C(j,2) [k+2j]/[k+j] [k+j choose j]` and
/// `sum_j (C(n,(n-k-2j)/2) - C(n,(n-k-2j-2)/2)) (-1)^j q^C(j+1,2) [k+j choose k]`;
/// at `k = 0` this is the Touchard-Riordan formula. Also checks
/// `[k+2j]/[k+j] = q^j + [j]/[k+j]`.
pub fn verify_crossing_coefficients(n_max: usize) -> VerifyReport {
    let mut ck = Checker::new();
    let rows = oracle_rows(n_max);
    let one_minus_q = &QScalar::one() - &QScalar::q();
    for n in 0..=n_max {
        for k in (n % 2..=n).step_by(2) {
            let e = (n - k) / 2;
            let lhs = &entry(&rows[n], k) * &one_minus_q.pow(e as u32);
            let top = (n - k) as i64;
            let first: QScalar = (0..=e)
                .map(|j| {
                    let b = half_binomial(n, top - 2 * j as i64);
                    &(&(&int(b) * &sign(j)) * &qp(choose2(j as i64)))
                        * &(&ratio(k, j) * &qbinom((k + j) as i64, j as i64))
                })
                .sum();
            ck.eq("lucas-type formula", n, Some(k), &lhs, &first);
            let second: QScalar = (0..=e)
                .map(|j| {
                    let b = half_binomial(n, top - 2 * j as i64)
                        - half_binomial(n, top - 2 * j as i64 - 2);
                    &(&(&int(b) * &sign(j)) * &qp(choose2(j as i64 + 1)))
                        * &qbinom((k + j) as i64, k as i64)
                })
                .sum();
            ck.eq("ballot-type formula", n, Some(k), &lhs, &second);
        }
    }
    for n in (0..=n_max / 2).map(|m| 2 * m) {
        let m = (n / 2) as i64;
        let lhs = &entry(&rows[n], 0) * &one_minus_q.pow(m as u32);
        let rhs: QScalar = (-m..=m)
            .map(|j| {
                let sg = if j.rem_euclid(2) == 0 { 1 } else { -1 };
                &int(sg * binomial(2 * m, m + j)) * &qp(choose2(j))
            })
            .sum();
        ck.eq("Touchard-Riordan", n, Some(0), &lhs, &rhs);
    }
    for k in 0..=n_max {
        for j in 0..=n_max {
            if k + j == 0 {
                continue;
            }
            let rhs = &qp(j as i64) + &(&qint(j) / &qint(k + j));
            ck.eq(
                "[k+2j]/[k+j] = q^j + [j]/[k+j]",
                k,
                Some(j),
                &ratio(k, j),
                &rhs,
            );
        }
    }
    ck.finish(
        "crossing_coefficients",
        format!("n <= {n_max}, k ≡ n mod 2"),
        vec!["the factor [k+2j]/[k+j] is read as 1 at k = j = 0".into()],
    )
}

/// `c(n,0,q)` is the `n`-th moment of the J-fraction `b_n = 0`, `λ_n = [n]`,
/// and `H_2n(0,-1|q) = c(2n,0,q)`, `H_2n+1(0,-1|q) = 0`.
pub fn verify_crossing_moments(n_max: usize) -> VerifyReport {
    let mut ck = Checker::new();
    let rows = oracle_rows(n_max);
    let mu = moments(&jspec_crossing(), n_max);
    let h = new_qhermite(n_max);
    for n in 0..=n_max {
        let c = XSPoly::constant(entry(&rows[n], 0));
        ck.eq("moments = c(n,0)", n, None, &mu[n], &c);
        let at = XSPoly::constant(h.entries[n].subst_values(&QScalar::zero(), &int(-1)));
        ck.eq("H_n(0,-1) = c(n,0)", n, None, &at, &c);
    }
    ck.finish("crossing_moments", format!("n <= {n_max}"), vec![])
}
