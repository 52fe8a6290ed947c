//! Lucas/Fibonacci expansions of the new q-Hermite polynomials and their
//! consequences.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{floor_div, int, qp, term, x, Checker, VerifyReport};
use crate::families::{
    fib_classical, lucas_classical, new_qhermite, qfib, qfib_operator, qlucas, qlucas_operator,
};
use crate::mpoly::XSPoly;
use crate::qfield::{binomial, QScalar};

fn ballot(n: usize, k: usize) -> i64 {
    binomial(n as i64, k as i64) - binomial(n as i64, k as i64 - 1)
}

/// `sum_(2k<=n) C(n,k) s^k l_(n-2k)` for a Lucas-type table `l`.
fn lucas_sum(n: usize, l: &[XSPoly]) -> XSPoly {
    (0..=n / 2)
        .map(|k| &l[n - 2 * k] * &term(int(binomial(n as i64, k as i64)), 0, k))
        .sum()
}

/// `sum_(2k<=n+1) (C(n,k)-C(n,k-1)) s^k f_(n+1-2k)` for a Fibonacci-type table `f`.
fn fib_sum(n: usize, f: &[XSPoly]) -> XSPoly {
    (0..=n.div_ceil(2))
        .map(|k| &f[n + 1 - 2 * k] * &term(int(ballot(n, k)), 0, k))
        .sum()
}

/// Applies `b_n = sum_k w(n,k) a_(n-2k)` to a sequence.
fn transform(a: &[XSPoly], w: impl Fn(usize, usize) -> i64) -> Vec<XSPoly> {
    (0..a.len())
        .map(|n| (0..=n / 2).map(|k| a[n - 2 * k].scale(&int(w(n, k)))).sum())
        .collect()
}

fn alt(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `x^n = sum C(n,k) s^k l_(n-2k)(x,-s)` and
/// `x^n = sum (C(n,k)-C(n,k-1)) s^k f_(n+1-2k)(x,-s)`, plus both Tchebyshev
/// inverse pairs applied in each direction to `a_n = x^n`.
pub fn verify_classical_inversions(n_max: usize) -> VerifyReport {
    let mut ck = Checker::new();
    let l = lucas_classical(n_max).subst_s_scale(&int(-1));
    let f = fib_classical(n_max + 1).subst_s_scale(&int(-1));
    for n in 0..=n_max {
        let xn = x().pow(n as u32);
        ck.eq("Lucas inversion", n, None, &xn, &lucas_sum(n, &l.entries));
        ck.eq("Fibonacci inversion", n, None, &xn, &fib_sum(n, &f.entries));
    }

    let powers: Vec<XSPoly> = (0..=n_max).map(|n| x().pow(n as u32)).collect();
    let lucas_fwd = |n: usize, k: usize| {
        if n == 0 {
            1
        } else {
            alt(k) * n as i64 * binomial((n - k) as i64, k as i64) / (n - k) as i64
        }
    };
    let lucas_inv = |n: usize, k: usize| binomial(n as i64, k as i64);
    let fib_fwd = |n: usize, k: usize| alt(k) * binomial((n - k) as i64, k as i64);
    let fib_inv = |n: usize, k: usize| ballot(n, k);
    type Coeff<'a> = &'a dyn Fn(usize, usize) -> i64;
    let pairs: [(&str, Coeff, Coeff); 2] = [
        ("Lucas-type pair", &lucas_fwd, &lucas_inv),
        ("Fibonacci-type pair", &fib_fwd, &fib_inv),
    ];
    for (label, fwd, inv) in pairs {
        let there = transform(&powers, fwd);
        let back = transform(&there, inv);
        let other = transform(&transform(&powers, inv), fwd);
        for n in 0..=n_max {
            ck.eq(
                &format!("{label}, b from a and back"),
                n,
                None,
                &back[n],
                &powers[n],
            );
            ck.eq(
                &format!("{label}, a from b and back"),
                n,
                None,
                &other[n],
                &powers[n],
            );
        }
    }
    ck.finish("classical_inversions", format!("n <= {n_max}"), vec![])
}

/// `H_n(x,(q-1)s|q) = sum C(n,k) s^k L_(n-2k)(x,-s)
///                  = sum (C(n,k)-C(n,k-1)) s^k F_(n+1-2k)(x,-s)`
/// with the q-Lucas and q-Fibonacci polynomials, whose operator forms are
/// checked against their explicit sums.
pub fn verify_qlucas_qfib_expansions(n_max: usize) -> VerifyReport {
    let mut ck = Checker::new();
    let h = new_qhermite(n_max).subst_s_scale(&(&QScalar::q() - &QScalar::one()));
    let lq = qlucas(n_max);
    let fq = qfib(n_max + 1);
    let lo = qlucas_operator(n_max);
    let fo = qfib_operator(n_max + 1);
    for n in 0..=n_max {
        ck.eq(
            "q-Lucas operator form",
            n,
            None,
            &lo.entries[n],
            &lq.entries[n],
        );
        ck.eq(
            "q-Fibonacci operator form",
            n,
            None,
            &fo.entries[n],
            &fq.entries[n],
        );
    }
    ck.eq(
        "q-Fibonacci operator form",
        n_max + 1,
        None,
        &fo.entries[n_max + 1],
        &fq.entries[n_max + 1],
    );
    let lneg = lq.subst_s_scale(&int(-1));
    let fneg = fq.subst_s_scale(&int(-1));
    for n in 0..=n_max {
        ck.eq(
            "q-Lucas expansion",
            n,
            None,
            &h.entries[n],
            &lucas_sum(n, &lneg.entries),
        );
        ck.eq(
            "q-Fibonacci expansion",
            n,
            None,
            &h.entries[n],
            &fib_sum(n, &fneg.entries),
        );
    }
    ck.finish("qlucas_qfib_expansions", format!("n <= {n_max}"), vec![])
}

fn binom_floor(n: usize, num: i64) -> i64 {
    binomial(n as i64, floor_div(num, 2))
}

/// `H_n(1,q-1|q) = sum_(k=-n..n) (-1)^k q^(k(3k+1)/2) C(n, floor((n-3k)/2))`,
/// also in the split form over `k >= 0` and `k >= 1`; and
/// `F_n(1,-1) = sum_(-n <= 3j <= n-1) (-1)^j q^(j(3j+1)/2)`.
pub fn verify_value_at_q_minus_one(n_max: usize) -> VerifyReport {
    let mut ck = Checker::new();
    let h = new_qhermite(n_max);
    let f = qfib(n_max);
    let qm1 = &QScalar::q() - &QScalar::one();
    let pent = |k: i64| qp(k * (3 * k + 1) / 2);
    for n in 0..=n_max {
        let ni = n as i64;
        let lhs = h.entries[n].subst_values(&QScalar::one(), &qm1);
        let full: QScalar = (-ni..=ni)
            .map(|k| &pent(k) * &int(alt(k.unsigned_abs() as usize) * binom_floor(n, ni - 3 * k)))
            .sum();
        ck.eq("symmetric sum", n, None, &lhs, &full);
        let pos: QScalar = (0..=ni)
            .map(|k| &pent(k) * &int(alt(k as usize) * binom_floor(n, ni - 3 * k)))
            .sum();
        let neg: QScalar = (1..=ni)
            .map(|k| {
                &qp(k * (3 * k - 1) / 2) * &int(alt(k as usize) * binom_floor(n, ni - 3 * k + 1))
            })
            .sum();
        ck.eq("split sum", n, None, &lhs, &(&pos + &neg));
        let fv = f.entries[n].subst_values(&QScalar::one(), &int(-1));
        let want: QScalar = (-ni..=ni)
            .filter(|j| -ni <= 3 * j && 3 * j < ni)
            .map(|j| &pent(j) * &int(alt(j.unsigned_abs() as usize)))
            .sum();
        ck.eq("F_n(1,-1)", n, None, &fv, &want);
    }
    ck.finish("value_at_q_minus_one", format!("n <= {n_max}"), vec![])
}

/// `H_2n(1,(q-1)/q|q) = q^-n sum_j (C(2n,n-3j) - C(2n,n-3j-1)) q^(2j(3j+1))` and
/// `H_2n+1(1,(q-1)/q|q) = q^-n sum_j (C(2n+1,n-3j) - C(2n+1,n-3j-1)) q^(2j(3j+2))`,
/// together with the intermediate expansions in `F_m(1,-1/q)`. The tabulated
/// values of `q^k F_(2k+1)(1,-1/q)` and `q^(k-1) F_2k(1,-1/q)` by `k mod 3` are
/// compared with direct evaluation; disagreements are listed as notes.
pub fn verify_value_at_q_minus_one_over_q(n_max: usize) -> VerifyReport {
    let mut ck = Checker::new();
    let top = 2 * n_max + 3;
    let h = new_qhermite(2 * n_max + 1);
    let f = qfib(top);
    let q = QScalar::q();
    let sv = &(&q - &QScalar::one()) / &q;
    let minus_inv_q = -&qp(-1);
    let fv: Vec<QScalar> = f
        .entries
        .iter()
        .map(|p| p.subst_values(&QScalar::one(), &minus_inv_q))
        .collect();

    for n in 0..=n_max {
        let ni = n as i64;
        let scale = qp(-ni);
        let even = h.entries[2 * n].subst_values(&QScalar::one(), &sv);
        let odd = h.entries[2 * n + 1].subst_values(&QScalar::one(), &sv);
        let d = |m: usize, a: i64| binomial(m as i64, a) - binomial(m as i64, a - 1);
        let even_rhs: QScalar = (-ni..=ni)
            .map(|j| &int(d(2 * n, ni - 3 * j)) * &qp(2 * j * (3 * j + 1)))
            .sum();
        ck.eq("even closed form", n, None, &even, &(&scale * &even_rhs));
        let odd_rhs: QScalar = (-ni..=ni)
            .map(|j| &int(d(2 * n + 1, ni - 3 * j)) * &qp(2 * j * (3 * j + 2)))
            .sum();
        ck.eq("odd closed form", n, None, &odd, &(&scale * &odd_rhs));

        let even_f: QScalar = (0..=n)
            .map(|k| &(&int(d(2 * n, (n - k) as i64)) * &qp(k as i64)) * &fv[2 * k + 1])
            .sum();
        ck.eq(
            "even via F_(2k+1)(1,-1/q)",
            n,
            None,
            &even,
            &(&scale * &even_f),
        );
        let odd_f: QScalar = (0..=n + 1)
            .map(|k| &(&int(d(2 * n + 1, (n + 1 - k) as i64)) * &qp(k as i64 - 1)) * &fv[2 * k])
            .sum();
        ck.eq("odd via F_2k(1,-1/q)", n, None, &odd, &(&scale * &odd_f));
    }

    // tabulated values by k mod 3, k = 3j + r
    type Rule = fn(i64) -> QScalar;
    let odd_index: [(&str, Rule); 3] = [
        ("k = 3j: q^k F_(2k+1)(1,-1/q) = q^(2j(3j+1))", |j| {
            qp(2 * j * (3 * j + 1))
        }),
        ("k = 3j+1: q^k F_(2k+1)(1,-1/q) = 0", |_| QScalar::zero()),
        ("k = 3j+2: q^k F_(2k+1)(1,-1/q) = q^(3j+2)", |j| {
            qp(3 * j + 2)
        }),
    ];
    let even_index: [(&str, Rule); 3] = [
        ("k = 3j: q^(k-1) F_2k(1,-1/q) = 0", |_| QScalar::zero()),
        ("k = 3j+1: q^(k-1) F_2k(1,-1/q) = q^(2j(3j+2))", |j| {
            qp(2 * j * (3 * j + 2))
        }),
        ("k = 3j+2: q^(k-1) F_2k(1,-1/q) = -q^((3j+1)(2j+2))", |j| {
            -qp((3 * j + 1) * (2 * j + 2))
        }),
    ];
    let mut notes = vec![];
    let k_max = (top - 1) / 2;
    for (r, (label, rule)) in odd_index.iter().enumerate() {
        let bad: Vec<String> = (r..=k_max)
            .step_by(3)
            .filter_map(|k| {
                let got = &qp(k as i64) * &fv[2 * k + 1];
                let shown = rule((k / 3) as i64);
                (got != shown).then(|| format!("k={k}: {got}"))
            })
            .collect();
        if !bad.is_empty() {
            notes.push(format!(
                "tabulated value \"{label}\" disagrees with direct evaluation ({})",
                bad.join(", ")
            ));
        }
    }
    for (r, (label, rule)) in even_index.iter().enumerate() {
        let bad: Vec<String> = (r.max(1)..=k_max)
            .filter(|k| k % 3 == r)
            .filter_map(|k| {
                let got = &qp(k as i64 - 1) * &fv[2 * k];
                let shown = rule((k / 3) as i64);
                (got != shown).then(|| format!("k={k}: {got}"))
            })
            .collect();
        if !bad.is_empty() {
            notes.push(format!(
                "tabulated value \"{label}\" disagrees with direct evaluation ({})",
                bad.join(", ")
            ));
        }
    }
    ck.finish(
        "value_at_q_minus_one_over_q",
        format!("n <= {n_max}"),
        notes,
    )
}

/// The double sum
/// `sum_k (-1)^k q^-C(k,2) sum_(i<=k) (s/(x(q-1)) q^-i + x q^i)^n
///  prod_(j<=k, j!=i) 1/(q^-i - q^-j + x^2 (q-1)/s (q^i - q^j))`
/// at the rational point `(q, x, s)`; `None` where a denominator vanishes.
pub fn double_sum(
    n: usize,
    q: &BigRational,
    x: &BigRational,
    s: &BigRational,
) -> Option<BigRational> {
    let one = BigRational::one();
    if q.is_zero() || *q == one || x.is_zero() || s.is_zero() {
        return None;
    }
    let qm1 = q - &one;
    let a = s / &(x * &qm1);
    let c = &(x * x) * &qm1 / s;
    let qi = |e: i64| -> BigRational {
        if e >= 0 {
            num_traits::pow(q.clone(), e as usize)
        } else {
            num_traits::pow(q.recip(), e.unsigned_abs() as usize)
        }
    };
    let mut total = BigRational::zero();
    for k in 0..=n as i64 {
        let mut inner = BigRational::zero();
        for i in 0..=k {
            let base = &(&a * &qi(-i)) + &(x * &qi(i));
            let mut t = num_traits::pow(base, n);
            for j in (0..=k).filter(|&j| j != i) {
                let den = &(&qi(-i) - &qi(-j)) + &(&c * &(&qi(i) - &qi(j)));
                if den.is_zero() {
                    return None;
                }
                t /= den;
            }
            inner += t;
        }
        let sign = if k % 2 == 0 {
            one.clone()
        } else {
            -one.clone()
        };
        total += &(&sign * &qi(-(k * (k - 1) / 2))) * &inner;
    }
    Some(total)
}

fn sample(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.random_range(-6..=6);
    let den: i64 = rng.random_range(1..=5);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Compares the double sum with `H_n(x,s|q)` at `trials` pseudo-random rational
/// points per `n`. Points where a denominator vanishes are resampled; ten
/// consecutive rejections end the check with an error.
pub fn verify_double_sum_numeric(n_max: usize, trials: usize, seed: u64) -> VerifyReport {
    const NAME: &str = "double_sum_numeric";
    let range = format!("n <= {n_max}, {trials} points per n, seed {seed}");
    let mut ck = Checker::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = new_qhermite(n_max);
    for n in 0..=n_max {
        let mut accepted = 0;
        let mut rejected = 0;
        while accepted < trials {
            let (q, xv, sv) = (sample(&mut rng), sample(&mut rng), sample(&mut rng));
            let lhs = h.entries[n].eval_rational(&q, &xv, &sv).ok();
            match (lhs, double_sum(n, &q, &xv, &sv)) {
                (Some(lhs), Some(rhs)) => {
                    rejected = 0;
                    accepted += 1;
                    ck.record("H_n = double sum", n, None, lhs == rhs, || {
                        (
                            format!("{lhs} at (q,x,s) = ({q}, {xv}, {sv})"),
                            rhs.to_string(),
                        )
                    });
                }
                _ => {
                    rejected += 1;
                    if rejected >= 10 {
                        return VerifyReport::error(
                            NAME,
                            range,
                            ck.checks(),
                            format!("unresolved point: 10 consecutive samples hit a vanishing denominator at n = {n}"),
                        );
                    }
                }
            }
        }
    }
    ck.finish(NAME, range, vec![])
}
