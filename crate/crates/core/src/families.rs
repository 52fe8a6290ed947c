//! The polynomial families, each built from its defining recurrence, plus the
//! explicit sums used to cross-check them.
//!
//! Naming note: the literature labels the discrete q-Hermite I and II
//! definitions with the same equation tag. Here they are distinct constructors,
//! [`disc_qhermite_i`] and [`disc_qhermite_ii_rescaled`].

use thiserror::Error;

use crate::moments::{CoeffSeq, JSpec};
use crate::mpoly::{XSPoly, ZPoly};
use crate::qfield::{binomial, choose2, qbinom, qdoublefact_odd, qint, qpochhammer, QScalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family '{name}'; valid names: {}", FAMILY_NAMES.join(", "))]
    Unknown { name: String },
    #[error("explicit form of degree {n} did not reduce to a polynomial")]
    NotPolynomial { n: usize },
}

/// Members `p_0, ..., p_N` of one family.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyTable {
    pub name: String,
    pub entries: Vec<XSPoly>,
}

impl FamilyTable {
    fn new(name: &str, entries: Vec<XSPoly>) -> Self {
        FamilyTable {
            name: name.to_string(),
            entries,
        }
    }

    /// Builds `p_0..=p_N` from `p_0`, `p_1` and a step `(n, p_n, p_{n-1}) -> p_{n+1}`.
    fn by_recurrence(
        name: &str,
        n_max: usize,
        p0: XSPoly,
        p1: XSPoly,
        step: impl Fn(usize, &XSPoly, &XSPoly) -> XSPoly,
    ) -> Self {
        let mut v = vec![p0, p1];
        for n in 1..n_max {
            let next = step(n, &v[n], &v[n - 1]);
            v.push(next);
        }
        v.truncate(n_max + 1);
        Self::new(name, v)
    }

    pub fn get(&self, n: usize) -> Option<&XSPoly> {
        self.entries.get(n)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Applies `s -> c s` to every member.
    pub fn subst_s_scale(&self, c: &QScalar) -> FamilyTable {
        FamilyTable {
            name: self.name.clone(),
            entries: self.entries.iter().map(|p| p.subst_s_scale(c)).collect(),
        }
    }
}

pub const FAMILY_NAMES: [&str; 15] = [
    "hermite_classical",
    "new_qhermite",
    "cont_qhermite",
    "disc_qhermite_I",
    "disc_qhermite_II_rescaled",
    "h_wn",
    "t_family",
    "lucas_classical",
    "fib_classical",
    "qlucas",
    "qfib",
    "chebyshev_T",
    "r_family",
    "qlucas_operator",
    "qfib_operator",
];

/// Looks up a family by registry name and builds it up to degree `n_max`.
pub fn family_by_name(name: &str, n_max: usize) -> Result<FamilyTable, FamilyError> {
    Ok(match name {
        "hermite_classical" => hermite_classical(n_max),
        "new_qhermite" => new_qhermite(n_max),
        "cont_qhermite" => cont_qhermite(n_max),
        "disc_qhermite_I" => disc_qhermite_i(n_max),
        "disc_qhermite_II_rescaled" => disc_qhermite_ii_rescaled(n_max),
        "h_wn" => FamilyTable::new("h_wn", (0..=n_max).map(h_wn).collect()),
        "t_family" => t_family(n_max),
        "lucas_classical" => lucas_classical(n_max),
        "fib_classical" => fib_classical(n_max),
        "qlucas" => qlucas(n_max),
        "qfib" => qfib(n_max),
        "chebyshev_T" => chebyshev_t(n_max),
        "r_family" => r_family(n_max),
        "qlucas_operator" => qlucas_operator(n_max),
        "qfib_operator" => qfib_operator(n_max),
        _ => {
            return Err(FamilyError::Unknown {
                name: name.to_string(),
            })
        }
    })
}

fn x() -> XSPoly {
    XSPoly::x()
}

fn s() -> XSPoly {
    XSPoly::s()
}

fn int(v: i64) -> QScalar {
    QScalar::from_int(v)
}

fn qp(e: i64) -> QScalar {
    QScalar::q_pow(e)
}

fn term(c: QScalar, xd: usize, sd: usize) -> XSPoly {
    XSPoly::monomial(xd as u32, sd as u32, c)
}

fn odd_double_factorial(k: usize) -> i64 {
    (1..=k as i64).map(|i| 2 * i - 1).product()
}

/// Classical Hermite: `H_{n+1} = x H_n - n s H_{n-1}`.
pub fn hermite_classical(n_max: usize) -> FamilyTable {
    FamilyTable::by_recurrence(
        "hermite_classical",
        n_max,
        XSPoly::one(),
        x(),
        |n, p, pm| &(&x() * p) - &(&s() * pm).scale(&int(n as i64)),
    )
}

/// `sum_k binomial(n,2k) (2k-1)!! (-s)^k x^(n-2k)`.
pub fn hermite_classical_explicit(n: usize) -> XSPoly {
    (0..=n / 2)
        .map(|k| {
            let c = binomial(n as i64, 2 * k as i64)
                * odd_double_factorial(k)
                * if k % 2 == 0 { 1 } else { -1 };
            term(int(c), n - 2 * k, k)
        })
        .sum()
}

/// Monic orthogonal polynomials `p_{n+1} = (z - b_n) p_n - λ_n p_{n-1}`.
pub fn orth_poly_sequence(spec: &JSpec<XSPoly>, n_max: usize) -> Vec<ZPoly> {
    let mut v = vec![ZPoly::one()];
    let mut prev = ZPoly::zero();
    for n in 0..n_max {
        let cur = &v[n];
        let next = &(&cur.mul_z() - &cur.scale(&spec.b(n))) - &prev.scale(&spec.lam(n));
        prev = cur.clone();
        v.push(next);
    }
    v
}

/// The same recurrence evaluated at a fixed value `z`.
pub fn orth_poly_values(spec: &JSpec<XSPoly>, z: &XSPoly, n_max: usize) -> Vec<XSPoly> {
    let mut v = vec![XSPoly::one()];
    let mut prev = XSPoly::zero();
    for n in 0..n_max {
        let cur = &v[n];
        let next = &(&(z - &spec.b(n)) * cur) - &(&spec.lam(n) * &prev);
        prev = cur.clone();
        v.push(next);
    }
    v
}

/// Recurrence data of the Al-Salam-Chihara polynomials `P_n(z; a, b, c)`:
/// `P_{n+1} = (z - a q^n) P_n - (c + b q^(n-1)) [n] P_{n-1}`.
pub fn al_salam_chihara_spec(a: XSPoly, b: XSPoly, c: XSPoly) -> JSpec<XSPoly> {
    JSpec {
        name: "al_salam_chihara".into(),
        b: CoeffSeq::rule("a q^n", move |n| a.scale(&qp(n as i64))),
        lam: CoeffSeq::rule("(c + b q^(n-1)) [n]", move |n| {
            (&c + &b.scale(&qp(n as i64 - 1))).scale(&qint(n))
        }),
    }
}

/// `P_0..=P_N` of the Al-Salam-Chihara family as polynomials in `z`.
pub fn al_salam_chihara(a: XSPoly, b: XSPoly, c: XSPoly, n_max: usize) -> Vec<ZPoly> {
    orth_poly_sequence(&al_salam_chihara_spec(a, b, c), n_max)
}

/// `P_n(z)` of the new q-Hermite polynomials from the rescaled Al-Salam-Chihara sum
/// `(s/(x(q-1)))^n sum_k (q^-n;q)_k/(q;q)_k (-q/s)^k prod_{i<k} ((q-1)q^i x z - s - (q-1)q^(2i) x^2)`.
///
/// The `s` powers are cleared first; the final division by `x^n (q-1)^n` must
/// be exact.
pub fn asc_explicit_rescaled(n: usize) -> Result<ZPoly, FamilyError> {
    let q = QScalar::q();
    let qm1 = &q - &QScalar::one();
    let a = qp(-(n as i64));
    let mut sum = ZPoly::zero();
    let mut prod = ZPoly::one();
    for k in 0..=n {
        if k > 0 {
            let i = (k - 1) as i64;
            let factor = ZPoly::from_coeffs(vec![
                &(-&s()) - &term(&qm1 * &qp(2 * i), 2, 0),
                term(&qm1 * &qp(i), 1, 0),
            ]);
            prod = &prod * &factor;
        }
        let coef = &(&qpochhammer(&a, k) / &qpochhammer(&q, k)) * &(-&q).pow(k as u32);
        if coef.is_zero() {
            continue;
        }
        sum = &sum + &prod.scale(&term(coef, 0, n - k));
    }
    let scale = qm1.pow(n as u32).inv().expect("q - 1 is nonzero");
    let coeffs = sum
        .coeffs()
        .iter()
        .map(|c| c.div_monomial(n as u32, 0).map(|p| p.scale(&scale)))
        .collect::<Option<Vec<_>>>()
        .ok_or(FamilyError::NotPolynomial { n })?;
    Ok(ZPoly::from_coeffs(coeffs))
}

/// Continuous q-Hermite `H̃_n(x,s|q) = P_n(x; 0, 0, s)`.
pub fn cont_qhermite(n_max: usize) -> FamilyTable {
    let spec = al_salam_chihara_spec(XSPoly::zero(), XSPoly::zero(), s());
    FamilyTable::new("cont_qhermite", orth_poly_values(&spec, &x(), n_max))
}

/// Discrete q-Hermite I `h̃_n(x,s;q) = P_n(x; 0, (1-q)s, 0)`.
pub fn disc_qhermite_i(n_max: usize) -> FamilyTable {
    let b = term(&QScalar::one() - &QScalar::q(), 0, 1);
    let spec = al_salam_chihara_spec(XSPoly::zero(), b, XSPoly::zero());
    FamilyTable::new("disc_qhermite_I", orth_poly_values(&spec, &x(), n_max))
}

/// Rescaled discrete q-Hermite II `h_n(x,s;q) = P_n(0; -x, 0, s)`, i.e.
/// `h_{n+1} = q^n x h_n - [n] s h_{n-1}`.
pub fn disc_qhermite_ii_rescaled(n_max: usize) -> FamilyTable {
    let spec = al_salam_chihara_spec(-x(), XSPoly::zero(), s());
    FamilyTable::new(
        "disc_qhermite_II_rescaled",
        orth_poly_values(&spec, &XSPoly::zero(), n_max),
    )
}

/// `sum_k q^C(n-2k,2) [n choose 2k] [2k-1]!! (-s)^k x^(n-2k)`.
pub fn h_explicit(n: usize) -> XSPoly {
    (0..=n / 2)
        .map(|k| {
            let sign = if k % 2 == 0 { QScalar::one() } else { int(-1) };
            let c = &(&(&qp(choose2((n - 2 * k) as i64)) * &qbinom(n as i64, 2 * k as i64))
                * &qdoublefact_odd(k))
                * &sign;
            term(c, n - 2 * k, k)
        })
        .sum()
}

/// `w(n) = sum_k q^(2 C(n-k,2)) [n choose 2k] [2k-1]!! s^k x^(n-2k)`.
pub fn h_wn(n: usize) -> XSPoly {
    (0..=n / 2)
        .map(|k| {
            let c = &(&qp(2 * choose2((n - k) as i64)) * &qbinom(n as i64, 2 * k as i64))
                * &qdoublefact_odd(k);
            term(c, n - 2 * k, k)
        })
        .sum()
}

/// `(alpha x + beta s D_q)^n . 1` for `n = 0..=N`, sharing the work.
fn operator_powers(name: &str, alpha: &QScalar, beta: &QScalar, n_max: usize) -> FamilyTable {
    let ax = term(alpha.clone(), 1, 0);
    let bs = term(beta.clone(), 0, 1);
    let mut v = vec![XSPoly::one()];
    for n in 0..n_max {
        let p = &v[n];
        v.push(&(&ax * p) + &(&bs * &p.qderiv_x()));
    }
    FamilyTable::new(name, v)
}

/// New q-Hermite `H_n(x,s|q) = (x - s D_q)^n . 1`.
pub fn new_qhermite(n_max: usize) -> FamilyTable {
    operator_powers("new_qhermite", &QScalar::one(), &int(-1), n_max)
}

/// `T_n(x,s) = (x + (1-q) s D_q)^n . 1`.
pub fn t_family(n_max: usize) -> FamilyTable {
    operator_powers(
        "t_family",
        &QScalar::one(),
        &(&QScalar::one() - &QScalar::q()),
        n_max,
    )
}

/// Lucas polynomials with `l_0 = 1`, `l_1 = x`, `l_2 = x^2 + 2s`,
/// `l_n = x l_{n-1} + s l_{n-2}` for `n > 2`.
pub fn lucas_classical(n_max: usize) -> FamilyTable {
    FamilyTable::by_recurrence("lucas_classical", n_max, XSPoly::one(), x(), |n, p, pm| {
        if n == 1 {
            &x().pow(2) + &s().scale(&int(2))
        } else {
            &(&x() * p) + &(&s() * pm)
        }
    })
}

/// `sum_{2k<=n} n/(n-k) C(n-k,k) s^k x^(n-2k)`; `l_0 = 1`.
pub fn lucas_explicit(n: usize) -> XSPoly {
    if n == 0 {
        return XSPoly::one();
    }
    (0..=n / 2)
        .map(|k| {
            let c = n as i64 * binomial((n - k) as i64, k as i64) / (n - k) as i64;
            term(int(c), n - 2 * k, k)
        })
        .sum()
}

/// Fibonacci polynomials `f_0 = 0`, `f_1 = 1`, `f_n = x f_{n-1} + s f_{n-2}`.
pub fn fib_classical(n_max: usize) -> FamilyTable {
    FamilyTable::by_recurrence(
        "fib_classical",
        n_max,
        XSPoly::zero(),
        XSPoly::one(),
        |_, p, pm| &(&x() * p) + &(&s() * pm),
    )
}

/// `sum_k C(n-1-k,k) s^k x^(n-1-2k)`; `f_0 = 0`.
pub fn fib_explicit(n: usize) -> XSPoly {
    if n == 0 {
        return XSPoly::zero();
    }
    (0..=(n - 1) / 2)
        .map(|k| {
            term(
                int(binomial((n - 1 - k) as i64, k as i64)),
                n - 1 - 2 * k,
                k,
            )
        })
        .sum()
}

/// q-Lucas polynomials from the explicit sum
/// `sum_k q^C(k,2) [n]/[n-k] [n-k choose k] s^k x^(n-2k)`; `L_0 = 1`.
pub fn qlucas(n_max: usize) -> FamilyTable {
    let entry = |n: usize| -> XSPoly {
        if n == 0 {
            return XSPoly::one();
        }
        (0..=n / 2)
            .map(|k| {
                let c = &(&qp(choose2(k as i64)) * &(&qint(n) / &qint(n - k)))
                    * &qbinom((n - k) as i64, k as i64);
                term(c, n - 2 * k, k)
            })
            .sum()
    };
    FamilyTable::new("qlucas", (0..=n_max).map(entry).collect())
}

/// q-Fibonacci polynomials from the explicit sum
/// `sum_k q^C(k+1,2) [n-1-k choose k] s^k x^(n-1-2k)`; `F_0 = 0`.
pub fn qfib(n_max: usize) -> FamilyTable {
    let entry = |n: usize| -> XSPoly {
        if n == 0 {
            return XSPoly::zero();
        }
        (0..=(n - 1) / 2)
            .map(|k| {
                let c = &qp(choose2(k as i64 + 1)) * &qbinom((n - 1 - k) as i64, k as i64);
                term(c, n - 1 - 2 * k, k)
            })
            .sum()
    };
    FamilyTable::new("qfib", (0..=n_max).map(entry).collect())
}

/// `X p = x p + (q-1) s D_q p`.
fn lucas_operator(p: &XSPoly) -> XSPoly {
    &(&x() * p) + &(&s() * &p.qderiv_x()).scale(&(&QScalar::q() - &QScalar::one()))
}

/// q-Lucas polynomials as `l_n(x + (q-1) s D_q, s) . 1`.
pub fn qlucas_operator(n_max: usize) -> FamilyTable {
    FamilyTable::by_recurrence("qlucas_operator", n_max, XSPoly::one(), x(), |n, p, pm| {
        if n == 1 {
            // l_2 = X^2 + 2s, not X l_1 + s l_0
            &lucas_operator(p) + &s().scale(&int(2))
        } else {
            &lucas_operator(p) + &(&s() * pm)
        }
    })
}

/// q-Fibonacci polynomials as `f_n(x + (q-1) s D_q, s) . 1`.
pub fn qfib_operator(n_max: usize) -> FamilyTable {
    FamilyTable::by_recurrence(
        "qfib_operator",
        n_max,
        XSPoly::zero(),
        XSPoly::one(),
        |_, p, pm| &lucas_operator(p) + &(&s() * pm),
    )
}

/// Chebyshev polynomials of the first kind in `x`.
pub fn chebyshev_t(n_max: usize) -> FamilyTable {
    FamilyTable::by_recurrence("chebyshev_T", n_max, XSPoly::one(), x(), |_, p, pm| {
        &(&x() * p).scale(&int(2)) - pm
    })
}

/// `r(n) = q^(n-1) x r(n-1) + q^(n-2) s [n-1] r(n-2)`, `r_0 = 1`, `r_1 = x`.
pub fn r_family(n_max: usize) -> FamilyTable {
    FamilyTable::by_recurrence("r_family", n_max, XSPoly::one(), x(), |n, p, pm| {
        // step from index n to n+1
        let m = n as i64 + 1;
        &(&term(qp(m - 1), 1, 0) * p) + &(&term(&qp(m - 2) * &qint(n), 0, 1) * pm)
    })
}

#[cfg(test)]
mod tests;
