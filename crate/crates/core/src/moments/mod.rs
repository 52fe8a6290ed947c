//! Continued fractions and moments.
//!
//! Index conventions (the usual source of off-by-one errors):
//!
//! | quantity | first index | meaning                                   |
//! |----------|-------------|-------------------------------------------|
//! | `b_n`    | 0           | J-fraction linear coefficients            |
//! | `λ_n`    | 1           | J-fraction quadratic coefficients         |
//! | `c_n`    | 1           | S-fraction coefficients                   |
//! | `a(n,k)` | (0,0)       | Stieltjes tableau, `a(n,0)` = moment `μ_n` |
//!
//! `λ_0` and `c_0` are never read; the sequences return zero there.

mod det;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::mpoly::{Ring, XSFrac, XSPoly};
use crate::qfield::{qint, QPolyZ, QScalar};

pub use det::{bareiss_det, leading_minors};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("degenerate series: S-fraction coefficient c_{index} cannot be determined")]
    DegenerateSeries { index: usize },
    #[error("series must start with 1")]
    NotNormalized,
    #[error("need {needed} moments, got {got}")]
    InsufficientMoments { needed: usize, got: usize },
    #[error("A-table parity violated at ({n},{k})")]
    ParityViolation { n: usize, k: usize },
}

/// Index-addressable coefficient sequence.
#[derive(Clone)]
pub enum CoeffSeq<T> {
    /// A named rule `n -> value`.
    Rule {
        name: String,
        f: Arc<dyn Fn(usize) -> T + Send + Sync>,
    },
    /// Explicit values for indices `start, start+1, ...`; zero elsewhere.
    List { start: usize, items: Vec<T> },
}

impl<T: Ring> CoeffSeq<T> {
    pub fn rule(name: impl Into<String>, f: impl Fn(usize) -> T + Send + Sync + 'static) -> Self {
        CoeffSeq::Rule {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn list(start: usize, items: Vec<T>) -> Self {
        CoeffSeq::List { start, items }
    }

    pub fn get(&self, n: usize) -> T {
        match self {
            CoeffSeq::Rule { f, .. } => f(n),
            CoeffSeq::List { start, items } => n
                .checked_sub(*start)
                .and_then(|i| items.get(i))
                .cloned()
                .unwrap_or_else(T::zero),
        }
    }
}

impl<T> fmt::Debug for CoeffSeq<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffSeq::Rule { name, .. } => write!(f, "Rule({name})"),
            CoeffSeq::List { start, items } => {
                write!(f, "List(start={start}, len={})", items.len())
            }
        }
    }
}

/// J-fraction data `1/(1 - b_0 t - λ_1 t^2/(1 - b_1 t - ...))`.
#[derive(Clone, Debug)]
pub struct JSpec<T> {
    pub name: String,
    pub b: CoeffSeq<T>,
    pub lam: CoeffSeq<T>,
}

impl<T: Ring> JSpec<T> {
    pub fn b(&self, n: usize) -> T {
        self.b.get(n)
    }

    /// `λ_n`; zero for `n = 0`.
    pub fn lam(&self, n: usize) -> T {
        if n == 0 {
            T::zero()
        } else {
            self.lam.get(n)
        }
    }
}

/// S-fraction data `1/(1 - c_1 t/(1 - c_2 t/(1 - ...)))`.
#[derive(Clone, Debug)]
pub struct SSpec<T> {
    pub name: String,
    pub c: CoeffSeq<T>,
}

impl<T: Ring> SSpec<T> {
    /// `c_n`; zero for `n = 0`.
    pub fn c(&self, n: usize) -> T {
        if n == 0 {
            T::zero()
        } else {
            self.c.get(n)
        }
    }
}

/// Lower-triangular table `a(n,k)`, `0 <= k <= n <= N`.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangle<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Ring> Triangle<T> {
    pub fn get(&self, n: usize, k: usize) -> Option<&T> {
        self.rows.get(n).and_then(|r| r.get(k))
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn column(&self, k: usize) -> Vec<T> {
        self.rows.iter().filter_map(|r| r.get(k).cloned()).collect()
    }
}

/// The Stieltjes tableau of a J-fraction up to row `n_max`.
pub fn stieltjes_table<T: Ring>(spec: &JSpec<T>, n_max: usize) -> Triangle<T> {
    let b: Vec<T> = (0..=n_max).map(|k| spec.b(k)).collect();
    let lam: Vec<T> = (0..=n_max + 1).map(|k| spec.lam(k)).collect();
    let mut rows: Vec<Vec<T>> = vec![vec![T::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let at = |k: usize| prev.get(k);
        let row = (0..=n)
            .map(|k| {
                let mut v = T::zero();
                if k >= 1 {
                    if let Some(p) = at(k - 1) {
                        v = v.add(p);
                    }
                }
                if let Some(p) = at(k) {
                    if !p.is_zero() && !b[k].is_zero() {
                        v = v.add(&b[k].mul(p));
                    }
                }
                if let Some(p) = at(k + 1) {
                    if !p.is_zero() && !lam[k + 1].is_zero() {
                        v = v.add(&lam[k + 1].mul(p));
                    }
                }
                v
            })
            .collect();
        rows.push(row);
    }
    Triangle { rows }
}

/// Moments `μ_0..=μ_{n_max}` of a J-fraction.
pub fn moments<T: Ring>(spec: &JSpec<T>, n_max: usize) -> Vec<T> {
    stieltjes_table(spec, n_max).column(0)
}

/// The A-table of an S-fraction up to row `n_max`, with the parity zeros checked.
pub fn sfraction_table<T: Ring>(spec: &SSpec<T>, n_max: usize) -> Result<Triangle<T>, EngineError> {
    let c: Vec<T> = (0..=n_max + 1).map(|k| spec.c(k)).collect();
    let mut rows: Vec<Vec<T>> = vec![vec![T::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut v = T::zero();
            if k >= 1 {
                if let Some(p) = prev.get(k - 1) {
                    v = v.add(p);
                }
            }
            if let Some(p) = prev.get(k + 1) {
                if !p.is_zero() {
                    v = v.add(&c[k + 1].mul(p));
                }
            }
            if (n + k) % 2 == 1 && !v.is_zero() {
                return Err(EngineError::ParityViolation { n, k });
            }
            row.push(v);
        }
        rows.push(row);
    }
    Ok(Triangle { rows })
}

/// Power-series coefficients of an S-fraction through `t^n_max`; the
/// coefficient of `t^n` is `A(2n,0)`.
pub fn sfraction_series<T: Ring>(spec: &SSpec<T>, n_max: usize) -> Result<Vec<T>, EngineError> {
    let table = sfraction_table(spec, 2 * n_max)?;
    Ok(table.column(0).into_iter().step_by(2).collect())
}

/// Contraction of an S-fraction into the equivalent J-fraction:
/// `b_0 = c_1`, `b_n = c_{2n} + c_{2n+1}`, `λ_n = c_{2n-1} c_{2n}`.
pub fn contract<T: Ring + 'static>(spec: &SSpec<T>) -> JSpec<T> {
    let cb = spec.clone();
    let cl = spec.clone();
    JSpec {
        name: format!("contract({})", spec.name),
        b: CoeffSeq::rule("b", move |n| {
            if n == 0 {
                cb.c(1)
            } else {
                cb.c(2 * n).add(&cb.c(2 * n + 1))
            }
        }),
        lam: CoeffSeq::rule("lam", move |n| cl.c(2 * n - 1).mul(&cl.c(2 * n))),
    }
}

fn hankel_matrix(mu: &[XSPoly], n: usize, shift: usize) -> Vec<Vec<XSPoly>> {
    (0..n)
        .map(|i| (0..n).map(|j| mu[i + j + shift].clone()).collect())
        .collect()
}

/// `det(μ_{i+j+shift})_{i,j<n}` by fraction-free elimination.
pub fn hankel_det(mu: &[XSPoly], n: usize, shift: usize) -> Result<XSPoly, EngineError> {
    if n == 0 {
        return Ok(XSPoly::one());
    }
    let needed = 2 * n - 1 + shift;
    if mu.len() < needed {
        return Err(EngineError::InsufficientMoments {
            needed,
            got: mu.len(),
        });
    }
    Ok(bareiss_det(hankel_matrix(mu, n, shift)))
}

/// Recovers `c_1..=c_count` of the S-fraction whose series starts with `mu`.
///
/// Uses the Hankel-determinant expressions
/// `c_{2n+1} = H1_{n+1} H0_n / (H1_n H0_{n+1})` and
/// `c_{2n} = H0_{n+1} H1_{n-1} / (H0_n H1_n)`,
/// where `H0_k`, `H1_k` are the order-`k` Hankel determinants of `mu` with shift
/// 0 and 1. All leading minors come out of one Bareiss pass per shift. A zero
/// coefficient terminates the fraction; the remaining coefficients are zero and
/// the terminated fraction is checked against `mu`.
pub fn sfraction_from_series(mu: &[XSPoly], count: usize) -> Result<SSpec<XSFrac>, EngineError> {
    if mu.len() < count + 1 {
        return Err(EngineError::InsufficientMoments {
            needed: count + 1,
            got: mu.len(),
        });
    }
    if mu.first().is_none_or(|m| !m.is_one()) {
        return Err(EngineError::NotNormalized);
    }
    let m0 = count / 2 + 1;
    let m1 = count.div_ceil(2);
    let (h0, h1) = rayon::join(
        || leading_minors(hankel_matrix(mu, m0, 0)),
        || {
            if m1 == 0 {
                Vec::new()
            } else {
                leading_minors(hankel_matrix(mu, m1, 1))
            }
        },
    );
    // prepend the empty determinant
    let h0: Vec<XSPoly> = std::iter::once(XSPoly::one()).chain(h0).collect();
    let h1: Vec<XSPoly> = std::iter::once(XSPoly::one()).chain(h1).collect();
    let fetch = |h: &[XSPoly], i: usize, k: usize| {
        h.get(i)
            .cloned()
            .ok_or(EngineError::DegenerateSeries { index: k })
    };

    let mut cs = Vec::with_capacity(count);
    let mut terminated = false;
    for k in 1..=count {
        if terminated {
            cs.push(XSFrac::from_poly(XSPoly::zero()));
            continue;
        }
        let n = k / 2;
        let (num_head, num_tail, den_a, den_b) = if k % 2 == 1 {
            (
                fetch(&h1, n + 1, k)?,
                h0[n].clone(),
                h1[n].clone(),
                fetch(&h0, n + 1, k)?,
            )
        } else {
            (
                fetch(&h0, n + 1, k)?,
                h1[n - 1].clone(),
                h0[n].clone(),
                fetch(&h1, n, k)?,
            )
        };
        if num_head.is_zero() {
            terminated = true;
            cs.push(XSFrac::from_poly(XSPoly::zero()));
            continue;
        }
        if den_a.is_zero() || den_b.is_zero() {
            return Err(EngineError::DegenerateSeries { index: k });
        }
        cs.push(XSFrac::new(&num_head * &num_tail, &den_a * &den_b));
    }
    let spec = SSpec {
        name: "extracted".into(),
        c: CoeffSeq::list(1, cs),
    };
    if terminated {
        let series = sfraction_series(&spec, count)?;
        if let Some(k) = (0..=count).find(|&i| series[i] != mu[i]) {
            return Err(EngineError::DegenerateSeries { index: k.max(1) });
        }
    }
    Ok(spec)
}

/// `p_n(0)` for the orthogonal polynomials of a J-fraction:
/// `v_{k+1} = -b_k v_k - λ_k v_{k-1}`, `v_0 = 1`.
pub fn pn_at_zero<T: Ring>(spec: &JSpec<T>, n: usize) -> T {
    let mut prev = T::zero();
    let mut cur = T::one();
    for k in 0..n {
        let next = spec.b(k).mul(&cur).neg().sub(&spec.lam(k).mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// The named continued fractions of the q-Hermite families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedSpec {
    /// `b_n = x q^n`, `λ_n = -s [n]`: moments are the new q-Hermite `H_n(x,s|q)`.
    NewH,
    /// `b_n = x q^n`, `λ_n = -s q^(n-1) [n]`: moments are the continuous `H̃_n`.
    ContH,
    /// Moments are the rescaled discrete q-Hermite II `h_n(x,s;q)`.
    H,
    /// `b_n = q^n x`, `λ_n = (1-q^n) s`: moments are `(x + (1-q)s D_q)^n 1`.
    T,
    /// Moments `q^(n((2m+1)n+1)/2)`.
    W(u32),
    /// `b_n = x`, `λ_n = -n s`: classical Hermite.
    Classical,
    /// `b_n = 0`, `λ_n = [n]`: crossing generating functions of perfect matchings.
    Crossing,
}

impl NamedSpec {
    pub const NAMES: [&'static str; 7] = ["newH", "contH", "h", "T", "w", "classical", "crossing"];

    /// All specs, with `W(m)` for `m = 0..=3`.
    pub fn all() -> Vec<NamedSpec> {
        let mut v = vec![
            NamedSpec::NewH,
            NamedSpec::ContH,
            NamedSpec::H,
            NamedSpec::T,
        ];
        v.extend((0..=3).map(NamedSpec::W));
        v.extend([NamedSpec::Classical, NamedSpec::Crossing]);
        v
    }

    pub fn parse(name: &str, m: u32) -> Option<NamedSpec> {
        Some(match name {
            "newH" => NamedSpec::NewH,
            "contH" => NamedSpec::ContH,
            "h" => NamedSpec::H,
            "T" => NamedSpec::T,
            "w" => NamedSpec::W(m),
            "classical" => NamedSpec::Classical,
            "crossing" => NamedSpec::Crossing,
            _ => return None,
        })
    }

    pub fn name(&self) -> String {
        match self {
            NamedSpec::W(m) => format!("w({m})"),
            other => other.base_name().to_string(),
        }
    }

    fn base_name(&self) -> &'static str {
        match self {
            NamedSpec::NewH => "newH",
            NamedSpec::ContH => "contH",
            NamedSpec::H => "h",
            NamedSpec::T => "T",
            NamedSpec::W(_) => "w",
            NamedSpec::Classical => "classical",
            NamedSpec::Crossing => "crossing",
        }
    }

    pub fn jspec(&self) -> JSpec<XSPoly> {
        match *self {
            NamedSpec::NewH => jspec_new_h(),
            NamedSpec::ContH => jspec_cont_h(),
            NamedSpec::H => jspec_h(),
            NamedSpec::T => jspec_t(),
            NamedSpec::W(m) => jspec_w(m),
            NamedSpec::Classical => jspec_classical(),
            NamedSpec::Crossing => jspec_crossing(),
        }
    }
}

fn qp(e: i64) -> QScalar {
    QScalar::q_pow(e)
}

/// `1 - q^k`.
fn one_minus_qpow(k: usize) -> QScalar {
    &QScalar::one() - &qp(k as i64)
}

fn x_times(c: QScalar) -> XSPoly {
    XSPoly::monomial(1, 0, c)
}

fn s_times(c: QScalar) -> XSPoly {
    XSPoly::monomial(0, 1, c)
}

pub fn jspec_new_h() -> JSpec<XSPoly> {
    JSpec {
        name: "newH".into(),
        b: CoeffSeq::rule("x q^n", |n| x_times(qp(n as i64))),
        lam: CoeffSeq::rule("-s [n]", |n| s_times(-qint(n))),
    }
}

pub fn jspec_cont_h() -> JSpec<XSPoly> {
    JSpec {
        name: "contH".into(),
        b: CoeffSeq::rule("x q^n", |n| x_times(qp(n as i64))),
        lam: CoeffSeq::rule("-s q^(n-1) [n]", |n| {
            s_times(-(&qp(n as i64 - 1) * &qint(n)))
        }),
    }
}

pub fn jspec_h() -> JSpec<XSPoly> {
    JSpec {
        name: "h".into(),
        b: CoeffSeq::rule("q^(n-1)(q^n+q^(n+1)-1) x", |n| {
            let n = n as i64;
            let c = &qp(n - 1) * &(&(&qp(n) + &qp(n + 1)) - &QScalar::one());
            x_times(c)
        }),
        lam: CoeffSeq::rule("-q^(n-1)[n](s + q^(2n-2)(1-q)x^2)", |n| {
            let pre = -(&qp(n as i64 - 1) * &qint(n));
            let inner =
                &XSPoly::s() + &XSPoly::monomial(2, 0, &qp(2 * n as i64 - 2) * &one_minus_qpow(1));
            inner.scale(&pre)
        }),
    }
}

pub fn jspec_t() -> JSpec<XSPoly> {
    JSpec {
        name: "T".into(),
        b: CoeffSeq::rule("q^n x", |n| x_times(qp(n as i64))),
        lam: CoeffSeq::rule("(1-q^n) s", |n| s_times(one_minus_qpow(n))),
    }
}

pub fn jspec_w(m: u32) -> JSpec<XSPoly> {
    let m = m as i64;
    let r = 2 * m + 1;
    JSpec {
        name: format!("w({m})"),
        b: CoeffSeq::rule("q^(rn-m)(q^(rn)-1) + q^(r(2n+1)-m)", move |n| {
            let n = n as i64;
            let v = &(&qp(r * n - m) * &(&qp(r * n) - &QScalar::one())) + &qp(r * (2 * n + 1) - m);
            XSPoly::constant(v)
        }),
        lam: CoeffSeq::rule("q^(r(3n-1)-2m)(q^(rn)-1)", move |n| {
            let n = n as i64;
            XSPoly::constant(&qp(r * (3 * n - 1) - 2 * m) * &(&qp(r * n) - &QScalar::one()))
        }),
    }
}

pub fn jspec_classical() -> JSpec<XSPoly> {
    JSpec {
        name: "classical".into(),
        b: CoeffSeq::rule("x", |_| XSPoly::x()),
        lam: CoeffSeq::rule("-n s", |n| s_times(QScalar::from_int(-(n as i64)))),
    }
}

pub fn jspec_crossing() -> JSpec<XSPoly> {
    JSpec {
        name: "crossing".into(),
        b: CoeffSeq::rule("0", |_| XSPoly::zero()),
        lam: CoeffSeq::rule("[n]", |n| XSPoly::constant(qint(n))),
    }
}

/// `λ_1 ... λ_k` products: `prod_{i=1}^{n-1} prod_{k=1}^{i} λ_k`, the value of
/// the order-`n` Hankel determinant of the moments.
pub fn hankel_lambda_product<T: Ring>(spec: &JSpec<T>, n: usize) -> T {
    let mut acc = T::one();
    let mut partial = T::one();
    for i in 1..n {
        partial = partial.mul(&spec.lam(i));
        acc = acc.mul(&partial);
    }
    acc
}

/// Builds an S-fraction from integer-polynomial coefficients (used by tests and
/// the CLI for constant sequences).
pub fn sspec_from_list(name: &str, cs: Vec<XSPoly>) -> SSpec<XSPoly> {
    SSpec {
        name: name.into(),
        c: CoeffSeq::list(1, cs),
    }
}

/// Convenience: a constant `XSPoly` from integer `q`-coefficients.
pub fn qpoly_const(cs: &[i64]) -> XSPoly {
    XSPoly::constant(QScalar::from_poly(QPolyZ::from_i64s(cs)))
}

#[cfg(test)]
mod tests;
