//! Mechanical verification of the identities satisfied by the q-Hermite
//! families.
//!
//! Every check returns a [`VerifyReport`]. Comparisons are exact: canonical
//! [`XSPoly`] equality, or cross-multiplied equality where a quotient is
//! involved. A failing report carries the first counterexample, ordered by
//! `n` and then `k`.
//!
//! [`registry`] lists the checks in a fixed order; [`run_all`] evaluates them
//! in parallel and returns the reports in registry order.

// checks compare several tables entry by entry at the same index
#![allow(clippy::needless_range_loop)]

mod continuous;
mod jfractions;
mod lucas;
mod matchings;
mod properties;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::mpoly::XSPoly;
use crate::qfield::QScalar;

pub use continuous::verify_continuous_family;
pub use jfractions::{verify_h_family, verify_hankel_new_h, verify_t_fraction, verify_w_moments};
pub use lucas::{
    verify_classical_inversions, verify_double_sum_numeric, verify_qlucas_qfib_expansions,
    verify_value_at_q_minus_one, verify_value_at_q_minus_one_over_q,
};
pub use matchings::{
    verify_crossing_coefficients, verify_crossing_moments, verify_matrix_inverse,
    verify_operator_equals_moments,
};
pub use properties::{verify_properties, verify_specializations};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check could not be carried out (e.g. no usable sample point).
    Error,
}

/// The first counterexample of a failing check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Which sub-check failed.
    pub check: String,
    pub n: usize,
    pub k: Option<usize>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one verification. `status == Pass` exactly when `witness` is `None`
/// and no error occurred.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub name: String,
    pub range: String,
    pub status: Status,
    /// Number of individual equalities checked.
    pub checks: usize,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn error(name: &str, range: String, checks: usize, note: String) -> Self {
        VerifyReport {
            name: name.to_string(),
            range,
            status: Status::Error,
            checks,
            witness: None,
            notes: vec![note],
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        write!(
            f,
            "{tag} {} [{}] ({} checks)",
            self.name, self.range, self.checks
        )?;
        if let Some(w) = &self.witness {
            let k = w.k.map(|k| format!(", k={k}")).unwrap_or_default();
            write!(
                f,
                "\n  witness {}: n={}{k}\n    lhs = {}\n    rhs = {}",
                w.check, w.n, w.lhs, w.rhs
            )?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

/// Counts equalities and keeps the smallest failing `(n, k)`.
#[derive(Default)]
pub(crate) struct Checker {
    checks: usize,
    failure: Option<Witness>,
}

impl Checker {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn eq<T: PartialEq + fmt::Display>(
        &mut self,
        check: &str,
        n: usize,
        k: Option<usize>,
        lhs: &T,
        rhs: &T,
    ) -> bool {
        self.record(check, n, k, lhs == rhs, || {
            (lhs.to_string(), rhs.to_string())
        })
    }

    /// Records a check whose sides are rendered only on failure.
    pub(crate) fn record(
        &mut self,
        check: &str,
        n: usize,
        k: Option<usize>,
        ok: bool,
        sides: impl FnOnce() -> (String, String),
    ) -> bool {
        self.checks += 1;
        if ok {
            return true;
        }
        let key = (n, k.unwrap_or(0));
        let better = self
            .failure
            .as_ref()
            .is_none_or(|w| key < (w.n, w.k.unwrap_or(0)));
        if better {
            let (lhs, rhs) = sides();
            self.failure = Some(Witness {
                check: check.to_string(),
                n,
                k,
                lhs,
                rhs,
            });
        }
        false
    }

    pub(crate) fn checks(&self) -> usize {
        self.checks
    }

    pub(crate) fn finish(self, name: &str, range: String, notes: Vec<String>) -> VerifyReport {
        VerifyReport {
            name: name.to_string(),
            range,
            status: if self.failure.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            checks: self.checks,
            witness: self.failure,
            notes,
        }
    }
}

/// Parameters shared by the verifications.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyParams {
    /// Overrides each check's default range (still bounded by its cap).
    pub max_n: Option<usize>,
    pub seed: u64,
    /// Random points per degree for the numeric check.
    pub trials: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            max_n: None,
            seed: 1,
            trials: 20,
        }
    }
}

impl VerifyParams {
    /// `default` unless `max_n` is set, then `max_n`; never above `cap`.
    pub fn range(&self, default: usize, cap: usize) -> usize {
        self.max_n.unwrap_or(default).min(cap)
    }
}

/// A named verification.
#[derive(Clone, Copy)]
pub struct Identity {
    pub name: &'static str,
    pub description: &'static str,
    pub run: fn(&VerifyParams) -> VerifyReport,
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity")
            .field("name", &self.name)
            .finish()
    }
}

/// All verifications in their fixed reporting order.
pub fn registry() -> Vec<Identity> {
    vec![
        Identity {
            name: "operator_equals_moments",
            description: "(x - s D_q)^n 1 = J-fraction moments = matching generating polynomial",
            run: |p| verify_operator_equals_moments(p.range(10, 14)),
        },
        Identity {
            name: "matrix_inverse",
            description: "crossing triangle times signed continuous q-Hermite triangle is the identity",
            run: |p| verify_matrix_inverse(p.range(12, 14)),
        },
        Identity {
            name: "hankel_new_h",
            description: "Hankel determinants of the new q-Hermite moments",
            run: |p| verify_hankel_new_h(p.range(5, 6)),
        },
        Identity {
            name: "h_family",
            description: "J-fraction, Hankel determinants and tableau of the rescaled discrete q-Hermite II family",
            run: |p| verify_h_family(p.range(12, 24)),
        },
        Identity {
            name: "t_fraction",
            description: "J-fraction, S-fraction coefficients and functional equation of T_n",
            run: |p| verify_t_fraction(p.range(12, 24)),
        },
        Identity {
            name: "w_moments",
            description: "moments q^(n((2m+1)n+1)/2) and their S-fraction table",
            run: |p| verify_w_moments(3, p.range(8, 16)),
        },
        Identity {
            name: "classical_inversions",
            description: "x^n in Lucas and Fibonacci polynomials; Tchebyshev inverse pairs",
            run: |p| verify_classical_inversions(p.range(10, 40)),
        },
        Identity {
            name: "qlucas_qfib_expansions",
            description: "H_n(x,(q-1)s) in q-Lucas and q-Fibonacci polynomials",
            run: |p| verify_qlucas_qfib_expansions(p.range(8, 24)),
        },
        Identity {
            name: "value_at_q_minus_one",
            description: "H_n(1, q-1) as a signed sum over pentagonal exponents",
            run: |p| verify_value_at_q_minus_one(p.range(12, 40)),
        },
        Identity {
            name: "value_at_q_minus_one_over_q",
            description: "H_2n and H_2n+1 at x = 1, s = (q-1)/q",
            run: |p| verify_value_at_q_minus_one_over_q(p.range(5, 20)),
        },
        Identity {
            name: "crossing_coefficients",
            description: "two closed forms for c(n,k,q) and the Touchard-Riordan formula",
            run: |p| verify_crossing_coefficients(p.range(10, 14)),
        },
        Identity {
            name: "crossing_moments",
            description: "c(n,0,q) as moments of continuous q-Hermite and as H_n(0,-1|q)",
            run: |p| verify_crossing_moments(p.range(12, 14)),
        },
        Identity {
            name: "double_sum_numeric",
            description: "double-sum expression for H_n at random rational points",
            run: |p| verify_double_sum_numeric(p.range(6, 12), p.trials, p.seed),
        },
        Identity {
            name: "continuous_family",
            description: "continuous q-Hermite moments, Hankel determinants, r(n), values at 0, Chebyshev expansion",
            run: |p| verify_continuous_family(p.range(12, 24)),
        },
        Identity {
            name: "specializations",
            description: "q -> 1 classical Hermite, q = 0 Catalan triangle, double factorial moments",
            run: |p| verify_specializations(p.range(10, 20)),
        },
        Identity {
            name: "properties",
            description: "q-Leibniz, parity, q-derivative, L_n recurrences, Pascal rule, round trip, shifted Hankel, tableau",
            run: |p| verify_properties(p.range(12, 20)),
        },
    ]
}

/// Looks up one verification by name.
pub fn identity_by_name(name: &str) -> Option<Identity> {
    registry().into_iter().find(|i| i.name == name)
}

/// Runs every verification; reports come back in registry order.
pub fn run_all(params: &VerifyParams) -> Vec<VerifyReport> {
    run_identities(&registry(), params)
}

/// Runs the given verifications in parallel; reports keep the input order.
pub fn run_identities(ids: &[Identity], params: &VerifyParams) -> Vec<VerifyReport> {
    ids.par_iter().map(|i| (i.run)(params)).collect()
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

/// `floor(a / b)` for `b > 0`.
fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

#[cfg(test)]
mod tests;
