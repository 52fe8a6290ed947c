//! Python bindings: module `pyqhermite`.
//!
//! Polynomials cross the boundary as canonical text (or JSON via the `*_json`
//! functions); crossing polynomials as lists of Python ints, ascending in `q`.
//! Unknown names and refused computations raise `ValueError`.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use qhermite::families::{family_by_name, FamilyTable, FAMILY_NAMES};
use qhermite::identities::{registry, run_identities, Identity, VerifyParams, VerifyReport};
use qhermite::json::xspoly_to_json;
use qhermite::moments::{self as engine, hankel_det, sfraction_from_series, NamedSpec};
use qhermite::oracle::c_table;

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn lookup_family(name: &str, n: usize) -> PyResult<FamilyTable> {
    family_by_name(name, n).map_err(value_error)
}

fn lookup_spec(name: &str, m: u32) -> PyResult<NamedSpec> {
    NamedSpec::parse(name, m).ok_or_else(|| {
        value_error(format!(
            "unknown spec '{name}'; valid names: {}",
            NamedSpec::NAMES.join(", ")
        ))
    })
}

/// Outcome of one identity check.
#[pyclass(get_all, frozen, module = "pyqhermite")]
pub struct Report {
    pub name: String,
    pub range: String,
    /// `"pass"`, `"fail"` or `"error"`.
    pub status: String,
    pub checks: usize,
    /// First counterexample, rendered as text.
    pub witness: Option<String>,
    pub notes: Vec<String>,
}

#[pymethods]
impl Report {
    #[getter]
    fn passed(&self) -> bool {
        self.status == "pass"
    }

    fn __repr__(&self) -> String {
        format!(
            "Report(name={:?}, status={:?}, checks={})",
            self.name, self.status, self.checks
        )
    }
}

impl From<VerifyReport> for Report {
    fn from(r: VerifyReport) -> Self {
        let status = serde_json::to_value(r.status)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default();
        let witness = r.witness.map(|w| {
            let k = w.k.map(|k| format!(", k={k}")).unwrap_or_default();
            format!(
                "{}: n={}{k}: lhs = {}, rhs = {}",
                w.check, w.n, w.lhs, w.rhs
            )
        });
        Report {
            name: r.name,
            range: r.range,
            status,
            checks: r.checks,
            witness,
            notes: r.notes,
        }
    }
}

/// Registry names accepted by `family`.
#[pyfunction]
pub fn family_names() -> Vec<&'static str> {
    FAMILY_NAMES.to_vec()
}

/// Members `p_0..=p_n` of a family as canonical text.
#[pyfunction]
pub fn family(name: &str, n: usize) -> PyResult<Vec<String>> {
    Ok(lookup_family(name, n)?
        .entries
        .iter()
        .map(ToString::to_string)
        .collect())
}

/// Members `p_0..=p_n` as LaTeX.
#[pyfunction]
pub fn family_latex(name: &str, n: usize) -> PyResult<Vec<String>> {
    Ok(lookup_family(name, n)?
        .entries
        .iter()
        .map(|p| p.to_latex())
        .collect())
}

/// Members `p_0..=p_n` as a JSON array of polynomials.
#[pyfunction]
pub fn family_json(name: &str, n: usize) -> PyResult<String> {
    let t = lookup_family(name, n)?;
    let v: Vec<_> = t.entries.iter().map(xspoly_to_json).collect();
    Ok(serde_json::Value::Array(v).to_string())
}

/// Names accepted as `spec`.
#[pyfunction]
pub fn spec_names() -> Vec<&'static str> {
    NamedSpec::NAMES.to_vec()
}

/// Moments `mu_0..=mu_n` of a named J-fraction.
#[pyfunction]
#[pyo3(signature = (spec, n, m = 0))]
pub fn moments(spec: &str, n: usize, m: u32) -> PyResult<Vec<String>> {
    let spec = lookup_spec(spec, m)?.jspec();
    Ok(engine::moments(&spec, n)
        .iter()
        .map(ToString::to_string)
        .collect())
}

/// S-fraction coefficients `c_1..=c_n` recovered from the moments.
#[pyfunction]
#[pyo3(signature = (spec, n, m = 0))]
pub fn sfraction(py: Python<'_>, spec: &str, n: usize, m: u32) -> PyResult<Vec<String>> {
    let spec = lookup_spec(spec, m)?.jspec();
    py.detach(|| {
        let mu = engine::moments(&spec, n);
        let sf = sfraction_from_series(&mu, n)?;
        Ok((1..=n).map(|k| sf.c(k).to_string()).collect())
    })
    .map_err(|e: engine::EngineError| value_error(e))
}

/// Hankel determinant `det(mu_{i+j+shift})_{i,j<n}`.
#[pyfunction]
#[pyo3(signature = (spec, n, shift = 0, m = 0))]
pub fn hankel(py: Python<'_>, spec: &str, n: usize, shift: usize, m: u32) -> PyResult<String> {
    let spec = lookup_spec(spec, m)?.jspec();
    py.detach(|| {
        let mu = engine::moments(&spec, (2 * n + shift).max(1));
        hankel_det(&mu, n, shift).map(|d| d.to_string())
    })
    .map_err(value_error)
}

/// Coefficients of `c(n,k,q)`, ascending in `q`, by enumerating matchings of `[n]`.
#[pyfunction]
pub fn crossing_polynomial(py: Python<'_>, n: usize, k: usize) -> PyResult<Vec<BigInt>> {
    let table = py.detach(|| c_table(n)).map_err(value_error)?;
    Ok(table
        .get(&k)
        .map(|v| v.numer().coeffs().to_vec())
        .unwrap_or_default())
}

/// Names of the identity checks, in reporting order.
#[pyfunction]
pub fn identity_names() -> Vec<&'static str> {
    registry().into_iter().map(|i| i.name).collect()
}

/// Runs the named checks (all when `names` is `None`); reports keep registry order.
#[pyfunction]
#[pyo3(signature = (names = None, max_n = None, seed = 1, trials = 20))]
pub fn verify(
    py: Python<'_>,
    names: Option<Vec<String>>,
    max_n: Option<usize>,
    seed: u64,
    trials: usize,
) -> PyResult<Vec<Report>> {
    let all = registry();
    let chosen: Vec<Identity> = match &names {
        None => all,
        Some(names) => {
            if let Some(bad) = names
                .iter()
                .find(|n| !all.iter().any(|i| i.name == n.as_str()))
            {
                let valid: Vec<_> = all.iter().map(|i| i.name).collect();
                return Err(value_error(format!(
                    "unknown identity '{bad}'; valid names: {}",
                    valid.join(", ")
                )));
            }
            all.into_iter()
                .filter(|i| names.iter().any(|n| n == i.name))
                .collect()
        }
    };
    let params = VerifyParams {
        max_n,
        seed,
        trials,
    };
    let reports = py.detach(|| run_identities(&chosen, &params));
    Ok(reports.into_iter().map(Report::from).collect())
}

#[pymodule]
pub fn pyqhermite(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Report>()?;
    m.add_function(wrap_pyfunction!(family_names, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(family_latex, m)?)?;
    m.add_function(wrap_pyfunction!(family_json, m)?)?;
    m.add_function(wrap_pyfunction!(spec_names, m)?)?;
    m.add_function(wrap_pyfunction!(moments, m)?)?;
    m.add_function(wrap_pyfunction!(sfraction, m)?)?;
    m.add_function(wrap_pyfunction!(hankel, m)?)?;
    m.add_function(wrap_pyfunction!(crossing_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(identity_names, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
