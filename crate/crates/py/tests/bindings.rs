use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyModule;

fn with_module<R>(f: impl FnOnce(&Bound<'_, PyModule>) -> PyResult<R>) -> R {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "pyqhermite").unwrap();
        pyqhermite::pyqhermite(&m).unwrap();
        f(&m).unwrap()
    })
}

#[test]
fn family_text_matches_the_first_terms() {
    let got: Vec<String> =
        with_module(|m| m.getattr("family")?.call1(("new_qhermite", 4))?.extract());
    assert_eq!(got[4], "(2+q)s^2-(3+2q+q^2)sx^2+x^4");
    assert_eq!(got.len(), 5);
}

#[test]
fn crossing_polynomial_is_ascending_ints() {
    let got: Vec<i64> = with_module(|m| m.getattr("crossing_polynomial")?.call1((6, 0))?.extract());
    assert_eq!(got, vec![5, 6, 3, 1]);
}

#[test]
fn errors_become_value_error() {
    with_module(|m| {
        let py = m.py();
        let err = m
            .getattr("crossing_polynomial")?
            .call1((15, 0))
            .unwrap_err();
        assert!(err.is_instance_of::<PyValueError>(py));
        let err = m.getattr("family")?.call1(("nope", 2)).unwrap_err();
        assert!(err.is_instance_of::<PyValueError>(py));
        assert!(err.to_string().contains("new_qhermite"));
        let err = m.getattr("sfraction")?.call1(("crossing", 4)).unwrap_err();
        assert!(err.is_instance_of::<PyValueError>(py));
        let err = m.getattr("verify")?.call1((vec!["nope"],)).unwrap_err();
        assert!(err.to_string().contains("operator_equals_moments"));
        Ok(())
    });
}

#[test]
fn sfraction_and_hankel() {
    with_module(|m| {
        let cs: Vec<String> = m.getattr("sfraction")?.call1(("T", 2))?.extract()?;
        assert_eq!(cs, vec!["x", "((1-q)s)/(x)"]);
        let d: String = m.getattr("hankel")?.call1(("newH", 2))?.extract()?;
        assert_eq!(d, "-s");
        let mu: Vec<String> = m.getattr("moments")?.call1(("w", 1, 1))?.extract()?;
        assert_eq!(mu, vec!["1", "q^2"]);
        Ok(())
    });
}

#[test]
fn verify_returns_reports() {
    with_module(|m| {
        let kwargs = pyo3::types::PyDict::new(m.py());
        kwargs.set_item("max_n", 4)?;
        let reports = m.getattr("verify")?.call((), Some(&kwargs))?;
        let names: Vec<String> = m.getattr("identity_names")?.call0()?.extract()?;
        let n: usize = reports.len()?;
        assert_eq!(n, names.len());
        for (r, name) in reports.try_iter()?.zip(&names) {
            let r = r?;
            assert!(r.getattr("passed")?.extract::<bool>()?, "{}", r.repr()?);
            assert_eq!(&r.getattr("name")?.extract::<String>()?, name);
        }
        Ok(())
    });
}
