//! One function per subcommand. Each validates its flags, computes, and returns
//! the rendered output together with whether every check it made held.

use std::fmt::Write as _;

use qhermite::families::{family_by_name, FAMILY_NAMES};
use qhermite::identities::{registry, run_identities, VerifyParams};
use qhermite::json::{object, qscalar_to_json, xsfrac_to_json, xspoly_to_json};
use qhermite::moments::{
    hankel_det, hankel_lambda_product, moments, sfraction_from_series, NamedSpec,
};
use qhermite::oracle::{c_table, c_triangle};
use qhermite::qfield::QScalar;
use serde_json::{json, Value};
use thiserror::Error;

use crate::args::{
    CfArgs, ExportArgs, Format, HankelArgs, OracleArgs, Part, TableArgs, VerifyArgs,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("--format {format} is not supported by `{command}`; use one of: {allowed}")]
    Format {
        command: &'static str,
        format: &'static str,
        allowed: String,
    },
    #[error("--k {k} is larger than --n {n}")]
    KTooLarge { k: usize, n: usize },
    #[error(transparent)]
    Family(#[from] qhermite::families::FamilyError),
    #[error(transparent)]
    Oracle(#[from] qhermite::oracle::OracleError),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Rendered output; `ok` is false when a check made by the command failed.
pub struct Outcome {
    pub body: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, ok: true }
    }
}

fn pick(
    command: &'static str,
    requested: Option<Format>,
    allowed: &[Format],
) -> Result<Format, CliError> {
    let format = requested.unwrap_or(allowed[0]);
    if allowed.contains(&format) {
        Ok(format)
    } else {
        Err(CliError::Format {
            command,
            format: format.name(),
            allowed: allowed
                .iter()
                .map(|f| f.name())
                .collect::<Vec<_>>()
                .join(", "),
        })
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialise");
    s.push('\n');
    s
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Ascending integer coefficients of a polynomial scalar.
fn qcoeffs(v: &QScalar) -> Value {
    qscalar_to_json(v)["num"].clone()
}

pub fn table(a: &TableArgs) -> Result<Outcome, CliError> {
    let format = pick(
        "table",
        a.output.format,
        &[Format::Text, Format::Json, Format::Csv, Format::Latex],
    )?;
    let t = family_by_name(&a.family, a.n)?;
    let body = match format {
        Format::Text => t
            .entries
            .iter()
            .enumerate()
            .fold(String::new(), |mut s, (n, p)| {
                let _ = writeln!(s, "{n}: {p}");
                s
            }),
        Format::Json => pretty(&json!({
            "family": t.name,
            "n": a.n,
            "entries": t.entries.iter().map(xspoly_to_json).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            t.entries
                .iter()
                .enumerate()
                .fold("n,value\n".to_string(), |mut s, (n, p)| {
                    let _ = writeln!(s, "{n},{}", csv_cell(&p.to_string()));
                    s
                })
        }
        Format::Latex => {
            let mut s = "\\begin{align*}\n".to_string();
            let last = t.entries.len() - 1;
            for (n, p) in t.entries.iter().enumerate() {
                let end = if n == last { "" } else { " \\\\" };
                let _ = writeln!(s, "p_{{{n}}} &= {}{end}", p.to_latex());
            }
            s.push_str("\\end{align*}\n");
            s
        }
    };
    Ok(Outcome::ok(body))
}

pub fn cf(a: &CfArgs) -> Result<Outcome, CliError> {
    let format = pick("cf", a.output.format, &[Format::Text, Format::Json])?;
    let named = a.spec.named();
    let mu = moments(&named.jspec(), a.n);
    let want_mu = a.part != Part::Sfraction;
    let sf = (a.part != Part::Moments).then(|| {
        sfraction_from_series(&mu, a.n).map(|spec| (1..=a.n).map(|k| spec.c(k)).collect::<Vec<_>>())
    });
    let body = match format {
        Format::Json => {
            let mut pairs = vec![
                ("spec".to_string(), json!(named.name())),
                ("n".to_string(), json!(a.n)),
            ];
            if want_mu {
                pairs.push((
                    "moments".into(),
                    Value::Array(mu.iter().map(xspoly_to_json).collect()),
                ));
            }
            match &sf {
                Some(Ok(cs)) => pairs.push((
                    "sfraction".into(),
                    Value::Array(cs.iter().map(xsfrac_to_json).collect()),
                )),
                Some(Err(e)) => {
                    pairs.push(("sfraction".into(), Value::Null));
                    pairs.push(("sfraction_error".into(), json!(e.to_string())));
                }
                None => {}
            }
            pretty(&object(pairs))
        }
        _ => {
            let mut s = String::new();
            if want_mu {
                for (n, m) in mu.iter().enumerate() {
                    let _ = writeln!(s, "mu_{n} = {m}");
                }
            }
            match &sf {
                Some(Ok(cs)) => {
                    for (i, c) in cs.iter().enumerate() {
                        let _ = writeln!(s, "c_{} = {c}", i + 1);
                    }
                }
                Some(Err(e)) => {
                    let _ = writeln!(s, "no S-fraction: {e}");
                }
                None => {}
            }
            s
        }
    };
    Ok(Outcome::ok(body))
}

pub fn hankel(a: &HankelArgs) -> Result<Outcome, CliError> {
    let format = pick(
        "hankel",
        a.output.format,
        &[Format::Text, Format::Json, Format::Csv],
    )?;
    let named = a.spec.named();
    let spec = named.jspec();
    let top_shift = a.shift.unwrap_or(1).max(1);
    let mu = moments(&spec, 2 * a.n + top_shift);
    let det = |n, shift| hankel_det(&mu, n, shift).expect("enough moments computed");
    let rows: Vec<_> = (0..=a.n)
        .map(|n| {
            let d0 = det(n, 0);
            let residual = &d0 - &hankel_lambda_product(&spec, n);
            let extra = a.shift.map(|k| det(n, k));
            (d0, det(n, 1), residual, extra)
        })
        .collect();
    let ok = rows.iter().all(|r| r.2.is_zero());
    let extra_key = a.shift.map(|k| format!("d{k}"));
    let body = match format {
        Format::Json => {
            let rows = rows
                .iter()
                .enumerate()
                .map(|(n, (d0, d1, res, extra))| {
                    let mut pairs = vec![
                        ("n".to_string(), json!(n)),
                        ("d0".into(), xspoly_to_json(d0)),
                        ("d1".into(), xspoly_to_json(d1)),
                        ("residual".into(), xspoly_to_json(res)),
                    ];
                    if let (Some(key), Some(d)) = (&extra_key, extra) {
                        pairs.push((key.clone(), xspoly_to_json(d)));
                    }
                    object(pairs)
                })
                .collect();
            pretty(&json!({ "spec": named.name(), "n": a.n, "rows": Value::Array(rows) }))
        }
        Format::Csv => {
            let mut s = "n,d0,d1,residual".to_string();
            if let Some(key) = &extra_key {
                s.push(',');
                s.push_str(key);
            }
            s.push('\n');
            for (n, (d0, d1, res, extra)) in rows.iter().enumerate() {
                let _ = write!(
                    s,
                    "{n},{},{},{}",
                    csv_cell(&d0.to_string()),
                    csv_cell(&d1.to_string()),
                    res
                );
                if let Some(d) = extra {
                    let _ = write!(s, ",{}", csv_cell(&d.to_string()));
                }
                s.push('\n');
            }
            s
        }
        _ => {
            let mut s = String::new();
            for (n, (d0, d1, res, extra)) in rows.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "n = {n}\n  d(n,0) = {d0}\n  d(n,1) = {d1}\n  residual = {res}"
                );
                if let (Some(k), Some(d)) = (a.shift, extra) {
                    let _ = writeln!(s, "  d(n,{k}) = {d}");
                }
            }
            s
        }
    };
    Ok(Outcome { body, ok })
}

pub fn oracle(a: &OracleArgs) -> Result<Outcome, CliError> {
    let format = pick(
        "oracle",
        a.output.format,
        &[Format::Json, Format::Csv, Format::Text],
    )?;
    if let Some(k) = a.k.filter(|&k| k > a.n) {
        return Err(CliError::KTooLarge { k, n: a.n });
    }
    let table = c_table(a.n)?;
    let ks: Vec<usize> = match a.k {
        Some(k) => vec![k],
        None => (0..=a.n).collect(),
    };
    let zero = QScalar::zero();
    let at = |k: usize| table.get(&k).unwrap_or(&zero);
    let body = match format {
        Format::Json => match a.k {
            Some(k) => format!("{}\n", json!({ "c": qcoeffs(at(k)) })),
            None => {
                let rows: Vec<Value> = ks
                    .iter()
                    .map(|&k| json!({ "k": k, "c": qcoeffs(at(k)) }))
                    .collect();
                pretty(&json!({ "n": a.n, "rows": rows }))
            }
        },
        Format::Csv => {
            let width = ks
                .iter()
                .map(|&k| at(k).numer().coeffs().len())
                .max()
                .unwrap_or(0);
            let mut s = "k".to_string();
            for e in 0..width {
                let _ = write!(s, ",q^{e}");
            }
            s.push('\n');
            for &k in &ks {
                let cs = at(k).numer().coeffs();
                let _ = write!(s, "{k}");
                for e in 0..width {
                    let _ = write!(
                        s,
                        ",{}",
                        cs.get(e)
                            .map(ToString::to_string)
                            .unwrap_or_else(|| "0".into())
                    );
                }
                s.push('\n');
            }
            s
        }
        _ => ks.iter().fold(String::new(), |mut s, &k| {
            let _ = writeln!(s, "c({},{k},q) = {}", a.n, at(k));
            s
        }),
    };
    Ok(Outcome::ok(body))
}

pub fn verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let format = pick("verify", a.output.format, &[Format::Text, Format::Json])?;
    let all = registry();
    if a.list {
        let body = match format {
            Format::Json => pretty(&Value::Array(
                all.iter()
                    .map(|i| json!({ "name": i.name, "description": i.description }))
                    .collect(),
            )),
            _ => all.iter().fold(String::new(), |mut s, i| {
                let _ = writeln!(s, "{:<28} {}", i.name, i.description);
                s
            }),
        };
        return Ok(Outcome::ok(body));
    }
    let chosen: Vec<_> = all
        .into_iter()
        .filter(|i| a.all || a.identity.iter().any(|n| n == i.name))
        .collect();
    let params = VerifyParams {
        max_n: a.max_n,
        seed: a.seed,
        trials: a.trials,
    };
    let reports = run_identities(&chosen, &params);
    let passed = reports.iter().filter(|r| r.passed()).count();
    let ok = passed == reports.len();
    let body = match format {
        Format::Json => pretty(&json!({
            "seed": a.seed,
            "max_n": a.max_n,
            "trials": a.trials,
            "all_passed": ok,
            "reports": reports,
        })),
        _ => {
            let mut s = String::new();
            for r in &reports {
                let _ = writeln!(s, "{r}");
            }
            let _ = writeln!(s, "{passed}/{} identities passed", reports.len());
            s
        }
    };
    Ok(Outcome { body, ok })
}

pub fn export(a: &ExportArgs) -> Result<Outcome, CliError> {
    pick("export", a.output.format, &[Format::Json])?;
    let mut families = Vec::new();
    for name in FAMILY_NAMES {
        let t = family_by_name(name, a.n)?;
        families.push((
            name.to_string(),
            Value::Array(t.entries.iter().map(xspoly_to_json).collect()),
        ));
    }
    let specs = NamedSpec::all().into_iter().map(|s| {
        (
            s.name(),
            Value::Array(
                moments(&s.jspec(), a.n)
                    .iter()
                    .map(xspoly_to_json)
                    .collect(),
            ),
        )
    });
    let triangle: Vec<Value> = c_triangle(a.n)
        .iter()
        .map(|row| Value::Array(row.iter().map(qcoeffs).collect()))
        .collect();
    Ok(Outcome::ok(pretty(&json!({
        "n": a.n,
        "families": object(families),
        "moments": object(specs),
        "crossing_triangle": triangle,
    }))))
}
