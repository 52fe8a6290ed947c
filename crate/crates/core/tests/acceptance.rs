//! Acceptance run: one PASS/FAIL line per criterion, with wall time.
//!
//! Every comparison is exact. A criterion fails if any of its checks fails or
//! if it exceeds its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qhermite::families::{
    cont_qhermite, disc_qhermite_ii_rescaled, new_qhermite, orth_poly_sequence,
};
use qhermite::identities::{
    run_all, verify_classical_inversions, verify_continuous_family, verify_crossing_coefficients,
    verify_double_sum_numeric, verify_h_family, verify_hankel_new_h, verify_matrix_inverse,
    verify_operator_equals_moments, verify_properties, verify_qlucas_qfib_expansions,
    verify_specializations, verify_t_fraction, verify_value_at_q_minus_one,
    verify_value_at_q_minus_one_over_q, verify_w_moments, VerifyParams, VerifyReport,
};
use qhermite::moments::jspec_new_h;
use qhermite::oracle::enumerate_matchings;

struct Outcome {
    ok: bool,
    detail: String,
}

fn reports(rs: Vec<VerifyReport>) -> Outcome {
    let failed: Vec<String> = rs
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.to_string())
        .collect();
    let checks: usize = rs.iter().map(|r| r.checks).sum();
    if failed.is_empty() {
        Outcome {
            ok: true,
            detail: format!("{checks} exact checks"),
        }
    } else {
        Outcome {
            ok: false,
            detail: failed.join("\n"),
        }
    }
}

fn golden() -> Outcome {
    let strings = |v: Vec<String>| v;
    let got_h = strings(
        new_qhermite(5)
            .entries
            .iter()
            .map(ToString::to_string)
            .collect(),
    );
    let want_h = [
        "1",
        "x",
        "-s+x^2",
        "-(2+q)sx+x^3",
        "(2+q)s^2-(3+2q+q^2)sx^2+x^4",
        "(5+6q+3q^2+q^3)s^2x-(4+3q+2q^2+q^3)sx^3+x^5",
    ];
    let got_ht = strings(
        cont_qhermite(5)
            .entries
            .iter()
            .map(ToString::to_string)
            .collect(),
    );
    let want_ht = [
        "1",
        "x",
        "-s+x^2",
        "-(2+q)sx+x^3",
        "(1+q+q^2)s^2-(3+2q+q^2)sx^2+x^4",
        "(3+4q+4q^2+3q^3+q^4)s^2x-(4+3q+2q^2+q^3)sx^3+x^5",
    ];
    let got_hd = strings(
        disc_qhermite_ii_rescaled(4)
            .entries
            .iter()
            .map(ToString::to_string)
            .collect(),
    );
    let want_hd = [
        "1",
        "x",
        "-s+qx^2",
        "-(1+q+q^2)sx+q^3x^3",
        "(1+q+q^2)s^2-(q+q^2+2q^3+q^4+q^5)sx^2+q^6x^4",
    ];
    let got_p = strings(
        orth_poly_sequence(&jspec_new_h(), 3)
            .iter()
            .map(ToString::to_string)
            .collect(),
    );
    let want_p = [
        "1",
        "z-x",
        "z^2-(1+q)xz+(s+qx^2)",
        "z^3-(1+q+q^2)xz^2+((2+q)s+(q+q^2+q^3)x^2)z-((1+q+q^2)sx+q^3x^3)",
    ];
    let mut bad = vec![];
    for (label, got, want) in [
        ("H_n", got_h, &want_h[..]),
        ("H̃_n", got_ht, &want_ht[..]),
        ("h_n", got_hd, &want_hd[..]),
        ("P_n", got_p, &want_p[..]),
    ] {
        for (n, (g, w)) in got.iter().zip(want).enumerate() {
            if g != w {
                bad.push(format!("{label} n={n}: got {g}, want {w}"));
            }
        }
        if got.len() != want.len() {
            bad.push(format!(
                "{label}: {} entries, want {}",
                got.len(),
                want.len()
            ));
        }
    }
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            "22 polynomials".into()
        } else {
            bad.join("\n")
        },
    }
}

type Criterion = (&'static str, Duration, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let seed = 2024;
    let criteria: Vec<Criterion> = vec![
        (
            "first terms of H_n, H̃_n, h_n, P_n print as displayed",
            Duration::from_secs(1),
            Box::new(golden),
        ),
        (
            "operator = J-fraction moments = matching oracle, n <= 10",
            Duration::from_secs(10),
            Box::new(|| {
                let count = enumerate_matchings(10).map(|it| it.count()).unwrap_or(0);
                let mut o = reports(vec![verify_operator_equals_moments(10)]);
                if count != 9496 {
                    o.ok = false;
                    o.detail = format!("{} matchings of [10], want 9496\n{}", count, o.detail);
                } else {
                    o.detail = format!("{}; 9496 matchings at n = 10", o.detail);
                }
                o
            }),
        ),
        (
            "C·B̂ = I and x^n expansion, n <= 12",
            Duration::from_secs(5),
            Box::new(|| reports(vec![verify_matrix_inverse(12)])),
        ),
        (
            "Hankel determinants: new H (n <= 5), h family (n <= 4), continuous (n <= 5)",
            Duration::from_secs(60),
            Box::new(|| {
                reports(vec![
                    verify_hankel_new_h(5),
                    verify_h_family(4),
                    verify_continuous_family(5),
                ])
            }),
        ),
        (
            "h and T moments n <= 12, S-coefficients n <= 6, functional equation order 12",
            Duration::from_secs(30),
            Box::new(|| reports(vec![verify_h_family(12), verify_t_fraction(12)])),
        ),
        (
            "w(m) moments, m <= 3, n <= 8",
            Duration::from_secs(5),
            Box::new(|| reports(vec![verify_w_moments(3, 8)])),
        ),
        (
            "Lucas/Fibonacci inversions and expansions, special values, c(n,k,q) formulas",
            Duration::from_secs(30),
            Box::new(|| {
                reports(vec![
                    verify_classical_inversions(10),
                    verify_qlucas_qfib_expansions(8),
                    verify_value_at_q_minus_one(12),
                    verify_value_at_q_minus_one_over_q(5),
                    verify_crossing_coefficients(10),
                ])
            }),
        ),
        (
            "double sum at 20 random rational points per n, n <= 6, deterministic",
            Duration::from_secs(10),
            Box::new(move || {
                let a = verify_double_sum_numeric(6, 20, seed);
                let b = verify_double_sum_numeric(6, 20, seed);
                let same = a == b;
                let mut o = reports(vec![a]);
                if !same {
                    o.ok = false;
                    o.detail = format!("reports differ between runs\n{}", o.detail);
                }
                o
            }),
        ),
        (
            "q -> 1 classical Hermite, q = 0 Catalan, (2n-1)!! moments",
            Duration::from_secs(10),
            Box::new(|| reports(vec![verify_specializations(10)])),
        ),
        (
            "property suite, and the full verification run under 3 minutes",
            Duration::from_secs(180),
            Box::new(move || {
                let mut rs = vec![verify_properties(12)];
                rs.extend(run_all(&VerifyParams {
                    max_n: None,
                    seed,
                    trials: 20,
                }));
                reports(rs)
            }),
        ),
    ];

    let mut all_ok = true;
    for (i, (title, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let in_time = took <= *budget;
        let ok = out.ok && in_time;
        all_ok &= ok;
        let verdict = if ok { "PASS" } else { "FAIL" };
        let timing = format!("{:.3}s / {}s budget", took.as_secs_f64(), budget.as_secs());
        println!(
            "{verdict} criterion {:>2}: {title} [{timing}] {}",
            i + 1,
            out.detail.lines().next().unwrap_or("")
        );
        if !out.ok {
            for line in out.detail.lines().skip(1) {
                println!("    {line}");
            }
        }
        if !in_time {
            println!("    over time budget");
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
