//! Deterministic output formatting: fixed field order, floats always printed
//! with 17 significant digits so the byte stream round-trips f64 exactly and
//! never varies between runs.

use std::fmt::Write as _;

use dorder::solvers::SpectralSeries;
use dorder::verification::VerificationReport;
use dorder::Complex64;

/// 17 significant digits, scientific: round-trip exact for f64.
pub fn float(v: f64) -> String {
    format!("{v:.16e}")
}

fn json_bool(v: bool) -> &'static str {
    if v {
        "true"
    } else {
        "false"
    }
}

/// Escape a string for a JSON literal.
fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

pub struct RootRow {
    pub k: i32,
    pub value: Complex64,
    pub residual: f64,
}

pub fn roots_csv(rows: &[RootRow]) -> String {
    let mut out = String::from("k,re,im,char_fn_abs\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            row.k,
            float(row.value.re),
            float(row.value.im),
            float(row.residual)
        );
    }
    out
}

pub fn roots_json(beta: f64, rows: &[RootRow]) -> String {
    let mut out = String::new();
    let _ = write!(out, "{{\"beta\":{},\"roots\":[", float(beta));
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(
            out,
            "{{\"k\":{},\"re\":{},\"im\":{},\"char_fn_abs\":{}}}",
            row.k,
            float(row.value.re),
            float(row.value.im),
            float(row.residual)
        );
    }
    out.push_str("]}\n");
    out
}

pub fn eval_h_csv(value: Complex64, error: f64) -> String {
    format!(
        "re,im,abs_error\n{},{},{}\n",
        float(value.re),
        float(value.im),
        float(error)
    )
}

pub fn eval_h_json(x: f64, value: Complex64, error: f64) -> String {
    format!(
        "{{\"x\":{},\"re\":{},\"im\":{},\"abs_error\":{}}}\n",
        float(x),
        float(value.re),
        float(value.im),
        float(error)
    )
}

/// The solve result object: coefficients in ascending k, then diagnostics.
pub fn solve_json(series: &SpectralSeries) -> String {
    let diag = series.diagnostics();
    let mut out = String::new();
    let _ = write!(
        out,
        "{{\"beta\":{},\"kmax\":{},\"coefficients\":[",
        float(series.interval().beta()),
        series.k_max()
    );
    for (i, (k, c)) in series.coefficients().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(
            out,
            "{{\"k\":{},\"re\":{},\"im\":{}}}",
            k,
            float(c.re),
            float(c.im)
        );
    }
    out.push_str("],\"diagnostics\":{\"h_values\":[");
    for (i, (k, magnitude)) in diag.denominators.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{{\"k\":{},\"abs\":{}}}", k, float(*magnitude));
    }
    let _ = writeln!(
        out,
        "],\"min_denominator\":{},\"neglected_tail\":{},\"zero_projection\":{},\"data_residual\":{},\"data_sup\":{}}}}}",
        float(diag.min_denominator),
        float(diag.neglected_tail),
        json_bool(diag.zero_projection),
        float(diag.data_residual),
        float(diag.data_sup)
    );
    out
}

/// The x, Re y, Im y evaluation table.
pub fn eval_table_csv(rows: &[(f64, Complex64)]) -> String {
    let mut out = String::from("x,y_re,y_im\n");
    for (x, y) in rows {
        let _ = writeln!(out, "{},{},{}", float(*x), float(y.re), float(y.im));
    }
    out
}

pub fn report_json(beta: f64, suite: &str, report: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = write!(
        out,
        "{{\"beta\":{},\"suite\":{},\"checks\":[",
        float(beta),
        json_str(suite)
    );
    for (i, check) in report.checks.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(
            out,
            "{{\"name\":{},\"target\":{},\"achieved\":{},\"pass\":{},\"expected_fail\":{},\"details\":{}}}",
            json_str(&check.name),
            float(check.target),
            float(check.achieved),
            json_bool(check.pass),
            json_bool(check.expected_fail),
            json_str(&check.details)
        );
    }
    let _ = writeln!(
        out,
        "],\"all_expected_pass\":{}}}",
        json_bool(report.all_expected_pass())
    );
    out
}

pub fn report_csv(report: &VerificationReport) -> String {
    let mut out = String::from("name,target,achieved,pass,expected_fail\n");
    for check in &report.checks {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            check.name,
            float(check.target),
            float(check.achieved),
            check.pass,
            check.expected_fail
        );
    }
    out
}
