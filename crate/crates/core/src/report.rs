//! Deterministic artifact emitters: CSV tables, two-column plot series, and
//! hand-rolled JSON with stable key order.
//!
//! Floating-point values are printed at 12 significant digits through one
//! shared formatter, so identical inputs always produce byte-identical
//! files; golden-file tests depend on that.

use crate::bounds::{BoundCertificate, KappaResult};
use crate::util::format_sig;
use crate::verify::{CheckReport, PainleveReport, SharpnessRow};

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// A float as a JSON token: 12 significant digits, `null` when non-finite
/// (JSON has no representation for infinities or NaN).
pub fn json_number(x: f64) -> String {
    if x.is_finite() {
        format_sig(x)
    } else {
        "null".to_string()
    }
}

fn json_opt(x: Option<f64>) -> String {
    match x {
        Some(v) => json_number(v),
        None => "null".to_string(),
    }
}

/// CSV table of a grid check: one row per radius.
pub fn check_report_csv(report: &CheckReport) -> String {
    let mut out = String::from("r,lhs,rhs,margin\n");
    for i in 0..report.grid.len() {
        out.push_str(&format!(
            "{},{},{},{}\n",
            format_sig(report.grid[i]),
            format_sig(report.lhs[i]),
            format_sig(report.rhs[i]),
            format_sig(report.margins[i]),
        ));
    }
    out
}

/// Two-column plot series of a grid check: radius against margin.
pub fn check_report_dat(report: &CheckReport) -> String {
    let mut out = String::from("# r margin\n");
    for (r, m) in report.grid.iter().zip(report.margins.iter()) {
        out.push_str(&format!("{} {}\n", format_sig(*r), format_sig(*m)));
    }
    out
}

/// JSON summary of a grid check.
pub fn check_report_json(report: &CheckReport) -> String {
    let violations: Vec<String> = report.violations.iter().map(|v| json_number(*v)).collect();
    format!(
        "{{\"name\": \"{}\", \"points\": {}, \"min_margin\": {}, \"violations\": [{}], \"onset_radius\": {}, \"slope_fit\": {}, \"tolerance_used\": {}, \"holds\": {}}}",
        json_escape(&report.name),
        report.grid.len(),
        json_number(report.min_margin),
        violations.join(", "),
        json_opt(report.onset_radius),
        json_opt(report.slope_fit),
        json_number(report.tolerance_used),
        report.holds(),
    )
}

/// JSON array of grid-check summaries.
pub fn check_reports_json(reports: &[CheckReport]) -> String {
    let rows: Vec<String> = reports.iter().map(check_report_json).collect();
    format!("[{}]", rows.join(",\n "))
}

/// CSV of characteristic-function values: r, m(r), N(r), T(r), and the
/// quadrature error of the proximity integral (counting is exact).
pub fn characteristic_csv(rows: &[(f64, f64, f64, f64, f64)]) -> String {
    let mut out = String::from("r,m,n,t,quad_error\n");
    for (r, m, n, t, err) in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            format_sig(*r),
            format_sig(*m),
            format_sig(*n),
            format_sig(*t),
            format_sig(*err),
        ));
    }
    out
}

/// Itemized certificate as JSON with stable key order.
pub fn certificate_json(cert: &BoundCertificate) -> String {
    let mut inputs = format!(
        "\"r\": {}, \"rho\": {}, \"T_rho\": {}",
        json_number(cert.r),
        json_number(cert.rho),
        json_number(cert.t_rho),
    );
    if let Some(sigma) = cert.sigma {
        inputs.push_str(&format!(", \"sigma\": {}", json_number(sigma)));
    }
    let items: Vec<String> = cert
        .items
        .iter()
        .map(|item| {
            format!(
                "{{\"label\": \"{}\", \"value\": {}}}",
                json_escape(&item.label),
                json_number(item.value)
            )
        })
        .collect();
    format!(
        "{{\"kind\": \"{}\", \"mode\": \"{}\", \"inputs\": {{{}}}, \"items\": [{}], \"total\": {}}}",
        cert.kind.as_str(),
        cert.mode.as_str(),
        inputs,
        items.join(", "),
        json_number(cert.total),
    )
}

/// JSON array of certificates, one per grid radius.
pub fn certificates_json(certs: &[BoundCertificate]) -> String {
    let rows: Vec<String> = certs.iter().map(certificate_json).collect();
    format!("[{}]", rows.join(",\n "))
}

/// The kappa optimization outcome as JSON.
pub fn kappa_json(result: &KappaResult) -> String {
    format!(
        "{{\"alpha\": {}, \"beta\": {}, \"epsilon\": {}, \"objective\": {}}}",
        json_number(result.alpha),
        json_number(result.beta),
        json_number(result.epsilon),
        json_number(result.objective),
    )
}

/// A Painlevé slope analysis as JSON.
pub fn painleve_json(report: &PainleveReport) -> String {
    format!(
        "{{\"name\": \"{}\", \"n\": {}, \"p\": \"{}\", \"q\": \"{}\", \"sigma\": {}, \"slope\": {}, \"target\": {}, \"matches\": {}, \"legacy_slope\": {}, \"weight_sum_q\": {}, \"di_plus_sum\": {}}}",
        json_escape(&report.name),
        report.n,
        json_escape(&report.p_text),
        json_escape(&report.q_text),
        json_number(report.sigma),
        json_number(report.erratum.slope),
        json_number(report.target),
        report.matches,
        json_number(report.legacy.slope),
        report.weight_sum_q,
        report.di_plus_sum,
    )
}

/// CSV of sharpness rows.
pub fn sharpness_csv(rows: &[SharpnessRow]) -> String {
    let mut out = String::from("n,r,lhs,main_term,gap,target\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.n,
            format_sig(row.r),
            format_sig(row.lhs),
            format_sig(row.main_term),
            format_sig(row.gap),
            format_sig(row.target),
        ));
    }
    out
}
