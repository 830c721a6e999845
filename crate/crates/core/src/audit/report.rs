//! Report rendering: JSON lines, CSV and a LaTeX table.

use std::io::Write;

use super::{AuditReport, Record};
use crate::error::{Error, Result};

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(String::new, ToString::to_string)
}

fn params_field(r: &Record) -> String {
    r.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

pub fn render_jsonl(report: &AuditReport) -> String {
    let mut out = String::new();
    for record in &report.records {
        out.push_str(&serde_json::to_string(record).expect("records serialize"));
        out.push('\n');
    }
    out
}

pub const CSV_HEADER: [&str; 13] =
    ["id", "variant", "dist", "params", "rho", "c", "d", "order", "status", "lhs", "rhs", "difference", "reason"];

pub fn render_csv(report: &AuditReport) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::InvalidParameter(format!("csv: {e}"));
    writer.write_record(CSV_HEADER).map_err(io)?;
    for r in &report.records {
        writer
            .write_record([
                r.id.clone(),
                r.variant.to_string(),
                r.dist.clone(),
                params_field(r),
                opt(&r.rho),
                opt(&r.c),
                opt(&r.d),
                r.order.to_string(),
                r.status.to_string(),
                r.lhs.clone(),
                r.rhs.clone(),
                r.difference.clone(),
                opt(&r.reason),
            ])
            .map_err(io)?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::InvalidParameter(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '_' | '%' | '&' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(ch);
            }
            '^' => out.push_str("\\^{}"),
            '~' => out.push_str("\\~{}"),
            '\\' => out.push_str("\\textbackslash{}"),
            _ => out.push(ch),
        }
    }
    out
}

pub fn render_latex(report: &AuditReport) -> String {
    let mut out = Vec::new();
    writeln!(out, "\\begin{{tabular}}{{llllll}}").unwrap();
    writeln!(out, "\\hline").unwrap();
    writeln!(out, "id & variant & law & parameters & point & status \\\\").unwrap();
    writeln!(out, "\\hline").unwrap();
    for r in &report.records {
        let point = match (&r.rho, r.c, r.d) {
            (Some(rho), Some(c), Some(d)) => format!("rho={rho}, c={c}, d={d}"),
            _ => "q=1".to_string(),
        };
        writeln!(
            out,
            "{} & {} & {} & {} & {} & {} \\\\",
            latex_escape(&r.id),
            r.variant,
            latex_escape(&r.dist),
            latex_escape(&params_field(r)),
            latex_escape(&point),
            r.status
        )
        .unwrap();
    }
    writeln!(out, "\\hline").unwrap();
    writeln!(out, "\\end{{tabular}}").unwrap();
    String::from_utf8(out).expect("latex output is utf-8")
}
