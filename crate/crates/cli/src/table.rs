//! Plain-text rendering for `--format table`.

use std::io::{self, Write};

use corona_core::verify::{AnalysisReport, ScanOutcome};
use serde_json::Value;

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// One `key value` line per report field, then a blank line.
pub fn report(out: &mut dyn Write, r: &AnalysisReport) -> io::Result<()> {
    let Value::Object(fields) = serde_json::to_value(r).map_err(io::Error::from)? else {
        unreachable!("reports serialise as objects");
    };
    let width = fields.keys().map(String::len).max().unwrap_or(0);
    for (k, v) in &fields {
        writeln!(out, "{k:<width$}  {}", compact(v))?;
    }
    writeln!(out)
}

pub fn scan(out: &mut dyn Write, s: &ScanOutcome) -> io::Result<()> {
    for v in &s.violations {
        writeln!(
            out,
            "FAIL {:<13} line {:<6} {:<18} {}",
            v.theorem.as_str(),
            v.line,
            serde_json::to_value(v.triage).map(|t| compact(&t)).unwrap_or_default(),
            v.report.graph6
        )?;
    }
    writeln!(
        out,
        "{:<13} {:>10} {:>8} {:>8} {:>10} {:>14}",
        "theorem", "applicable", "pass", "fail", "undecided", "not-applicable"
    )?;
    for (t, c) in &s.summary.theorems {
        writeln!(
            out,
            "{:<13} {:>10} {:>8} {:>8} {:>10} {:>14}",
            t.as_str(),
            c.applicable,
            c.pass,
            c.fail,
            c.undecided,
            c.not_applicable
        )?;
    }
    writeln!(out, "graphs {}  parse failures {}", s.summary.graphs, s.summary.parse_failures)
}
