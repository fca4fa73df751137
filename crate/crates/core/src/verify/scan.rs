use std::collections::BTreeMap;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::LabeledGraph;
use crate::graph::Graph;

use super::{verify_with, AnalysisReport, Limits, OracleCheck, Status, TheoremId, TheoremVerdict};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremCounts {
    pub applicable: usize,
    pub pass: usize,
    pub fail: usize,
    pub undecided: usize,
    pub not_applicable: usize,
}

impl TheoremCounts {
    fn add(&mut self, status: Status) {
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Undecided => self.undecided += 1,
            Status::NotApplicable => self.not_applicable += 1,
        }
        if status != Status::NotApplicable {
            self.applicable += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub graphs: usize,
    pub parse_failures: usize,
    pub theorems: BTreeMap<TheoremId, TheoremCounts>,
}

impl Summary {
    pub fn failures(&self) -> usize {
        self.theorems.values().map(|c| c.fail).sum()
    }
}

/// What the brute-force recomputation says about a FAIL.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Triage {
    /// The oracle agrees with every fast-path value: a genuine counterexample.
    Confirmed,
    /// Some fast-path value is wrong: a library bug.
    FastPathMismatch,
    /// The graph is beyond the oracle limit.
    OracleUnavailable,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Violation {
    pub line: usize,
    pub theorem: TheoremId,
    pub conjecture: bool,
    pub triage: Triage,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
    pub verdict: TheoremVerdict,
    pub report: AnalysisReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParseFailure {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanOutcome {
    pub summary: Summary,
    pub violations: Vec<Violation>,
    pub parse_failures: Vec<ParseFailure>,
}

impl ScanOutcome {
    pub fn has_failures(&self) -> bool {
        self.summary.failures() > 0
    }

    /// One JSON object per violation, then the summary.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> io::Result<()> {
        for v in &self.violations {
            serde_json::to_writer(&mut w, v)?;
            writeln!(w)?;
        }
        serde_json::to_writer(&mut w, &self.summary)?;
        writeln!(w)
    }
}

enum Entry {
    Failed(ParseFailure),
    Done(Vec<Status>, Vec<Violation>),
}

fn run_entry(line: usize, g: &Graph, theorems: &[TheoremId], limits: &Limits) -> Result<Entry> {
    let report = AnalysisReport::compute(g, None, limits)?;
    let mut statuses = Vec::with_capacity(theorems.len());
    let mut violations = Vec::new();
    let mut oracle: Option<Option<OracleCheck>> = None;
    for &t in theorems {
        let verdict = verify_with(t, g, &report, limits)?;
        statuses.push(verdict.status);
        if verdict.status != Status::Fail {
            continue;
        }
        let check = oracle.get_or_insert_with(|| OracleCheck::run(g, &report, limits)).clone();
        let triage = match &check {
            None => Triage::OracleUnavailable,
            Some(c) if c.agrees => Triage::Confirmed,
            Some(_) => Triage::FastPathMismatch,
        };
        violations.push(Violation {
            line,
            theorem: t,
            conjecture: t.is_conjecture(),
            triage,
            oracle: check,
            verdict,
            report: report.clone(),
        });
    }
    Ok(Entry::Done(statuses, violations))
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))
}

/// Full reports for a parsed stream, in input order.
pub fn analyze_all(
    entries: &[(usize, Result<LabeledGraph>)],
    workers: usize,
    limits: &Limits,
) -> Result<Vec<(usize, Result<AnalysisReport>)>> {
    Ok(pool(workers)?.install(|| {
        entries
            .par_iter()
            .map(|(line, g)| {
                let r = g.clone().and_then(|g| AnalysisReport::compute(&g.graph, g.labels, limits));
                (*line, r)
            })
            .collect()
    }))
}

/// Runs `theorems` over every parsed catalog entry on a pool of `workers`
/// threads. The outcome depends only on the inputs, never on `workers`.
pub fn scan(
    entries: &[(usize, Result<Graph>)],
    theorems: &[TheoremId],
    workers: usize,
    limits: &Limits,
) -> Result<ScanOutcome> {
    let results: Vec<Entry> = pool(workers)?.install(|| {
        entries
            .par_iter()
            .map(|(line, g)| {
                let failed = |e: &Error| Entry::Failed(ParseFailure { line: *line, message: e.to_string() });
                match g {
                    Err(e) => failed(e),
                    Ok(g) => run_entry(*line, g, theorems, limits).unwrap_or_else(|e| failed(&e)),
                }
            })
            .collect()
    });

    let mut summary = Summary {
        graphs: 0,
        parse_failures: 0,
        theorems: theorems.iter().map(|&t| (t, TheoremCounts::default())).collect(),
    };
    let mut violations = Vec::new();
    let mut parse_failures = Vec::new();
    for entry in results {
        match entry {
            Entry::Failed(f) => parse_failures.push(f),
            Entry::Done(statuses, v) => {
                summary.graphs += 1;
                for (t, s) in theorems.iter().zip(statuses) {
                    summary.theorems.get_mut(t).unwrap().add(s);
                }
                violations.extend(v);
            }
        }
    }
    summary.parse_failures = parse_failures.len();
    Ok(ScanOutcome { summary, violations, parse_failures })
}
