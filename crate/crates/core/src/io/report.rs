//! JSON and text rendering of reports.
//!
//! JSON goes through `serde_json::Value`, whose maps are ordered by key, so
//! equal reports always render to identical bytes.

use std::fmt;

use serde::Serialize;

use crate::chordal::Chordality;
use crate::lines::{DbeReport, DbeWitness, LineSystem};
use crate::verify::{Evidence, SweepSummary, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

/// Renders `report`; JSON output has sorted keys and no trailing newline.
pub fn emit_report<R: Serialize + fmt::Display>(report: &R, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let value = serde_json::to_value(report).expect("reports serialize to JSON");
            serde_json::to_string(&value).expect("JSON values render")
        }
        ReportFormat::Text => report.to_string(),
    }
}

impl fmt::Display for LineSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "points: {}", self.n)?;
        writeln!(f, "distinct lines: {}", self.num_lines())?;
        for (i, l) in self.lines.iter().enumerate() {
            let mark = if Some(i) == self.universal { " (universal)" } else { "" };
            let pairs: Vec<String> = l.pairs.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            writeln!(f, "  {}{mark} <- {}", l.members, pairs.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Display for DbeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "points: {}", self.n)?;
        writeln!(f, "distinct lines: {}", self.num_lines)?;
        writeln!(f, "universal line: {}", if self.has_universal { "yes" } else { "no" })?;
        writeln!(f, "holds: {}", self.dbe_holds)?;
        match &self.witness {
            Some(DbeWitness::Universal(l)) => writeln!(f, "witness: line {:?} = {}", l.defined_by, l.members),
            Some(DbeWitness::DistinctLines(ls)) => {
                writeln!(f, "witness: {} distinct lines", ls.len())?;
                for l in ls {
                    writeln!(f, "  {}", l.members)?;
                }
                Ok(())
            }
            None => Ok(()),
        }
    }
}

impl fmt::Display for Chordality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chordality::Chordal(o) => writeln!(f, "chordal: yes\nperfect elimination order: {:?}", o.as_slice()),
            Chordality::NotChordal(c) => writeln!(f, "chordal: no\ninduced cycle: {c:?}"),
        }
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::Dbe(d) => write!(f, "{} distinct lines, universal: {}", d.num_lines, d.has_universal),
            Evidence::LineSystem(s) => write!(
                f,
                "{} distinct lines on {} points, no universal line",
                s.num_lines(),
                s.n
            ),
            Evidence::HypothesesChecked { count } => write!(f, "{count} hypothesis instances checked"),
            Evidence::Lemma1Violation { s, x, y, line } => {
                write!(
                    f,
                    "[{s} {x} {y}], line({s},{x}) = line({s},{y}) = {line}, {x} does not separate {s} and {y}"
                )
            }
            Evidence::Lemma2Violation {
                s,
                x,
                y,
                line_sx,
                line_xy,
            } => write!(
                f,
                "{s} simplicial, line({s},{x}) = line({s},{y}) = {line_sx}, line({x},{y}) = {line_xy}"
            ),
            Evidence::Simplicial { vertices } => write!(f, "simplicial vertices {vertices}"),
            Evidence::EdgesChecked { count } => write!(f, "{count} edges span universal lines"),
            Evidence::NonUniversalEdge { x, y, line } => write!(f, "edge {x}-{y} spans {line}"),
            Evidence::LineCount {
                n,
                num_lines,
                has_universal,
            } => {
                write!(
                    f,
                    "{num_lines} distinct lines on {n} points, universal: {has_universal}"
                )
            }
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds { "holds" } else { "FAILS" };
        writeln!(
            f,
            "{} #{} [{} {}]: {verdict}",
            self.claim,
            self.ordinal,
            self.format,
            self.instance.trim_end()
        )?;
        if let Some(w) = &self.witness {
            writeln!(f, "  witness: {w}")?;
        }
        if let Some(c) = &self.counterexample {
            writeln!(f, "  counterexample: {c}")?;
        }
        Ok(())
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "instances: {}", self.total)?;
        for c in &self.claims {
            let failed = self.failures.iter().filter(|r| r.claim == *c).count();
            writeln!(
                f,
                "  {c}: checked {}, skipped {}, failed {failed}",
                self.checked[c], self.skipped[c]
            )?;
        }
        let hist: Vec<String> = self.histogram.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        writeln!(f, "lines histogram: {}", hist.join(" "))?;
        let mins: Vec<String> = self.min_lines_by_n.iter().map(|(k, v)| format!("n={k}:{v}")).collect();
        writeln!(f, "fewest lines: {}", mins.join(" "))?;
        writeln!(f, "runtime: {:.3}s", self.runtime.as_secs_f64())?;
        for r in &self.failures {
            write!(f, "{r}")?;
        }
        Ok(())
    }
}
