//! JSON, CSV and Markdown reports of a [`Classification`].

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classifier::Classification;
use crate::error::ReportError;
use crate::geoment::Reality;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            other => Err(ReportError::UnknownFormat(other.to_string())),
        }
    }
}

/// One class as serialized. Graph classes have no table or row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub paper_table: Option<String>,
    pub paper_row: Option<u32>,
    pub rep_edges: String,
    pub rank: u32,
    pub m: u32,
    pub orbit_size: u32,
    pub ge: f64,
    pub ge_closed_form: Option<f64>,
    pub be2: [f64; 3],
    pub be1: [f64; 4],
    pub pattern: String,
    pub reality: Reality,
    pub restarts_hit: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub rank4: u32,
    pub rank3: u32,
    pub graphs: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub classes: Vec<ClassEntry>,
    pub totals: Totals,
    pub seed: u64,
}

impl Report {
    /// Hypergraph classes in row order, then graph classes in label order.
    pub fn from_classification(c: &Classification) -> Report {
        let mut classes: Vec<ClassEntry> = c
            .classes
            .iter()
            .map(|r| ClassEntry {
                paper_table: r.paper_table().map(str::to_string),
                paper_row: r.paper_row.map(|row| row.no as u32),
                rep_edges: r.display.to_string(),
                rank: r.orbit.rank,
                m: r.m(),
                orbit_size: r.orbit.size,
                ge: r.signature.ge,
                ge_closed_form: r.closed_form.map(|f| f.value),
                be2: r.signature.be2,
                be1: r.signature.be1,
                pattern: r.pattern.partition.label().to_string(),
                reality: r.pattern.reality,
                restarts_hit: r.restarts_hit,
            })
            .collect();
        classes.extend(c.graphs.iter().map(|g| ClassEntry {
            paper_table: None,
            paper_row: None,
            rep_edges: g.display.to_string(),
            rank: g.orbit.rank,
            m: g.m(),
            orbit_size: g.orbit.size,
            ge: g.signature.ge,
            ge_closed_form: None,
            be2: g.signature.be2,
            be1: g.signature.be1,
            pattern: g.pattern.partition.label().to_string(),
            reality: g.pattern.reality,
            restarts_hit: g.restarts_hit,
        }));
        Report {
            classes,
            totals: Totals { rank4: c.census.rank4(), rank3: c.census.rank3(), graphs: c.census.graphs() },
            seed: c.seed,
        }
    }
}

/// Flat CSV row; entropy lists are space separated.
#[derive(Serialize)]
struct CsvRow<'a> {
    paper_table: Option<&'a str>,
    paper_row: Option<u32>,
    rep_edges: &'a str,
    rank: u32,
    m: u32,
    orbit_size: u32,
    ge: f64,
    ge_closed_form: Option<f64>,
    be2: String,
    be1: String,
    pattern: &'a str,
    reality: Reality,
    restarts_hit: usize,
}

fn join(values: &[f64]) -> String {
    values.iter().map(f64::to_string).collect::<Vec<_>>().join(" ")
}

fn fixed(values: &[f64]) -> String {
    values.iter().map(|v| format!("{v:.4}")).collect::<Vec<_>>().join(", ")
}

pub fn emit_report(c: &Classification, format: ReportFormat) -> Result<String, ReportError> {
    let report = Report::from_classification(c);
    match format {
        ReportFormat::Json => {
            let mut out = serde_json::to_string_pretty(&report)?;
            out.push('\n');
            Ok(out)
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for e in &report.classes {
                w.serialize(CsvRow {
                    paper_table: e.paper_table.as_deref(),
                    paper_row: e.paper_row,
                    rep_edges: &e.rep_edges,
                    rank: e.rank,
                    m: e.m,
                    orbit_size: e.orbit_size,
                    ge: e.ge,
                    ge_closed_form: e.ge_closed_form,
                    be2: join(&e.be2),
                    be1: join(&e.be1),
                    pattern: &e.pattern,
                    reality: e.reality,
                    restarts_hit: e.restarts_hit,
                })?;
            }
            let bytes = w.into_inner().map_err(|e| ReportError::Csv(e.into_error().into()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        ReportFormat::Markdown => Ok(markdown(&report)),
    }
}

fn markdown(report: &Report) -> String {
    let mut out = String::new();
    for (table, title) in [("I", "Rank-4 classes"), ("III", "Rank-3 classes")] {
        let _ = writeln!(out, "## {title} (table {table})\n");
        out.push_str("| No. | m | GE | BE2 | BE1 | closed form | delta | D | R/C | edges | orbit | hits |\n");
        out.push_str("|---|---|---|---|---|---|---|---|---|---|---|---|\n");
        for e in report.classes.iter().filter(|e| e.paper_table.as_deref() == Some(table)) {
            let (cf, delta) = match e.ge_closed_form {
                Some(v) => (format!("{v:.6}"), format!("{:.1e}", (e.ge - v).abs())),
                None => (String::new(), String::new()),
            };
            let _ = writeln!(
                out,
                "| {} | {} | {:.4} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                e.paper_row.unwrap_or(0),
                e.m,
                e.ge,
                fixed(&e.be2),
                fixed(&e.be1),
                cf,
                delta,
                e.pattern,
                e.reality,
                e.rep_edges,
                e.orbit_size,
                e.restarts_hit
            );
        }
        out.push('\n');
    }
    out.push_str("## Graph-state classes\n\n");
    out.push_str("| class | edges | rank | orbit | GE | BE2 | BE1 |\n|---|---|---|---|---|---|---|\n");
    let graphs = report.classes.iter().filter(|e| e.paper_table.is_none());
    for (k, e) in graphs.enumerate() {
        let edges = if e.rep_edges.is_empty() { "(none)" } else { &e.rep_edges };
        let _ = writeln!(
            out,
            "| G{} | {} | {} | {} | {:.4} | {} | {} |",
            k + 1,
            edges,
            e.rank,
            e.orbit_size,
            e.ge,
            fixed(&e.be2),
            fixed(&e.be1)
        );
    }
    let t = report.totals;
    let _ = writeln!(
        out,
        "\nTotals: rank 4 = {}, rank 3 = {}, graphs = {}. Seed {}.",
        t.rank4, t.rank3, t.graphs, report.seed
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_parse() {
        assert_eq!("json".parse::<ReportFormat>().unwrap(), ReportFormat::Json);
        assert_eq!("md".parse::<ReportFormat>().unwrap(), ReportFormat::Markdown);
        assert!(matches!("xml".parse::<ReportFormat>(), Err(ReportError::UnknownFormat(_))));
    }

    #[test]
    fn entry_round_trips_through_json() {
        let e = ClassEntry {
            paper_table: Some("III".into()),
            paper_row: Some(12),
            rep_edges: "123".into(),
            rank: 3,
            m: 4,
            orbit_size: 512,
            ge: 0.5647,
            ge_closed_form: Some(0.56470),
            be2: [0.8113; 3],
            be1: [0.8113, 0.8113, 0.8113, 0.0],
            pattern: "1,3".into(),
            reality: Reality::Real,
            restarts_hit: 64,
        };
        let text = serde_json::to_string(&e).unwrap();
        assert!(text.contains("\"reality\":\"R\""));
        assert_eq!(serde_json::from_str::<ClassEntry>(&text).unwrap(), e);
    }
}
