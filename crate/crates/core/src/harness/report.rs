//! Per-graph verification reports and their CSV / JSON-lines encodings.

use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use crate::families::{every_cycle_has_one_branch_vertex, is_cactus, recognize_theta};
use crate::graph::Graph;
use crate::invariants::{cyclomatic_number, leaf_count, vertex_connectivity};
use crate::metric::{mixed_metric_dimension, SearchError, SearchOptions};

/// Where a graph stands relative to `mdim <= L1 + 2c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Status {
    StrictlyBelow,
    Equality,
    #[serde(rename = "VIOLATION")]
    Violation,
    SkippedCycle,
    SkippedDisconnected,
    /// Fewer than two vertices; the dimension is not defined.
    SkippedTrivial,
    Timeout,
}

impl Status {
    pub const ALL: [Status; 7] = [
        Status::StrictlyBelow,
        Status::Equality,
        Status::Violation,
        Status::SkippedCycle,
        Status::SkippedDisconnected,
        Status::SkippedTrivial,
        Status::Timeout,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Status::StrictlyBelow => "StrictlyBelow",
            Status::Equality => "Equality",
            Status::Violation => "VIOLATION",
            Status::SkippedCycle => "SkippedCycle",
            Status::SkippedDisconnected => "SkippedDisconnected",
            Status::SkippedTrivial => "SkippedTrivial",
            Status::Timeout => "Timeout",
        }
    }
}

/// Membership in the two families for which equality is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EqualityClassification {
    pub is_equality: bool,
    /// A cactus (trees included, cycles excluded) whose every cycle has
    /// exactly one vertex of degree at least three.
    pub is_qualifying_cactus: bool,
    pub is_balanced_theta: bool,
    /// Equality holds exactly when one of the two families applies.
    pub family_consistent: bool,
}

impl EqualityClassification {
    pub fn new(g: &Graph, is_equality: bool) -> Self {
        let is_qualifying_cactus = is_cactus(g) && every_cycle_has_one_branch_vertex(g) && !is_cycle(g);
        let is_balanced_theta = recognize_theta(g).is_some_and(|(spec, _, _)| spec.is_balanced());
        EqualityClassification {
            is_equality,
            is_qualifying_cactus,
            is_balanced_theta,
            family_consistent: is_equality == (is_qualifying_cactus || is_balanced_theta),
        }
    }
}

/// Connected and 2-regular.
pub fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub n: usize,
    pub m: usize,
    #[serde(rename = "L1")]
    pub l1: usize,
    pub c: usize,
    pub kappa: usize,
    pub mdim: Option<usize>,
    pub bound: usize,
    pub status: Status,
    pub witness: Option<Vec<usize>>,
    pub ms: f64,
    pub classification: Option<EqualityClassification>,
}

impl VerificationReport {
    /// Evaluates one graph against the bound and classifies equality cases.
    pub fn evaluate(id: impl Into<String>, g: &Graph, options: SearchOptions) -> Self {
        let started = Instant::now();
        let connected = g.is_connected();
        let l1 = leaf_count(g);
        let c = if connected { cyclomatic_number(g) } else { 0 };
        let mut report = VerificationReport {
            id: id.into(),
            n: g.n(),
            m: g.m(),
            l1,
            c,
            kappa: vertex_connectivity(g),
            mdim: None,
            bound: l1 + 2 * c,
            status: Status::SkippedTrivial,
            witness: None,
            ms: 0.0,
            classification: None,
        };
        report.status = if !connected {
            Status::SkippedDisconnected
        } else if g.n() < 2 {
            Status::SkippedTrivial
        } else if is_cycle(g) {
            Status::SkippedCycle
        } else {
            match mixed_metric_dimension(g, options) {
                Ok(w) => {
                    let status = match w.dimension.cmp(&report.bound) {
                        std::cmp::Ordering::Less => Status::StrictlyBelow,
                        std::cmp::Ordering::Equal => Status::Equality,
                        std::cmp::Ordering::Greater => Status::Violation,
                    };
                    report.classification = Some(EqualityClassification::new(g, status == Status::Equality));
                    report.mdim = Some(w.dimension);
                    report.witness = Some(w.witness);
                    status
                }
                Err(SearchError::BudgetExceeded(_)) => Status::Timeout,
                Err(SearchError::Disconnected) => Status::SkippedDisconnected,
                Err(SearchError::TooSmall(_)) => Status::SkippedTrivial,
            }
        };
        report.ms = started.elapsed().as_secs_f64() * 1e3;
        report
    }

    /// A finding worth printing in full: a bound violation, or an equality
    /// case outside the two known families (or a known-family graph below it).
    pub fn is_finding(&self) -> bool {
        self.status == Status::Violation || self.classification.is_some_and(|c| !c.family_consistent)
    }
}

/// Output encodings for report streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

pub const CSV_HEADER: &str = "id,n,m,L1,c,kappa,mdim,bound,status,witness,ms";

#[derive(Serialize)]
struct CsvRow<'a> {
    id: &'a str,
    n: usize,
    m: usize,
    #[serde(rename = "L1")]
    l1: usize,
    c: usize,
    kappa: usize,
    mdim: Option<usize>,
    bound: usize,
    status: &'static str,
    witness: String,
    ms: String,
}

/// Streams reports in one of the supported encodings.
pub enum ReportWriter<W: Write> {
    Csv(Box<csv::Writer<W>>),
    Json(W),
}

impl<W: Write> ReportWriter<W> {
    /// Creates the writer; CSV emits its header row immediately.
    pub fn new(format: ReportFormat, out: W) -> std::io::Result<Self> {
        Ok(match format {
            ReportFormat::Csv => {
                let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
                w.write_record(CSV_HEADER.split(','))?;
                ReportWriter::Csv(Box::new(w))
            }
            ReportFormat::Json => ReportWriter::Json(out),
        })
    }

    pub fn write(&mut self, report: &VerificationReport) -> std::io::Result<()> {
        match self {
            ReportWriter::Csv(w) => {
                let witness = report
                    .witness
                    .as_ref()
                    .map(|ws| ws.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
                    .unwrap_or_default();
                w.serialize(CsvRow {
                    id: &report.id,
                    n: report.n,
                    m: report.m,
                    l1: report.l1,
                    c: report.c,
                    kappa: report.kappa,
                    mdim: report.mdim,
                    bound: report.bound,
                    status: report.status.label(),
                    witness,
                    ms: format!("{:.3}", report.ms),
                })?;
                Ok(())
            }
            ReportWriter::Json(w) => {
                serde_json::to_writer(&mut *w, report)?;
                writeln!(w)
            }
        }
    }

    pub fn finish(self) -> std::io::Result<()> {
        match self {
            ReportWriter::Csv(mut w) => w.flush(),
            ReportWriter::Json(mut w) => w.flush(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path, theta, ThetaSpec};

    #[test]
    fn path_is_an_equality_case() {
        let r = VerificationReport::evaluate("p5", &path(5).unwrap(), SearchOptions::pruned());
        assert_eq!((r.l1, r.c, r.mdim, r.status), (2, 0, Some(2), Status::Equality));
        let class = r.classification.unwrap();
        assert!(class.is_qualifying_cactus && class.family_consistent);
        assert!(!r.is_finding());
    }

    #[test]
    fn cycles_and_disconnected_are_skipped() {
        let r = VerificationReport::evaluate("c5", &cycle(5).unwrap(), SearchOptions::pruned());
        assert_eq!(r.status, Status::SkippedCycle);
        assert_eq!(r.mdim, None);
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let r = VerificationReport::evaluate("x", &g, SearchOptions::pruned());
        assert_eq!(r.status, Status::SkippedDisconnected);
        let r = VerificationReport::evaluate("k1", &path(1).unwrap(), SearchOptions::pruned());
        assert_eq!(r.status, Status::SkippedTrivial);
    }

    #[test]
    fn balanced_theta_equality() {
        let g = theta(ThetaSpec::new(2, 2, 2).unwrap()).unwrap().graph;
        let r = VerificationReport::evaluate("t", &g, SearchOptions::pruned());
        assert_eq!((r.mdim, r.bound, r.status), (Some(4), 4, Status::Equality));
        assert!(r.classification.unwrap().is_balanced_theta);
    }

    #[test]
    fn timeout_status() {
        let g = crate::families::complete(6).unwrap();
        let r = VerificationReport::evaluate("k6", &g, SearchOptions::pruned().with_max_nodes(Some(5)));
        assert_eq!(r.status, Status::Timeout);
    }

    #[test]
    fn encodings() {
        let r = VerificationReport::evaluate("p5", &path(5).unwrap(), SearchOptions::pruned());
        let mut buf = Vec::new();
        let mut w = ReportWriter::new(ReportFormat::Csv, &mut buf).unwrap();
        w.write(&r).unwrap();
        w.finish().unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        assert!(lines.next().unwrap().starts_with("p5,5,4,2,0,1,2,2,Equality,0 4,"));

        let mut buf = Vec::new();
        let mut w = ReportWriter::new(ReportFormat::Json, &mut buf).unwrap();
        w.write(&r).unwrap();
        w.finish().unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["L1"], 2);
        assert_eq!(v["c"], 0);
        assert_eq!(v["mdim"], 2);
        assert_eq!(v["status"], "Equality");
    }
}
