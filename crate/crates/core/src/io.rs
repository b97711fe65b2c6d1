//! Text formats for hypergraphs, graphs, histograms and fit reports, plus
//! ingestion of labelled hyperedge lists (one record of author names per line).
//!
//! Hypergraph files hold one hyperedge per line as space-separated vertex ids
//! in arrival order. Lines starting with `#` are comments. Vertex ids must
//! cover `0..=max` without gaps.

use std::collections::HashMap;
use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::analysis::{DegreeHistogram, FitReport, HistogramError, ObservedGraph};
use crate::hypergraph::{Hypergraph, VertexId};

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: invalid vertex id {token:?}")]
    BadToken { line: usize, token: String },
    #[error("line {line}: empty hyperedge")]
    EmptyEdge { line: usize },
    #[error("vertex id {missing} never appears but larger ids do (ids must be contiguous from 0)")]
    IdGap { missing: VertexId },
    #[error("line {line}: record has no labels")]
    EmptyRecord { line: usize },
    #[error("input contains no records")]
    EmptyInput,
    #[error("line {line}: expected header {expected:?}")]
    BadHeader { line: usize, expected: &'static str },
    #[error("line {line}: malformed row {row:?}")]
    BadRow { line: usize, row: String },
    #[error(transparent)]
    Histogram(#[from] HistogramError),
}

pub const HISTOGRAM_HEADER: &str = "degree,count";
pub const CCDF_HEADER: &str = "degree,ccdf";

pub fn write_hypergraph<W: Write>(h: &Hypergraph, mut out: W) -> io::Result<()> {
    let mut line = String::new();
    for edge in h.edges() {
        write_ids(&mut line, edge);
        out.write_all(line.as_bytes())?;
    }
    out.flush()
}

fn write_ids(line: &mut String, ids: &[VertexId]) {
    use std::fmt::Write as _;
    line.clear();
    for (i, v) in ids.iter().enumerate() {
        if i > 0 {
            line.push(' ');
        }
        let _ = write!(line, "{v}");
    }
    line.push('\n');
}

pub fn read_hypergraph<R: BufRead>(input: R) -> Result<Hypergraph, IoError> {
    let mut edges: Vec<Vec<VertexId>> = Vec::new();
    let mut max_id: Option<VertexId> = None;
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        if line.trim_start().starts_with('#') {
            continue;
        }
        let mut edge = Vec::new();
        for token in line.split_whitespace() {
            let v: VertexId = token.parse().map_err(|_| IoError::BadToken {
                line: lineno,
                token: token.to_string(),
            })?;
            max_id = max_id.max(Some(v));
            edge.push(v);
        }
        if edge.is_empty() {
            return Err(IoError::EmptyEdge { line: lineno });
        }
        edge.sort_unstable();
        edges.push(edge);
    }

    let num_vertices = max_id.map_or(0, |m| m as usize + 1);
    let mut seen = vec![false; num_vertices];
    for &v in edges.iter().flatten() {
        seen[v as usize] = true;
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(IoError::IdGap {
            missing: missing as VertexId,
        });
    }

    let mut h = Hypergraph::empty();
    for _ in 0..num_vertices {
        h.allocate_vertex();
    }
    for edge in &edges {
        h.push_edge_unchecked(edge);
    }
    Ok(h)
}

/// Writes the graph as a 2-uniform hypergraph file, one `a b` pair per line.
pub fn write_graph<W: Write>(g: &ObservedGraph, mut out: W) -> io::Result<()> {
    let mut line = String::new();
    for &(a, b) in g.edges() {
        write_ids(&mut line, &[a, b]);
        out.write_all(line.as_bytes())?;
    }
    out.flush()
}

/// Dense ids for string labels, assigned in first-seen order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexLabelMap {
    labels: Vec<String>,
    ids: HashMap<String, VertexId>,
}

impl VertexLabelMap {
    pub fn id_or_insert(&mut self, label: &str) -> (VertexId, bool) {
        if let Some(&id) = self.ids.get(label) {
            return (id, false);
        }
        let id = self.labels.len() as VertexId;
        self.labels.push(label.to_string());
        self.ids.insert(label.to_string(), id);
        (id, true)
    }

    pub fn id(&self, label: &str) -> Option<VertexId> {
        self.ids.get(label).copied()
    }

    pub fn label(&self, id: VertexId) -> Option<&str> {
        self.labels.get(id as usize).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// One hyperedge per record. Labels are trimmed and case-sensitive; empty
/// labels between delimiters are skipped. A repeated label within a record
/// becomes a repeated member.
pub fn ingest_labeled<R: BufRead>(input: R, delimiter: char) -> Result<(Hypergraph, VertexLabelMap), IoError> {
    let mut labels = VertexLabelMap::default();
    let mut h = Hypergraph::empty();
    let mut edge = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        edge.clear();
        for label in line.split(delimiter).map(str::trim).filter(|l| !l.is_empty()) {
            let (id, fresh) = labels.id_or_insert(label);
            if fresh {
                h.allocate_vertex();
            }
            edge.push(id);
        }
        if edge.is_empty() {
            return Err(IoError::EmptyRecord { line: idx + 1 });
        }
        edge.sort_unstable();
        h.push_edge_unchecked(&edge);
    }
    if h.num_edges() == 0 {
        return Err(IoError::EmptyInput);
    }
    Ok((h, labels))
}

/// One label per line, in id order.
pub fn write_labels<W: Write>(labels: &VertexLabelMap, mut out: W) -> io::Result<()> {
    for label in labels.labels() {
        writeln!(out, "{label}")?;
    }
    out.flush()
}

pub fn write_histogram_csv<W: Write>(hist: &DegreeHistogram, mut out: W) -> io::Result<()> {
    writeln!(out, "{HISTOGRAM_HEADER}")?;
    for (k, c) in hist.counts() {
        writeln!(out, "{k},{c}")?;
    }
    out.flush()
}

pub fn read_histogram_csv<R: BufRead>(input: R) -> Result<DegreeHistogram, IoError> {
    let mut lines = input.lines().enumerate();
    let header = lines.next().map(|(_, l)| l).transpose()?;
    if header.as_deref().map(str::trim_end) != Some(HISTOGRAM_HEADER) {
        return Err(IoError::BadHeader {
            line: 1,
            expected: HISTOGRAM_HEADER,
        });
    }
    let mut pairs = Vec::new();
    for (idx, line) in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let bad = || IoError::BadRow {
            line: idx + 1,
            row: line.clone(),
        };
        let (k, c) = line.trim_end().split_once(',').ok_or_else(bad)?;
        let k: u64 = k.parse().map_err(|_| bad())?;
        let c: u64 = c.parse().map_err(|_| bad())?;
        pairs.push((k, c));
    }
    Ok(DegreeHistogram::from_counts(pairs)?)
}

pub fn write_ccdf_csv<W: Write>(points: &[(u64, f64)], mut out: W) -> io::Result<()> {
    writeln!(out, "{CCDF_HEADER}")?;
    for (k, p) in points {
        writeln!(out, "{k},{p}")?;
    }
    out.flush()
}

/// Flat `key=value` block; reals carry six significant digits.
pub fn write_fit_report<W: Write>(report: &FitReport, mut out: W) -> io::Result<()> {
    writeln!(out, "beta_hat={}", significant(report.beta_hat, 6))?;
    writeln!(out, "k_min={}", report.k_min)?;
    writeln!(out, "n_tail={}", report.n_tail)?;
    writeln!(out, "ks_stat={}", significant(report.ks_stat, 6))?;
    out.flush()
}

/// Fixed-point rendering of `x` with `digits` significant digits.
pub fn significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{:.*}", digits - 1, x);
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let rendered = format!("{x:.decimals$}");
    let shown = rendered
        .chars()
        .filter(char::is_ascii_digit)
        .skip_while(|&c| c == '0')
        .count();
    if shown > digits && decimals > 0 {
        // rounding carried into a new leading digit
        format!("{x:.prec$}", prec = decimals - 1)
    } else {
        rendered
    }
}
