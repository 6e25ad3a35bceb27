//! Graph input and output: graph6, sparse6, edge lists, and a small
//! isomorph-free enumerator.

mod edgelist;
mod enumerate;
mod graph6;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub use edgelist::{parse_edge_list, write_edge_list};
pub use enumerate::{canonical_form, enumerate_connected, MAX_ENUMERATE_N};
pub use graph6::{encode_graph6, encode_sparse6, parse_graph6, parse_sparse6};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("byte {byte:#04x} at position {position} is outside 63..=126")]
    BadChar { position: usize, byte: u8 },
    #[error("input ends before all bits were read")]
    TruncatedBits,
    #[error("unexpected bytes after the encoded graph")]
    TrailingData,
    #[error("vertex count beyond the supported header range")]
    OversizeN,
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("enumeration is limited to n <= {MAX_ENUMERATE_N}, got {0}; use an external graph6 file")]
    NTooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Graph6,
    Sparse6,
    EdgeList,
}

/// A graph read from a document, with where it came from.
#[derive(Debug, Clone)]
pub struct GraphRecord {
    /// 1-based line number of the encoding (of the header for edge lists).
    pub line: usize,
    pub format: Format,
    pub raw: String,
    pub graph: Graph,
}

/// Edge lists start with a `"n m"` header; graph6/sparse6 lines never
/// contain whitespace.
pub fn detect_format(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    if first.split_whitespace().count() > 1 {
        Format::EdgeList
    } else if first.starts_with(':') || first.starts_with(">>sparse6<<") {
        Format::Sparse6
    } else {
        Format::Graph6
    }
}

/// Parses a whole document. Edge-list documents hold one graph; graph6 and
/// sparse6 documents hold one graph per line, each parsed independently
/// (blank lines skipped, a line may carry its own format header).
pub fn parse_document(text: &str) -> Vec<Result<GraphRecord, (usize, IoError)>> {
    match detect_format(text) {
        Format::EdgeList => {
            let line = text.lines().position(|l| !l.trim().is_empty()).map_or(1, |i| i + 1);
            vec![parse_edge_list(text)
                .map(|graph| GraphRecord {
                    line,
                    format: Format::EdgeList,
                    raw: text.to_string(),
                    graph,
                })
                .map_err(|e| (line, e))]
        }
        _ => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                let line = i + 1;
                let raw = l.trim();
                let (format, parsed) = if raw.starts_with(':') || raw.starts_with(">>sparse6<<") {
                    (Format::Sparse6, parse_sparse6(raw.as_bytes()))
                } else {
                    (Format::Graph6, parse_graph6(raw.as_bytes()))
                };
                parsed
                    .map(|graph| GraphRecord {
                        line,
                        format,
                        raw: raw.to_string(),
                        graph,
                    })
                    .map_err(|e| (line, e))
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detection() {
        assert_eq!(detect_format("4 3\n0 1\n1 2\n2 3\n"), Format::EdgeList);
        assert_eq!(detect_format(">>graph6<<C~\n"), Format::Graph6);
        assert_eq!(detect_format("\n:Fa@x^\n"), Format::Sparse6);
    }

    #[test]
    fn mixed_document() {
        let records = parse_document("C~\n\nCh\nC 1\n:Fa@x^\n");
        assert_eq!(records.len(), 4);
        assert_eq!(records[0].as_ref().unwrap().line, 1);
        assert_eq!(records[1].as_ref().unwrap().line, 3);
        assert!(matches!(records[2], Err((4, IoError::BadChar { .. }))));
        assert_eq!(records[3].as_ref().unwrap().format, Format::Sparse6);
    }
}
