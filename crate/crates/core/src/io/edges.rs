//! Edge-list text: a header line `n m`, then `m` lines `u v`.
//!
//! Blank lines and `#` comments are ignored; duplicate edges collapse.

use std::fmt::Write;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: expected header \"n m\"")]
    BadHeader { line: usize },
    #[error("line {line}: expected edge \"u v\"")]
    BadEdge { line: usize },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    IndexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("expected {expected} edges, input ended after {found}")]
    MissingEdges { expected: usize, found: usize },
    #[error("line {line}: unexpected content after the last edge")]
    TrailingData { line: usize },
    #[error("a graph needs at least one vertex")]
    NoVertices,
}

/// Content of a line with any `#` comment removed, or `None` if nothing is left.
pub(crate) fn significant(raw: &str) -> Option<&str> {
    let s = raw.split('#').next().unwrap_or("").trim();
    (!s.is_empty()).then_some(s)
}

fn two_numbers(s: &str) -> Option<(usize, usize)> {
    let mut it = s.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Some((a, b)),
        _ => None,
    }
}

/// Reads one edge-list record from numbered lines, returning the graph and
/// the significant lines it consumed. `Ok(None)` at end of input.
pub(crate) fn read_record<'a, I>(lines: &mut I) -> Result<Option<(Graph, Vec<&'a str>)>, EdgeListError>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let mut body = lines.filter_map(|(no, raw)| significant(raw).map(|s| (no, s)));
    let Some((hline, header)) = body.next() else {
        return Ok(None);
    };
    let (n, m) = two_numbers(header).ok_or(EdgeListError::BadHeader { line: hline })?;
    if n == 0 {
        return Err(EdgeListError::NoVertices);
    }
    let mut g = Graph::empty(n);
    let mut consumed = vec![header];
    for found in 0..m {
        let (line, s) = body.next().ok_or(EdgeListError::MissingEdges { expected: m, found })?;
        let (u, v) = two_numbers(s).ok_or(EdgeListError::BadEdge { line })?;
        g.add_edge(u, v).map_err(|e| match e {
            GraphError::SelfLoop(vertex) => EdgeListError::SelfLoop { line, vertex },
            GraphError::VertexOutOfRange { vertex, n } => EdgeListError::IndexOutOfRange { line, vertex, n },
            _ => EdgeListError::BadEdge { line },
        })?;
        consumed.push(s);
    }
    Ok(Some((g, consumed)))
}

/// Parses text holding exactly one edge list. Line numbers in errors are 1-based.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (g, _) = read_record(&mut lines)?.ok_or(EdgeListError::BadHeader { line: 1 })?;
    if let Some((line, _)) = lines.find(|(_, l)| significant(l).is_some()) {
        return Err(EdgeListError::TrailingData { line });
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").expect("writing to a String");
    }
    s
}
