//! Input formats, instance streams and report output.

pub mod edges;
pub mod graph6;
pub mod matrix;
pub mod report;

use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::metric::MetricSpace;

pub use edges::{parse_edge_list, to_edge_list, EdgeListError};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use matrix::{parse_distance_matrix, to_matrix_text, MatrixError};
pub use report::{emit_report, ReportFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InputFormat {
    G6,
    Edges,
    Matrix,
}

impl InputFormat {
    pub fn name(self) -> &'static str {
        match self {
            InputFormat::G6 => "g6",
            InputFormat::Edges => "edges",
            InputFormat::Matrix => "matrix",
        }
    }
}

impl fmt::Display for InputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "g6" | "graph6" => Ok(InputFormat::G6),
            "edges" => Ok(InputFormat::Edges),
            "matrix" => Ok(InputFormat::Matrix),
            other => Err(format!("unknown format {other:?} (expected g6, edges or matrix)")),
        }
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("read failed: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    Metric(MetricSpace),
}

impl Instance {
    pub fn n(&self) -> usize {
        match self {
            Instance::Graph(g) => g.n(),
            Instance::Metric(m) => m.n(),
        }
    }

    /// Text form in `format`. Graphs on more than 62 vertices cannot be
    /// written as graph6, and metric spaces only have the matrix form.
    pub fn encode(&self, format: InputFormat) -> Option<String> {
        match (self, format) {
            (Instance::Graph(g), InputFormat::G6) => to_graph6(g).ok(),
            (Instance::Graph(g), InputFormat::Edges) => Some(to_edge_list(g)),
            (Instance::Graph(g), InputFormat::Matrix) => {
                crate::metric::graph_metric(g).ok().map(|m| to_matrix_text(&m))
            }
            (Instance::Metric(m), InputFormat::Matrix) => Some(to_matrix_text(m)),
            (Instance::Metric(_), _) => None,
        }
    }

    /// The most compact lossless encoding.
    pub fn canonical_form(&self) -> (InputFormat, String) {
        match self {
            Instance::Graph(g) => match to_graph6(g) {
                Ok(s) => (InputFormat::G6, s),
                Err(_) => (InputFormat::Edges, to_edge_list(g)),
            },
            Instance::Metric(m) => (InputFormat::Matrix, to_matrix_text(m)),
        }
    }

    pub fn decode(text: &str, format: InputFormat) -> Result<Self, ParseError> {
        Ok(match format {
            InputFormat::G6 => Instance::Graph(parse_graph6(text)?),
            InputFormat::Edges => Instance::Graph(parse_edge_list(text)?),
            InputFormat::Matrix => Instance::Metric(parse_distance_matrix(text)?),
        })
    }
}

/// One instance of an input stream, with the text it was read from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceRecord {
    pub ordinal: usize,
    pub payload: Instance,
    pub format: InputFormat,
    pub source_form: String,
}

impl InstanceRecord {
    /// Record for a generated instance, using its canonical encoding.
    pub fn generated(ordinal: usize, payload: Instance) -> Self {
        let (format, source_form) = payload.canonical_form();
        InstanceRecord {
            ordinal,
            payload,
            format,
            source_form,
        }
    }
}

#[derive(Debug, Error)]
#[error("instance {ordinal} (line {line}): {source}")]
pub struct StreamError {
    pub ordinal: usize,
    pub line: usize,
    #[source]
    pub source: ParseError,
}

/// Splits a text stream into instance records.
///
/// graph6 streams hold one graph per line, so a malformed line does not
/// affect the next. Edge lists and matrices are delimited by their own
/// headers, so the reader stops after the first malformed record.
pub struct InstanceReader<R> {
    input: R,
    format: InputFormat,
    ordinal: usize,
    line_no: usize,
    done: bool,
}

impl<R: BufRead> InstanceReader<R> {
    pub fn new(input: R, format: InputFormat) -> Self {
        InstanceReader {
            input,
            format,
            ordinal: 0,
            line_no: 0,
            done: false,
        }
    }

    fn fail(&mut self, line: usize, source: ParseError) -> StreamError {
        let e = StreamError {
            ordinal: self.ordinal,
            line,
            source,
        };
        self.ordinal += 1;
        e
    }

    fn next_graph6(&mut self) -> Option<Result<InstanceRecord, StreamError>> {
        let mut buf = String::new();
        loop {
            buf.clear();
            match self.input.read_line(&mut buf) {
                Ok(0) => return None,
                Ok(_) => self.line_no += 1,
                Err(e) => {
                    self.done = true;
                    let line = self.line_no + 1;
                    return Some(Err(self.fail(line, e.into())));
                }
            }
            let text = buf.trim();
            if text.is_empty() {
                continue;
            }
            let line = self.line_no;
            return Some(match parse_graph6(text) {
                Ok(g) => {
                    let rec = InstanceRecord {
                        ordinal: self.ordinal,
                        payload: Instance::Graph(g),
                        format: InputFormat::G6,
                        source_form: text.to_string(),
                    };
                    self.ordinal += 1;
                    Ok(rec)
                }
                Err(e) => Err(self.fail(line, e.into())),
            });
        }
    }

    /// Reads lines up to and including the end of the next record.
    fn next_block(&mut self) -> Option<Result<InstanceRecord, StreamError>> {
        // Pull lines lazily: the record length is only known from its first
        // significant line.
        let mut lines: Vec<(usize, String)> = Vec::new();
        let mut needed: Option<usize> = None;
        let mut significant_seen = 0;
        loop {
            if needed.is_some_and(|k| significant_seen >= k) {
                break;
            }
            let mut buf = String::new();
            match self.input.read_line(&mut buf) {
                Ok(0) => break,
                Ok(_) => self.line_no += 1,
                Err(e) => {
                    self.done = true;
                    let line = self.line_no + 1;
                    return Some(Err(self.fail(line, e.into())));
                }
            }
            if let Some(s) = edges::significant(&buf) {
                if needed.is_none() {
                    let toks = s
                        .split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|t| !t.is_empty());
                    needed = Some(match self.format {
                        InputFormat::Edges => {
                            1 + s
                                .split_whitespace()
                                .nth(1)
                                .and_then(|m| m.parse::<usize>().ok())
                                .unwrap_or(0)
                        }
                        _ => toks.count(),
                    });
                }
                significant_seen += 1;
            }
            lines.push((self.line_no, buf.trim_end_matches(['\n', '\r']).to_string()));
        }
        if significant_seen == 0 {
            return None;
        }
        let first_line = lines
            .iter()
            .find(|(_, l)| edges::significant(l).is_some())
            .map_or(0, |(n, _)| *n);
        let mut it = lines.iter().map(|(n, l)| (*n, l.as_str()));
        let parsed = match self.format {
            InputFormat::Edges => edges::read_record(&mut it)
                .map(|r| r.map(|(g, body)| (Instance::Graph(g), body.join("\n"))))
                .map_err(ParseError::from),
            _ => matrix::read_record(&mut it)
                .map(|r| r.map(|(m, body)| (Instance::Metric(m), body.join("\n"))))
                .map_err(ParseError::from),
        };
        match parsed {
            Ok(Some((payload, source_form))) => {
                let rec = InstanceRecord {
                    ordinal: self.ordinal,
                    payload,
                    format: self.format,
                    source_form,
                };
                self.ordinal += 1;
                Some(Ok(rec))
            }
            Ok(None) => None,
            Err(e) => {
                self.done = true;
                Some(Err(self.fail(first_line, e)))
            }
        }
    }
}

impl<R: BufRead> Iterator for InstanceReader<R> {
    type Item = Result<InstanceRecord, StreamError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        match self.format {
            InputFormat::G6 => self.next_graph6(),
            InputFormat::Edges | InputFormat::Matrix => self.next_block(),
        }
    }
}

pub fn read_instances<R: BufRead>(input: R, format: InputFormat) -> InstanceReader<R> {
    InstanceReader::new(input, format)
}
