//! graph6 encoding, short form only (`n <= 62`).
//!
//! The size is one byte `n + 63`; the upper triangle follows column by
//! column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed big-endian into
//! 6-bit groups, each offset by 63 and the last one zero-padded.

use thiserror::Error;

use crate::graph::Graph;

pub const MAX_VERTICES: usize = 62;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid graph6 character {ch:?} at byte {pos}")]
    BadChar { pos: usize, ch: char },
    #[error("graph6 string truncated: need {expected} bytes, found {found}")]
    TruncatedInput { expected: usize, found: usize },
    #[error("graph6 string has {extra} unexpected trailing bytes")]
    TrailingData { extra: usize },
    #[error("graph6 size {0} unsupported (short form covers 1..=62 vertices)")]
    UnsupportedSize(usize),
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            let ch = text[pos..].chars().next().unwrap_or('\u{fffd}');
            return Err(Graph6Error::BadChar { pos, ch });
        }
    }
    let (&first, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    let n = (first - 63) as usize;
    if n == 63 {
        // '~' introduces the long size forms
        return Err(Graph6Error::UnsupportedSize(n));
    }
    if n == 0 {
        return Err(Graph6Error::UnsupportedSize(0));
    }
    let need = data_len(n);
    if data.len() < need {
        return Err(Graph6Error::TruncatedInput {
            expected: need + 1,
            found: bytes.len(),
        });
    }
    if data.len() > need {
        return Err(Graph6Error::TrailingData {
            extra: data.len() - need,
        });
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = data[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedSize(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference strings from networkx.to_graph6_bytes(header=False).
    #[test]
    fn reference_encodings() {
        assert_eq!(to_graph6(&Graph::path(3)).unwrap(), "Bg");
        assert_eq!(to_graph6(&Graph::cycle(5)).unwrap(), "Dhc");
        assert_eq!(parse_graph6("Dhc").unwrap(), Graph::cycle(5));
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(to_graph6(&Graph::complete(2)).unwrap(), "A_");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(to_graph6(&Graph::empty(1)).unwrap(), "@");
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(parse_graph6(">>graph6<<Dhc\n").unwrap(), Graph::cycle(5));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("D h"), Err(Graph6Error::BadChar { pos: 1, ch: ' ' }));
        assert_eq!(
            parse_graph6("Dh"),
            Err(Graph6Error::TruncatedInput { expected: 3, found: 2 })
        );
        assert_eq!(parse_graph6("Dhcc"), Err(Graph6Error::TrailingData { extra: 1 }));
        assert_eq!(parse_graph6("~?@~"), Err(Graph6Error::UnsupportedSize(63)));
        assert_eq!(parse_graph6("?"), Err(Graph6Error::UnsupportedSize(0)));
        assert_eq!(to_graph6(&Graph::empty(63)), Err(Graph6Error::UnsupportedSize(63)));
    }

    #[test]
    fn largest_short_form() {
        let g = Graph::complete(62);
        let s = to_graph6(&g).unwrap();
        assert_eq!(s.len(), 1 + data_len(62));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
