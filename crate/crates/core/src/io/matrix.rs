//! Distance-matrix text: `n` rows of `n` non-negative integers separated by
//! commas and/or whitespace. Blank lines and `#` comments are ignored.

use thiserror::Error;

use super::edges::significant;
use crate::metric::{Distance, MetricError, MetricSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("line {line}: {token:?} is not a non-negative integer")]
    BadNumber { line: usize, token: String },
    #[error("expected {expected} rows, input ended after {found}")]
    MissingRows { expected: usize, found: usize },
    #[error("line {line}: unexpected content after the last row")]
    TrailingData { line: usize },
    #[error(transparent)]
    Invalid(#[from] MetricError),
}

fn parse_row(line: usize, s: &str) -> Result<Vec<Distance>, MatrixError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<Distance>().map_err(|_| MatrixError::BadNumber {
                line,
                token: t.to_string(),
            })
        })
        .collect()
}

/// Reads one matrix; the first row fixes `n`.
pub(crate) fn read_record<'a, I>(lines: &mut I) -> Result<Option<(MetricSpace, Vec<&'a str>)>, MatrixError>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let mut body = lines.filter_map(|(no, raw)| significant(raw).map(|s| (no, s)));
    let Some((line, first)) = body.next() else {
        return Ok(None);
    };
    let first_row = parse_row(line, first)?;
    let n = first_row.len();
    let mut rows = vec![first_row];
    let mut consumed = vec![first];
    while rows.len() < n {
        let (line, s) = body.next().ok_or(MatrixError::MissingRows {
            expected: n,
            found: rows.len(),
        })?;
        let row = parse_row(line, s)?;
        if row.len() != n {
            return Err(MetricError::NotSquare {
                row: rows.len(),
                expected: n,
                found: row.len(),
            }
            .into());
        }
        rows.push(row);
        consumed.push(s);
    }
    Ok(Some((MetricSpace::from_rows(rows)?, consumed)))
}

pub fn parse_distance_matrix(text: &str) -> Result<MetricSpace, MatrixError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (m, _) = read_record(&mut lines)?.ok_or(MetricError::Empty)?;
    if let Some((line, _)) = lines.find(|(_, l)| significant(l).is_some()) {
        return Err(MatrixError::TrailingData { line });
    }
    Ok(m)
}

pub fn to_matrix_text(m: &MetricSpace) -> String {
    let mut s = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}
