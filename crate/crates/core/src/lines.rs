//! Metric betweenness and the lines it induces.
//!
//! For distinct points `u`, `v` the line through them is
//! `{u, v} ∪ {p : [puv] or [upv] or [uvp]}`, where `[abc]` holds when `a`,
//! `b`, `c` are distinct and `d(a,b) + d(b,c) = d(a,c)`. Lines are compared
//! by their member sets only; several pairs may define the same line, and a
//! line may be a proper subset of another.
//!
//! Enumerating all lines of an `n`-point space costs `O(n^3)` time and
//! `O(n^3 / 64)` words for the per-pair member sets.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::metric::{Distance, MetricSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineError {
    #[error("point {point} out of range for a space on {n} points")]
    PointOutOfRange { point: usize, n: usize },
    #[error("a line needs two distinct points, got {0} twice")]
    EqualPoints(usize),
    #[error("need at least two points, got {0}")]
    TooFewPoints(usize),
}

fn check_point(m: &MetricSpace, p: usize) -> Result<(), LineError> {
    if p < m.n() {
        Ok(())
    } else {
        Err(LineError::PointOutOfRange { point: p, n: m.n() })
    }
}

#[inline]
fn sums_to(a: Distance, b: Distance, c: Distance) -> bool {
    a.checked_add(b) == Some(c)
}

/// `[abc]`: the three points are distinct and `d(a,b) + d(b,c) = d(a,c)`.
pub fn between(m: &MetricSpace, a: usize, b: usize, c: usize) -> Result<bool, LineError> {
    for p in [a, b, c] {
        check_point(m, p)?;
    }
    Ok(a != b && b != c && a != c && sums_to(m.dist(a, b), m.dist(b, c), m.dist(a, c)))
}

/// Members of the line through distinct in-range points `u`, `v`.
pub(crate) fn line_members(m: &MetricSpace, u: usize, v: usize) -> VertexSet {
    let n = m.n();
    let du = m.row(u);
    let dv = m.row(v);
    let duv = du[v];
    let mut members = VertexSet::empty(n);
    members.insert(u);
    members.insert(v);
    for p in 0..n {
        if p == u || p == v {
            continue;
        }
        let (dup, dvp) = (du[p], dv[p]);
        if sums_to(dup, dvp, duv) || sums_to(dup, duv, dvp) || sums_to(duv, dvp, dup) {
            members.insert(p);
        }
    }
    members
}

/// A line with the pair it was computed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Line {
    pub members: VertexSet,
    /// Stored with the smaller index first.
    pub defined_by: (usize, usize),
}

impl Line {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_universal(&self) -> bool {
        self.members.is_full()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.members.contains(p)
    }
}

pub fn line(m: &MetricSpace, u: usize, v: usize) -> Result<Line, LineError> {
    check_point(m, u)?;
    check_point(m, v)?;
    if u == v {
        return Err(LineError::EqualPoints(u));
    }
    Ok(Line {
        members: line_members(m, u, v),
        defined_by: (u.min(v), u.max(v)),
    })
}

/// Member sets of every line, addressable by either ordering of the pair.
#[derive(Debug, Clone)]
pub struct LineTable {
    n: usize,
    // Row-major over unordered pairs u < v.
    sets: Vec<VertexSet>,
}

impl LineTable {
    pub fn new(m: &MetricSpace) -> Self {
        let n = m.n();
        let mut sets = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                sets.push(line_members(m, u, v));
            }
        }
        LineTable { n, sets }
    }

    fn index(&self, u: usize, v: usize) -> usize {
        let (u, v) = (u.min(v), u.max(v));
        // pairs before row u: sum_{i<u} (n-1-i)
        u * (2 * self.n - u - 1) / 2 + (v - u - 1)
    }

    /// Panics unless `u != v` and both are in range.
    pub fn get(&self, u: usize, v: usize) -> &VertexSet {
        assert!(u != v && u < self.n && v < self.n, "bad pair ({u}, {v})");
        &self.sets[self.index(u, v)]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `((u, v), members)` with `u < v` in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &VertexSet)> {
        let n = self.n;
        (0..n)
            .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
            .zip(self.sets.iter())
    }
}

/// One distinct line with every pair that defines it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistinctLine {
    pub members: VertexSet,
    pub pairs: Vec<(usize, usize)>,
}

/// The distinct lines of a space, ordered by member set (as the integer
/// `sum(2^p)` over members `p`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineSystem {
    pub n: usize,
    pub lines: Vec<DistinctLine>,
    /// Index into `lines` of the line containing every point.
    pub universal: Option<usize>,
}

impl LineSystem {
    pub fn from_table(table: &LineTable) -> Self {
        let mut groups: HashMap<&VertexSet, Vec<(usize, usize)>> = HashMap::new();
        for (pair, members) in table.iter() {
            groups.entry(members).or_default().push(pair);
        }
        let mut lines: Vec<DistinctLine> = groups
            .into_iter()
            .map(|(members, pairs)| DistinctLine {
                members: members.clone(),
                pairs,
            })
            .collect();
        lines.sort_by(|a, b| a.members.cmp(&b.members));
        let universal = lines.iter().position(|l| l.members.is_full());
        LineSystem {
            n: table.n(),
            lines,
            universal,
        }
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn universal_line(&self) -> Option<&DistinctLine> {
        self.universal.map(|i| &self.lines[i])
    }
}

pub fn enumerate_lines(m: &MetricSpace) -> Result<LineSystem, LineError> {
    if m.n() < 2 {
        return Err(LineError::TooFewPoints(m.n()));
    }
    Ok(LineSystem::from_table(&LineTable::new(m)))
}

/// First universal line in lexicographic pair order.
pub fn universal_line(m: &MetricSpace) -> Result<Option<Line>, LineError> {
    let n = m.n();
    if n < 2 {
        return Err(LineError::TooFewPoints(n));
    }
    for u in 0..n {
        for v in u + 1..n {
            let members = line_members(m, u, v);
            if members.is_full() {
                return Ok(Some(Line {
                    members,
                    defined_by: (u, v),
                }));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "lines", rename_all = "snake_case")]
pub enum DbeWitness {
    /// A line through all points.
    Universal(Line),
    /// The first `n` distinct lines in canonical order.
    DistinctLines(Vec<Line>),
}

/// Whether a space has at least `n` distinct lines or a universal line.
///
/// Both quantities are reported independently. When both hold the witness is
/// the universal line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DbeReport {
    pub n: usize,
    pub num_lines: usize,
    pub has_universal: bool,
    pub dbe_holds: bool,
    pub witness: Option<DbeWitness>,
}

impl DbeReport {
    pub fn from_system(sys: &LineSystem) -> Self {
        let n = sys.n;
        let num_lines = sys.num_lines();
        let has_universal = sys.universal.is_some();
        let as_line = |l: &DistinctLine| Line {
            members: l.members.clone(),
            defined_by: l.pairs[0],
        };
        let witness = if let Some(u) = sys.universal_line() {
            Some(DbeWitness::Universal(as_line(u)))
        } else if num_lines >= n {
            Some(DbeWitness::DistinctLines(
                sys.lines.iter().take(n).map(as_line).collect(),
            ))
        } else {
            None
        };
        DbeReport {
            n,
            num_lines,
            has_universal,
            dbe_holds: num_lines >= n || has_universal,
            witness,
        }
    }
}

pub fn dbe_check(m: &MetricSpace) -> Result<DbeReport, LineError> {
    Ok(DbeReport::from_system(&enumerate_lines(m)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::metric::graph_metric;

    // u, v, x, y, z
    const U: usize = 0;
    const V: usize = 1;
    const X: usize = 2;
    const Y: usize = 3;
    const Z: usize = 4;

    fn pentagon() -> MetricSpace {
        let one = [(U, V), (V, X), (X, Y), (Y, Z), (Z, U)];
        let mut rows = vec![vec![2; 5]; 5];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 0;
        }
        for (a, b) in one {
            rows[a][b] = 1;
            rows[b][a] = 1;
        }
        MetricSpace::from_rows(rows).unwrap()
    }

    fn metric(g: &Graph) -> MetricSpace {
        graph_metric(g).unwrap()
    }

    /// Direct evaluation of the line definition with no shared code.
    fn naive_line(m: &MetricSpace, u: usize, v: usize) -> Vec<usize> {
        let d = |a: usize, b: usize| m.dist(a, b);
        let btw = |a: usize, b: usize, c: usize| a != b && b != c && a != c && d(a, b) + d(b, c) == d(a, c);
        (0..m.n())
            .filter(|&p| p == u || p == v || btw(p, u, v) || btw(u, p, v) || btw(u, v, p))
            .collect()
    }

    #[test]
    fn betweenness_examples() {
        let p3 = metric(&Graph::path(3));
        assert!(between(&p3, 0, 1, 2).unwrap());
        assert!(!between(&p3, 0, 0, 2).unwrap());
        assert!(between(&pentagon(), V, X, Y).unwrap());
        assert_eq!(
            between(&p3, 0, 1, 3),
            Err(LineError::PointOutOfRange { point: 3, n: 3 })
        );
    }

    #[test]
    fn pentagon_lines() {
        let m = pentagon();
        assert_eq!(line(&m, V, Y).unwrap().members.to_vec(), vec![V, X, Y]);
        assert_eq!(line(&m, X, Y).unwrap().members.to_vec(), vec![V, X, Y, Z]);
        assert_eq!(metric(&Graph::cycle(5)), m);
    }

    #[test]
    fn line_errors_and_trivial_cases() {
        let k3 = metric(&Graph::complete(3));
        assert_eq!(line(&k3, 0, 1).unwrap().members.to_vec(), vec![0, 1]);
        assert_eq!(line(&k3, 2, 0).unwrap().defined_by, (0, 2));
        assert_eq!(line(&k3, 1, 1), Err(LineError::EqualPoints(1)));
        let k1 = metric(&Graph::empty(1));
        assert_eq!(enumerate_lines(&k1), Err(LineError::TooFewPoints(1)));
        assert_eq!(universal_line(&k1), Err(LineError::TooFewPoints(1)));
        assert_eq!(dbe_check(&k1), Err(LineError::TooFewPoints(1)));
    }

    #[test]
    fn c5_line_system_matches_naive_evaluation() {
        let m = pentagon();
        let mut sizes = Vec::new();
        let mut seen: Vec<Vec<usize>> = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                let l = naive_line(&m, u, v);
                sizes.push((m.dist(u, v), l.len()));
                if !seen.contains(&l) {
                    seen.push(l);
                }
            }
        }
        assert_eq!(seen.len(), 10);
        assert!(sizes.iter().all(|&(d, s)| (d == 1 && s == 4) || (d == 2 && s == 3)));

        let sys = enumerate_lines(&m).unwrap();
        assert_eq!(sys.num_lines(), 10);
        assert_eq!(sys.lines.iter().filter(|l| l.members.len() == 4).count(), 5);
        assert_eq!(sys.lines.iter().filter(|l| l.members.len() == 3).count(), 5);
        assert!(sys.universal.is_none());
    }

    #[test]
    fn p3_and_k3_systems() {
        let p3 = enumerate_lines(&metric(&Graph::path(3))).unwrap();
        assert_eq!(p3.num_lines(), 1);
        assert_eq!(p3.lines[0].members.to_vec(), vec![0, 1, 2]);
        assert_eq!(p3.lines[0].pairs, vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(p3.universal, Some(0));

        let k3 = enumerate_lines(&metric(&Graph::complete(3))).unwrap();
        assert_eq!(k3.num_lines(), 3);
        assert!(k3.lines.iter().all(|l| l.members.len() == 2));
        // canonical order: {0,1} < {0,2} < {1,2}
        let order: Vec<_> = k3.lines.iter().map(|l| l.members.to_vec()).collect();
        assert_eq!(order, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn universal_line_examples() {
        let l = universal_line(&metric(&Graph::path(3))).unwrap().unwrap();
        assert_eq!(l.defined_by, (0, 1));
        assert!(l.is_universal());
        assert!(universal_line(&pentagon()).unwrap().is_none());
        let k2 = universal_line(&metric(&Graph::complete(2))).unwrap().unwrap();
        assert_eq!(k2.members.to_vec(), vec![0, 1]);
    }

    #[test]
    fn dbe_examples() {
        let c5 = dbe_check(&pentagon()).unwrap();
        assert_eq!(
            (c5.n, c5.num_lines, c5.has_universal, c5.dbe_holds),
            (5, 10, false, true)
        );
        match c5.witness {
            Some(DbeWitness::DistinctLines(ref ls)) => assert_eq!(ls.len(), 5),
            ref w => panic!("unexpected witness {w:?}"),
        }
        let p3 = dbe_check(&metric(&Graph::path(3))).unwrap();
        assert_eq!((p3.n, p3.num_lines, p3.has_universal, p3.dbe_holds), (3, 1, true, true));
        assert!(matches!(p3.witness, Some(DbeWitness::Universal(_))));
        let k3 = dbe_check(&metric(&Graph::complete(3))).unwrap();
        assert_eq!(
            (k3.n, k3.num_lines, k3.has_universal, k3.dbe_holds),
            (3, 3, false, true)
        );
    }

    #[test]
    fn table_indexing_covers_every_pair_once() {
        let m = metric(&Graph::path(7));
        let t = LineTable::new(&m);
        for u in 0..7 {
            for v in 0..7 {
                if u != v {
                    assert_eq!(t.get(u, v).to_vec(), naive_line(&m, u, v));
                }
            }
        }
    }
}
