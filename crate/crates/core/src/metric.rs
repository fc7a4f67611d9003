//! Finite integer metric spaces and the shortest-path metric of a graph.

use thiserror::Error;

use crate::graph::Graph;

pub type Distance = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("a metric space needs at least one point")]
    Empty,
    #[error("row {row} has {found} entries, expected {expected}")]
    NotSquare { row: usize, expected: usize, found: usize },
    #[error("d({0},{0}) is not zero")]
    BadDiagonal(usize),
    #[error("d({0},{1}) != d({1},{0})")]
    NotSymmetric(usize, usize),
    #[error("distinct points {0} and {1} are at distance zero")]
    ZeroDistance(usize, usize),
    #[error("triangle inequality fails: d({0},{1}) > d({0},{2}) + d({2},{1})")]
    TriangleViolation(usize, usize, usize),
    #[error("graph is disconnected")]
    DisconnectedGraph,
}

/// `n` points with a symmetric integer distance matrix satisfying the metric
/// axioms. Construction always validates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MetricSpace {
    n: usize,
    d: Vec<Distance>,
}

impl MetricSpace {
    pub fn from_rows(rows: Vec<Vec<Distance>>) -> Result<Self, MetricError> {
        let n = rows.len();
        if n == 0 {
            return Err(MetricError::Empty);
        }
        let mut d = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(MetricError::NotSquare {
                    row,
                    expected: n,
                    found: r.len(),
                });
            }
            d.extend(r);
        }
        let m = MetricSpace { n, d };
        m.validate()?;
        Ok(m)
    }

    /// Checks every axiom over all pairs and triples. Errors name the first
    /// violation in `(u, w, v)` lexicographic order.
    pub fn validate(&self) -> Result<(), MetricError> {
        let n = self.n;
        for u in 0..n {
            if self.dist(u, u) != 0 {
                return Err(MetricError::BadDiagonal(u));
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if self.dist(u, v) != self.dist(v, u) {
                    return Err(MetricError::NotSymmetric(u, v));
                }
                if self.dist(u, v) == 0 {
                    return Err(MetricError::ZeroDistance(u, v));
                }
            }
        }
        for u in 0..n {
            for w in u + 1..n {
                let direct = self.dist(u, w) as u128;
                for v in 0..n {
                    if direct > self.dist(u, v) as u128 + self.dist(v, w) as u128 {
                        return Err(MetricError::TriangleViolation(u, w, v));
                    }
                }
            }
        }
        Ok(())
    }

    /// Shortest-path metric of a connected graph.
    pub fn of_graph(g: &Graph) -> Result<Self, MetricError> {
        let n = g.n();
        let mut d = Vec::with_capacity(n * n);
        for s in 0..n {
            let row = g.shortest_path_distances(s).expect("source in range");
            for x in row {
                d.push(x.ok_or(MetricError::DisconnectedGraph)? as Distance);
            }
        }
        Ok(MetricSpace { n, d })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> Distance {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[Distance] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Distance]> {
        self.d.chunks(self.n)
    }
}

/// Shortest-path metric of a connected graph.
pub fn graph_metric(g: &Graph) -> Result<MetricSpace, MetricError> {
    MetricSpace::of_graph(g)
}
