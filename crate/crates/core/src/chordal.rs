//! Chordality recognition with certificates, and a seeded generator of
//! connected chordal graphs.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChordalError {
    #[error("order has {found} entries for a graph on {n} vertices")]
    OrderLength { n: usize, found: usize },
    #[error("order is not a permutation: vertex {0} is repeated or out of range")]
    NotPermutation(usize),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(&'static str),
}

/// A vertex permutation; position `i` holds the `i`-th vertex eliminated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct EliminationOrder(Vec<usize>);

impl EliminationOrder {
    pub fn new(order: Vec<usize>, n: usize) -> Result<Self, ChordalError> {
        if order.len() != n {
            return Err(ChordalError::OrderLength { n, found: order.len() });
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(ChordalError::NotPermutation(v));
            }
            seen[v] = true;
        }
        Ok(EliminationOrder(order))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Outcome of [`is_chordal`]: a perfect elimination order, or an induced
/// cycle of length at least four.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    Chordal(EliminationOrder),
    NotChordal(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }

    pub fn witness(&self) -> Option<&EliminationOrder> {
        match self {
            Chordality::Chordal(o) => Some(o),
            Chordality::NotChordal(_) => None,
        }
    }

    pub fn refutation(&self) -> Option<&[usize]> {
        match self {
            Chordality::Chordal(_) => None,
            Chordality::NotChordal(c) => Some(c),
        }
    }
}

impl Serialize for Chordality {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Chordality", 3)?;
        st.serialize_field("chordal", &self.is_chordal())?;
        st.serialize_field("witness", &self.witness())?;
        st.serialize_field("refutation", &self.refutation())?;
        st.end()
    }
}

/// Reverse of a maximum cardinality search visit order. Ties go to the
/// smallest vertex index.
pub fn mcs_order(g: &Graph) -> EliminationOrder {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("an unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for w in g.neighbours(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order.reverse();
    EliminationOrder(order)
}

/// First position whose later neighbours are not a clique, as
/// `(vertex, a, b)` with `a`, `b` non-adjacent later neighbours.
///
/// Uses the parent test: with `p` the earliest later neighbour of `v`, the
/// order is perfect iff every other later neighbour of `v` is adjacent to `p`.
fn peo_violation(g: &Graph, order: &EliminationOrder) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let pos = order.positions();
    let mut later = VertexSet::full(n);
    for &v in order.as_slice() {
        later.remove(v);
        let mut ln = g.neighbours(v).intersection(&later);
        let Some(p) = ln.iter().min_by_key(|&u| pos[u]) else {
            continue;
        };
        ln.remove(p);
        ln.difference_with(g.neighbours(p));
        if let Some(b) = ln.first() {
            return Some((v, p, b));
        }
    }
    None
}

pub fn is_perfect_elimination_order(g: &Graph, order: &EliminationOrder) -> Result<bool, ChordalError> {
    if order.as_slice().len() != g.n() {
        return Err(ChordalError::OrderLength {
            n: g.n(),
            found: order.as_slice().len(),
        });
    }
    Ok(peo_violation(g, order).is_none())
}

/// Induced cycle through `v`, `a`, `b` where `a`, `b` are non-adjacent
/// neighbours of `v`: `v` followed by a shortest `a`-`b` path that avoids the
/// rest of the closed neighbourhood of `v`.
fn induced_cycle_through(g: &Graph, v: usize, a: usize, b: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut allowed = g.vertices();
    allowed.difference_with(g.neighbours(v));
    allowed.remove(v);
    allowed.insert(a);
    allowed.insert(b);

    let mut parent = vec![usize::MAX; n];
    parent[a] = a;
    let mut queue = std::collections::VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        if u == b {
            break;
        }
        for w in g.neighbours(u).intersection(&allowed).iter() {
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    if parent[b] == usize::MAX {
        return None;
    }
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    let mut cycle = Vec::with_capacity(path.len() + 1);
    cycle.push(v);
    cycle.extend(path);
    Some(cycle)
}

fn find_induced_cycle(g: &Graph, hint: Option<(usize, usize, usize)>) -> Option<Vec<usize>> {
    if let Some((v, a, b)) = hint {
        if let Some(c) = induced_cycle_through(g, v, a, b) {
            return Some(c);
        }
    }
    // Any induced cycle of length >= 4 passes through some v whose two cycle
    // neighbours are non-adjacent, so this scan is complete.
    for v in 0..g.n() {
        let nb = g.neighbours(v).to_vec();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !g.has_edge(a, b) {
                    if let Some(c) = induced_cycle_through(g, v, a, b) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let order = mcs_order(g);
    match peo_violation(g, &order) {
        None => Chordality::Chordal(order),
        Some(hint) => Chordality::NotChordal(
            find_induced_cycle(g, Some(hint)).expect("a non-perfect MCS order implies an induced cycle"),
        ),
    }
}

/// Whether `cycle` lists the vertices of an induced cycle of length >= 4 in
/// cyclic order.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let set = VertexSet::from_indices(g.n(), cycle.iter().copied());
    if set.len() != k {
        return false;
    }
    (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
        && cycle.iter().all(|&v| g.neighbours(v).intersection(&set).len() == 2)
}

/// Seeded random generator for the instance families.
///
/// SplitMix64 with the state initialised to the seed; bounded draws map a
/// 64-bit output `x` to `floor(x * bound / 2^64)`.
pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(SplitMix64::from_seed(seed.to_le_bytes()))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish integer in `0..bound`. Panics if `bound == 0`.
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0);
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }
}

/// Connected chordal graph on `n` vertices, grown one vertex at a time.
///
/// Vertex `i` (for `i = 1..n`) is joined to a clique of the current graph,
/// built as follows, every draw coming from one [`Rng`] seeded with `seed`:
///
/// 1. `w = below(i)` picks the anchor vertex;
/// 2. `target = 1 + below(k_max)` picks the desired clique size;
/// 3. starting from `{w}` with candidates `N(w)`, while the clique is smaller
///    than `target` and candidates remain, take the candidate at rank
///    `below(|candidates|)` in increasing index order, add it, and intersect
///    the candidates with its neighbourhood.
///
/// Joining a new vertex to a clique extends a perfect elimination order, so
/// the result is chordal and connected.
pub fn random_chordal(n: usize, k_max: usize, seed: u64) -> Result<Graph, ChordalError> {
    if n == 0 {
        return Err(ChordalError::InvalidParameter("n must be at least 1"));
    }
    if k_max == 0 {
        return Err(ChordalError::InvalidParameter("k_max must be at least 1"));
    }
    let mut rng = Rng::new(seed);
    let mut g = Graph::empty(n);
    for i in 1..n {
        let w = rng.below(i);
        let target = 1 + rng.below(k_max);
        let mut clique = vec![w];
        let mut cand = g.neighbours(w).clone();
        while clique.len() < target && !cand.is_empty() {
            let r = rng.below(cand.len());
            let c = cand.iter().nth(r).expect("rank within candidate count");
            clique.push(c);
            cand.intersect_with(g.neighbours(c));
        }
        for c in clique {
            g.add_edge(i, c).expect("new vertex differs from existing ones");
        }
    }
    Ok(g)
}
