//! Simple undirected graphs on dense vertex indices.

use std::fmt;

use thiserror::Error;

use crate::bitset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertices {0:?} must be pairwise distinct")]
    NotDistinct(Vec<usize>),
}

/// A simple undirected graph on vertices `0..n`, `n >= 1`.
///
/// Row `v` of the adjacency is the neighbour set of `v`. The constructors
/// keep rows symmetric and loop-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph. Panics if `n == 0`.
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "a graph needs at least one vertex");
        Graph {
            adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph on `n` vertices from the low `n(n-1)/2` bits of `mask`,
    /// bit `k` standing for the `k`-th pair in the order
    /// `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`.
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::empty(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
                k += 1;
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    /// Cycle `0-1-...-(n-1)-0`. Panics if `n < 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.adj[v] = VertexSet::full(n);
            g.adj[v].remove(v);
        }
        g
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Self::from_edges(a + b, edges).expect("valid complete bipartite graph")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Vertices reachable from `s` inside `allowed` (`s` itself is always
    /// included).
    pub(crate) fn reach_within(&self, s: usize, allowed: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::empty(self.n());
        seen.insert(s);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.n());
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(allowed);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// Breadth-first distances from `s`; `None` marks vertices in other
    /// components.
    pub fn shortest_path_distances(&self, s: usize) -> Result<Vec<Option<usize>>, GraphError> {
        self.check_vertex(s)?;
        let n = self.n();
        let mut dist = vec![None; n];
        dist[s] = Some(0);
        let mut seen = VertexSet::empty(n);
        seen.insert(s);
        let mut frontier = seen.clone();
        let mut level = 0;
        while !frontier.is_empty() {
            level += 1;
            let mut next = VertexSet::empty(n);
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.difference_with(&seen);
            for v in &next {
                dist[v] = Some(level);
            }
            seen.union_with(&next);
            frontier = next;
        }
        Ok(dist)
    }

    pub fn is_connected(&self) -> bool {
        self.reach_within(0, &self.vertices()).is_full()
    }

    /// A proper 2-colouring if one exists. Each component puts its smallest
    /// vertex on the left side.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.n();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].expect("queued vertices are coloured");
                for w in &self.adj[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let left = VertexSet::from_indices(n, (0..n).filter(|&v| colour[v] == Some(false)));
        let right = VertexSet::from_indices(n, (0..n).filter(|&v| colour[v] == Some(true)));
        Some(Bipartition { left, right })
    }

    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_clique(&self.adj[v])
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|u| {
            let mut rest = set.clone();
            rest.remove(u);
            rest.is_subset(&self.adj[u])
        })
    }

    /// Vertices whose neighbourhood is a clique. Isolated vertices and
    /// vertices of degree one qualify.
    pub fn simplicial_vertices(&self) -> VertexSet {
        VertexSet::from_indices(self.n(), (0..self.n()).filter(|&v| self.is_simplicial(v)))
    }

    /// Whether deleting `x` leaves `s` and `y` in different components.
    pub fn separates(&self, x: usize, s: usize, y: usize) -> Result<bool, GraphError> {
        for v in [x, s, y] {
            self.check_vertex(v)?;
        }
        if x == s || x == y || s == y {
            return Err(GraphError::NotDistinct(vec![x, s, y]));
        }
        let mut allowed = self.vertices();
        allowed.remove(x);
        Ok(!self.reach_within(s, &allowed).contains(y))
    }

    /// Subgraph induced on `keep`, relabelled in increasing vertex order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let verts = keep.to_vec();
        let mut g = Graph::empty(verts.len().max(1));
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}
