//! Shared inputs for the criterion benchmarks under `benches/`.

use dbe_core::{graph_metric, random_chordal, Graph, MetricSpace};

/// Seeded connected chordal graph, identical on every run.
pub fn chordal(n: usize, kmax: usize) -> Graph {
    random_chordal(n, kmax, 0x5eed ^ n as u64).expect("valid generator parameters")
}

pub fn chordal_metric(n: usize, kmax: usize) -> MetricSpace {
    graph_metric(&chordal(n, kmax)).expect("generator output is connected")
}
