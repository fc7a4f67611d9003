//! Built-in instance families for exhaustive sweeps.

use crate::graph::Graph;
use crate::io::{Instance, InstanceRecord, StreamError};
use crate::metric::MetricSpace;

/// Largest `n` whose pair count fits the 64-bit edge masks.
pub const MAX_LABELLED_N: usize = 11;

fn pairs(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// Every labelled graph on `n` vertices, in edge-mask order (see
/// [`Graph::from_pair_mask`]). Panics if `n` is 0 or above
/// [`MAX_LABELLED_N`].
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(
        (1..=MAX_LABELLED_N).contains(&n),
        "labelled enumeration supports 1..={MAX_LABELLED_N} vertices"
    );
    (0..1u64 << pairs(n)).map(move |mask| Graph::from_pair_mask(n, mask))
}

/// Every labelled graph with `n_min <= n <= n_max`, as numbered records.
pub fn labelled_records(n_min: usize, n_max: usize) -> impl Iterator<Item = Result<InstanceRecord, StreamError>> {
    (n_min..=n_max)
        .flat_map(labelled_graphs)
        .enumerate()
        .map(|(i, g)| Ok(InstanceRecord::generated(i, Instance::Graph(g))))
}

/// Every metric on `n` points whose nonzero distances are 1 or 2. All such
/// symmetric matrices satisfy the triangle inequality.
pub fn distance_12_spaces(n: usize) -> impl Iterator<Item = MetricSpace> {
    assert!((1..=MAX_LABELLED_N).contains(&n));
    (0..1u64 << pairs(n)).map(move |mask| {
        let mut rows = vec![vec![0; n]; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let d = 1 + (mask >> k & 1);
                rows[i][j] = d;
                rows[j][i] = d;
                k += 1;
            }
        }
        MetricSpace::from_rows(rows).expect("distances in {1,2} form a metric")
    })
}
