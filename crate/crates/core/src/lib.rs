//! Lines in finite metric spaces and exhaustive checks of line-counting
//! statements on graph metrics.
//!
//! A line through distinct points `u`, `v` collects `u`, `v` and every point
//! `p` such that one of `u`, `v`, `p` lies between the other two, where `b`
//! lies between `a` and `c` when `d(a,b) + d(b,c) = d(a,c)`. The crate builds
//! these lines for arbitrary integer metrics and for shortest-path metrics of
//! graphs, counts the distinct ones, recognises chordal graphs, and sweeps
//! graph families checking that every connected chordal graph on `n >= 2`
//! vertices has `n` distinct lines or a line through all vertices.

pub mod bitset;
pub mod chordal;
pub mod graph;
pub mod io;
pub mod lines;
pub mod metric;
pub mod verify;

pub use bitset::VertexSet;
pub use chordal::{
    is_chordal, is_induced_cycle, is_perfect_elimination_order, mcs_order, random_chordal, ChordalError, Chordality,
    EliminationOrder,
};
pub use graph::{Bipartition, Graph, GraphError};
pub use io::{
    emit_report, parse_distance_matrix, parse_edge_list, parse_graph6, read_instances, to_edge_list, to_graph6,
    to_matrix_text, InputFormat, Instance, InstanceRecord, ParseError, ReportFormat, StreamError,
};
pub use lines::{
    between, dbe_check, enumerate_lines, line, universal_line, DbeReport, DbeWitness, DistinctLine, Line, LineError,
    LineSystem, LineTable,
};
pub use metric::{graph_metric, Distance, MetricError, MetricSpace};
pub use verify::{
    replay, sweep, verify_bipartite_universal, verify_dbe, verify_dirac, verify_instance, verify_lemma1, verify_lemma2,
    verify_log_bound, verify_record, verify_theorem1, Claim, Evidence, SweepError, SweepSummary, VerificationReport,
    VerifyError,
};
