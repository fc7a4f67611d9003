//! Per-instance checks of the line-counting statements for graph metrics,
//! and a sweep engine over instance streams.
//!
//! Every check reports `holds` together with evidence. A check whose
//! preconditions fail on an instance returns a [`VerifyError`]; sweeps count
//! those instances as skipped for that claim.

pub mod families;
pub mod sweep;

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::chordal::{is_chordal, Chordality};
use crate::graph::Graph;
use crate::io::{InputFormat, Instance, InstanceRecord, ParseError};
use crate::lines::{DbeReport, LineSystem, LineTable};
use crate::metric::{graph_metric, MetricSpace};

pub use sweep::{sweep, SweepError, SweepSummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// Connected chordal graphs have `n` distinct lines or a universal line.
    Theorem1,
    /// `[sxy]` and `line(s,x) = line(s,y)` force `x` to separate `s` from `y`
    /// (connected chordal graphs).
    Lemma1,
    /// Simplicial `s` with `line(s,x) = line(s,y)` makes `line(x,y)` universal
    /// (connected chordal graphs).
    Lemma2,
    /// Chordal graphs on at least two vertices have two simplicial vertices.
    Dirac,
    /// In a connected bipartite graph every edge spans a universal line.
    BipartiteUniversal,
    /// `2^(number of lines) >= n`, or a universal line exists.
    Log2Bound,
    /// At least `n` distinct lines, or a universal line (any metric space).
    Dbe,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::Theorem1,
        Claim::Lemma1,
        Claim::Lemma2,
        Claim::Dirac,
        Claim::BipartiteUniversal,
        Claim::Log2Bound,
        Claim::Dbe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Theorem1 => "theorem1",
            Claim::Lemma1 => "lemma1",
            Claim::Lemma2 => "lemma2",
            Claim::Dirac => "dirac",
            Claim::BipartiteUniversal => "bipartite_universal",
            Claim::Log2Bound => "log2_bound",
            Claim::Dbe => "dbe",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "theorem1" => Claim::Theorem1,
            "lemma1" => Claim::Lemma1,
            "lemma2" => Claim::Lemma2,
            "dirac" => Claim::Dirac,
            "bipartite" | "bipartite_universal" => Claim::BipartiteUniversal,
            "logbound" | "log2_bound" => Claim::Log2Bound,
            "dbe" => Claim::Dbe,
            other => return Err(format!("unknown claim {other:?}")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("claim needs a graph, got a metric space")]
    NeedsGraph,
    #[error("claim needs at least {min} points, got {n}")]
    TooFewPoints { n: usize, min: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is not bipartite")]
    NotBipartite,
}

/// Claim-specific evidence attached to a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    Dbe(DbeReport),
    LineSystem(LineSystem),
    /// Number of instances of the hypothesis that were examined.
    HypothesesChecked {
        count: usize,
    },
    /// `[sxy]` and `line(s,x) = line(s,y) = line`, but `x` does not separate.
    Lemma1Violation {
        s: usize,
        x: usize,
        y: usize,
        line: VertexSet,
    },
    /// `s` simplicial, `line(s,x) = line(s,y)`, `line(x,y)` not universal.
    Lemma2Violation {
        s: usize,
        x: usize,
        y: usize,
        line_sx: VertexSet,
        line_xy: VertexSet,
    },
    Simplicial {
        vertices: VertexSet,
    },
    EdgesChecked {
        count: usize,
    },
    NonUniversalEdge {
        x: usize,
        y: usize,
        line: VertexSet,
    },
    LineCount {
        n: usize,
        num_lines: usize,
        has_universal: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub ordinal: usize,
    pub format: InputFormat,
    /// Encoded instance; decoding it with `format` and re-running the claim
    /// reproduces this report.
    pub instance: String,
    pub holds: bool,
    pub witness: Option<Evidence>,
    pub counterexample: Option<Evidence>,
}

struct Outcome {
    holds: bool,
    witness: Option<Evidence>,
    counterexample: Option<Evidence>,
}

impl Outcome {
    fn pass(witness: Evidence) -> Self {
        Outcome {
            holds: true,
            witness: Some(witness),
            counterexample: None,
        }
    }

    fn fail(counterexample: Evidence) -> Self {
        Outcome {
            holds: false,
            witness: None,
            counterexample: Some(counterexample),
        }
    }
}

/// Lazily computed facts about one instance, shared by all claims run on it.
pub(crate) struct Analysis<'a> {
    instance: &'a Instance,
    metric: OnceCell<Option<MetricSpace>>,
    table: OnceCell<Option<LineTable>>,
    system: OnceCell<Option<LineSystem>>,
    chordality: OnceCell<Option<Chordality>>,
    connected: OnceCell<bool>,
}

impl<'a> Analysis<'a> {
    pub(crate) fn new(instance: &'a Instance) -> Self {
        Analysis {
            instance,
            metric: OnceCell::new(),
            table: OnceCell::new(),
            system: OnceCell::new(),
            chordality: OnceCell::new(),
            connected: OnceCell::new(),
        }
    }

    fn n(&self) -> usize {
        self.instance.n()
    }

    fn graph(&self) -> Result<&'a Graph, VerifyError> {
        match self.instance {
            Instance::Graph(g) => Ok(g),
            Instance::Metric(_) => Err(VerifyError::NeedsGraph),
        }
    }

    fn connected(&self) -> bool {
        *self.connected.get_or_init(|| match self.instance {
            Instance::Graph(g) => g.is_connected(),
            Instance::Metric(_) => true,
        })
    }

    /// The metric of the instance; `None` for disconnected graphs.
    fn metric(&self) -> Option<&MetricSpace> {
        self.metric
            .get_or_init(|| match self.instance {
                Instance::Graph(g) => self.connected().then(|| graph_metric(g).expect("connected graph")),
                Instance::Metric(m) => Some(m.clone()),
            })
            .as_ref()
    }

    fn table(&self) -> Option<&LineTable> {
        self.table.get_or_init(|| self.metric().map(LineTable::new)).as_ref()
    }

    /// Distinct lines; `None` without a metric or with fewer than two points.
    pub(crate) fn system(&self) -> Option<&LineSystem> {
        self.system
            .get_or_init(|| match self.table() {
                Some(t) if t.n() >= 2 => Some(LineSystem::from_table(t)),
                _ => None,
            })
            .as_ref()
    }

    fn chordality(&self) -> Option<&Chordality> {
        self.chordality
            .get_or_init(|| self.graph().ok().map(is_chordal))
            .as_ref()
    }

    fn require_points(&self, min: usize) -> Result<(), VerifyError> {
        if self.n() < min {
            Err(VerifyError::TooFewPoints { n: self.n(), min })
        } else {
            Ok(())
        }
    }

    fn require_connected(&self) -> Result<(), VerifyError> {
        if self.connected() {
            Ok(())
        } else {
            Err(VerifyError::Disconnected)
        }
    }

    fn require_chordal(&self) -> Result<&'a Graph, VerifyError> {
        let g = self.graph()?;
        match self.chordality() {
            Some(c) if c.is_chordal() => Ok(g),
            _ => Err(VerifyError::NotChordal),
        }
    }

    fn check(&self, claim: Claim) -> Result<Outcome, VerifyError> {
        match claim {
            Claim::Theorem1 => self.theorem1(),
            Claim::Lemma1 => self.lemma1(),
            Claim::Lemma2 => self.lemma2(),
            Claim::Dirac => self.dirac(),
            Claim::BipartiteUniversal => self.bipartite_universal(),
            Claim::Log2Bound => self.log2_bound(),
            Claim::Dbe => self.dbe(),
        }
    }

    fn dbe_outcome(&self) -> Outcome {
        let sys = self.system().expect("metric with at least two points");
        let report = DbeReport::from_system(sys);
        if report.dbe_holds {
            Outcome::pass(Evidence::Dbe(report))
        } else {
            Outcome::fail(Evidence::LineSystem(sys.clone()))
        }
    }

    fn theorem1(&self) -> Result<Outcome, VerifyError> {
        self.graph()?;
        self.require_points(2)?;
        self.require_connected()?;
        self.require_chordal()?;
        Ok(self.dbe_outcome())
    }

    fn dbe(&self) -> Result<Outcome, VerifyError> {
        self.require_points(2)?;
        self.require_connected()?;
        Ok(self.dbe_outcome())
    }

    fn log2_bound(&self) -> Result<Outcome, VerifyError> {
        self.require_points(2)?;
        self.require_connected()?;
        let sys = self.system().expect("metric with at least two points");
        let (n, num_lines) = (sys.n, sys.num_lines());
        let has_universal = sys.universal.is_some();
        // 2^num_lines >= n, exactly
        let bound = num_lines >= 64 || (1u128 << num_lines) >= n as u128;
        let ev = Evidence::LineCount {
            n,
            num_lines,
            has_universal,
        };
        Ok(if bound || has_universal {
            Outcome::pass(ev)
        } else {
            Outcome::fail(ev)
        })
    }

    fn lemma1(&self) -> Result<Outcome, VerifyError> {
        let g = self.graph()?;
        self.require_connected()?;
        self.require_chordal()?;
        Ok(self.lemma1_scan(g))
    }

    /// Lemma 1 hypothesis scan without the chordality precondition.
    fn lemma1_scan(&self, g: &Graph) -> Outcome {
        let n = g.n();
        if n < 3 {
            return Outcome::pass(Evidence::HypothesesChecked { count: 0 });
        }
        let m = self.metric().expect("connected");
        let t = self.table().expect("connected");
        let mut count = 0;
        for s in 0..n {
            for x in 0..n {
                if x == s {
                    continue;
                }
                let (dsx, lsx) = (m.dist(s, x), t.get(s, x));
                for y in 0..n {
                    if y == s || y == x || dsx + m.dist(x, y) != m.dist(s, y) {
                        continue;
                    }
                    if lsx != t.get(s, y) {
                        continue;
                    }
                    count += 1;
                    if !g.separates(x, s, y).expect("distinct vertices") {
                        return Outcome::fail(Evidence::Lemma1Violation {
                            s,
                            x,
                            y,
                            line: lsx.clone(),
                        });
                    }
                }
            }
        }
        Outcome::pass(Evidence::HypothesesChecked { count })
    }

    fn lemma2(&self) -> Result<Outcome, VerifyError> {
        let g = self.graph()?;
        self.require_points(3)?;
        self.require_connected()?;
        self.require_chordal()?;
        Ok(self.lemma2_scan(g))
    }

    fn lemma2_scan(&self, g: &Graph) -> Outcome {
        let n = g.n();
        let t = self.table().expect("connected");
        let mut count = 0;
        for s in g.simplicial_vertices().iter() {
            for x in 0..n {
                for y in x + 1..n {
                    if x == s || y == s || t.get(s, x) != t.get(s, y) {
                        continue;
                    }
                    count += 1;
                    let lxy = t.get(x, y);
                    if !lxy.is_full() {
                        return Outcome::fail(Evidence::Lemma2Violation {
                            s,
                            x,
                            y,
                            line_sx: t.get(s, x).clone(),
                            line_xy: lxy.clone(),
                        });
                    }
                }
            }
        }
        Outcome::pass(Evidence::HypothesesChecked { count })
    }

    fn dirac(&self) -> Result<Outcome, VerifyError> {
        let g = self.graph()?;
        self.require_points(2)?;
        self.require_chordal()?;
        let vertices = g.simplicial_vertices();
        let ev = Evidence::Simplicial {
            vertices: vertices.clone(),
        };
        Ok(if vertices.len() >= 2 {
            Outcome::pass(ev)
        } else {
            Outcome::fail(ev)
        })
    }

    fn bipartite_universal(&self) -> Result<Outcome, VerifyError> {
        let g = self.graph()?;
        self.require_points(2)?;
        self.require_connected()?;
        if g.bipartition().is_none() {
            return Err(VerifyError::NotBipartite);
        }
        Ok(self.edge_scan(g))
    }

    /// Whether every edge spans a universal line.
    fn edge_scan(&self, g: &Graph) -> Outcome {
        let t = self.table().expect("connected");
        let mut count = 0;
        for (x, y) in g.edges() {
            count += 1;
            let line = t.get(x, y);
            if !line.is_full() {
                return Outcome::fail(Evidence::NonUniversalEdge {
                    x,
                    y,
                    line: line.clone(),
                });
            }
        }
        Outcome::pass(Evidence::EdgesChecked { count })
    }
}

pub(crate) fn report_for(
    analysis: &Analysis<'_>,
    claim: Claim,
    ordinal: usize,
    format: InputFormat,
    instance: &str,
) -> Result<VerificationReport, VerifyError> {
    let o = analysis.check(claim)?;
    Ok(VerificationReport {
        claim,
        ordinal,
        format,
        instance: instance.to_string(),
        holds: o.holds,
        witness: o.witness,
        counterexample: o.counterexample,
    })
}

/// Runs `claim` on one record.
pub fn verify_record(claim: Claim, record: &InstanceRecord) -> Result<VerificationReport, VerifyError> {
    let analysis = Analysis::new(&record.payload);
    report_for(&analysis, claim, record.ordinal, record.format, &record.source_form)
}

/// Runs `claim` on a standalone instance, recorded under ordinal 0.
pub fn verify_instance(claim: Claim, instance: &Instance) -> Result<VerificationReport, VerifyError> {
    let (format, text) = instance.canonical_form();
    report_for(&Analysis::new(instance), claim, 0, format, &text)
}

fn on_graph(claim: Claim, g: &Graph) -> Result<VerificationReport, VerifyError> {
    verify_instance(claim, &Instance::Graph(g.clone()))
}

pub fn verify_theorem1(g: &Graph) -> Result<VerificationReport, VerifyError> {
    on_graph(Claim::Theorem1, g)
}

pub fn verify_lemma1(g: &Graph) -> Result<VerificationReport, VerifyError> {
    on_graph(Claim::Lemma1, g)
}

pub fn verify_lemma2(g: &Graph) -> Result<VerificationReport, VerifyError> {
    on_graph(Claim::Lemma2, g)
}

pub fn verify_dirac(g: &Graph) -> Result<VerificationReport, VerifyError> {
    on_graph(Claim::Dirac, g)
}

pub fn verify_bipartite_universal(g: &Graph) -> Result<VerificationReport, VerifyError> {
    on_graph(Claim::BipartiteUniversal, g)
}

pub fn verify_log_bound(m: &MetricSpace) -> Result<VerificationReport, VerifyError> {
    verify_instance(Claim::Log2Bound, &Instance::Metric(m.clone()))
}

pub fn verify_dbe(m: &MetricSpace) -> Result<VerificationReport, VerifyError> {
    verify_instance(Claim::Dbe, &Instance::Metric(m.clone()))
}

#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("cannot decode instance: {0}")]
    Parse(#[from] ParseError),
    #[error("claim preconditions fail on replay: {0}")]
    Verify(#[from] VerifyError),
}

/// Decodes the report's instance and runs its claim again.
pub fn replay(report: &VerificationReport) -> Result<VerificationReport, ReplayError> {
    let instance = Instance::decode(&report.instance, report.format)?;
    let analysis = Analysis::new(&instance);
    Ok(report_for(
        &analysis,
        report.claim,
        report.ordinal,
        report.format,
        &report.instance,
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn holds(r: Result<VerificationReport, VerifyError>) -> bool {
        let r = r.unwrap();
        assert_eq!(r.holds, r.counterexample.is_none());
        r.holds
    }

    #[test]
    fn theorem1_examples() {
        let p3 = verify_theorem1(&Graph::path(3)).unwrap();
        assert!(p3.holds);
        match p3.witness {
            Some(Evidence::Dbe(ref d)) => assert!(d.has_universal),
            ref w => panic!("unexpected witness {w:?}"),
        }
        let k4 = verify_theorem1(&Graph::complete(4)).unwrap();
        match k4.witness {
            Some(Evidence::Dbe(ref d)) => assert_eq!((d.num_lines, d.has_universal), (6, false)),
            ref w => panic!("unexpected witness {w:?}"),
        }
        assert_eq!(verify_theorem1(&Graph::cycle(4)), Err(VerifyError::NotChordal));
        assert_eq!(verify_theorem1(&Graph::empty(2)), Err(VerifyError::Disconnected));
        assert_eq!(
            verify_theorem1(&Graph::empty(1)),
            Err(VerifyError::TooFewPoints { n: 1, min: 2 })
        );
    }

    #[test]
    fn lemma1_examples() {
        let p4 = verify_lemma1(&Graph::path(4)).unwrap();
        assert!(p4.holds);
        // (a,b,c) is among the hypothesis triples
        match p4.witness {
            Some(Evidence::HypothesesChecked { count }) => assert!(count > 0),
            ref w => panic!("unexpected witness {w:?}"),
        }
        assert_eq!(
            verify_lemma1(&Graph::complete(3)).unwrap().witness,
            Some(Evidence::HypothesesChecked { count: 0 })
        );
        assert_eq!(verify_lemma1(&Graph::cycle(5)), Err(VerifyError::NotChordal));
    }

    #[test]
    fn lemma2_examples() {
        assert!(holds(verify_lemma2(&Graph::path(4))));
        assert_eq!(
            verify_lemma2(&Graph::complete(3)).unwrap().witness,
            Some(Evidence::HypothesesChecked { count: 0 })
        );
        assert!(holds(verify_lemma2(&Graph::complete_bipartite(1, 4))));
        assert_eq!(
            verify_lemma2(&Graph::path(2)),
            Err(VerifyError::TooFewPoints { n: 2, min: 3 })
        );
    }

    #[test]
    fn dirac_and_bipartite_examples() {
        assert!(holds(verify_dirac(&Graph::path(2))));
        assert!(holds(verify_dirac(&Graph::complete(4))));
        assert_eq!(verify_dirac(&Graph::cycle(4)), Err(VerifyError::NotChordal));
        // disconnected chordal graphs are in scope for this claim
        assert!(holds(verify_dirac(&Graph::empty(3))));

        assert!(holds(verify_bipartite_universal(&Graph::complete(2))));
        assert!(holds(verify_bipartite_universal(&Graph::cycle(6))));
        assert!(holds(verify_bipartite_universal(&Graph::cycle(4))));
        assert_eq!(
            verify_bipartite_universal(&Graph::cycle(5)),
            Err(VerifyError::NotBipartite)
        );
    }

    #[test]
    fn edge_scan_fails_off_bipartite_graphs() {
        let g = Graph::cycle(5);
        let inst = Instance::Graph(g.clone());
        let o = Analysis::new(&inst).edge_scan(&g);
        assert!(!o.holds);
        match o.counterexample {
            Some(Evidence::NonUniversalEdge { x: 0, y: 1, ref line }) => assert_eq!(line.len(), 4),
            ref c => panic!("unexpected counterexample {c:?}"),
        }
    }

    #[test]
    fn lemma1_scan_fails_on_c4() {
        // [0 1 2], line(0,1) = line(0,2) = V, yet 3 reconnects 0 and 2
        let g = Graph::cycle(4);
        let inst = Instance::Graph(g.clone());
        let o = Analysis::new(&inst).lemma1_scan(&g);
        assert!(!o.holds);
        let Some(Evidence::Lemma1Violation { s, x, y, .. }) = o.counterexample else {
            panic!("expected a violation");
        };
        assert!(!g.separates(x, s, y).unwrap());
    }

    #[test]
    fn lemma2_scan_detects_violations_on_some_non_chordal_graph() {
        let mut found = 0;
        for mask in 0u64..1 << 15 {
            let g = Graph::from_pair_mask(6, mask);
            if !g.is_connected() || is_chordal(&g).is_chordal() {
                continue;
            }
            let inst = Instance::Graph(g.clone());
            let a = Analysis::new(&inst);
            let o = a.lemma2_scan(&g);
            if let Some(Evidence::Lemma2Violation {
                s, x, y, ref line_xy, ..
            }) = o.counterexample
            {
                let t = a.table().unwrap();
                assert!(g.is_simplicial(s));
                assert_eq!(t.get(s, x), t.get(s, y));
                assert_eq!(t.get(x, y), line_xy);
                assert!(!line_xy.is_full());
                found += 1;
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn log_bound_examples() {
        let c5 = graph_metric(&Graph::cycle(5)).unwrap();
        assert!(holds(verify_log_bound(&c5)));
        let p3 = graph_metric(&Graph::path(3)).unwrap();
        assert!(holds(verify_log_bound(&p3)));
        let k1 = graph_metric(&Graph::empty(1)).unwrap();
        assert_eq!(verify_log_bound(&k1), Err(VerifyError::TooFewPoints { n: 1, min: 2 }));
    }

    #[test]
    fn graph_claims_reject_metric_instances() {
        let m = Instance::Metric(graph_metric(&Graph::path(3)).unwrap());
        for c in [
            Claim::Theorem1,
            Claim::Lemma1,
            Claim::Lemma2,
            Claim::Dirac,
            Claim::BipartiteUniversal,
        ] {
            assert_eq!(verify_instance(c, &m), Err(VerifyError::NeedsGraph));
        }
        assert!(verify_instance(Claim::Dbe, &m).unwrap().holds);
    }

    #[test]
    fn replay_reproduces_reports() {
        for c in Claim::ALL {
            let inst = Instance::Graph(Graph::path(5));
            let r = verify_instance(c, &inst).unwrap();
            assert_eq!(replay(&r).unwrap(), r);
        }
    }

    #[test]
    fn claim_names_parse() {
        for c in Claim::ALL {
            assert_eq!(c.name().parse::<Claim>().unwrap(), c);
        }
        assert_eq!("bipartite".parse::<Claim>().unwrap(), Claim::BipartiteUniversal);
        assert_eq!("logbound".parse::<Claim>().unwrap(), Claim::Log2Bound);
        assert!("theorem2".parse::<Claim>().is_err());
    }
}
