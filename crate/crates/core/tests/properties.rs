use dbe_core::*;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            let edges = all.zip(bits).filter(|&(_, b)| b).map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    // add a spanning path so every sample is connected
    arb_graph(max_n).prop_map(|mut g| {
        for v in 1..g.n() {
            g.add_edge(v - 1, v).unwrap();
        }
        g
    })
}

fn arb_metric(max_n: usize) -> impl Strategy<Value = MetricSpace> {
    // shortest paths over random positive weights give an arbitrary metric
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(1u64..6, n * n).prop_map(move |w| {
            let mut d: Vec<Vec<u64>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { 0 } else { w[i.min(j) * n + i.max(j)] })
                        .collect()
                })
                .collect();
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                    }
                }
            }
            MetricSpace::from_rows(d).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph_metric_is_a_metric(g in arb_connected_graph(14)) {
        let m = graph_metric(&g).unwrap();
        prop_assert!(m.validate().is_ok());
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(m.dist(u, v) == 1, g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn bfs_distances_are_one_lipschitz(g in arb_graph(14), s in 0usize..14) {
        let s = s % g.n();
        let d = g.shortest_path_distances(s).unwrap();
        prop_assert_eq!(d[s], Some(0));
        for (x, y) in g.edges() {
            match (d[x], d[y]) {
                (Some(a), Some(b)) => prop_assert!(a.abs_diff(b) <= 1),
                (None, None) => {}
                _ => prop_assert!(false, "edge joins reachable and unreachable vertices"),
            }
        }
    }

    #[test]
    fn bipartite_iff_edge_parity(g in arb_connected_graph(12)) {
        let m = graph_metric(&g).unwrap();
        let parity = g.edges().all(|(x, y)| (0..g.n()).all(|u| m.dist(u, x) != m.dist(u, y)));
        let b = g.bipartition();
        prop_assert_eq!(b.is_some(), parity);
        if let Some(b) = b {
            prop_assert!(b.left.is_disjoint(&b.right));
            prop_assert!(b.left.union(&b.right).is_full());
            prop_assert!(g.edges().all(|(x, y)| b.left.contains(x) != b.left.contains(y)));
        }
    }

    #[test]
    fn separation_is_symmetric(g in arb_graph(10), x in 0usize..10, s in 0usize..10, y in 0usize..10) {
        let n = g.n();
        let (x, s, y) = (x % n, s % n, y % n);
        prop_assume!(x != s && x != y && s != y);
        prop_assert_eq!(g.separates(x, s, y).unwrap(), g.separates(x, y, s).unwrap());
    }

    #[test]
    fn line_invariants(m in arb_metric(9)) {
        let n = m.n();
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let l = line(&m, u, v).unwrap();
                prop_assert!(l.contains(u) && l.contains(v));
                prop_assert_eq!(&l, &line(&m, v, u).unwrap());
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let abc = between(&m, a, b, c).unwrap();
                    prop_assert_eq!(abc, between(&m, c, b, a).unwrap());
                    if abc {
                        prop_assert!(!between(&m, b, a, c).unwrap());
                    }
                }
            }
        }
        let sys = enumerate_lines(&m).unwrap();
        prop_assert!(sys.num_lines() >= 1 && sys.num_lines() <= n * (n - 1) / 2);
        let mut pairs: Vec<(usize, usize)> = sys.lines.iter().flat_map(|l| l.pairs.iter().copied()).collect();
        pairs.sort();
        let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        prop_assert_eq!(pairs, all);
        prop_assert!(sys.lines.windows(2).all(|w| w[0].members < w[1].members));
        prop_assert_eq!(sys.universal.is_some(), sys.lines.iter().any(|l| l.members.is_full()));
        let report = dbe_check(&m).unwrap();
        prop_assert_eq!(report.dbe_holds, report.num_lines >= n || report.has_universal);
        prop_assert_eq!(universal_line(&m).unwrap().is_some(), report.has_universal);
        // lg n bound of the general statement
        prop_assert!(report.has_universal || (1u128 << report.num_lines.min(127)) >= n as u128);
    }

    #[test]
    fn random_chordal_is_connected_chordal_with_two_simplicial(
        n in 1usize..60, k in 1usize..7, seed in any::<u64>()
    ) {
        let g = random_chordal(n, k, seed).unwrap();
        prop_assert_eq!(g.n(), n);
        prop_assert!(g.is_connected());
        let c = is_chordal(&g);
        prop_assert!(c.is_chordal());
        prop_assert!(is_perfect_elimination_order(&g, c.witness().unwrap()).unwrap());
        if n >= 2 {
            prop_assert!(g.simplicial_vertices().len() >= 2);
        }
        prop_assert_eq!(to_graph6(&g).unwrap(), to_graph6(&random_chordal(n, k, seed).unwrap()).unwrap());
    }

    #[test]
    fn formats_round_trip(g in arb_graph(20), m in arb_metric(8)) {
        let g6 = to_graph6(&g).unwrap();
        prop_assert_eq!(&parse_graph6(&g6).unwrap(), &g);
        prop_assert_eq!(to_graph6(&parse_graph6(&g6).unwrap()).unwrap(), g6);
        let el = to_edge_list(&g);
        prop_assert_eq!(&parse_edge_list(&el).unwrap(), &g);
        let mt = to_matrix_text(&m);
        prop_assert_eq!(&parse_distance_matrix(&mt).unwrap(), &m);
    }

    #[test]
    fn chordality_certificates_validate(g in arb_graph(12)) {
        match is_chordal(&g) {
            Chordality::Chordal(o) => prop_assert!(is_perfect_elimination_order(&g, &o).unwrap()),
            Chordality::NotChordal(c) => prop_assert!(is_induced_cycle(&g, &c)),
        }
    }
}
