"""Generate isomorph-free graph6 streams used by the acceptance suite.

Uses networkx only, so the streams are independent of the Rust code under test.

    python3 scripts/gen_fixtures.py crates/cli/tests/data
"""
import itertools
import sys
from pathlib import Path

import networkx as nx


def dedup(graphs):
    buckets = {}
    out = []
    for g in graphs:
        h = nx.weisfeiler_lehman_graph_hash(g, iterations=4)
        bucket = buckets.setdefault(h, [])
        if any(nx.is_isomorphic(g, other) for other in bucket):
            continue
        bucket.append(g)
        out.append(g)
    return out


def extend(graphs, n, keep):
    """All graphs on n vertices obtained by adding one vertex to a graph on n-1."""
    cands = []
    for g in graphs:
        for r in range(1, n):
            for nbrs in itertools.combinations(range(n - 1), r):
                h = g.copy()
                h.add_node(n - 1)
                h.add_edges_from((n - 1, v) for v in nbrs)
                if keep(h):
                    cands.append(h)
    return dedup(cands)


def family(nmax, keep):
    # Every connected chordal (resp. bipartite) graph on n >= 2 vertices has a
    # vertex whose deletion leaves a connected chordal (resp. bipartite) graph.
    levels = {1: [nx.empty_graph(1)]}
    for n in range(2, nmax + 1):
        levels[n] = extend(levels[n - 1], n, keep)
    return levels


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    chordal = family(8, lambda h: nx.is_connected(h) and nx.is_chordal(h))
    bip = family(8, lambda h: nx.is_connected(h) and nx.is_bipartite(h))
    (out / "connected_chordal_n8.g6").write_text(
        "".join(g6(g) + "\n" for g in chordal[8]))
    (out / "connected_bipartite_n2_8.g6").write_text(
        "".join(g6(g) + "\n" for n in range(2, 9) for g in bip[n]))
    for n in range(1, 9):
        print(n, len(chordal[n]), len(bip[n]))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "crates/cli/tests/data")
