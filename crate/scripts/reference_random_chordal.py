"""Reference implementation of the seeded chordal generator.

Prints graph6 strings for the given (n, k_max, seed) triples so the Rust
output can be checked against an implementation in another language.

    python3 scripts/reference_random_chordal.py 30,4,7 40,5,123
"""
import sys

import networkx as nx

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, bound):
        return (self.next_u64() * bound) >> 64


def random_chordal(n, k_max, seed):
    rng = SplitMix64(seed)
    adj = [set() for _ in range(n)]
    for i in range(1, n):
        w = rng.below(i)
        target = 1 + rng.below(k_max)
        clique = [w]
        cand = set(adj[w])
        while len(clique) < target and cand:
            c = sorted(cand)[rng.below(len(cand))]
            clique.append(c)
            cand &= adj[c]
        for c in clique:
            adj[i].add(c)
            adj[c].add(i)
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from((u, v) for u in range(n) for v in adj[u] if u < v)
    return g


if __name__ == "__main__":
    for arg in sys.argv[1:]:
        n, k, seed = map(int, arg.split(","))
        g = random_chordal(n, k, seed)
        assert nx.is_connected(g) and nx.is_chordal(g)
        print(arg, nx.to_graph6_bytes(g, header=False).decode().strip())
