"""Random instances of the four antimatroid families, for tests and sweeps.

Every generator takes a ``numpy.random.Generator`` so runs are reproducible.
"""

from __future__ import annotations

from fractions import Fraction

import networkx as nx

from .antimatroid import ChordalGraph, PointConfig, Poset

__all__ = ["random_tree_edges", "random_poset", "random_chordal", "random_points"]


def random_tree_edges(n_edges: int, rng) -> list:
    """Uniform labeled tree on n_edges + 1 vertices via a Pruefer sequence."""
    nv = n_edges + 1
    if nv == 2:
        T = nx.Graph([(0, 1)])
    else:
        T = nx.from_prufer_sequence([int(v) for v in rng.integers(0, nv, size=nv - 2)])
    return [(f"v{u}", f"v{v}", f"e{k + 1}") for k, (u, v) in enumerate(sorted(T.edges()))]


def random_poset(n: int, rng, density: float | None = None) -> Poset:
    """Random order: i < j with probability ``density`` for i < j, then closed."""
    p = rng.uniform(0.15, 0.7) if density is None else density
    rel = [(f"p{i}", f"p{j}") for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Poset([f"p{i}" for i in range(n)], rel)


def random_chordal(n: int, rng) -> ChordalGraph:
    """Connected chordal graph: each new vertex joins a clique of the old graph.

    Adding vertices in this way makes the reverse insertion order a perfect
    elimination ordering.
    """
    adj = {0: set()}
    for v in range(1, n):
        w = int(rng.integers(0, v))
        clique = [w]
        for u in rng.permutation(sorted(adj[w])):
            u = int(u)
            if rng.random() < 0.6 and all(u in adj[c] for c in clique):
                clique.append(u)
        adj[v] = set(clique)
        for c in clique:
            adj[c].add(v)
    edges = [(f"c{u}", f"c{v}") for u in adj for v in adj[u] if u < v]
    # shuffle labels so the elimination order is not the label order
    perm = [int(k) for k in rng.permutation(n)]
    name = {f"c{k}": f"c{perm[k]}" for k in range(n)}
    return ChordalGraph([f"c{k}" for k in range(n)], [(name[a], name[b]) for a, b in edges])


def random_points(n: int, d: int, rng, span: int = 3) -> PointConfig:
    """n distinct integer points in a small box, so degeneracies are common."""
    if d == 1:
        span = max(span, 2 * n)
    if (span + 1) ** d < n:
        raise ValueError("box too small for n distinct points")
    seen = []
    while len(seen) < n:
        p = tuple(Fraction(int(c)) for c in rng.integers(0, span + 1, size=d))
        if p not in seen:
            seen.append(p)
    return PointConfig({f"q{k}": p for k, p in enumerate(seen)}, d)
