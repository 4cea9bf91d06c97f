"""Operations that build or transform ranked sets.

Minors keep the inherited ground-set order with the removed element dropped;
extensions append the new element as the highest bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from string import ascii_lowercase

import numpy as np

from .errors import BadGraph, BadParams, ZeroRank
from .ranked import FeasibleFamily, GroundSet, RankedSet, from_feasible_family, popcounts

__all__ = [
    "RootedGraph",
    "default_labels",
    "dual",
    "delete",
    "contract",
    "contract_via_dual",
    "truncate",
    "free_extension",
    "free_coextension",
    "raise_to_full_rank",
    "uniform_matroid",
    "graphic_matroid",
    "branching_feasible",
    "branching_greedoid",
    "random_ranked_set",
]


def default_labels(n: int) -> tuple:
    if n <= len(ascii_lowercase):
        return tuple(ascii_lowercase[:n])
    return tuple(f"e{k}" for k in range(1, n + 1))


def _collapse_index(n: int, p: int) -> np.ndarray:
    """Old masks (bit p clear) listed in the order of the new (n-1)-bit masks."""
    m = np.arange(1 << (n - 1))
    low = m & ((1 << p) - 1)
    return low | ((m >> p) << (p + 1))


def dual(G: RankedSet) -> RankedSet:
    """r*(A) = |A| + r(S - A) - r(S)."""
    masks = np.arange(1 << G.n)
    rank = popcounts(G.n) + G.rank[G.full ^ masks] - G.rS
    return RankedSet(G.ground, rank)


def delete(G: RankedSet, p) -> RankedSet:
    k = G.ground.index(p)
    return RankedSet(G.ground.without(p), G.rank[_collapse_index(G.n, k)])


def contract(G: RankedSet, p) -> RankedSet:
    """r_{G/p}(A) = r(A + p) - r(p)."""
    k = G.ground.index(p)
    old = _collapse_index(G.n, k)
    return RankedSet(G.ground.without(p), G.rank[old | (1 << k)] - G.rank[1 << k])


def contract_via_dual(G: RankedSet, p) -> RankedSet:
    """Contraction by its definition (G* - p)*."""
    return dual(delete(dual(G), p))


def truncate(G: RankedSet) -> RankedSet:
    """Lower the rank of every full-rank subset by one."""
    if G.rS <= 0:
        raise ZeroRank("cannot truncate a structure of rank 0")
    rank = np.where(G.rank >= G.rS, G.rank - 1, G.rank)
    return RankedSet(G.ground, rank)


def free_extension(G: RankedSet, p) -> RankedSet:
    """Add p freely: it raises the rank of every non-spanning set."""
    ground = G.ground.plus(p)
    base = G.rank
    with_p = np.where(base == G.rS, base, base + 1)
    return RankedSet(ground, np.concatenate([base, with_p]))


def free_coextension(G: RankedSet, p) -> RankedSet:
    return dual(free_extension(dual(G), p))


def raise_to_full_rank(G: RankedSet) -> RankedSet:
    rank = G.rank.copy()
    rank[-1] = G.n
    return RankedSet(G.ground, rank)


def uniform_matroid(r: int, n: int, labels=None) -> RankedSet:
    if not (0 <= r <= n):
        raise BadParams(f"need 0 <= r <= n, got r={r}, n={n}")
    ground = GroundSet(tuple(labels) if labels is not None else default_labels(n))
    if ground.n != n:
        raise BadParams("label count does not match n")
    return RankedSet(ground, np.minimum(popcounts(n), r))


def _check_edges(vertices, edges):
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        raise BadGraph("duplicate vertex")
    vset = set(vs)
    labels = []
    for e in edges:
        if len(e) != 3:
            raise BadGraph(f"edge {e!r} must be (u, v, label)")
        u, v, lab = e
        if u not in vset or v not in vset:
            raise BadGraph(f"edge {lab!r} has an endpoint outside the vertex set")
        labels.append(str(lab))
    if len(set(labels)) != len(labels):
        raise BadGraph("edge labels must be distinct")
    return labels


def graphic_matroid(vertices, edges) -> RankedSet:
    """Cycle matroid: r(A) = |V(A)| - number of components of (V(A), A)."""
    labels = _check_edges(vertices, edges)
    m = len(labels)
    ends = [(u, v) for u, v, _ in edges]
    rank = np.zeros(1 << m, dtype=np.int64)
    for mask in range(1, 1 << m):
        parent = {}

        def find(a):
            while parent.setdefault(a, a) != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        r = 0
        for k in range(m):
            if mask >> k & 1:
                a, b = find(ends[k][0]), find(ends[k][1])
                if a != b:
                    parent[a] = b
                    r += 1
        rank[mask] = r
    return RankedSet(GroundSet(tuple(labels)), rank)


@dataclass(frozen=True)
class RootedGraph:
    vertices: tuple
    edges: tuple
    root: object

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        _check_edges(self.vertices, self.edges)
        if self.root not in self.vertices:
            raise BadGraph(f"root {self.root!r} is not a vertex")


def branching_feasible(RG: RootedGraph) -> FeasibleFamily:
    """Edge sets of subtrees that contain the root."""
    ground = GroundSet(tuple(str(e[2]) for e in RG.edges))
    ends = [(u, v) for u, v, _ in RG.edges]
    reached = {0: frozenset([RG.root])}
    frontier = [0]
    while frontier:
        nxt = []
        for F in frontier:
            verts = reached[F]
            for k, (u, v) in enumerate(ends):
                if F >> k & 1 or (u in verts) == (v in verts):
                    continue
                G = F | (1 << k)
                if G not in reached:
                    reached[G] = verts | {u, v}
                    nxt.append(G)
        frontier = nxt
    return FeasibleFamily(ground, frozenset(reached))


def branching_greedoid(RG: RootedGraph) -> RankedSet:
    return from_feasible_family(branching_feasible(RG))


def random_ranked_set(n: int, seed: int, labels=None) -> RankedSet:
    """Uniform r(A) in [0, |A|], with r(S) lifted to the maximum to force R1."""
    if not (1 <= n <= 12):
        raise BadParams("random_ranked_set supports 1 <= n <= 12")
    rng = np.random.default_rng(seed)
    pc = popcounts(n)
    rank = rng.integers(0, pc + 1)
    rank[0] = 0
    rank[-1] = rank.max()
    ground = GroundSet(tuple(labels) if labels is not None else default_labels(n))
    return RankedSet(ground, rank)
