"""Exhaustive small searches: greedoids with given bases, matroids with given Tutte polynomial."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

import numpy as np

from .bipoly import BiPoly, X, Y, binom
from .constructions import contract, default_labels, delete
from .errors import BadParams, Exhausted
from .ranked import FeasibleFamily, GroundSet, RankedSet, bits, feasible_axioms_check, is_matroid

__all__ = [
    "SearchBudget",
    "BasisSearch",
    "is_greedoid_basis_family",
    "enumerate_matroids",
    "find_matroids_with_tutte",
    "s_counts",
    "matroid_minor_elements",
    "isomorphic",
]


@dataclass(frozen=True)
class SearchBudget:
    max_n: int = 6
    node_limit: int = 10**8
    deterministic: bool = True

    def __post_init__(self):
        if not 1 <= self.max_n <= 6:
            raise BadParams("max_n must be between 1 and 6")
        if self.node_limit < 1:
            raise BadParams("node_limit must be positive")


class _Counter:
    def __init__(self, budget: SearchBudget):
        self.limit = budget.node_limit
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.limit:
            raise Exhausted(f"node limit {self.limit} reached")


# -- greedoid realizability of a basis family ----------------------------


@dataclass
class BasisSearch:
    realizable: bool
    witness: FeasibleFamily | None
    trace: list = field(default_factory=list)
    dead_ends: int = 0
    nodes: int = 0

    def to_json(self) -> dict:
        out = {"realizable": self.realizable, "nodes": self.nodes, "dead_ends": self.dead_ends}
        if self.witness is not None:
            out["witness"] = self.witness.as_labels()
        else:
            out["refutation"] = self.trace
        return out


def _as_masks(ground: GroundSet, sets):
    out = []
    for s in sets:
        out.append(int(s) if isinstance(s, (int, np.integer)) else ground.mask(s))
    return out


def is_greedoid_basis_family(ground, bases, budget: SearchBudget | None = None, trace_limit: int = 64) -> BasisSearch:
    """Is there a greedoid on ``ground`` whose bases are exactly ``bases``?

    Every feasible set of a greedoid augments to a basis, so only subsets of
    the given bases can be feasible.  The search decides, layer by layer in
    size, which candidates are feasible; a chosen set must be accessible from
    the layer below, and a finished layer must satisfy augmentation against
    the layer below (for accessible systems this one-step form implies the
    full axiom).  The bases themselves form the top layer.
    """
    budget = budget or SearchBudget()
    if not isinstance(ground, GroundSet):
        ground = GroundSet(tuple(ground))
    B = sorted(set(_as_masks(ground, bases)))
    if not B:
        raise BadParams("basis family is empty")
    for P, Q in combinations(B, 2):
        if P & Q in (P, Q):
            raise BadParams(f"bases {ground.fmt(P)} and {ground.fmt(Q)} are comparable")
    fmt = ground.fmt
    sizes = {bin(b).count("1") for b in B}
    if len(sizes) > 1:
        return BasisSearch(False, None, [{"violation": "bases of different sizes", "sizes": sorted(sizes)}], 1, 0)
    rho = sizes.pop()

    layers = [[] for _ in range(rho + 1)]
    seen = set()
    for b in B:
        members = list(bits(b))
        for k in range(rho + 1):
            for T in combinations(members, k):
                m = sum(1 << t for t in T)
                if m not in seen:
                    seen.add(m)
                    layers[k].append(m)
    for L in layers:
        L.sort()

    counter = _Counter(budget)
    trace = []
    dead = [0]

    def fail(record):
        dead[0] += 1
        if len(trace) < trace_limit:
            trace.append(record)

    def augment_ok(lower, upper, F):
        for Ym in lower:
            for Xm in upper:
                if not any((Ym | (1 << x)) in F for x in bits(Xm & ~Ym)):
                    return (Ym, Xm)
        return None

    def close_layer(k, F, chosen):
        bad = augment_ok(chosen[k - 1], chosen[k], F)
        if bad is not None:
            Ym, Xm = bad
            fail({
                "layer": k,
                "feasible": [fmt(m) for m in sorted(F, key=lambda m: (bin(m).count("1"), m))],
                "violation": f"augmentation: {fmt(Ym)} cannot grow from {fmt(Xm)}",
            })
            return False
        return True

    def accessible(m, F):
        return any((m & ~(1 << x)) in F for x in bits(m))

    def search(k, pos, F, chosen):
        counter.tick()
        if k == rho:
            for m in layers[rho]:
                if not accessible(m, F):
                    fail({
                        "layer": k,
                        "feasible": [fmt(x) for x in sorted(F, key=lambda m: (bin(m).count("1"), m))],
                        "violation": f"{fmt(m)} is inaccessible",
                    })
                    return None
            F2 = F | set(layers[rho])
            chosen2 = chosen[:rho] + [list(layers[rho])]
            if not close_layer(k, F2, chosen2):
                return None
            return F2
        if pos == len(layers[k]):
            if not close_layer(k, F, chosen):
                return None
            return search(k + 1, 0, F, chosen + [[]])
        m = layers[k][pos]
        # include first, so witnesses tend to be large families
        if accessible(m, F):
            chosen[k].append(m)
            F.add(m)
            got = search(k, pos + 1, F, chosen)
            F.discard(m)
            chosen[k].pop()
            if got is not None:
                return got
        return search(k, pos + 1, F, chosen)

    if rho == 0:
        result = {0}
    else:
        result = search(1, 0, {0}, [[0], []])
    if result is None:
        return BasisSearch(False, None, trace, dead[0], counter.nodes)
    witness = FeasibleFamily(ground, frozenset(result))
    chk = feasible_axioms_check(witness)
    assert chk, f"search produced a family failing the greedoid axioms: {witness.as_labels()} {chk.witness}"
    return BasisSearch(True, witness, [], dead[0], counter.nodes)


# -- matroid enumeration --------------------------------------------------


def s_counts(p: BiPoly):
    """Corank-nullity grid S(u, v) = T(u + 1, v + 1) as a list of rows."""
    total = BiPoly()
    for i, j, c in p.terms():
        total = total + BiPoly.constant(c) * (X + 1) ** i * (Y + 1) ** j
    return [list(r) for r in total.coeffs]


def _search_matroids(n, r, need, counter):
    """Depth-first fill of a rank table in (size, mask) order.

    ``need[k][rho]``, when given, is the exact number of k-sets of rank rho.
    """
    order = sorted(range(1 << n), key=lambda m: (bin(m).count("1"), m))
    size = [bin(m).count("1") for m in range(1 << n)]
    full = (1 << n) - 1
    rank = [0] * (1 << n)
    have = [[0] * (n + 1) for _ in range(n + 1)]
    # precomputed neighbours: singles and pairs of each mask
    singles = [[m & ~(1 << a) for a in bits(m)] for m in range(1 << n)]
    pairs = [
        [(m & ~(1 << a), m & ~(1 << b), m & ~(1 << a) & ~(1 << b)) for a, b in combinations(list(bits(m)), 2)]
        for m in range(1 << n)
    ]

    def rec(pos):
        counter.tick()
        if pos == len(order):
            yield list(rank)
            return
        m = order[pos]
        k = size[m]
        sub = [rank[s] for s in singles[m]]
        lo, hi = max(sub), min(sub) + 1
        for a, b, ab in pairs[m]:
            hi = min(hi, rank[a] + rank[b] - rank[ab])
        if r is not None:
            hi = min(hi, r)
            lo = max(lo, r - (n - k))
            if m == full:
                lo = max(lo, r)
        for v in range(lo, hi + 1):
            if need is not None:
                if have[k][v] >= need[k][v]:
                    continue
                have[k][v] += 1
            rank[m] = v
            yield from rec(pos + 1)
            if need is not None:
                have[k][v] -= 1

    rank[0] = 0
    if need is not None:
        if need[0][0] != 1:
            return
        have[0][0] = 1
    yield from rec(1)


def enumerate_matroids(n: int, r: int | None = None, budget: SearchBudget | None = None, labels=None):
    """All matroid rank tables on a labeled n-set, in a fixed order."""
    budget = budget or SearchBudget()
    if not 0 <= n <= budget.max_n:
        raise BadParams(f"n must be between 0 and {budget.max_n}")
    if r is not None and not 0 <= r <= n:
        raise BadParams("need 0 <= r <= n")
    ground = GroundSet(tuple(labels) if labels is not None else default_labels(n))
    if n == 0:
        if r in (None, 0):
            yield RankedSet(ground, np.zeros(1, dtype=np.int64))
        return
    counter = _Counter(budget)
    for table in _search_matroids(n, r, None, counter):
        M = RankedSet(ground, np.array(table, dtype=np.int64))
        assert is_matroid(M)
        yield M


def find_matroids_with_tutte(p: BiPoly, n: int, budget: SearchBudget | None = None, labels=None) -> list:
    """Every matroid on n labeled elements with Tutte polynomial p.

    For a matroid, deg_x T = r(S), and the corank-nullity grid fixes how many
    k-subsets have each rank; both are used to prune the enumeration.
    """
    from .tutte import tutte_expansion

    budget = budget or SearchBudget()
    if not 0 <= n <= budget.max_n:
        raise BadParams(f"n must be between 0 and {budget.max_n}")
    ground = GroundSet(tuple(labels) if labels is not None else default_labels(n))
    r = p.dx
    if r > n:
        return []
    S = s_counts(p)
    need = [[0] * (n + 1) for _ in range(n + 1)]
    for i, row in enumerate(S):
        for j, c in enumerate(row):
            if c == 0:
                continue
            rho, k = r - i, j + r - i
            if c < 0 or rho < 0 or k > n:
                return []
            need[k][rho] = c
    if any(sum(need[k]) != binom(n, k) for k in range(n + 1)):
        return []
    if n == 0:
        return [RankedSet(ground, np.zeros(1, dtype=np.int64))] if p == BiPoly.constant(1) else []
    counter = _Counter(budget)
    out = []
    for table in _search_matroids(n, r, need, counter):
        M = RankedSet(ground, np.array(table, dtype=np.int64))
        if is_matroid(M) and tutte_expansion(M) == p:
            out.append(M)
    out.sort(key=lambda M: M.rank.tobytes())
    return out


def matroid_minor_elements(G: RankedSet) -> list:
    """Elements p for which both G - p and G / p are matroids."""
    return [p for p in G.labels if is_matroid(delete(G, p)) and is_matroid(contract(G, p))]


def isomorphic(A: RankedSet, B: RankedSet) -> bool:
    """Brute force over relabelings; meant for n <= 7."""
    if A.n != B.n or sorted(A.rank.tolist()) != sorted(B.rank.tolist()):
        return False
    n = A.n
    masks = np.arange(1 << n)
    for perm in permutations(range(n)):
        image = np.zeros_like(masks)
        for k, t in enumerate(perm):
            image |= ((masks >> k) & 1) << t
        if np.array_equal(A.rank, B.rank[image]):
            return True
    return False
