"""Convex sets of antimatroids and the four concrete families.

Convex sets are complements of feasible sets.  The interior of a convex set
is always computed through the closure operator; the per-family descriptions
(subtree leaves, poset extremes, simplicial vertices, hull vertices) are
only used as cross-checks in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import networkx as nx
import numpy as np

from .bipoly import BiPoly, X, Y, binom
from .errors import (
    DimensionMismatch,
    DuplicatePoint,
    NotAntimatroid,
    NotAPoset,
    NotATree,
    NotChordal,
    NotConvex,
)
from .ranked import FeasibleFamily, GroundSet, RankedSet, bits, from_feasible_family, is_antimatroid, popcounts

__all__ = [
    "ConvexFamily",
    "ATable",
    "convex_family",
    "convex_from_sets",
    "convex_closure",
    "extreme_points",
    "interior",
    "a_table",
    "tutte_via_convex",
    "b_from_a",
    "family_identities",
    "unique_interior_sets",
    "b01_by_points",
    "tree_pruning",
    "tree_interior_edges",
    "Poset",
    "poset_double_shelling",
    "bottlenecks",
    "ChordalGraph",
    "chordal_simplicial",
    "chordal_blocks",
    "PointConfig",
    "point_set",
    "hull_member",
    "affine_dimension",
    "relative_interior_member",
    "family_beta",
    "f_sum",
]


class ConvexFamily:
    """Intersection-closed family of convex masks with a closure table."""

    def __init__(self, ground: GroundSet, convex):
        self.ground = ground
        self.convex = frozenset(int(c) for c in convex)
        full = ground.full
        if full not in self.convex:
            raise NotAntimatroid("the full set must be convex")
        is_cvx = np.zeros(1 << ground.n, dtype=bool)
        is_cvx[list(self.convex)] = True
        self._is_convex = is_cvx
        # cl(A) = A if convex, else the meet of cl(A + p) over p outside A
        cl = np.zeros(1 << ground.n, dtype=np.int64)
        for A in range(full, -1, -1):
            if is_cvx[A]:
                cl[A] = A
            else:
                acc = full
                for k in range(ground.n):
                    if not A >> k & 1:
                        acc &= int(cl[A | (1 << k)])
                cl[A] = acc
        self.closure = cl
        members = np.fromiter(self.convex, dtype=np.int64)
        for C in members:
            bad = np.flatnonzero(~is_cvx[members & C])
            if bad.size:
                D = int(members[bad[0]])
                raise NotAntimatroid(f"{ground.fmt(int(C))} and {ground.fmt(D)} meet in a non-convex set")

    @property
    def n(self):
        return self.ground.n

    def is_convex(self, A: int) -> bool:
        return bool(self._is_convex[A])

    def sorted(self):
        return sorted(self.convex, key=lambda m: (bin(m).count("1"), m))

    def feasible(self) -> FeasibleFamily:
        return FeasibleFamily(self.ground, frozenset(self.ground.full ^ C for C in self.convex))

    def __len__(self):
        return len(self.convex)


def convex_family(G: RankedSet) -> ConvexFamily:
    if not is_antimatroid(G):
        raise NotAntimatroid("convex sets are only defined here for antimatroids")
    feas = np.flatnonzero(G.rank == popcounts(G.n))
    return ConvexFamily(G.ground, {G.full ^ int(F) for F in feas})


def convex_from_sets(ground: GroundSet, convex) -> tuple:
    """RankedSet and ConvexFamily from an explicit list of convex masks."""
    cf = ConvexFamily(ground, convex)
    G = from_feasible_family(cf.feasible())
    ok = is_antimatroid(G)
    if not ok:
        raise NotAntimatroid(f"complements do not form an antimatroid: {ok.witness}")
    return G, cf


def convex_closure(CF: ConvexFamily, A: int) -> int:
    return int(CF.closure[A])


def extreme_points(CF: ConvexFamily, C: int) -> int:
    if not CF.is_convex(C):
        raise NotConvex(f"{CF.ground.fmt(C)} is not convex")
    ex = 0
    for k in bits(C):
        if not convex_closure(CF, C & ~(1 << k)) >> k & 1:
            ex |= 1 << k
    return ex


def interior(CF: ConvexFamily, C: int) -> int:
    return C & ~extreme_points(CF, C)


@dataclass(frozen=True)
class ATable:
    a: tuple  # a[i][j]: convex sets of size i with j interior points

    @property
    def f(self) -> tuple:
        return tuple(row[0] for row in self.a)

    def get(self, i: int, j: int) -> int:
        if 0 <= i < len(self.a) and 0 <= j < len(self.a[i]):
            return self.a[i][j]
        return 0

    @property
    def total(self) -> int:
        return sum(map(sum, self.a))

    @classmethod
    def from_rows(cls, n: int, rows: dict) -> "ATable":
        """Build from ``{j: [a_0j, a_1j, ...]}`` (rows of printed tables)."""
        a = [[0] * (n + 1) for _ in range(n + 1)]
        for j, row in rows.items():
            for i, v in enumerate(row):
                a[i][j] = v
        return cls(tuple(tuple(r) for r in a))


def a_table(CF: ConvexFamily) -> ATable:
    n = CF.n
    a = [[0] * (n + 1) for _ in range(n + 1)]
    for C in CF.convex:
        a[bin(C).count("1")][bin(interior(CF, C)).count("1")] += 1
    return ATable(tuple(tuple(r) for r in a))


def tutte_via_convex(CF: ConvexFamily) -> BiPoly:
    """Sum of (x-1)^|C| y^|int C| over convex sets."""
    xm1 = X - 1
    total = BiPoly()
    for C in CF.sorted():
        total = total + xm1 ** bin(C).count("1") * Y ** bin(interior(CF, C)).count("1")
    return total


def b_from_a(at: ATable, n: int) -> BiPoly:
    """b_ij = sum_{s >= i} (-1)^(s-i) C(s, i) a_sj."""
    terms = []
    for i in range(n + 1):
        for j in range(n + 1):
            b = sum((-1) ** (s - i) * binom(s, i) * at.get(s, j) for s in range(i, n + 1))
            if b:
                terms.append((i, j, b))
    return BiPoly.from_terms(terms)


def family_identities(at: ATable, n: int, kmax: int | None = None) -> dict:
    """k = 0, 1, 2 specializations plus the general sums for every k <= kmax.

    ``kmax`` defaults to ``n``; pass a smaller value for partial tables that
    only list a few interior counts.
    """
    f = [at.get(i, 0) for i in range(n + 1)]
    euler = sum((-1) ** i * f[i] for i in range(n + 1))
    beta_lhs = -sum((-1) ** i * i * f[i] for i in range(n + 1))
    beta_rhs = sum((-1) ** i * at.get(i, 1) for i in range(n + 1))
    k2 = sum(
        (-1) ** i * (binom(i + 1, 2) * f[i] + i * at.get(i, 1) + at.get(i, 2)) for i in range(n + 1)
    )
    kmax = n if kmax is None else kmax
    general = {}
    for k in range(kmax + 1):
        total = 0
        for i in range(k + 1):
            for j in range(k - i + 1):
                b = sum((-1) ** (s - i) * binom(s, i) * at.get(s, j) for s in range(i, n + 1))
                total += (-1) ** j * binom(k - i, j) * b
        general[k] = total
    # the sums vanish below k = n; at k = n they give I_n = 1 (full rank).
    # Above n nothing is claimed, so the k = 0, 1, 2 forms are only checked for k < n.
    want = {k: (1 if k == n else 0) for k in range(n + 1)}
    ok = (n < 1 or euler == 0) and (n < 2 or beta_lhs == beta_rhs) and (n < 3 or k2 == 0)
    return {
        "k0": euler,
        "k1": (beta_lhs, beta_rhs),
        "k2": k2,
        "general": general,
        "pass": ok and all(general[k] == want[k] for k in general if k <= n),
    }


def unique_interior_sets(CF: ConvexFamily, p) -> list:
    k = CF.ground.index(p)
    return [C for C in CF.sorted() if interior(CF, C) == 1 << k]


def b01_by_points(CF: ConvexFamily) -> int:
    """sum over points p, over convex C with int(C) = {p}, of (-1)^|C|."""
    return sum(
        (-1) ** bin(C).count("1") for p in CF.ground.labels for C in unique_interior_sets(CF, p)
    )


# -- trees ----------------------------------------------------------------


def _tree_graph(edges):
    T = nx.MultiGraph()
    labels = []
    for u, v, lab in edges:
        T.add_edge(u, v, key=str(lab))
        labels.append(str(lab))
    if len(set(labels)) != len(labels):
        raise NotATree("edge labels must be distinct")
    if T.number_of_edges() == 0 or not nx.is_tree(nx.Graph(T)) or T.number_of_edges() != T.number_of_nodes() - 1:
        raise NotATree("edges do not form a tree")
    return T, labels


def tree_pruning(edges) -> tuple:
    """Pruning antimatroid on tree edges: convex sets are subtrees."""
    edges = [tuple(e) for e in edges]
    _tree_graph(edges)
    ground = GroundSet(tuple(str(e[2]) for e in edges))
    ends = [(u, v) for u, v, _ in edges]
    convex = {0}
    for mask in range(1, 1 << len(edges)):
        H = nx.Graph()
        H.add_edges_from(ends[k] for k in bits(mask))
        if nx.is_connected(H):
            convex.add(mask)
    return convex_from_sets(ground, convex)


def tree_interior_edges(edges) -> int:
    """Edges with both endpoints of degree > 1."""
    edges = [tuple(e) for e in edges]
    T, _ = _tree_graph(edges)
    return sum(1 for u, v, _ in edges if T.degree(u) > 1 and T.degree(v) > 1)


# -- posets ---------------------------------------------------------------


class Poset:
    """Finite poset from cover (or any) relations, closed transitively."""

    def __init__(self, elements, relations=()):
        self.elements = tuple(str(e) for e in elements)
        if len(set(self.elements)) != len(self.elements):
            raise NotAPoset("duplicate elements")
        idx = {e: k for k, e in enumerate(self.elements)}
        n = len(self.elements)
        leq = [[i == j for j in range(n)] for i in range(n)]
        for a, b in relations:
            try:
                leq[idx[str(a)]][idx[str(b)]] = True
            except KeyError:
                raise NotAPoset(f"relation ({a}, {b}) names an unknown element") from None
        for k in range(n):
            for i in range(n):
                if leq[i][k]:
                    for j in range(n):
                        if leq[k][j]:
                            leq[i][j] = True
        for i in range(n):
            for j in range(i + 1, n):
                if leq[i][j] and leq[j][i]:
                    raise NotAPoset(f"{self.elements[i]} and {self.elements[j]} form a cycle")
        self.leq = tuple(tuple(r) for r in leq)

    @property
    def n(self):
        return len(self.elements)

    def comparable(self, i, j):
        return self.leq[i][j] or self.leq[j][i]

    def minimal(self, i):
        return not any(self.leq[j][i] for j in range(self.n) if j != i)

    def maximal(self, i):
        return not any(self.leq[i][j] for j in range(self.n) if j != i)


def poset_double_shelling(P: Poset) -> tuple:
    """Convex sets: complements of (order ideal) union (order filter).

    These are exactly the order-convex subsets.
    """
    n = P.n
    ground = GroundSet(P.elements)
    down = [sum(1 << j for j in range(n) if P.leq[j][i]) for i in range(n)]
    up = [sum(1 << j for j in range(n) if P.leq[i][j]) for i in range(n)]
    ideals = [m for m in range(1 << n) if all(down[i] & ~m == 0 for i in bits(m))]
    filters = [m for m in range(1 << n) if all(up[i] & ~m == 0 for i in bits(m))]
    feasible = {I | J for I in ideals for J in filters}
    convex = {ground.full ^ F for F in feasible}
    return convex_from_sets(ground, convex)


def bottlenecks(P: Poset) -> int:
    """Elements that are neither minimal nor maximal and comparable to all."""
    return sum(
        1
        for i in range(P.n)
        if not P.minimal(i) and not P.maximal(i) and all(P.comparable(i, j) for j in range(P.n))
    )


# -- chordal graphs -------------------------------------------------------


class ChordalGraph:
    """Graph with a verified perfect elimination ordering."""

    def __init__(self, vertices, edges):
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise NotChordal("duplicate vertices")
        idx = {v: k for k, v in enumerate(self.vertices)}
        self.adj = [0] * len(self.vertices)
        for u, v in edges:
            a, b = idx[str(u)], idx[str(v)]
            if a == b:
                raise NotChordal("self-loops are not allowed")
            self.adj[a] |= 1 << b
            self.adj[b] |= 1 << a
        self.peo = self._mcs_peo()

    @property
    def n(self):
        return len(self.vertices)

    def _mcs_peo(self):
        # maximum cardinality search; reversed visit order is a PEO iff chordal
        n = self.n
        weight = [0] * n
        visited = 0
        order = []
        for _ in range(n):
            v = max((k for k in range(n) if not visited >> k & 1), key=lambda k: (weight[k], -k))
            order.append(v)
            visited |= 1 << v
            for w in bits(self.adj[v] & ~visited):
                weight[w] += 1
        peo = order[::-1]
        pos = {v: k for k, v in enumerate(peo)}
        for v in peo:
            later = [w for w in bits(self.adj[v]) if pos[w] > pos[v]]
            if later:
                parent = min(later, key=pos.get)
                need = sum(1 << w for w in later if w != parent)
                if need & ~self.adj[parent]:
                    raise NotChordal("graph has a chordless cycle")
        return tuple(self.vertices[v] for v in peo)

    def simplicial(self, v: int, alive: int) -> bool:
        nb = self.adj[v] & alive & ~(1 << v)
        return all((self.adj[w] | (1 << w)) & nb == nb for w in bits(nb))

    def networkx(self):
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        for i in range(self.n):
            for j in bits(self.adj[i]):
                if i < j:
                    g.add_edge(self.vertices[i], self.vertices[j])
        return g


def chordal_simplicial(CG: ChordalGraph) -> tuple:
    """Simplicial shelling: feasible sets are removable by simplicial deletions."""
    full = (1 << CG.n) - 1
    feasible = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for F in frontier:
            alive = full & ~F
            for v in bits(alive):
                if CG.simplicial(v, alive):
                    H = F | (1 << v)
                    if H not in feasible:
                        feasible.add(H)
                        nxt.append(H)
        frontier = nxt
    ground = GroundSet(CG.vertices)
    return convex_from_sets(ground, {full ^ F for F in feasible})


def chordal_blocks(CG: ChordalGraph) -> int:
    """Number of 2-connected blocks (bridges count as blocks)."""
    return sum(1 for _ in nx.biconnected_components(CG.networkx()))


# -- point configurations ------------------------------------------------


def _rank(rows) -> int:
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _solve_exact(A, b):
    """Unique solution of A x = b over the rationals, or None."""
    rows = [list(r) + [v] for r, v in zip(A, b)]
    ncols = len(A[0])
    r = 0
    pivcols = []
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivcols.append(c)
        r += 1
    if any(all(v == 0 for v in row[:-1]) and row[-1] != 0 for row in rows):
        return None
    if len(pivcols) < ncols:
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivcols):
        x[c] = rows[i][-1]
    return x


def affine_dimension(points) -> int:
    pts = [[Fraction(c) for c in p] for p in points]
    if len(pts) <= 1:
        return 0
    base = pts[0]
    return _rank([[a - b for a, b in zip(p, base)] for p in pts[1:]])


def _in_simplex(q, simplex) -> bool:
    """q in conv(simplex) for affinely independent points (exact)."""
    d = len(q)
    A = [[pt[r] for pt in simplex] for r in range(d)] + [[Fraction(1)] * len(simplex)]
    lam = _solve_exact(A, list(q) + [Fraction(1)])
    return lam is not None and all(v >= 0 for v in lam)


def hull_member(q, C) -> bool:
    """Exact test of q in conv(C) by Caratheodory over independent subsets."""
    q = [Fraction(c) for c in q]
    pts = [[Fraction(c) for c in p] for p in C]
    if not pts:
        return False
    d = len(q)
    for k in range(1, min(d + 1, len(pts)) + 1):
        for T in combinations(pts, k):
            if affine_dimension(T) == k - 1 and _in_simplex(q, T):
                return True
    return False


def _affine_coords(pts):
    """Coordinates of ``pts`` in an affine frame of their own hull."""
    base = pts[0]
    dirs = []
    for p in pts[1:]:
        v = [a - b for a, b in zip(p, base)]
        if _rank(dirs + [v]) > len(dirs):
            dirs.append(v)
    if not dirs:
        return [[] for _ in pts]
    A = [[v[r] for v in dirs] for r in range(len(base))]
    return [_solve_exact(A, [a - b for a, b in zip(p, base)]) for p in pts]


def _hyperplane(simplex):
    """(w, c) with w.x = c through D affinely independent points of R^D."""
    D = len(simplex)
    rows = [list(x) + [Fraction(-1)] for x in simplex]
    # one-dimensional null space: fix the free column to 1 and solve
    for free in range(D + 1):
        A = [[row[c] for c in range(D + 1) if c != free] for row in rows]
        sol = _solve_exact(A, [-row[free] for row in rows])
        if sol is not None:
            sol.insert(free, Fraction(1))
            return sol[:D], sol[D]
    raise ValueError("points are not affinely independent")


def relative_interior_member(q, P) -> bool:
    """Exact test of q in the relative interior of conv(P).

    q must lie in conv(P) and on no supporting hyperplane (taken inside the
    affine hull) spanned by affinely independent points of P.
    """
    q = tuple(Fraction(c) for c in q)
    pts = [tuple(Fraction(c) for c in p) for p in P]
    if not hull_member(q, pts):
        return False
    loc = _affine_coords(pts + [q])
    D = len(loc[0])
    if D == 0:
        return True
    qq, rest = loc[-1], loc[:-1]
    for T in combinations(rest, D):
        if affine_dimension(T) != D - 1:
            continue
        w, c = _hyperplane(T)
        vals = [sum(a * b for a, b in zip(w, x)) - c for x in rest]
        supporting = all(v >= 0 for v in vals) or all(v <= 0 for v in vals)
        if supporting and sum(a * b for a, b in zip(w, qq)) == c:
            return False
    return True


class PointConfig:
    def __init__(self, coords: dict, dim: int | None = None):
        self.labels = tuple(str(k) for k in coords)
        self.coords = tuple(tuple(Fraction(c) for c in coords[k]) for k in coords)
        dims = {len(c) for c in self.coords}
        if len(dims) > 1 or (dim is not None and dims and dims != {dim}):
            raise DimensionMismatch("all points must have the same dimension")
        self.dim = dim if dim is not None else (dims.pop() if dims else 0)
        if len(set(self.coords)) != len(self.coords):
            raise DuplicatePoint("two labels share a coordinate")

    @property
    def n(self):
        return len(self.labels)

    def relative_interior(self) -> int:
        """Mask of points in the relative interior of the hull of the whole set."""
        out = 0
        for k in range(self.n):
            if relative_interior_member(self.coords[k], self.coords):
                out |= 1 << k
        return out

    def interior_points(self) -> int:
        """Mask of points lying in the hull of the others."""
        out = 0
        for k in range(self.n):
            rest = [c for t, c in enumerate(self.coords) if t != k]
            if hull_member(self.coords[k], rest):
                out |= 1 << k
        return out


def point_set(PC: PointConfig) -> tuple:
    """Convex sets C with conv(C) meeting the configuration exactly in C."""
    n, d = PC.n, PC.dim
    # blockers[q]: masks T of independent points with q in conv(T)
    blockers = []
    for q in range(n):
        others = [k for k in range(n) if k != q]
        found = []
        for size in range(1, min(d + 1, len(others)) + 1):
            for T in combinations(others, size):
                pts = [PC.coords[k] for k in T]
                if affine_dimension(pts) == size - 1 and _in_simplex(PC.coords[q], pts):
                    found.append(sum(1 << k for k in T))
        blockers.append(found)
    convex = set()
    for C in range(1 << n):
        if all(not any(T & ~C == 0 for T in blockers[q]) for q in range(n) if not C >> q & 1):
            convex.add(C)
    return convex_from_sets(GroundSet(PC.labels), convex)


# -- beta invariant predictions per family --------------------------------


def family_beta(source) -> dict:
    """Predicted sum (-1)^i i f_i and unique-interior sum for a family instance.

    ``source`` is a tree edge list, a Poset, a ChordalGraph or a PointConfig.
    For point sets the count is of points in the relative interior of the
    hull of the whole set, and d is its affine dimension.
    """
    if isinstance(source, Poset):
        b = bottlenecks(source)
        return {"invariant": "bottlenecks", "value": b, "f_sum": b, "unique_interior_sum": -b}
    if isinstance(source, ChordalGraph):
        b = chordal_blocks(source)
        return {"invariant": "blocks", "value": b, "f_sum": b - 1, "unique_interior_sum": 1 - b}
    if isinstance(source, PointConfig):
        k = bin(source.relative_interior()).count("1")
        d = affine_dimension(list(source.coords))
        return {
            "invariant": "relative interior points",
            "value": k,
            "dimension": d,
            "f_sum": -((-1) ** d) * k,
            "unique_interior_sum": (-1) ** d * k,
        }
    m = tree_interior_edges(source)
    return {"invariant": "interior edges", "value": m, "f_sum": m, "unique_interior_sum": -m}


def f_sum(at: ATable) -> int:
    """sum (-1)^i i f_i."""
    return sum((-1) ** i * i * at.get(i, 0) for i in range(len(at.a)))
