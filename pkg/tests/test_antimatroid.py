from fractions import Fraction
from itertools import combinations
from math import comb

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import closure_by_definition, lp_hull_member, lp_relative_interior
from rankedtutte import BiPoly, tutte_expansion
from rankedtutte.antimatroid import (
    ATable,
    ChordalGraph,
    PointConfig,
    Poset,
    a_table,
    affine_dimension,
    b01_by_points,
    b_from_a,
    bottlenecks,
    chordal_blocks,
    chordal_simplicial,
    convex_closure,
    convex_family,
    convex_from_sets,
    extreme_points,
    f_sum,
    family_beta,
    family_identities,
    hull_member,
    interior,
    point_set,
    poset_double_shelling,
    relative_interior_member,
    tree_interior_edges,
    tree_pruning,
    tutte_via_convex,
    unique_interior_sets,
)
from rankedtutte.errors import DimensionMismatch, DuplicatePoint, NotAntimatroid, NotAPoset, NotATree, NotChordal, NotConvex
from rankedtutte.fixtures import caterpillar_edges, printed, structure
from rankedtutte.generators import random_chordal, random_points, random_poset, random_tree_edges
from rankedtutte.ranked import GroundSet, RankedSet

P3 = [("u", "v", "e1"), ("v", "w", "e2"), ("w", "z", "e3")]
SQUARE_CENTER = {"a": (0, 0), "b": (2, 0), "c": (2, 2), "d": (0, 2), "o": (1, 1)}


def masks(CF, *names):
    return sorted(CF.ground.mask(list(s)) for s in names)


def test_convex_family_badiden():
    CF = convex_family(structure("badiden"))
    got = sorted("".join(CF.ground.subset(C)) for C in CF.convex)
    assert got == sorted(["", "2", "1", "3", "12", "23", "123"])
    with pytest.raises(NotAntimatroid):
        convex_family(structure("pos"))


def test_free_structure_all_convex():
    G = RankedSet(("a", "b", "c"), [bin(m).count("1") for m in range(8)])
    assert len(convex_family(G)) == 8


def test_path_pruning_is_badiden():
    G, CF = tree_pruning(P3)
    assert tutte_expansion(G) == printed("badiden")
    assert len(CF) == 7
    e = CF.ground.mask
    assert convex_closure(CF, e(["e1", "e3"])) == CF.ground.full
    assert convex_closure(CF, e(["e1", "e2"])) == e(["e1", "e2"])
    assert convex_closure(CF, 0) == 0
    full = CF.ground.full
    assert extreme_points(CF, full) == e(["e1", "e3"])
    assert interior(CF, full) == e(["e2"])
    assert extreme_points(CF, e(["e2"])) == e(["e2"])
    with pytest.raises(NotConvex):
        extreme_points(CF, e(["e1", "e3"]))


def test_path_a_table_and_transform():
    _, CF = tree_pruning(P3)
    at = a_table(CF)
    assert at.get(0, 0) == 1 and at.get(1, 0) == 3 and at.get(2, 0) == 2 and at.get(3, 1) == 1
    assert at.total == 7
    b = b_from_a(at, 3)
    assert b[1, 0] == -1
    assert b == printed("badiden") == tutte_via_convex(CF)
    fi = family_identities(at, 3)
    assert fi["k0"] == 0 and fi["k1"] == (-1, -1) and fi["pass"]
    assert [CF.ground.fmt(C) for C in unique_interior_sets(CF, "e2")] == ["{e1,e2,e3}"]
    assert unique_interior_sets(CF, "e1") == []
    assert b01_by_points(CF) == -1


def test_b_from_a_small():
    at = ATable(((1, 0, 0), (2, 0, 0), (1, 0, 0)))
    assert b_from_a(at, 2) == BiPoly.parse("x^2")
    assert b_from_a(ATable(((1,),)), 0) == BiPoly.constant(1)


def test_single_point():
    G, CF = point_set(PointConfig({"p": (0, 0)}))
    assert tutte_via_convex(CF) == BiPoly.parse("x")


def test_star_all_convex():
    star = [("o", "a", "1"), ("o", "b", "2"), ("o", "c", "3")]
    G, CF = tree_pruning(star)
    assert len(CF) == 8 and tutte_expansion(G) == BiPoly.parse("x^3")
    assert tree_interior_edges(star) == 0
    assert tree_interior_edges(P3) == 1


def test_caterpillar():
    G, CF = tree_pruning(caterpillar_edges())
    at = a_table(CF)
    assert at.f[:4] == (1, 9, 11, 3) and all(v == 0 for v in at.f[4:])
    assert tree_interior_edges(caterpillar_edges()) == 4
    assert b01_by_points(CF) == -4


def test_tree_errors():
    with pytest.raises(NotATree):
        tree_pruning([("a", "b", "1"), ("b", "c", "2"), ("c", "a", "3")])
    with pytest.raises(NotATree):
        tree_pruning([("a", "b", "1"), ("c", "d", "2")])


def test_posets():
    G, CF = poset_double_shelling(Poset("abc"))
    assert len(CF) == 8
    chain = Poset("abc", [("a", "b"), ("b", "c")])
    G, CF = poset_double_shelling(chain)
    assert not CF.is_convex(CF.ground.mask(["a", "c"]))
    assert bottlenecks(chain) == 1
    assert b01_by_points(CF) == -1
    assert bottlenecks(Poset("abc")) == 0
    diamond = Poset("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
    assert bottlenecks(diamond) == 0
    with pytest.raises(NotAPoset):
        Poset("ab", [("a", "b"), ("b", "a")])
    with pytest.raises(NotAPoset):
        Poset("ab", [("a", "z")])


def test_chordal_examples():
    K3 = ChordalGraph("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    G, CF = chordal_simplicial(K3)
    assert len(CF) == 8 and chordal_blocks(K3) == 1
    at = a_table(CF)
    assert at.f == (1, 3, 3, 1) and f_sum(at) == 0
    path = ChordalGraph("abc", [("a", "b"), ("b", "c")])
    G, CF = chordal_simplicial(path)
    feas = sorted("".join(CF.ground.subset(CF.ground.full ^ C)) for C in CF.convex)
    # by hand: a and c are simplicial; after either, b becomes simplicial
    assert feas == sorted(["", "a", "c", "ab", "ac", "bc", "abc"])
    assert not CF.is_convex(CF.ground.mask(["a", "c"]))
    assert chordal_blocks(path) == 2
    bowtie = ChordalGraph("vabcd", [("v", "a"), ("v", "b"), ("a", "b"), ("v", "c"), ("v", "d"), ("c", "d")])
    G, CF = chordal_simplicial(bowtie)
    assert chordal_blocks(bowtie) == 2 and b01_by_points(CF) == -1
    with pytest.raises(NotChordal):
        ChordalGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


def _shelling_oracle(CG):
    g = CG.networkx()
    out = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for F in frontier:
            H = g.subgraph(set(g) - F)
            for v in H:
                nb = list(H[v])
                if all(H.has_edge(a, b) for a, b in combinations(nb, 2)):
                    F2 = F | {v}
                    if F2 not in out:
                        out.add(F2)
                        nxt.append(F2)
        frontier = nxt
    return out


@pytest.mark.parametrize("seed", range(15))
def test_chordal_feasible_vs_networkx_oracle(seed):
    CG = random_chordal(int(np.random.default_rng(seed).integers(2, 8)), np.random.default_rng(seed))
    assert nx.is_chordal(CG.networkx())
    _, CF = chordal_simplicial(CG)
    feas = {frozenset(CF.ground.subset(CF.ground.full ^ C)) for C in CF.convex}
    assert feas == _shelling_oracle(CG)


def test_square_center():
    PC = PointConfig(SQUARE_CENTER)
    G, CF = point_set(PC)
    g = CF.ground
    full = g.full
    assert interior(CF, full) == g.mask(["o"])
    at = a_table(CF)
    assert at.f[:3] == (1, 5, 8)
    assert not CF.is_convex(g.mask(["a", "c"])) and not CF.is_convex(g.mask(["b", "d"]))
    U = unique_interior_sets(CF, "o")
    sizes = sorted(bin(C).count("1") for C in U)
    assert sizes == [3, 3, 4, 4, 4, 4, 5]
    assert b01_by_points(CF) == 1 == (-1) ** 2 * 1
    assert family_identities(at, 5)["k2"] == 0
    assert PC.relative_interior() == g.mask(["o"])


def test_point_examples():
    _, CF = point_set(PointConfig({"p": (0, 0), "q": (1, 0), "r": (0, 1)}))
    assert len(CF) == 8
    _, CF = point_set(PointConfig({"p": (0, 0), "q": (1, 1), "r": (2, 2)}))
    assert not CF.is_convex(CF.ground.mask(["p", "r"]))
    with pytest.raises(DuplicatePoint):
        PointConfig({"p": (0, 0), "q": (0, 0)})
    with pytest.raises(DimensionMismatch):
        PointConfig({"p": (0, 0), "q": (0, 0, 1)})


def test_hull_member_examples():
    assert hull_member((1, 1), [(0, 0), (2, 2)])
    assert hull_member((1, 1), [(0, 0), (2, 0), (0, 2)])
    assert not hull_member((3, 3), [(0, 0), (1, 0), (1, 1), (0, 1)])
    assert hull_member((Fraction(1, 3), Fraction(1, 3)), [(0, 0), (1, 0), (0, 1)])


def test_edge_midpoint_is_not_relative_interior():
    # closure interior and relative interior differ on the hull boundary
    pts = {"a": (0, 0), "b": (2, 0), "c": (2, 2), "d": (0, 2), "m": (1, 0)}
    PC = PointConfig(pts)
    G, CF = point_set(PC)
    assert interior(CF, CF.ground.full) == CF.ground.mask(["m"])
    assert PC.relative_interior() == 0
    fb = family_beta(PC)
    assert fb["value"] == 0
    assert b01_by_points(CF) == fb["unique_interior_sum"] == 0
    assert f_sum(a_table(CF)) == fb["f_sum"] == 0


@given(st.integers(1, 3), st.integers(3, 7), st.integers(0, 2**32 - 1))
def test_exact_geometry_vs_lp(d, n, seed):
    PC = random_points(n, d, np.random.default_rng(seed))
    pts = list(PC.coords)
    for k, q in enumerate(pts):
        rest = pts[:k] + pts[k + 1 :]
        assert hull_member(q, rest) == lp_hull_member(q, rest)
        assert relative_interior_member(q, pts) == lp_relative_interior(q, pts)


def test_affine_dimension():
    assert affine_dimension([(0, 0), (1, 1), (2, 2)]) == 1
    assert affine_dimension([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 3
    assert affine_dimension([(5,)]) == 0


def _instance(kind, rng):
    if kind == "tree":
        src = random_tree_edges(int(rng.integers(2, 10)), rng)
        return src, tree_pruning(src)
    if kind == "poset":
        src = random_poset(int(rng.integers(3, 8)), rng)
        return src, poset_double_shelling(src)
    if kind == "chordal":
        src = random_chordal(int(rng.integers(3, 9)), rng)
        return src, chordal_simplicial(src)
    src = random_points(int(rng.integers(3, 9)), int(rng.integers(1, 4)), rng)
    return src, point_set(src)


@pytest.mark.parametrize("kind", ["tree", "poset", "chordal", "points"])
@pytest.mark.parametrize("seed", range(10))
def test_family_theorems(kind, seed):
    rng = np.random.default_rng(1000 * seed + len(kind))
    src, (G, CF) = _instance(kind, rng)
    n = CF.n
    at = a_table(CF)
    t = tutte_expansion(G)
    assert tutte_via_convex(CF) == t
    assert b_from_a(at, n) == t
    fi = family_identities(at, n)
    assert fi["pass"], fi
    assert fi["k0"] == 0
    # the k = 2 form is I_2, which vanishes only below n
    assert fi["k2"] == (0 if n > 2 else 1)
    assert t[0, 1] == t[1, 0]
    fb = family_beta(src)
    assert f_sum(at) == fb["f_sum"]
    assert b01_by_points(CF) == fb["unique_interior_sum"] == t[0, 1]


@pytest.mark.parametrize("kind", ["tree", "poset", "chordal", "points"])
@pytest.mark.parametrize("seed", range(6))
def test_closure_and_interior_oracles(kind, seed):
    rng = np.random.default_rng(77 + seed)
    src, (G, CF) = _instance(kind, rng)
    full = CF.ground.full
    convex = list(CF.convex)
    for A in range(1 << CF.n):
        assert convex_closure(CF, A) == closure_by_definition(convex, A, full)
    for C in convex:
        ex = extreme_points(CF, C)
        if C:
            assert ex  # every nonempty convex set has an extreme point
        members = [k for k in range(CF.n) if C >> k & 1]
        if kind == "tree":
            ends = [src[k][:2] for k in members]
            H = nx.MultiGraph(ends)
            want = sum(1 << k for k, (u, v) in zip(members, ends) if H.degree(u) == 1 or H.degree(v) == 1)
        elif kind == "poset":
            leq = src.leq
            want = sum(
                1 << k
                for k in members
                if not any(leq[j][k] for j in members if j != k) or not any(leq[k][j] for j in members if j != k)
            )
        elif kind == "chordal":
            H = src.networkx().subgraph([CF.ground.labels[k] for k in members])
            want = sum(
                1 << k
                for k in members
                if all(H.has_edge(a, b) for a, b in combinations(list(H[CF.ground.labels[k]]), 2))
            )
        else:
            want = sum(
                1 << k
                for k in members
                if len(members) == 1 or not lp_hull_member(src.coords[k], [src.coords[j] for j in members if j != k])
            )
        assert ex == want


def test_tree_vertices_as_chordal():
    # a tree on n vertices as a chordal graph: b_01 = 2 - n, blocks = n - 1
    rng = np.random.default_rng(5)
    for _ in range(10):
        edges = random_tree_edges(int(rng.integers(2, 8)), rng)
        verts = sorted({u for u, _, _ in edges} | {v for _, v, _ in edges})
        CG = ChordalGraph(verts, [(u, v) for u, v, _ in edges])
        G, CF = chordal_simplicial(CG)
        n = len(verts)
        assert chordal_blocks(CG) == n - 1
        assert b01_by_points(CF) == 2 - n
        deg = {v: 0 for v in verts}
        for u, v, _ in edges:
            deg[u] += 1
            deg[v] += 1
        per_vertex = sum(sum((-1) ** (i - 1) * comb(d, i) for i in range(2, d + 1)) for d in deg.values())
        assert per_vertex == 2 - n


def test_convex_from_sets_rejects():
    g = GroundSet(("a", "b", "c"))
    with pytest.raises(NotAntimatroid):
        convex_from_sets(g, [0, 0b011, 0b110, 0b111])
