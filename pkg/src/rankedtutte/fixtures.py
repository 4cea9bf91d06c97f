"""Worked examples with printed values, runnable as checks.

Each fixture returns a list of ``(claim, ok, detail)`` rows.  Printed
polynomials live in ``PRINTED`` so that a corrupted entry shows up as a
failing row.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .antimatroid import (
    ATable,
    a_table,
    b01_by_points,
    family_identities,
    tree_interior_edges,
    tree_pruning,
    tutte_via_convex,
)
from .bipoly import BiPoly, i_k
from .constructions import RootedGraph, branching_feasible, contract, delete, truncate, uniform_matroid
from .identities import a_coefficients, matroid_i2_simplified, n_matrix, table4_identities, verify_affine
from .ranked import (
    FeasibleFamily,
    GroundSet,
    bases,
    feasible_family,
    from_feasible_family,
    is_antimatroid,
    is_greedoid,
    is_matroid,
)
from .realizability import (
    find_matroids_with_tutte,
    is_greedoid_basis_family,
    isomorphic,
    matroid_minor_elements,
)
from .tutte import tutte_expansion, tutte_recursion

__all__ = ["Fixture", "FIXTURES", "PRINTED", "run_fixtures", "structure", "caterpillar_edges", "tree_table_edges"]

PRINTED = {
    "u24": "x^2 + 2*x + 2*y + y^2",
    "u34": "x^3 + x^2 + x + y",
    "badiden": "x^3*y - 3*x^2*y + 2*x^2 + 3*x*y - x - y",
    "pos": "x^2*y + x + y + y^2",
    "pos-delete-a": "x^2*y",
    "pos-contract-a": "x + y + y^2",
    "same-tutte": "x^3 + x^2*y + 2*x^2 + 2*x*y + 3*x + y^3 + 3*y^2 + 3*y",
    "820": "x^3*y^3 - 3*x^2*y^3 + 2*x^2*y^2 + 3*x*y^3 - 4*x*y^2 + 3*x*y - y^3 + 3*y^2",
    "basis-G": "x^3 + 2*x^2 + 2*x*y + x + y^2 + y",
    "basis-G1": "x^3*y^2 - 3*x^2*y^2 + 2*x^2*y + x^2 + 3*x*y^2 - 2*x*y + 3*x + 3*y",
    "basis-G2": "x^3*y^3 - 3*x^2*y^3 + 2*x^2*y + 3*x*y^3 - 3*x*y + 4*x - y^3 + y^2 + 4*y",
}


def printed(name: str) -> BiPoly:
    return BiPoly.parse(PRINTED[name])


def _family(labels, sets) -> FeasibleFamily:
    return FeasibleFamily.from_labels(GroundSet(tuple(labels)), [tuple(s) for s in sets])


def _pairs_triples_except(labels, pairs_out, triples_out):
    sets = [()] + [(x,) for x in labels]
    sets += [c for c in combinations(labels, 2) if "".join(c) not in pairs_out]
    sets += [c for c in combinations(labels, 3) if "".join(c) not in triples_out]
    return _family(labels, sets)


def structure(name: str):
    """Ranked sets of the worked examples, by fixture name."""
    if name == "u24":
        return uniform_matroid(2, 4)
    if name == "u34":
        return uniform_matroid(3, 4)
    if name == "badiden":
        return from_feasible_family(_family("123", ["", "1", "3", "12", "13", "23", "123"]))
    if name == "pos":
        return from_feasible_family(_family("abcd", ["", "a", "b", "c", "ab", "ac", "bc", "ad"]))
    if name == "same-tutte":
        return from_feasible_family(_pairs_triples_except("abcdef", {"ab"}, {"abc", "ade", "bef", "cdf"}))
    if name == "same-tutte2":
        return from_feasible_family(_pairs_triples_except("abcde", {"ab"}, {"abc", "abd", "cde"}))
    if name == "820":
        return from_feasible_family(
            _family("abcde", ["", "a", "b", "ab", "ac", "bd", "abc", "abd", "ace", "bde"])
        )
    raise KeyError(name)


def caterpillar_edges():
    """Spine a-b-c-d-e, two leaves at a and at e, one leaf at c."""
    return [
        ("a", "b", "ab"), ("b", "c", "bc"), ("c", "d", "cd"), ("d", "e", "de"),
        ("a", "a1", "l1"), ("a", "a2", "l2"), ("e", "e1", "l3"), ("e", "e2", "l4"), ("c", "c1", "l5"),
    ]


def tree_table_edges():
    """The unique 9-edge tree whose a-table matches the printed tree data.

    Same spine and end leaves as the caterpillar, with the fifth leaf at b.
    """
    return [
        ("a", "b", "ab"), ("b", "c", "bc"), ("c", "d", "cd"), ("d", "e", "de"),
        ("a", "a1", "l1"), ("a", "a2", "l2"), ("e", "e1", "l3"), ("e", "e2", "l4"), ("b", "b1", "l5"),
    ]


def _eq(claim, got, want):
    return (claim, got == want, f"got {got}, want {want}")


# -- fixture bodies -------------------------------------------------------


def _uniform(name, want_i4):
    def run():
        M = structure(name)
        t = tutte_expansion(M)
        rep = verify_affine(M)
        return [
            _eq("Tutte polynomial", t, printed(name)),
            _eq("I_4", i_k(t, 4), want_i4),
            ("I_k = 0 below n", rep.pass_, str(rep.i_values)),
        ]

    return run


def _badiden():
    G = structure("badiden")
    t = tutte_expansion(G)
    path = tree_pruning([("p0", "p1", "1"), ("p1", "p2", "2"), ("p2", "p3", "3")])[0]
    return [
        _eq("Tutte polynomial", t, printed("badiden")),
        ("antimatroid", bool(is_antimatroid(G)), ""),
        _eq("full rank", G.rS, 3),
        _eq("no isthmuses (strict sense)", G.isthmuses(strict=True), []),
        _eq("b30, b31", (t[3, 0], t[3, 1]), (0, 1)),
        _eq("b20, b21", (t[2, 0], t[2, 1]), (2, -3)),
        _eq("b11", t[1, 1], 3),
        ("edge pruning of a 3-edge path", path == G, ""),
    ]


def _pos():
    G = structure("pos")
    rooted = RootedGraph(("r", "u", "v", "w", "z"), (("r", "u", "a"), ("r", "v", "b"), ("r", "w", "c"), ("u", "z", "d")), "r")
    second = truncate(truncate(from_feasible_family(branching_feasible(rooted))))
    Gd, Gc = delete(G, "a"), contract(G, "a")
    mv = is_matroid(G)
    return [
        _eq("Tutte polynomial", tutte_expansion(G), printed("pos")),
        ("recursion agrees", tutte_recursion(G) == printed("pos"), ""),
        ("greedoid", bool(is_greedoid(G)), ""),
        ("not a matroid", not mv, str(mv.witness)),
        ("second truncation of the rooted tree", second == G, ""),
        _eq("G-a feasible", sorted(feasible_family(Gd).as_labels()), [[], ["b"], ["b", "c"], ["c"]]),
        _eq("G/a feasible", sorted(feasible_family(Gc).as_labels()), [[], ["b"], ["c"], ["d"]]),
        ("G-a and G/a matroids", bool(is_matroid(Gd)) and bool(is_matroid(Gc)), ""),
        _eq("T(G-a)", tutte_expansion(Gd), printed("pos-delete-a")),
        _eq("T(G/a)", tutte_expansion(Gc), printed("pos-contract-a")),
        _eq("r(a), r(G-a), r(G)", (G.r(["a"]), Gd.rS, G.rS), (1, 2, 2)),
        _eq("matroids with this polynomial", len(find_matroids_with_tutte(printed("pos"), 4)), 0),
    ]


def _same_tutte():
    G = structure("same-tutte")
    t = tutte_expansion(G)
    Ms = find_matroids_with_tutte(t, 6, labels=G.labels)
    return [
        _eq("Tutte polynomial", t, printed("same-tutte")),
        ("greedoid", bool(is_greedoid(G)), ""),
        ("not a matroid", not is_matroid(G), ""),
        ("a matroid shares the polynomial", len(Ms) > 0, f"{len(Ms)} labeled matroids"),
        _eq("elements with both minors matroids", matroid_minor_elements(G), []),
    ]


def _same_tutte2():
    G = structure("same-tutte2")
    t = tutte_expansion(G)
    Gd, Gc = delete(G, "e"), contract(G, "e")
    Ms = find_matroids_with_tutte(t, 5)
    iso_hits = [M for M in Ms if any(isomorphic(delete(M, p), Gd) and isomorphic(contract(M, p), Gc) for p in M.labels)]
    big = find_matroids_with_tutte(printed("same-tutte"), 6)
    from_big = any(
        any(isomorphic(delete(N, p), M) for M in iso_hits[:1]) for N in big[:3] for p in N.labels
    )
    return [
        ("greedoid", bool(is_greedoid(G)), ""),
        ("not a matroid", not is_matroid(G), ""),
        ("G-e and G/e matroids", bool(is_matroid(Gd)) and bool(is_matroid(Gc)), ""),
        _eq("r(G-e) = r(G)", Gd.rS, G.rS),
        ("G-e has no loops", all(Gd.r([x]) == 1 for x in Gd.labels), ""),
        ("matroid M' with M'-p ~ G-e and M'/p ~ G/e", bool(iso_hits), f"{len(iso_hits)} labeled matroids"),
        ("such an M' is a deletion of a same-tutte matroid", from_big, ""),
    ]


def _ex820():
    G = structure("820")
    cycle = RootedGraph(
        ("r", "u", "x", "y", "w"),
        (("r", "u", "a"), ("w", "r", "b"), ("u", "x", "c"), ("y", "w", "d"), ("x", "y", "e")),
        "r",
    )
    trunc = truncate(from_feasible_family(branching_feasible(cycle)))
    comp = sorted(G.ground.fmt(G.full & ~B) for B in bases(G))
    res = is_greedoid_basis_family(G.ground, [G.full & ~B for B in bases(G)])
    return [
        _eq("Tutte polynomial", tutte_expansion(G), printed("820")),
        ("greedoid", bool(is_greedoid(G)), ""),
        ("truncated branching greedoid of a rooted 5-cycle", trunc == G, ""),
        _eq("basis complements", comp, ["{a,c}", "{b,d}", "{c,e}", "{d,e}"]),
        ("complements are not greedoid bases", not res.realizable, f"{res.dead_ends} dead ends"),
    ]


def _basis_table():
    rows = []
    for key, name in (("basis-G", "T(G)"), ("basis-G1", "T(G')"), ("basis-G2", "T(G'')")):
        p = printed(key)
        totals = [total for _, _, total in table4_identities(p)]
        rows.append(_eq(f"I_0..I_3 of {name}", totals, [0, 0, 0, 0]))
        rows.append(_eq(f"I_5 of {name}", i_k(p, 5), (-1) ** (5 - 3)))
        lhs, rhs, holds = matroid_i2_simplified(p, 5, 3)
        rows.append(_eq(f"b10 + b11 = 3 on {name}", holds, key == "basis-G"))
    from .constructions import graphic_matroid

    k4e = graphic_matroid("1234", [("1", "2", "a"), ("1", "3", "b"), ("2", "3", "c"), ("2", "4", "d"), ("3", "4", "e")])
    rows.append(_eq("K4 minus an edge gives T(G)", tutte_expansion(k4e), printed("basis-G")))
    rows.append(_eq("printed b-values of T(G')", tuple(printed("basis-G1")[i, j] for i, j in ((1, 0), (0, 1), (2, 0), (1, 1))), (3, 3, 1, -2)))
    return rows


def _forced_rank3():
    # T = x^3 + 2x^2 + b x + c xy + b y + y^2, b10 = b01 = b and b11 = c free
    rows = []
    for b in range(-2, 6):
        for c in range(-2, 6):
            p = BiPoly.from_terms([(3, 0, 1), (2, 0, 2), (1, 0, b), (1, 1, c), (0, 1, b), (0, 2, 1)])
            rows.append(_eq(f"I_0, I_1 at ({b}, {c})", [i_k(p, 0), i_k(p, 1)], [0, 0]))
            rows.append(_eq(
                f"I_2, I_3, I_4 = 1, 2, 3 times (3 - b10 - b11) at ({b}, {c})",
                [i_k(p, k) for k in (2, 3, 4)],
                [k * (3 - b - c) for k in (1, 2, 3)],
            ))
            rows.append(_eq(f"I_5 = 13 - 4 b10 - 4 b11 at ({b}, {c})", i_k(p, 5), 13 - 4 * b - 4 * c))
    return rows


# A_m at n = 5 as printed: {m: {(i, j): coefficient}}
_A5 = {
    0: {(0, 0): -1},
    1: {(0, 0): 5, (0, 1): -1, (1, 0): 1},
    2: {(0, 0): -10, (0, 1): 5, (0, 2): -1, (1, 0): -4, (1, 1): 1, (2, 0): -1},
    3: {(0, 0): 10, (0, 1): -10, (0, 2): 5, (0, 3): -1, (1, 0): 6, (1, 1): -4, (1, 2): 1, (2, 0): 3, (2, 1): -1, (3, 0): 1},
    4: {(0, 0): -5, (0, 1): 10, (0, 2): -10, (0, 3): 5, (0, 4): -1, (1, 0): -4, (1, 1): 6, (1, 2): -4, (1, 3): 1,
        (2, 0): -3, (2, 1): 3, (2, 2): -1, (3, 0): -2, (3, 1): 1, (4, 0): -1},
}
_N5 = [[-1, 0, 0, 0, 0], [4, 1, 0, 0, 0], [-6, -3, -1, 0, 0], [4, 3, 2, 1, 0], [-1, -1, -1, -1, -1]]


def _n5():
    ok = True
    for i in range(5):
        for j in range(5 - i):
            A = a_coefficients(BiPoly.monomial(i, j), 5)
            for m in range(5):
                if A[m] != _A5[m].get((i, j), 0):
                    ok = False
    return [("A_0..A_4 coefficients", ok, ""), _eq("N matrix", n_matrix(5), _N5)]


def _tree_rows(edges):
    _, CF = tree_pruning(edges)
    at = a_table(CF)
    return at, CF


def _tree_table():
    at, CF = _tree_rows(tree_table_edges())
    printed_at = ATable.from_rows(9, {0: [1, 9, 11, 3], 1: [0, 0, 0, 9, 6, 1], 2: [0, 0, 0, 0, 6, 5, 1]})
    fi = family_identities(printed_at, 9, kmax=2)
    want = [[printed_at.get(i, j) for i in range(7)] for j in range(3)]
    got = [[at.get(i, j) for i in range(7)] for j in range(3)]
    return [
        _eq("a-table rows j = 0, 1, 2", got, want),
        _eq("printed k = 0 sum", fi["k0"], 0),
        _eq("printed k = 2 sum", fi["k2"], 0),
        _eq("unique-interior sum -9 + 6 - 1", fi["k1"][1], -4),
        _eq("interior edges", tree_interior_edges(tree_table_edges()), 4),
    ]


def _caterpillar():
    at, CF = _tree_rows(caterpillar_edges())
    m = tree_interior_edges(caterpillar_edges())
    G = tree_pruning(caterpillar_edges())[0]
    return [
        _eq("f-vector", at.f[:4], (1, 9, 11, 3)),
        _eq("interior edges", m, 4),
        _eq("sum (-1)^i i f_i", sum((-1) ** i * i * at.f[i] for i in range(len(at.f))), m),
        _eq("unique-interior sum", b01_by_points(CF), -m),
        ("convex expansion", tutte_via_convex(CF) == tutte_expansion(G), ""),
    ]


def _point_table():
    at = ATable.from_rows(6, {0: [1, 6, 15, 15, 6, 1], 1: [0, 0, 0, 0, 4, 2], 2: [0, 0, 0, 0, 0, 1, 1]})
    fi = family_identities(at, 6, kmax=2)
    return [
        _eq("k = 0 sum", fi["k0"], 0),
        _eq("b01 = 4 - 2", fi["k1"][1], 2),
        _eq("beta from f", fi["k1"][0], 2),
        _eq("k = 2 sum", fi["k2"], 0),
    ]


def _poset_and_chordal_sums():
    return [
        _eq("poset: -4 + 4 - 1 = -b with b = 1", -4 + 4 - 1, -1),
        _eq("chordal: -9 + 11 - 5 + 1 = 1 - b with b = 3", -9 + 11 - 5 + 1, 1 - 3),
        _eq("chordal vertex d: 6, 9, 5, 1 and vertex i: 3, 2", (-6 + 9 - 5 + 1) + (-3 + 2), -2),
    ]


@dataclass(frozen=True)
class Fixture:
    name: str
    about: str
    run: Callable[[], list]


FIXTURES = [
    Fixture("uniform-u24", "U_{2,4} polynomial and I_4 = 1", _uniform("u24", 1)),
    Fixture("uniform-u34", "U_{3,4} polynomial and I_4 = -1", _uniform("u34", -1)),
    Fixture("badiden", "antimatroid where clauses (2)-(4) fail", _badiden),
    Fixture("pos", "non-matroid greedoid with positive coefficients", _pos),
    Fixture("same-tutte", "greedoid and matroid with equal polynomials", _same_tutte),
    Fixture("same-tutte2", "equal polynomials via matching minors", _same_tutte2),
    Fixture("820", "basis complements that are no greedoid's bases", _ex820),
    Fixture("basis-table", "I_0..I_3 of three rank-3 polynomials", _basis_table),
    Fixture("basis-forced", "forced rank-3 form and I_5", _forced_rank3),
    Fixture("n5-matrix", "A_m coefficients and N at n = 5", _n5),
    Fixture("tree-table", "tree data table", _tree_table),
    Fixture("caterpillar", "caterpillar f-vector and beta", _caterpillar),
    Fixture("point-table", "point set data table", _point_table),
    Fixture("poset-chordal-sums", "printed alternating sums", _poset_and_chordal_sums),
]


def run_fixtures(pattern: str | None = None):
    """Yield ``(fixture, rows, ok)`` for fixtures whose name contains ``pattern``."""
    for fx in FIXTURES:
        if pattern and pattern not in fx.name:
            continue
        try:
            rows = fx.run()
        except Exception as exc:  # a crashing fixture is a failing fixture
            rows = [("ran without error", False, f"{type(exc).__name__}: {exc}")]
        yield fx, rows, all(ok for _, ok, _ in rows)
