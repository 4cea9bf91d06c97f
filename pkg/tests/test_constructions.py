import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ranked_sets
from oracles import brute_tutte, graph_rank, greedoid_rank
from rankedtutte import BiPoly, tutte_expansion
from rankedtutte.constructions import (
    RootedGraph,
    branching_feasible,
    branching_greedoid,
    contract,
    contract_via_dual,
    delete,
    dual,
    free_coextension,
    free_extension,
    graphic_matroid,
    raise_to_full_rank,
    random_ranked_set,
    truncate,
    uniform_matroid,
)
from rankedtutte.errors import BadGraph, BadParams, DuplicateElement, UnknownElement, ZeroRank
from rankedtutte.fixtures import printed, structure
from rankedtutte.ranked import RankedSet, feasible_family, from_feasible_family, is_greedoid, validate_ranked

P = BiPoly.parse
ISTHMUS = RankedSet(("a",), [0, 1])
LOOP = RankedSet(("a",), [0, 0])


def feas(G):
    return sorted(feasible_family(G).as_labels())


def test_dual_examples():
    assert dual(ISTHMUS) == LOOP
    assert dual(uniform_matroid(2, 4)) == uniform_matroid(2, 4)
    assert dual(uniform_matroid(1, 4)) == uniform_matroid(3, 4)


def test_delete_examples():
    assert delete(uniform_matroid(2, 4), "a") == uniform_matroid(2, 3, labels="bcd")
    E = delete(ISTHMUS, "a")
    assert E.n == 0 and tutte_expansion(E) == BiPoly.constant(1)
    assert feas(delete(structure("pos"), "a")) == [[], ["b"], ["b", "c"], ["c"]]
    with pytest.raises(UnknownElement):
        delete(ISTHMUS, "z")


def test_contract_examples():
    Gc = contract(structure("pos"), "a")
    assert feas(Gc) == [[], ["b"], ["c"], ["d"]]
    assert Gc == uniform_matroid(1, 3, labels="bcd")
    assert contract(ISTHMUS, "a").n == 0
    assert contract(uniform_matroid(2, 4), "a") == uniform_matroid(1, 3, labels="bcd")
    with pytest.raises(UnknownElement):
        contract(ISTHMUS, "z")


def test_truncate_examples():
    assert truncate(uniform_matroid(3, 4)) == uniform_matroid(2, 4)
    assert truncate(uniform_matroid(2, 2)) == uniform_matroid(1, 2)
    rooted = RootedGraph(("r", "u", "v", "w", "z"), (("r", "u", "a"), ("r", "v", "b"), ("r", "w", "c"), ("u", "z", "d")), "r")
    assert truncate(truncate(branching_greedoid(rooted))) == structure("pos")
    with pytest.raises(ZeroRank):
        truncate(LOOP)


def test_free_extension_examples():
    assert free_extension(uniform_matroid(2, 3), "d") == uniform_matroid(2, 4)
    with pytest.raises(DuplicateElement):
        free_extension(uniform_matroid(2, 3), "a")
    C = free_coextension(LOOP, "p")
    assert C.n == 2 and C.rS == 1


def test_raise_examples():
    G = uniform_matroid(2, 4)
    R = raise_to_full_rank(G)
    diff = np.flatnonzero(R.rank != G.rank)
    assert diff.tolist() == [15] and R.rS == 4
    assert raise_to_full_rank(uniform_matroid(4, 4)) == uniform_matroid(4, 4)


def test_uniform_examples():
    assert tutte_expansion(uniform_matroid(2, 4)) == printed("u24")
    for n in range(1, 6):
        assert tutte_expansion(uniform_matroid(0, n)) == P("y") ** n
        assert tutte_expansion(uniform_matroid(n, n)) == P("x") ** n
    with pytest.raises(BadParams):
        uniform_matroid(5, 4)


def test_graphic_examples():
    K3 = [("1", "2", "a"), ("2", "3", "b"), ("1", "3", "c")]
    assert graphic_matroid("123", K3) == uniform_matroid(2, 3)
    assert tutte_expansion(graphic_matroid("123", K3)) == P("x^2 + x + y")
    path = [("1", "2", "a"), ("2", "3", "b"), ("3", "4", "c"), ("3", "5", "d")]
    assert tutte_expansion(graphic_matroid("12345", path)) == P("x^4")
    k4e = [("1", "2", "a"), ("1", "3", "b"), ("2", "3", "c"), ("2", "4", "d"), ("3", "4", "e")]
    t = tutte_expansion(graphic_matroid("1234", k4e))
    assert t == printed("basis-G")
    assert t == brute_tutte("abcde", graph_rank(k4e))
    with pytest.raises(BadGraph):
        graphic_matroid("12", [("1", "9", "a")])
    with pytest.raises(BadGraph):
        graphic_matroid("12", [("1", "2", "a"), ("1", "2", "a")])


def test_branching_examples():
    path = RootedGraph(("r", "u", "v"), (("r", "u", "e1"), ("u", "v", "e2")), "r")
    G = branching_greedoid(path)
    assert tutte_expansion(G) == P("x^2*y - 2*x*y + x + y")
    assert tutte_expansion(G) == brute_tutte(("e1", "e2"), greedoid_rank([set(), {"e1"}, {"e1", "e2"}]))
    single = branching_greedoid(RootedGraph(("r", "u"), (("r", "u", "e"),), "r"))
    assert single == RankedSet(("e",), [0, 1])
    assert tutte_expansion(single) == P("x")
    with pytest.raises(BadGraph):
        RootedGraph(("r",), (), "q")


def test_branching_on_cycles_is_greedoid():
    K4 = RootedGraph("1234", [("1", "2", "a"), ("1", "3", "b"), ("2", "3", "c"), ("2", "4", "d"), ("3", "4", "e"), ("1", "4", "f")], "1")
    assert is_greedoid(branching_greedoid(K4))


def test_820_truncated_rooted_cycle():
    # The printed 820 family is a rooted 5-cycle truncated once, not a rooted tree.
    cycle = RootedGraph(
        ("r", "u", "x", "y", "w"),
        (("r", "u", "a"), ("w", "r", "b"), ("u", "x", "c"), ("y", "w", "d"), ("x", "y", "e")),
        "r",
    )
    T = truncate(from_feasible_family(branching_feasible(cycle)))
    got = sorted("".join(s) for s in feasible_family(T).as_labels())
    assert got == sorted(["", "a", "b", "ab", "ac", "bd", "abc", "abd", "ace", "bde"])


def test_random_generator():
    assert random_ranked_set(6, 11) == random_ranked_set(6, 11)
    for s in range(20):
        G = random_ranked_set(1, s)
        assert G in (ISTHMUS, LOOP)
    for s in range(1000):
        G = random_ranked_set(6, s)
        validate_ranked(G.rank, G.ground)
    with pytest.raises(BadParams):
        random_ranked_set(13, 0)


@given(ranked_sets(max_n=8))
def test_involution_and_dual_rank(G):
    assert dual(dual(G)) == G
    assert dual(G).rS == G.n - G.rS


@given(ranked_sets(max_n=8))
def test_contract_formula_matches_dual_definition(G):
    for p in G.labels:
        assert contract(G, p) == contract_via_dual(G, p)


@given(ranked_sets(max_n=8))
def test_extension_ranks(G):
    E, C = free_extension(G, "p"), free_coextension(G, "p")
    assert E.rS == G.rS
    assert C.rS == G.rS + 1
    assert delete(E, "p") == G
    assert contract(C, "p") == G
    # (c) needs r(S) >= 1 and (d) needs r(S) < n; otherwise p is a loop of G+p or an isthmus of G x p
    if G.rS >= 1:
        assert contract(E, "p").rS == G.rS - 1
    else:
        assert contract(E, "p").rS == 0
    if G.rS < G.n:
        assert delete(C, "p").rS == G.rS + 1
    else:
        assert delete(C, "p").rS == G.rS


@given(ranked_sets(max_n=7))
def test_minors_stay_normalized(G):
    for p in G.labels:
        assert delete(G, p).r(0) == 0 and contract(G, p).r(0) == 0
