"""JSON structure files: parsing into ranked sets, polynomials and families."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from .antimatroid import ChordalGraph, ConvexFamily, PointConfig, Poset, chordal_simplicial, point_set, poset_double_shelling, tree_pruning
from .bipoly import BiPoly
from .constructions import RootedGraph, branching_feasible, graphic_matroid, truncate, uniform_matroid
from .errors import ParseError, TutteError
from .ranked import MAX_N, FeasibleFamily, GroundSet, RankedSet, from_feasible_family, validate_ranked

__all__ = ["StructureSpec", "KINDS", "max_n", "load_spec", "parse_spec", "rank_table_json", "rank_key"]

KINDS = (
    "rank_table",
    "feasible_family",
    "uniform",
    "graph",
    "rooted_graph",
    "tree_pruning",
    "poset",
    "chordal",
    "points",
    "polynomial",
    "basis_family",
)


@dataclass
class StructureSpec:
    kind: str
    ranked: RankedSet | None = None
    poly: BiPoly | None = None
    convex: ConvexFamily | None = None
    source: Any = None  # family object (Poset, ChordalGraph, PointConfig, tree edges) if any
    extra: dict | None = None

    @property
    def is_poly(self) -> bool:
        return self.ranked is None and self.poly is not None


def max_n() -> int:
    raw = os.environ.get("TUTTE_MAX_N")
    if raw is None:
        return MAX_N
    try:
        v = int(raw)
    except ValueError:
        raise ParseError(f"TUTTE_MAX_N must be an integer, got {raw!r}") from None
    return min(v, MAX_N)


def rank_key(labels) -> str:
    return ",".join(str(x) for x in labels)


def rank_table_json(G: RankedSet) -> dict:
    """``kind="rank_table"`` encoding; keys list labels in ground order."""
    return {
        "kind": "rank_table",
        "ground": list(G.labels),
        "rank": {rank_key(G.ground.subset(m)): int(G.rank[m]) for m in range(1 << G.n)},
    }


def _need(obj, key, kind):
    if key not in obj:
        raise ParseError(f'kind "{kind}" needs field "{key}"')
    return obj[key]


def _check_size(n):
    cap = max_n()
    if n > cap:
        raise ParseError(f"ground set of size {n} exceeds the cap TUTTE_MAX_N={cap}")


def _ground(obj, kind):
    labels = _need(obj, "ground", kind)
    if not isinstance(labels, list):
        raise ParseError('"ground" must be a list of labels')
    _check_size(len(labels))
    return GroundSet(tuple(str(x) for x in labels))


def _rank_table(obj):
    g = _ground(obj, "rank_table")
    table = _need(obj, "rank", "rank_table")
    if not isinstance(table, dict):
        raise ParseError('"rank" must be an object keyed by comma-joined labels')
    rank = np.full(1 << g.n, -1, dtype=np.int64)
    for key, v in table.items():
        labels = [t for t in key.split(",") if t] if key else []
        mask = g.mask(labels)
        if bin(mask).count("1") != len(labels):
            raise ParseError(f"repeated label in key {key!r}")
        if rank[mask] != -1:
            raise ParseError(f"key {key!r} duplicates another key")
        if isinstance(v, bool) or not isinstance(v, int):
            raise ParseError(f"rank of {key!r} must be an integer")
        rank[mask] = v
    missing = np.flatnonzero(rank == -1)
    if len(missing):
        # -1 is also a value a table may not hold, so a missing key is unambiguous
        raise ParseError(f"rank table is missing {len(missing)} of {1 << g.n} subsets, e.g. {{{g.fmt(int(missing[0]))[1:-1]}}}")
    return validate_ranked(rank, g)


def _fraction(v):
    if isinstance(v, bool):
        raise ParseError("coordinates must be numbers or rational strings")
    try:
        return Fraction(v)
    except (ValueError, TypeError, ZeroDivisionError):
        raise ParseError(f"bad rational {v!r}") from None


def parse_spec(obj: dict) -> StructureSpec:
    if not isinstance(obj, dict):
        raise ParseError("top level must be a JSON object")
    kind = obj.get("kind")
    if kind is None and "terms" in obj:
        kind = "polynomial"
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    try:
        return _parse(kind, obj)
    except ParseError:
        raise
    except TutteError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f'bad "{kind}" payload: {exc}') from None


def _parse(kind, obj) -> StructureSpec:
    if kind == "rank_table":
        return StructureSpec(kind, _rank_table(obj))
    if kind == "feasible_family":
        g = _ground(obj, kind)
        F = FeasibleFamily.from_labels(g, [tuple(str(x) for x in s) for s in _need(obj, "feasible", kind)])
        return StructureSpec(kind, from_feasible_family(F))
    if kind == "uniform":
        r, n = int(_need(obj, "r", kind)), int(_need(obj, "n", kind))
        _check_size(n)
        return StructureSpec(kind, uniform_matroid(r, n))
    if kind == "graph":
        edges = [tuple(e) for e in _need(obj, "edges", kind)]
        _check_size(len(edges))
        return StructureSpec(kind, graphic_matroid(_need(obj, "vertices", kind), edges))
    if kind == "rooted_graph":
        edges = [tuple(e) for e in _need(obj, "edges", kind)]
        _check_size(len(edges))
        RG = RootedGraph(tuple(_need(obj, "vertices", kind)), tuple(edges), _need(obj, "root", kind))
        G = from_feasible_family(branching_feasible(RG))
        for _ in range(int(obj.get("truncate", 0))):
            G = truncate(G)
        return StructureSpec(kind, G, source=RG)
    if kind == "tree_pruning":
        edges = [tuple(e) for e in _need(obj, "edges", kind)]
        _check_size(len(edges))
        G, CF = tree_pruning(edges)
        return StructureSpec(kind, G, convex=CF, source=edges)
    if kind == "poset":
        elements = [str(x) for x in _need(obj, "elements", kind)]
        _check_size(len(elements))
        P = Poset(elements, [tuple(str(x) for x in r) for r in obj.get("relations", [])])
        G, CF = poset_double_shelling(P)
        return StructureSpec(kind, G, convex=CF, source=P)
    if kind == "chordal":
        vertices = [str(x) for x in _need(obj, "vertices", kind)]
        _check_size(len(vertices))
        CG = ChordalGraph(vertices, [tuple(str(x) for x in e) for e in obj.get("edges", [])])
        G, CF = chordal_simplicial(CG)
        return StructureSpec(kind, G, convex=CF, source=CG)
    if kind == "points":
        coords = _need(obj, "coords", kind)
        if not isinstance(coords, dict):
            raise ParseError('"coords" must map labels to coordinate lists')
        _check_size(len(coords))
        PC = PointConfig({k: [_fraction(c) for c in v] for k, v in coords.items()}, obj.get("dim"))
        G, CF = point_set(PC)
        return StructureSpec(kind, G, convex=CF, source=PC)
    if kind == "polynomial":
        if "terms" in obj:
            p = BiPoly.from_json(obj)
        else:
            p = BiPoly.parse(str(_need(obj, "text", kind)))
        extra = {k: int(obj[k]) for k in ("n", "r") if k in obj}
        return StructureSpec(kind, poly=p, extra=extra)
    if kind == "basis_family":
        g = _ground(obj, kind)
        B = [g.mask([str(x) for x in b]) for b in _need(obj, "bases", kind)]
        return StructureSpec(kind, extra={"ground": g, "bases": B})
    raise ParseError(f"unhandled kind {kind!r}")


def load_spec(path_or_text: str, is_text: bool = False) -> StructureSpec:
    """Read a structure file; malformed JSON raises ParseError with line info."""
    if is_text:
        text, name = path_or_text, "<string>"
    else:
        name = path_or_text
        try:
            with open(path_or_text) as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {name}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{name}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_spec(obj)
