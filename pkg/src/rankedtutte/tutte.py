"""Tutte polynomial of a ranked set by subset expansion and by recursion."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bipoly import BiPoly, shifted_from_grid
from .errors import AxiomViolation
from .ranked import RankedSet, popcounts

__all__ = [
    "TutteResult",
    "corank_nullity",
    "tutte_expansion",
    "tutte_recursion",
    "s_recursion",
    "corank_cardinality",
    "compute",
]


def _require_ranked(G: RankedSet):
    ok = G.axioms()
    if not ok:
        raise AxiomViolation(ok.witness["axiom"], ok.witness["A"], "not a ranked set")


def _grid_from_counts(a: np.ndarray, b: np.ndarray) -> BiPoly:
    da, db = int(a.max()), int(b.max())
    counts = np.bincount(a * (db + 1) + b, minlength=(da + 1) * (db + 1))
    grid = counts.reshape(da + 1, db + 1).tolist()
    return BiPoly(grid)


def corank_nullity(G: RankedSet) -> BiPoly:
    """S(G; u, v) = sum over A of u^(r(S)-r(A)) v^(|A|-r(A))."""
    _require_ranked(G)
    return _grid_from_counts(G.rS - G.rank, popcounts(G.n) - G.rank)


def tutte_expansion(G: RankedSet) -> BiPoly:
    return shifted_from_grid(corank_nullity(G))


def corank_cardinality(G: RankedSet) -> BiPoly:
    """f(G; u, v) = sum over A of u^(r(S)-r(A)) v^|A|."""
    _require_ranked(G)
    return _grid_from_counts(G.rS - G.rank, popcounts(G.n))


def _collapse(n, k):
    m = np.arange(1 << (n - 1))
    return (m & ((1 << k) - 1)) | ((m >> k) << (k + 1))


def s_recursion(G: RankedSet, order=None) -> dict:
    """Corank-nullity terms by deletion-contraction, as ``{(i, j): c}``.

    S(G) = u^(r(G)-r(G-e)) S(G-e) + v^(1-r(e)) S(G/e).

    Minors of a ranked set are only guaranteed to be normalized, so
    intermediate exponents may be negative; the terms are kept as a Laurent
    dictionary and only the final sum is required to be a polynomial.
    The pivot at each step is the first remaining element in ``order``
    (ground-set order by default).  Minors are memoized on their exact rank
    table.
    """
    if order is None:
        order = G.labels
    priority = {str(x): k for k, x in enumerate(order)}
    if set(priority) != set(G.labels):
        raise ValueError("pivot order must be a permutation of the ground set")
    memo = {}

    def rec(labels, rank):
        n = len(labels)
        if n == 0:
            return {(0, 0): 1}
        key = (labels, rank.tobytes())
        hit = memo.get(key)
        if hit is not None:
            return hit
        k = min(range(n), key=lambda t: priority[labels[t]])
        rest = labels[:k] + labels[k + 1 :]
        idx = _collapse(n, k)
        bit = 1 << k
        r_full = int(rank[-1])
        deleted = rank[idx]
        contracted = rank[idx | bit] - rank[bit]
        du = r_full - int(deleted[-1])
        dv = 1 - int(rank[bit])
        out = {}
        for (i, j), c in rec(rest, deleted).items():
            out[(i + du, j)] = out.get((i + du, j), 0) + c
        for (i, j), c in rec(rest, contracted).items():
            out[(i, j + dv)] = out.get((i, j + dv), 0) + c
        out = {ij: c for ij, c in out.items() if c}
        memo[key] = out
        return out

    return rec(tuple(G.labels), np.asarray(G.rank))


def tutte_recursion(G: RankedSet, order=None) -> BiPoly:
    _require_ranked(G)
    terms = s_recursion(G, order)
    neg = [ij for ij in terms if ij[0] < 0 or ij[1] < 0]
    if neg:
        raise AssertionError(f"recursion left negative exponents {neg} for a ranked set")
    return shifted_from_grid(BiPoly.from_terms(terms))


@dataclass(frozen=True)
class TutteResult:
    tutte: BiPoly
    s_poly: BiPoly
    method: str
    cross_checked: bool

    def to_json(self, emit_s=False) -> dict:
        out = {"tutte": self.tutte.to_json(), "method": self.method, "cross_checked": self.cross_checked}
        if emit_s:
            out["s_poly"] = self.s_poly.to_json()
        return out


class EngineMismatch(AssertionError):
    pass


def compute(G: RankedSet, cross_check: bool = False, order=None) -> TutteResult:
    """Expansion by default; with ``cross_check`` the recursion must agree."""
    s = corank_nullity(G)
    t = shifted_from_grid(s)
    if not cross_check:
        return TutteResult(t, s, "expansion", False)
    t2 = tutte_recursion(G, order)
    if t2 != t:
        raise EngineMismatch(f"expansion {t} != recursion {t2}")
    return TutteResult(t, s, "both", True)
