"""Ranked sets stored as explicit rank tables over subset bitmasks.

Element ``k`` of a ground set is bit ``1 << k``; a rank table has one entry
per mask.  ``RankedSet`` itself only insists on normalization ``r(0) = 0``:
duals and minors of a ranked set are always normalized but need not satisfy
the remaining axioms, and deletion-contraction has to pass through them.
:func:`validate_ranked` is the strict front door used for external input.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import AxiomViolation, DuplicateElement, UnknownElement

MAX_N = 20


class Verdict(NamedTuple):
    """Outcome of a predicate, with the first counterexample when it fails."""

    holds: bool
    witness: dict | None = None

    def __bool__(self):
        return self.holds


@lru_cache(maxsize=None)
def popcounts(n: int) -> np.ndarray:
    pc = np.zeros(1 << n, dtype=np.int64)
    for k in range(n):
        pc[1 << k : 1 << (k + 1)] = pc[: 1 << k] + 1
    pc.setflags(write=False)
    return pc


def bits(mask: int):
    k = 0
    while mask:
        if mask & 1:
            yield k
        mask >>= 1
        k += 1


@dataclass(frozen=True)
class GroundSet:
    labels: tuple

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(set(labels)) != len(labels):
            raise DuplicateElement(f"duplicate labels in {labels}")
        if len(labels) > MAX_N:
            raise ValueError(f"ground set of size {len(labels)} exceeds cap {MAX_N}")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def index(self, label) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise UnknownElement(f"{label!r} not in ground set {self.labels}") from None

    def mask(self, labels) -> int:
        m = 0
        for x in labels:
            m |= 1 << self.index(x)
        return m

    def subset(self, mask: int) -> tuple:
        return tuple(self.labels[k] for k in bits(mask))

    def fmt(self, mask: int) -> str:
        return "{" + ",".join(self.subset(mask)) + "}"

    def without(self, label) -> "GroundSet":
        k = self.index(label)
        return GroundSet(self.labels[:k] + self.labels[k + 1 :])

    def plus(self, label) -> "GroundSet":
        if str(label) in self.labels:
            raise DuplicateElement(f"{label!r} already in ground set")
        return GroundSet(self.labels + (str(label),))


def _as_array(table, n: int) -> np.ndarray:
    arr = np.array(table, dtype=np.int64).reshape(-1)
    if arr.shape[0] != 1 << n:
        raise ValueError(f"rank table needs {1 << n} entries, got {arr.shape[0]}")
    return arr


class RankedSet:
    """A ground set with a rank table ``rank[mask]``; immutable."""

    __slots__ = ("ground", "rank", "_key")

    def __init__(self, ground, rank):
        if not isinstance(ground, GroundSet):
            ground = GroundSet(tuple(ground))
        arr = _as_array(rank, ground.n)
        if arr[0] != 0:
            raise AxiomViolation("R0", "{}", f"r(empty) = {arr[0]}")
        arr.setflags(write=False)
        self.ground = ground
        self.rank = arr
        self._key = None

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def labels(self):
        return self.ground.labels

    @property
    def full(self) -> int:
        return self.ground.full

    @property
    def rS(self) -> int:
        return int(self.rank[-1])

    def r(self, subset) -> int:
        """Rank of a mask or of an iterable of labels."""
        if isinstance(subset, (int, np.integer)):
            return int(self.rank[subset])
        return int(self.rank[self.ground.mask(subset)])

    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.ground.labels, self.rank.tobytes())
        return self._key

    def __eq__(self, other):
        if not isinstance(other, RankedSet):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"RankedSet(labels={list(self.labels)}, r(S)={self.rS})"

    def table(self) -> dict:
        """Rank table keyed by comma-joined labels (the JSON layout)."""
        return {",".join(self.ground.subset(m)): int(v) for m, v in enumerate(self.rank)}

    def axioms(self) -> Verdict:
        """Check R1 and R2 (R0 holds by construction)."""
        pc = popcounts(self.n)
        bad = np.flatnonzero((self.rank > self.rS) | (self.rank > pc))
        if bad.size:
            m = int(bad[0])
            axiom = "R1" if self.rank[m] > self.rS else "R2"
            return Verdict(False, {"axiom": axiom, "A": self.ground.subset(m)})
        return Verdict(True)

    def is_isthmus(self, label, strict: bool = False) -> bool:
        """r(S - p) = r(S) - 1, or with ``strict`` r(A + p) = r(A) + 1 for every A.

        The two agree on matroids.  For greedoids only the strict form makes
        T(G) = x T(G/p); e.g. every element of the 3-edge path pruning
        antimatroid passes the weak test and fails the strict one.
        """
        k = self.ground.index(label)
        bit = 1 << k
        if not strict:
            return self.r(self.full & ~bit) == self.rS - 1
        masks = np.arange(1 << self.n)
        low = masks[(masks & bit) == 0]
        return bool(np.all(self.rank[low | bit] == self.rank[low] + 1))

    def isthmuses(self, strict: bool = False) -> list:
        return [x for x in self.labels if self.is_isthmus(x, strict)]


def validate_ranked(table, ground) -> RankedSet:
    """Build a ranked set, enforcing R0, R1, R2 and nonnegative ranks.

    Raises :class:`AxiomViolation` naming the first offending subset in mask
    order.
    """
    if not isinstance(ground, GroundSet):
        ground = GroundSet(tuple(ground))
    arr = _as_array(table, ground.n)
    if arr[0] != 0:
        raise AxiomViolation("R0", "{}", f"r(empty) = {arr[0]}")
    rS = arr[-1]
    pc = popcounts(ground.n)
    bad =(arr > rS) | (arr > pc) | (arr < 0)
    idx = np.flatnonzero(bad)
    if idx.size:
        m = int(idx[0])
        if arr[m] > rS:
            axiom, detail = "R1", f"r(A) = {arr[m]} > r(S) = {rS}"
        elif arr[m] > pc[m]:
            axiom, detail = "R2", f"r(A) = {arr[m]} > |A| = {pc[m]}"
        else:
            axiom, detail = "nonnegative", f"r(A) = {arr[m]}"
        raise AxiomViolation(axiom, ground.fmt(m), detail)
    return RankedSet(ground, arr)


# -- classification ----------------------------------------------------


def _first(pairs):
    """Smallest (mask, extra) pair, or None."""
    return min(pairs) if pairs else None


def _unit_increase(G: RankedSet):
    r = G.rank
    masks = np.arange(1 << G.n)
    found = []
    for p in range(G.n):
        A = masks[(masks >> p) & 1 == 0]
        d = r[A | (1 << p)] - r[A]
        bad = np.flatnonzero((d < 0) | (d > 1))
        if bad.size:
            found.append((int(A[bad[0]]), p))
    return _first(found)


def _local_submodular(G: RankedSet):
    # r(A+p) + r(A+q) >= r(A+p+q) + r(A); equivalent to full submodularity
    r = G.rank
    masks = np.arange(1 << G.n)
    found = []
    for p in range(G.n):
        for q in range(p + 1, G.n):
            A = masks[((masks >> p) & 1 == 0) & ((masks >> q) & 1 == 0)]
            lhs = r[A | (1 << p)] + r[A | (1 << q)]
            rhs = r[A | (1 << p) | (1 << q)] + r[A]
            bad = np.flatnonzero(lhs < rhs)
            if bad.size:
                found.append((int(A[bad[0]]), p, q))
    return _first(found)


def _first_submodular_failure(G: RankedSet):
    r = G.rank
    masks = np.arange(1 << G.n)
    for A in range(1 << G.n):
        bad = np.flatnonzero(r[A & masks] + r[A | masks] > r[A] + r)
        if bad.size:
            return A, int(bad[0])
    return None


def is_matroid(G: RankedSet) -> Verdict:
    """Unit rank increase plus semimodularity."""
    fail = _unit_increase(G)
    if fail:
        A, p = fail
        return Verdict(False, {"axiom": "unit increase", "A": G.ground.subset(A), "p": G.labels[p]})
    if _local_submodular(G) is None:
        return Verdict(True)
    A, B = _first_submodular_failure(G)
    return Verdict(False, {"axiom": "semimodularity", "A": G.ground.subset(A), "B": G.ground.subset(B)})


def is_greedoid(G: RankedSet) -> Verdict:
    """Increasing, subcardinal and locally semimodular rank."""
    r, n = G.rank, G.n
    masks = np.arange(1 << n)
    found = []
    for p in range(n):
        A = masks[(masks >> p) & 1 == 0]
        bad = np.flatnonzero(r[A | (1 << p)] < r[A])
        if bad.size:
            found.append((int(A[bad[0]]), p))
    if found:
        A, p = min(found)
        return Verdict(False, {"axiom": "increasing", "A": G.ground.subset(A), "p": G.labels[p]})
    sub = np.flatnonzero(r > popcounts(n))
    if sub.size:
        return Verdict(False, {"axiom": "subcardinality", "A": G.ground.subset(int(sub[0]))})
    found = []
    for p in range(n):
        for q in range(p + 1, n):
            A = masks[((masks >> p) & 1 == 0) & ((masks >> q) & 1 == 0)]
            rA = r[A]
            trigger = (r[A | (1 << p)] == rA) & (r[A | (1 << q)] == rA)
            bad = np.flatnonzero(trigger & (r[A | (1 << p) | (1 << q)] != rA))
            if bad.size:
                found.append((int(A[bad[0]]), p, q))
    if found:
        A, p, q = min(found)
        return Verdict(
            False,
            {
                "axiom": "local semimodularity",
                "A": G.ground.subset(A),
                "p1": G.labels[p],
                "p2": G.labels[q],
            },
        )
    return Verdict(True)


def is_antimatroid(G: RankedSet) -> Verdict:
    """Full-rank greedoid with a union-closed feasible family."""
    g = is_greedoid(G)
    if not g:
        return Verdict(False, {"axiom": "greedoid", "cause": g.witness})
    if G.rS != G.n:
        return Verdict(False, {"axiom": "full rank", "r(S)": G.rS, "n": G.n})
    feas = G.rank == popcounts(G.n)
    members = np.flatnonzero(feas)
    for F1 in members:
        bad = np.flatnonzero(~feas[members | F1])
        if bad.size:
            F2 = int(members[bad[0]])
            return Verdict(
                False,
                {"axiom": "union closure", "F1": G.ground.subset(int(F1)), "F2": G.ground.subset(F2)},
            )
    return Verdict(True)


# -- feasible families -------------------------------------------------


@dataclass(frozen=True)
class FeasibleFamily:
    ground: GroundSet
    feasible: frozenset

    def __post_init__(self):
        fam = frozenset(int(m) for m in self.feasible)
        object.__setattr__(self, "feasible", fam)
        if 0 not in fam:
            raise ValueError("the empty set must be feasible")
        bad = [m for m in fam if m < 0 or m > self.ground.full]
        if bad:
            raise ValueError(f"mask {bad[0]} outside ground set")

    @classmethod
    def from_labels(cls, ground, sets) -> "FeasibleFamily":
        if not isinstance(ground, GroundSet):
            ground = GroundSet(tuple(ground))
        return cls(ground, frozenset(ground.mask(s) for s in sets))

    def __len__(self):
        return len(self.feasible)

    def __contains__(self, mask):
        return mask in self.feasible

    def sorted(self) -> list:
        return sorted(self.feasible, key=lambda m: (bin(m).count("1"), m))

    def as_labels(self) -> list:
        return [list(self.ground.subset(m)) for m in self.sorted()]


def feasible_family(G: RankedSet) -> FeasibleFamily:
    masks = np.flatnonzero(G.rank == popcounts(G.n))
    return FeasibleFamily(G.ground, frozenset(int(m) for m in masks))


def from_feasible_family(F: FeasibleFamily) -> RankedSet:
    """Greedoid rank: size of the largest feasible subset."""
    n = F.ground.n
    pc = popcounts(n)
    rank = np.zeros(1 << n, dtype=np.int64)
    idx = np.fromiter(F.feasible, dtype=np.int64)
    rank[idx] = pc[idx]
    masks = np.arange(1 << n)
    for p in range(n):
        hi = masks[(masks >> p) & 1 == 1]
        rank[hi] = np.maximum(rank[hi], rank[hi ^ (1 << p)])
    return RankedSet(F.ground, rank)


def feasible_axioms_check(F: FeasibleFamily) -> Verdict:
    """Accessibility and augmentation for a set system."""
    fam = F.feasible
    g = F.ground
    for m in F.sorted():
        if m and not any((m & ~(1 << k)) in fam for k in bits(m)):
            return Verdict(False, {"axiom": "accessibility", "F": g.subset(m)})
    by_size = {}
    for m in fam:
        by_size.setdefault(bin(m).count("1"), []).append(m)
    for F2 in F.sorted():
        s2 = bin(F2).count("1")
        for s1 in sorted(by_size):
            if s1 <= s2:
                continue
            for F1 in sorted(by_size[s1]):
                if not any((F2 | (1 << k)) in fam for k in bits(F1 & ~F2)):
                    return Verdict(
                        False, {"axiom": "augmentation", "F1": g.subset(F1), "F2": g.subset(F2)}
                    )
    return Verdict(True)


def bases(G: RankedSet) -> frozenset:
    """Maximal feasible sets."""
    fam = feasible_family(G).feasible
    return frozenset(m for m in fam if not any((m | (1 << k)) in fam for k in range(G.n) if not m >> k & 1))
