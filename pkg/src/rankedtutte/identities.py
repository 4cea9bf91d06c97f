"""Linear relations among Tutte coefficients and their checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bipoly import BiPoly, binom, i_k, i_profile
from .errors import DimensionMismatch, NotAMatroid
from .ranked import RankedSet, is_matroid
from .tutte import tutte_expansion

__all__ = [
    "IdentityReport",
    "expected_profile",
    "verify_affine",
    "trace_matrices",
    "i_k_trace",
    "n_matrix",
    "matmul",
    "a_coefficients",
    "forced_coefficient",
    "brylawski_clauses",
    "brylawski_check",
    "is_simple",
    "k_n_identity",
    "simplified_relation",
    "table4_identities",
    "matroid_i2_simplified",
]


@dataclass
class IdentityReport:
    n: int
    r: int
    i_values: list
    expected: list
    pass_: bool
    brylawski: dict | None = None
    isthmuses: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"n": self.n, "r": self.r, "i_values": self.i_values, "expected": self.expected, "pass": self.pass_}
        if self.brylawski is not None:
            out["clauses"] = self.brylawski
        return out


def expected_profile(n: int, r: int) -> list:
    return [0] * n + [(-1) ** (n - r)]


def verify_affine(G: RankedSet, poly: BiPoly | None = None) -> IdentityReport:
    """I_k = 0 for k < n and I_n = (-1)^(n - r(S))."""
    t = tutte_expansion(G) if poly is None else poly
    got = i_profile(t, G.n)
    want = expected_profile(G.n, G.rS)
    return IdentityReport(G.n, G.rS, got, want, got == want)


# -- trace form ---------------------------------------------------------


def trace_matrices(p: BiPoly, k: int, n: int, r: int):
    """M_k ((r+1) x (n+1)) and the coefficient matrix B ((n+1) x (r+1))."""
    if p.dx > r or p.dy > n:
        raise DimensionMismatch(f"degrees ({p.dx}, {p.dy}) exceed (r, n) = ({r}, {n})")
    M = [[(-1) ** (t + 1) * binom(k - s + 1, t - 1) for t in range(1, n + 2)] for s in range(1, r + 2)]
    B = [[p[s - 1, t - 1] for s in range(1, r + 2)] for t in range(1, n + 2)]
    return M, B


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def i_k_trace(p: BiPoly, k: int, n: int, r: int) -> int:
    M, B = trace_matrices(p, k, n, r)
    P = matmul(M, B)
    return sum(P[s][s] for s in range(len(P)))


def n_matrix(n: int):
    """Lower-triangular N with N[i][j] = (-1)^(n-i+1) C(n-j, i-j), 1-based."""
    if n < 1:
        raise ValueError("n must be positive")
    return [[(-1) ** (n - i + 1) * binom(n - j, i - j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def a_coefficients(p: BiPoly, n: int) -> list:
    """Coefficients A_0..A_{n-1} of y^m in sum b_ij sum_k (-1)^k C(n-i,k) y^(n+j-k)."""
    A = [0] * n
    for i, j, c in p.terms():
        for k in range(n - i + 1):
            m = n + j - k
            if 0 <= m < n:
                A[m] += c * (-1) ** k * binom(n - i, k)
    return A


# -- Brylawski's relations ----------------------------------------------


def forced_coefficient(i: int, j: int, n: int, r: int):
    """Value of b_ij forced by clauses (1)-(5) for an isthmus-free matroid, else None."""
    if i > r and j > 0:
        return 0
    if i == r:
        return 1 if j == 0 else 0
    if i == r - 1 and r >= 1:
        return n - r if j == 0 else 0
    if 1 <= i <= r - 2 and j >= n - r:
        return 0
    if i == 0:
        if j == n - r:
            return 1
        if j > n - r:
            return 0
    return None


def brylawski_clauses(p: BiPoly, n: int, r: int) -> dict:
    """Evaluate clauses (1)-(6) on a coefficient grid.

    Each entry is ``{"pass": bool, "failures": [...]}`` where a failure
    records ``(i, j)``, the required value and the actual coefficient.
    Clause (6) is checked as I_k = 0 for k < n, the form that holds for every
    ranked set.
    """
    ylim = max(p.dy, n) + 1
    xlim = max(p.dx, r) + 1

    def check(cells):
        fails = [
            {"i": i, "j": j, "expected": want, "got": p[i, j]} for i, j, want in cells if p[i, j] != want
        ]
        return {"pass": not fails, "failures": fails}

    out = {}
    out["1"] = check([(i, j, 0) for i in range(r + 1, xlim) for j in range(1, ylim)])
    out["2"] = check([(r, 0, 1)] + [(r, j, 0) for j in range(1, ylim)])
    out["3"] = (
        check([(r - 1, 0, n - r)] + [(r - 1, j, 0) for j in range(1, ylim)])
        if r >= 1
        else {"pass": True, "failures": []}
    )
    out["4"] = check([(i, j, 0) for i in range(1, r - 1) for j in range(max(n - r, 0), ylim)])
    out["5"] = check([(0, n - r, 1)] + [(0, j, 0) for j in range(n - r + 1, ylim)])
    fails = [{"k": k, "expected": 0, "got": v} for k in range(n) if (v := i_k(p, k)) != 0]
    out["6"] = {"pass": not fails, "failures": fails}
    return out


def brylawski_check(M: RankedSet) -> dict:
    """All six clauses for a matroid, flagging isthmuses when present."""
    if not is_matroid(M):
        raise NotAMatroid("brylawski_check needs a matroid")
    report = brylawski_clauses(tutte_expansion(M), M.n, M.rS)
    report["isthmuses"] = M.isthmuses()
    report["loops"] = [p for p in M.labels if M.r([p]) == 0]
    report["simple"] = is_simple(M)
    if report["isthmuses"]:
        report["warning"] = "matroid has isthmuses; clauses (2)-(5) assume none"
    return report


def is_simple(M: RankedSet) -> bool:
    """No loops and no parallel pairs."""
    labs = M.labels
    if any(M.r([p]) != 1 for p in labs):
        return False
    return all(M.r([p, q]) == 2 for k, p in enumerate(labs) for q in labs[k + 1 :])


def k_n_identity(M: RankedSet) -> bool:
    if not is_matroid(M):
        raise NotAMatroid("k_n_identity needs a matroid")
    return i_k(tutte_expansion(M), M.n) == (-1) ** (M.n - M.rS)


# -- simplified low-order relations -------------------------------------

# Each I_k reduced with I_0..I_{k-1}; terms are (sign, i, j).
_SIMPLIFIED = {
    0: [(1, 0, 0)],
    1: [(1, 0, 1), (-1, 1, 0)],
    2: [(1, 2, 0), (1, 0, 2), (-1, 1, 0), (-1, 1, 1)],
    3: [(1, 3, 0), (-1, 2, 1), (1, 1, 2), (-1, 0, 3), (-1, 2, 0), (1, 0, 2)],
}


def simplified_relation(p: BiPoly, k: int) -> int:
    return sum(s * p[i, j] for s, i, j in _SIMPLIFIED[k])


def table4_identities(p: BiPoly) -> list:
    """Rows ``(k, [(label, value), ...], total)`` for the simplified I_0..I_3."""
    rows = []
    for k, terms in _SIMPLIFIED.items():
        parts = [(f"{'+' if s > 0 else '-'}b_{{{i},{j}}}", s * p[i, j]) for s, i, j in terms]
        rows.append((k, parts, sum(v for _, v in parts)))
    return rows


def matroid_i2_simplified(p: BiPoly, n: int, r: int):
    """b_10 + b_11 against the value the matroid clauses force for b_20 + b_02.

    Returns ``(lhs, rhs, holds)``; ``rhs`` is None when clauses (1)-(5) do not
    pin both b_20 and b_02 for this (n, r).
    """
    b20 = forced_coefficient(2, 0, n, r)
    b02 = forced_coefficient(0, 2, n, r)
    lhs = p[1, 0] + p[1, 1]
    if b20 is None or b02 is None:
        return lhs, None, None
    return lhs, b20 + b02, lhs == b20 + b02
