"""Dense bivariate polynomials with exact integer coefficients.

A ``BiPoly`` stores its coefficients as a grid ``coeffs[i][j]`` holding the
coefficient of ``x**i * y**j``.  Only nonnegative exponents are representable;
the grid is always trimmed so that row ``dx`` and column ``dy`` contain a
nonzero entry (the zero polynomial is the 1x1 grid ``((0,),)``).

The same type carries polynomials in ``(u, v)``; variable names only matter
when rendering.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb

__all__ = [
    "BiPoly",
    "binom",
    "cross_power",
    "i_k",
    "i_profile",
    "shifted_from_grid",
    "X",
    "Y",
    "ONE",
    "ZERO",
]


def binom(n: int, k: int) -> int:
    """Binomial coefficient that is zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _trim(rows):
    rows = [list(r) for r in rows] or [[0]]
    width = max(len(r) for r in rows)
    for r in rows:
        r.extend([0] * (width - len(r)))
    while len(rows) > 1 and not any(rows[-1]):
        rows.pop()
    while width > 1 and not any(r[width - 1] for r in rows):
        width -= 1
    return tuple(tuple(r[:width]) for r in rows)


class BiPoly:
    """Immutable polynomial sum of ``c[i][j] * x**i * y**j``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, grid=((0,),)):
        c = _trim(grid)
        for row in c:
            for v in row:
                if not isinstance(v, int):
                    raise TypeError(f"coefficients must be int, got {type(v).__name__}")
        self._c = c
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def from_terms(cls, terms) -> "BiPoly":
        """Build from ``{(i, j): c}`` or an iterable of ``(i, j, c)``."""
        if isinstance(terms, dict):
            terms = [(i, j, c) for (i, j), c in terms.items()]
        terms = list(terms)
        if not terms:
            return cls()
        dx = max(t[0] for t in terms)
        dy = max(t[1] for t in terms)
        grid = [[0] * (dy + 1) for _ in range(dx + 1)]
        for i, j, c in terms:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            grid[i][j] += int(c)
        return cls(grid)

    @classmethod
    def constant(cls, c: int) -> "BiPoly":
        return cls(((int(c),),))

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BiPoly":
        return cls.from_terms([(i, j, c)])

    # -- accessors ----------------------------------------------------
    @property
    def coeffs(self):
        return self._c

    @property
    def dx(self) -> int:
        return len(self._c) - 1

    @property
    def dy(self) -> int:
        return len(self._c[0]) - 1

    def __getitem__(self, ij) -> int:
        i, j = ij
        if 0 <= i <= self.dx and 0 <= j <= self.dy:
            return self._c[i][j]
        return 0

    def terms(self):
        """Nonzero terms as ``(i, j, c)`` sorted by ``(i, j)``."""
        return [(i, j, c) for i, row in enumerate(self._c) for j, c in enumerate(row) if c]

    def is_zero(self) -> bool:
        return self._c == ((0,),)

    def swap(self) -> "BiPoly":
        """Exchange the roles of the two variables."""
        return BiPoly(tuple(zip(*self._c)))

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        dx = max(self.dx, other.dx)
        dy = max(self.dy, other.dy)
        return BiPoly([[self[i, j] + other[i, j] for j in range(dy + 1)] for i in range(dx + 1)])

    __radd__ = __add__

    def __neg__(self):
        return BiPoly([[-c for c in row] for row in self._c])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        out = [[0] * (self.dy + other.dy + 1) for _ in range(self.dx + other.dx + 1)]
        for i1, r1 in enumerate(a):
            for j1, c1 in enumerate(r1):
                if not c1:
                    continue
                for i2, r2 in enumerate(b):
                    row = out[i1 + i2]
                    for j2, c2 in enumerate(r2):
                        if c2:
                            row[j1 + j2] += c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._c)
        return self._hash

    def __call__(self, x0, y0):
        return self.eval(x0, y0)

    def eval(self, x0, y0) -> Fraction:
        """Exact value at a rational point (Horner in both variables)."""
        x0, y0 = Fraction(x0), Fraction(y0)
        total = Fraction(0)
        for row in reversed(self._c):
            inner = Fraction(0)
            for c in reversed(row):
                inner = inner * y0 + c
            total = total * x0 + inner
        return total

    # -- rendering ----------------------------------------------------
    def render(self, var=("x", "y")) -> str:
        """ASCII rendering, terms by total degree then x-degree, descending."""
        terms = sorted(self.terms(), key=lambda t: (-(t[0] + t[1]), -t[0]))
        if not terms:
            return "0"
        out = []
        for k, (i, j, c) in enumerate(terms):
            mono = []
            if i:
                mono.append(var[0] if i == 1 else f"{var[0]}^{i}")
            if j:
                mono.append(var[1] if j == 1 else f"{var[1]}^{j}")
            mag = abs(c)
            body = "*".join(mono)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            if k == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"BiPoly({self.render()!r})"

    # -- wire format --------------------------------------------------
    def to_json(self) -> dict:
        return {"terms": [{"i": i, "j": j, "c": str(c)} for i, j, c in self.terms()]}

    @classmethod
    def parse(cls, text: str, var=("x", "y")) -> "BiPoly":
        """Inverse of ``render``: a signed sum of terms such as ``3*x^2*y``."""
        src = text.replace(" ", "")
        if not src:
            raise ValueError("empty polynomial")
        if src[0] not in "+-":
            src = "+" + src
        pieces = re.findall(r"[+-][^+-]+", src)
        if "".join(pieces) != src:
            raise ValueError(f"cannot parse polynomial {text!r}")
        terms = []
        for piece in pieces:
            sign = -1 if piece[0] == "-" else 1
            c, i, j = 1, 0, 0
            for f in piece[1:].split("*"):
                m = re.fullmatch(rf"({re.escape(var[0])}|{re.escape(var[1])})(?:\^(\d+))?", f)
                if m:
                    e = int(m.group(2) or 1)
                    if m.group(1) == var[0]:
                        i += e
                    else:
                        j += e
                elif f.isdigit():
                    c *= int(f)
                else:
                    raise ValueError(f"bad factor {f!r} in {text!r}")
            terms.append((i, j, sign * c))
        return cls.from_terms(terms)

    @classmethod
    def from_json(cls, obj: dict) -> "BiPoly":
        terms = []
        for t in obj["terms"]:
            c = t["c"]
            if isinstance(c, bool) or not isinstance(c, (str, int)):
                raise ValueError(f"coefficient must be a decimal string, got {c!r}")
            terms.append((int(t["i"]), int(t["j"]), int(c)))
        return cls.from_terms(terms)


def _coerce(v):
    if isinstance(v, BiPoly):
        return v
    if isinstance(v, int) and not isinstance(v, bool):
        return BiPoly.constant(v)
    return NotImplemented


ZERO = BiPoly()
ONE = BiPoly.constant(1)
X = BiPoly.monomial(1, 0)
Y = BiPoly.monomial(0, 1)


def cross_power(k: int) -> BiPoly:
    """``((x-1)(y-1))**k`` from the product of two binomial rows."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return BiPoly(
        [[(-1) ** (i + j) * comb(k, i) * comb(k, j) for j in range(k + 1)] for i in range(k + 1)]
    )


def i_k(p: BiPoly, k: int) -> int:
    """Alternating functional sum_{i+j<=k} (-1)^j C(k-i, j) b_ij."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    total = 0
    for i in range(min(k, p.dx) + 1):
        row = p.coeffs[i]
        for j in range(min(k - i, p.dy) + 1):
            c = row[j]
            if c:
                total += (-1) ** j * comb(k - i, j) * c
    return total


def i_profile(p: BiPoly, n: int) -> list[int]:
    return [i_k(p, k) for k in range(n + 1)]


@lru_cache(maxsize=64)
def _shift_matrix(d: int):
    # entry [a][i] = C(a, i) (-1)^(a-i): coefficient of x^i in (x-1)^a
    return tuple(tuple(binom(a, i) * (-1) ** (a - i) for i in range(d + 1)) for a in range(d + 1))


def shifted_from_grid(s) -> BiPoly:
    """Substitute u = x-1, v = y-1 into the grid of S(u, v) and expand."""
    s = s.coeffs if isinstance(s, BiPoly) else _trim(s)
    dx, dy = len(s) - 1, len(s[0]) - 1
    mx, my = _shift_matrix(dx), _shift_matrix(dy)
    # transform along v first, then along u
    half = [[sum(row[c] * my[c][j] for c in range(j, dy + 1)) for j in range(dy + 1)] for row in s]
    out = [
        [sum(half[a][j] * mx[a][i] for a in range(i, dx + 1)) for j in range(dy + 1)]
        for i in range(dx + 1)
    ]
    return BiPoly(out)
