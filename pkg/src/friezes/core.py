"""Frieze patterns: construction, storage and the three entry oracles.

Index conventions
-----------------
A frieze of period ``n`` (width ``w = n - 3``) is stored by its fundamental
domain ``entry(i, d) = v[i, i + d]`` for ``0 <= i < n`` and ``0 <= d <= n``,
where ``v[i, j]`` is the usual two-index labelling of frieze entries.  The
span ``d`` relates to the row number ``k`` (rows of 1s excluded) by
``k = d - 1``, so the first non-trivial row is ``d = 2``.

The tuple ``first_row`` is 0-based: ``first_row[m] = entry(m, 2)``, which is
the quantity usually written ``a_{m+1}``.  Hill solutions keep the 1-based
labelling ``V_1 .. V_n`` and satisfy ``entry(i, d) = det(V_i, V_{i+d})``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[Fraction, float]
Vec = tuple  # pair of scalars

FLOAT_TOL = 1e-9


class FriezeError(ValueError):
    """Base class for domain errors raised while handling friezes."""


class DivisionByZero(FriezeError):
    def __init__(self, i: int, d: int):
        self.i, self.d = i, d
        super().__init__(f"zero interior entry at (i={i}, d={d}) during propagation")


class NonClosing(FriezeError):
    def __init__(self, monodromy, detail: str = ""):
        self.monodromy = monodromy
        msg = f"first row does not close: monodromy = {format_matrix(monodromy)}"
        super().__init__(msg + (f"; {detail}" if detail else ""))


class NonPositiveEntry(FriezeError):
    def __init__(self, i: int, d: int, value):
        self.i, self.d, self.value = i, d, value
        super().__init__(f"non-positive interior entry {value} at (i={i}, d={d})")


class IndexOutOfRange(FriezeError, IndexError):
    pass


class NotAFrieze(FriezeError):
    pass


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions and ``"p/q"`` strings to Fraction; floats stay floats."""
    if isinstance(x, bool):
        raise TypeError("booleans are not frieze scalars")
    if isinstance(x, float):
        return x
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if any(c in s for c in ".eE") and "/" not in s:
            return float(s)
        return Fraction(s)
    return float(x)


def format_scalar(x: Scalar) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return repr(float(x))


def format_matrix(m) -> str:
    return "[[" + ", ".join(format_scalar(x) for x in m[0]) + "], [" + ", ".join(
        format_scalar(x) for x in m[1]) + "]]"


def det(u: Vec, v: Vec) -> Scalar:
    return u[0] * v[1] - u[1] * v[0]


def _close(x: Scalar, target: Scalar, scale: float = 1.0, tol: float = FLOAT_TOL) -> bool:
    if isinstance(x, Fraction) and isinstance(target, Fraction):
        return x == target
    return abs(x - target) <= tol * max(1.0, scale)


@dataclass(frozen=True)
class Frieze:
    """Immutable frieze of period ``n``; ``rows[d][i]`` holds ``entry(i, d)``."""

    n: int
    rows: tuple
    exact: bool = True

    @property
    def width(self) -> int:
        return self.n - 3

    @property
    def first_row(self) -> tuple:
        return self.rows[2]

    def entry(self, i: int, d: int) -> Scalar:
        """Return ``v[i, i+d]``; ``i`` is read modulo ``n``."""
        if not 0 <= d <= self.n:
            raise IndexOutOfRange(f"span d={d} outside 0..{self.n}")
        return self.rows[d][i % self.n]

    def row(self, k: int) -> tuple:
        """Row ``k`` (1-based, rows of 1s excluded) as the n-tuple ``entry(i, k+1)``."""
        if not 1 <= k <= self.width:
            raise IndexOutOfRange(f"row k={k} outside 1..{self.width}")
        return self.rows[k + 1]

    def to_float(self) -> "Frieze":
        if not self.exact:
            return self
        return Frieze(self.n, tuple(tuple(float(x) for x in r) for r in self.rows), exact=False)


def monodromy(a: Sequence[Scalar]):
    """Ordered product ``M_n ... M_1`` of ``M_i = [[a_i, -1], [1, 0]]``."""
    one = 1.0 if any(isinstance(x, float) for x in a) else Fraction(1)
    zero = one * 0
    m = ((one, zero), (zero, one))
    for x in a:
        # [[x, -1], [1, 0]] @ m
        m = ((x * m[0][0] - m[1][0], x * m[0][1] - m[1][1]), (m[0][0], m[0][1]))
    return m


def _is_minus_identity(m, exact: bool) -> bool:
    target = ((-1, 0), (0, -1))
    if exact:
        return all(m[r][c] == target[r][c] for r in range(2) for c in range(2))
    scale = max(abs(x) for row in m for x in row)
    return all(abs(m[r][c] - target[r][c]) <= FLOAT_TOL * max(1.0, scale)
               for r in range(2) for c in range(2))


def build_from_first_row(a: Iterable, *, check_positive: bool = True) -> Frieze:
    """Build the frieze whose first non-trivial row is ``a``.

    Entries are propagated downwards with the diamond rule
    ``entry(i, d+1) = (entry(i, d) * entry(i+1, d) - 1) / entry(i+1, d-1)``.
    Closure is decided twice: by the monodromy product (must be ``-I``) and by
    the propagated border rows; the two must agree.

    Exact (Fraction) arithmetic is used unless some entry of ``a`` is a float.

    Raises
    ------
    NonClosing
        monodromy differs from ``-I``.
    DivisionByZero
        an interior entry vanished, so propagation cannot continue.
    NonPositiveEntry
        the frieze closes but some interior entry is ``<= 0``.
    """
    a = tuple(as_scalar(x) for x in a)
    n = len(a)
    if n < 4:
        raise FriezeError(f"period n={n} must be at least 4")
    exact = not any(isinstance(x, float) for x in a)
    if not exact:
        a = tuple(float(x) for x in a)
    mono = monodromy(a)
    closes = _is_minus_identity(mono, exact)
    if not closes:
        raise NonClosing(mono)
    if check_positive:
        for m, x in enumerate(a):
            if x <= 0:
                raise NonPositiveEntry(m, 2, x)

    one = Fraction(1) if exact else 1.0
    zero = one * 0
    rows = [tuple([zero] * n), tuple([one] * n), a]
    for d in range(2, n):
        cur, prev = rows[d], rows[d - 1]
        nxt = []
        for i in range(n):
            den = prev[(i + 1) % n]
            if den == 0 or (not exact and abs(den) < 1e-300):
                raise DivisionByZero((i + 1) % n, d - 1)
            nxt.append((cur[i] * cur[(i + 1) % n] - 1) / den)
        rows.append(tuple(nxt))

    scale = max(abs(x) for r in rows for x in r)
    border_ok = all(_close(x, one, scale) for x in rows[n - 1]) and all(
        _close(x, zero, scale) for x in rows[n])
    if border_ok != closes:
        raise AssertionError("propagation and monodromy disagree on closure")

    if check_positive:
        for d in range(2, n - 1):
            for i, x in enumerate(rows[d]):
                if x <= 0:
                    raise NonPositiveEntry(i, d, x)
    return Frieze(n, tuple(rows), exact=exact)


def continuant(seq: Sequence) -> Scalar:
    """Tridiagonal determinant with ``seq`` on the diagonal and 1s beside it.

    Uses ``K_m = a_m K_{m-1} - K_{m-2}`` with ``K_{-1} = 0`` and ``K_0 = 1``,
    so the empty continuant is 1 and ``continuant((x,)) == x``.
    """
    seq = [as_scalar(x) for x in seq]
    one = 1.0 if any(isinstance(x, float) for x in seq) else Fraction(1)
    k_prev, k = one * 0, one
    for x in seq:
        k_prev, k = k, x * k - k_prev
    return k


def continuant_entry(a: Sequence, i: int, d: int) -> Scalar:
    """``entry(i, d)`` from the continuant of ``a_{i+1} .. a_{i+d-1}`` (0-based tuple)."""
    n = len(a)
    if d == 0:
        return a[0] * 0
    return continuant([a[(i + m) % n] for m in range(d - 1)])


@dataclass(frozen=True)
class HillSolution:
    """One period ``V_1 .. V_n`` of a solution of ``V_{i+1} = a_i V_i - V_{i-1}``.

    The bi-infinite solution is recovered with ``V_{i+n} = -V_i``.
    """

    values: tuple
    basis_flag: bool = False

    @property
    def n(self) -> int:
        return len(self.values)

    def at(self, i: int) -> Vec:
        """``V_i`` for any integer ``i`` (1-based)."""
        q, r = divmod(i - 1, self.n)
        v = self.values[r]
        return v if q % 2 == 0 else (-v[0], -v[1])


def hill_solution(f: Frieze, v1, v2) -> HillSolution:
    """Iterate the discrete Hill equation of ``f`` from ``V_1 = v1``, ``V_2 = v2``."""
    a = f.first_row
    n = f.n
    vs = [tuple(as_scalar(x) for x in v1), tuple(as_scalar(x) for x in v2)]
    if not f.exact:
        vs = [tuple(float(x) for x in v) for v in vs]
    # V_{i+1} = a_i V_i - V_{i-1}, a_i = a[i-1]; produce V_3 .. V_{n+2}
    for i in range(2, n + 2):
        ai = a[(i - 1) % n]
        vi, vim = vs[i - 1], vs[i - 2]
        vs.append((ai * vi[0] - vim[0], ai * vi[1] - vim[1]))
    scale = max(abs(x) for v in vs for x in v)
    for got, ref in ((vs[n], vs[0]), (vs[n + 1], vs[1])):
        if not all(_close(g, -r, scale) for g, r in zip(got, ref)):
            raise NotAFrieze("Hill solution is not antiperiodic")
    flag = _close(det(vs[0], vs[1]), Fraction(1) if f.exact else 1.0)
    return HillSolution(tuple(vs[:n]), basis_flag=flag)


def hill_basis(f: Frieze) -> HillSolution:
    """The distinguished solution with ``V_1 = (1, 0)``, ``V_2 = (0, 1)``."""
    return hill_solution(f, (1, 0), (0, 1))


def hill_entry(sol: HillSolution, i: int, d: int) -> Scalar:
    """``det(V_i, V_{i+d})``; equals ``entry(i, d)`` for a unimodular basis."""
    return det(sol.at(i), sol.at(i + d))


def chebyshev_frieze(n: int) -> Frieze:
    """Constant frieze with ``a_i = 2 cos(pi/n)``, built by floating propagation.

    Its row ``k`` is constant, equal to ``sin((k+1) pi/n) / sin(pi/n)``.
    """
    if n < 4:
        raise FriezeError(f"period n={n} must be at least 4")
    return build_from_first_row([2.0 * math.cos(math.pi / n)] * n)


def chebyshev_value(n: int, k: int) -> float:
    """Closed form ``U_k(cos(pi/n))`` for the constant frieze."""
    return math.sin((k + 1) * math.pi / n) / math.sin(math.pi / n)


@dataclass
class Violation:
    check: str
    i: int
    d: int
    detail: str

    def to_dict(self) -> dict:
        return {"check": self.check, "i": self.i, "d": self.d, "detail": self.detail}


@dataclass
class ValidationReport:
    ok: bool
    failures: list

    @property
    def first(self) -> Violation | None:
        return self.failures[0] if self.failures else None

    def to_dict(self) -> dict:
        return {"ok": self.ok, "first_failure": self.first.to_dict() if self.first else None,
                "failures": [v.to_dict() for v in self.failures]}


def validate(f: Frieze, tol: float = FLOAT_TOL) -> ValidationReport:
    """Check borders, every diamond, interior positivity and glide symmetry."""
    n, rows = f.n, f.rows
    fails: list[Violation] = []
    scale = max(1.0, max(abs(float(x)) for r in rows for x in r))

    def close(x, y):
        if f.exact:
            return x == y
        return abs(x - y) <= tol * scale

    if len(rows) != n + 1 or any(len(r) != n for r in rows):
        return ValidationReport(False, [Violation("shape", -1, -1, "entries array has wrong shape")])
    for d, target in ((0, 0), (1, 1), (n - 1, 1), (n, 0)):
        for i in range(n):
            if not close(rows[d][i], target):
                fails.append(Violation("border", i, d, f"expected {target}, got {format_scalar(rows[d][i])}"))
    for d in range(1, n):
        for i in range(n):
            j = (i + 1) % n
            lhs = rows[d][i] * rows[d][j] - rows[d + 1][i] * rows[d - 1][j]
            if not close(lhs, 1):
                fails.append(Violation("diamond", i, d, f"EW - NS = {format_scalar(lhs)}"))
    for d in range(2, n - 1):
        for i in range(n):
            if rows[d][i] <= 0:
                fails.append(Violation("positivity", i, d, format_scalar(rows[d][i])))
    for d in range(n + 1):
        for i in range(n):
            if not close(rows[d][i], rows[n - d][(i + d) % n]):
                fails.append(Violation("glide", i, d, "entry(i,d) != entry(i+d, n-d)"))
    return ValidationReport(not fails, fails)
