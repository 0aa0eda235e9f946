"""Cyclic sign changes, row differences between friezes and cross-ratios."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import Frieze, FriezeError, IndexOutOfRange, as_scalar, format_scalar
from .formats import encode_scalar

ZERO_THRESHOLD = 1e-9

# Zeros are skipped before counting, the weakest available reading, so any
# count of at least four holds under every other convention as well.
ZERO_CONVENTION = "zeros skipped; sign changes counted between cyclically consecutive nonzero entries"


class PeriodMismatch(FriezeError):
    pass


class Degenerate(FriezeError):
    pass


class DegenerateQuadruple(FriezeError, ZeroDivisionError):
    pass


@dataclass(frozen=True)
class CyclicSeq:
    """An n-periodic sequence; floating entries below ``zero_threshold * max|x|`` count as 0."""

    values: tuple
    exact: bool = True
    zero_threshold: float = ZERO_THRESHOLD

    @classmethod
    def of(cls, values, zero_threshold: float = ZERO_THRESHOLD) -> "CyclicSeq":
        vals = tuple(as_scalar(x) for x in values)
        exact = all(isinstance(x, Fraction) for x in vals)
        if not exact:
            vals = tuple(float(x) for x in vals)
        return cls(vals, exact, zero_threshold)

    def __len__(self) -> int:
        return len(self.values)

    def signs(self) -> tuple:
        if self.exact:
            return tuple((x > 0) - (x < 0) for x in self.values)
        top = max((abs(x) for x in self.values), default=0.0)
        cut = self.zero_threshold * top
        return tuple(0 if abs(x) <= cut else (1 if x > 0 else -1) for x in self.values)

    def is_zero(self) -> bool:
        return not any(self.signs())


def sign_changes(s) -> int:
    """Number of opposite-sign pairs among cyclically consecutive nonzero entries."""
    if not isinstance(s, CyclicSeq):
        s = CyclicSeq.of(s)
    nz = [x for x in s.signs() if x]
    if len(nz) < 2:
        return 0
    return sum(1 for a, b in zip(nz, nz[1:] + nz[:1]) if a != b)


def row_difference(f: Frieze, g: Frieze, k: int) -> CyclicSeq:
    """``entry_f(i, k+1) - entry_g(i, k+1)`` for ``i = 0 .. n-1``.

    Any ``1 <= k <= width`` is accepted; rows past ``width // 2`` repeat
    earlier rows by glide symmetry.
    """
    if f.n != g.n:
        raise PeriodMismatch(f"periods differ: {f.n} vs {g.n}")
    if not 1 <= k <= f.width:
        raise IndexOutOfRange(f"row k={k} outside 1..{f.width}")
    exact = f.exact and g.exact
    if exact:
        vals = tuple(x - y for x, y in zip(f.row(k), g.row(k)))
    else:
        vals = tuple(float(x) - float(y) for x, y in zip(f.row(k), g.row(k)))
    return CyclicSeq(vals, exact)


@dataclass
class Problem1Result:
    k: int
    count: int
    sequence: CyclicSeq

    @property
    def verdict(self) -> str:
        return "satisfies_four" if self.count >= 4 else "violates"

    def to_dict(self) -> dict:
        return {"k": self.k, "count": self.count, "verdict": self.verdict,
                "sequence": [encode_scalar(x) for x in self.sequence.values],
                "zero_convention": ZERO_CONVENTION}


def problem1_check(f: Frieze, g: Frieze, k: int) -> Problem1Result:
    """Count sign changes of the row-``k`` difference; ``Degenerate`` if it vanishes."""
    seq = row_difference(f, g, k)
    if seq.is_zero():
        raise Degenerate(f"friezes coincide in row {k}")
    return Problem1Result(k, sign_changes(seq), seq)


class _Infinity:
    """The point at infinity of the projective line."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def _factor(x, y):
    # (x - y) with at most one of x, y infinite; infinite factors are
    # replaced by their sign, the common infinite magnitude cancels
    if x is INF:
        return 1, True
    if y is INF:
        return -1, True
    return x - y, False


def _ratio(num, den):
    (n1, i1), (n2, i2) = num
    (d1, j1), (d2, j2) = den
    if i1 + i2 != j1 + j2:
        raise AssertionError("unbalanced infinite factors")
    top, bot = n1 * n2, d1 * d2
    if bot == 0:
        raise DegenerateQuadruple("cross-ratio denominator vanishes")
    if isinstance(top, Fraction) and isinstance(bot, Fraction):
        return top / bot
    if isinstance(top, int) and isinstance(bot, int):
        return Fraction(top, bot)
    return top / bot


def _check_points(pts):
    if sum(p is INF for p in pts) > 1:
        raise DegenerateQuadruple("at most one point may be infinite")
    return [p if p is INF else as_scalar(p) for p in pts]


def cross_ratio_1(a, b, c, d):
    """``(d - a)(c - b) / ((d - c)(b - a))``; one argument may be ``INF``."""
    a, b, c, d = _check_points((a, b, c, d))
    return _ratio((_factor(d, a), _factor(c, b)), (_factor(d, c), _factor(b, a)))


def cross_ratio_2(a, b, c, d):
    """``(d - b)(c - a) / ((d - c)(b - a))``; exceeds ``cross_ratio_1`` by exactly 1."""
    a, b, c, d = _check_points((a, b, c, d))
    return _ratio((_factor(d, b), _factor(c, a)), (_factor(d, c), _factor(b, a)))


def second_row_from_points(x: Sequence) -> CyclicSeq:
    """Cross-ratios ``[x_i, x_{i+1}, x_{i+2}, x_{i+3}]_1`` of consecutive quadruples.

    For points obtained by projecting a frieze's Hill basis this reproduces
    row 2 of the frieze.
    """
    n = len(x)
    vals = [cross_ratio_1(x[i], x[(i + 1) % n], x[(i + 2) % n], x[(i + 3) % n]) for i in range(n)]
    return CyclicSeq.of(vals)


def format_sequence(seq: CyclicSeq) -> list:
    return [format_scalar(x) for x in seq.values]
