"""First-order deformations of the constant (Chebyshev) frieze.

The regular polygon ``V_i = (cos(i pi/n), sin(i pi/n)) / sqrt(sin(pi/n))`` is
deformed to ``W_i = V_i + eps E_i`` with ``E_i = p_i V_i + pbar_i V_{i+1}``.
Keeping ``det(W_i, W_{i+1}) = 1`` to first order forces every coefficient to
be a function of the periodic sequence ``q``; the change of the span-``k``
entries ``det(W_i, W_{i+k})`` is then ``c_i / sin(2 pi/n)`` with ``c`` as in
:func:`c_sequence`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import FriezeError
from .signs import CyclicSeq, ZERO_THRESHOLD, sign_changes

DEGENERATE_TOL = 1e-9


class KOutOfRange(FriezeError):
    pass


@dataclass(frozen=True)
class DeformationInput:
    n: int
    q: tuple
    k: int

    def __post_init__(self):
        if self.n < 5:
            raise FriezeError(f"n={self.n} must be at least 5")
        if len(self.q) != self.n:
            raise FriezeError(f"q has {len(self.q)} entries, expected {self.n}")
        object.__setattr__(self, "q", tuple(float(x) for x in self.q))

    @classmethod
    def gaussian(cls, n: int, k: int, rng: np.random.Generator) -> "DeformationInput":
        return cls(n, tuple(rng.standard_normal(n)), k)


@dataclass(frozen=True)
class DeformationCoefficients:
    p: tuple
    p_bar: tuple
    q_bar: tuple
    c_const: float


@dataclass(frozen=True)
class CSequence:
    n: int
    k: int
    c: tuple


def coefficients_from_q(inp: DeformationInput) -> DeformationCoefficients:
    n, q = inp.n, inp.q
    c = 2.0 * math.cos(math.pi / n)
    p = tuple(-q[(i + 1) % n] for i in range(n))
    p_bar = tuple((q[i] + q[(i + 1) % n]) / c for i in range(n))
    q_bar = tuple(-x for x in p_bar)
    return DeformationCoefficients(p, p_bar, q_bar, c)


def _check_k(n: int, k: int):
    if not 2 <= k <= n - 2:
        raise KOutOfRange(f"k={k} outside 2..{n - 2}")


def c_sequence(inp: DeformationInput) -> CSequence:
    """``c_i = (q_{i+k} - q_{i+1}) sin((k+1)pi/n) - (q_{i+k+1} - q_i) sin((k-1)pi/n)``."""
    n, k, q = inp.n, inp.k, inp.q
    _check_k(n, k)
    s_plus = math.sin(math.pi * (k + 1) / n)
    s_minus = math.sin(math.pi * (k - 1) / n)
    c = tuple((q[(i + k) % n] - q[(i + 1) % n]) * s_plus
              - (q[(i + k + 1) % n] - q[i]) * s_minus for i in range(n))
    return CSequence(n, k, c)


def harmonic_orthogonality_report(cs: CSequence) -> tuple:
    """``(|sum c_i|, |sum c_i sin(2 pi i/n)|, |sum c_i cos(2 pi i/n)|)`` with 1-based ``i``."""
    n = cs.n
    c = np.asarray(cs.c, dtype=float)
    i = np.arange(1, n + 1)
    ang = 2.0 * np.pi * i / n
    return (abs(float(c.sum())), abs(float(c @ np.sin(ang))), abs(float(c @ np.cos(ang))))


def is_degenerate(inp: DeformationInput, cs: CSequence) -> bool:
    scale = max(abs(x) for x in inp.q)
    return max(abs(x) for x in cs.c) <= DEGENERATE_TOL * scale


@dataclass
class InfinitesimalResult:
    count: int
    degenerate: bool

    @property
    def verdict(self) -> str:
        if self.degenerate:
            return "degenerate"
        return "satisfies_four" if self.count >= 4 else "violates"


def infinitesimal_check(inp: DeformationInput) -> InfinitesimalResult:
    cs = c_sequence(inp)
    if is_degenerate(inp, cs):
        return InfinitesimalResult(0, True)
    return InfinitesimalResult(sign_changes(CyclicSeq(cs.c, exact=False, zero_threshold=ZERO_THRESHOLD)),
                               False)


def regular_polygon(n: int, count: int | None = None) -> np.ndarray:
    """Rows ``V_0 .. V_{count-1}`` of the unit-determinant regular polygon."""
    count = n if count is None else count
    i = np.arange(count)
    return np.stack([np.cos(i * np.pi / n), np.sin(i * np.pi / n)], axis=1) / math.sqrt(math.sin(math.pi / n))


def _brackets(P: np.ndarray, k: int, n: int) -> np.ndarray:
    # P holds V_0 .. V_{n+k-1}
    a, b = P[:n], P[k:k + n]
    return a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]


def finite_difference_oracle(inp: DeformationInput, eps: float = 1e-6) -> CyclicSeq:
    """``(det(W_i, W_{i+k}) - det(V_i, V_{i+k})) / eps`` for the renormalised deformation.

    ``W_i`` is rescaled by ``lambda_i`` with ``lambda_i lambda_{i+1} = 1 / det(W_i, W_{i+1})``;
    the log-system is solved by least squares, which is exact for odd ``n``.
    The result approximates ``c_i / sin(2 pi/n)`` with an ``O(eps)`` error.
    """
    n, k = inp.n, inp.k
    coef = coefficients_from_q(inp)
    idx = np.arange(n + k + 1)
    V = regular_polygon(n, n + k + 2)
    p = np.asarray(coef.p)[idx % n]
    pb = np.asarray(coef.p_bar)[idx % n]
    E = p[:, None] * V[idx] + pb[:, None] * V[idx + 1]
    W = V[idx] + eps * E

    dets = W[:n, 0] * W[1:n + 1, 1] - W[:n, 1] * W[1:n + 1, 0]
    A = np.zeros((n, n))
    for i in range(n):
        A[i, i] += 1.0
        A[i, (i + 1) % n] += 1.0
    loglam = np.linalg.lstsq(A, -np.log(dets), rcond=None)[0]
    lam = np.exp(loglam)[idx % n]
    W = W * lam[:, None]

    diff = (_brackets(W, k, n) - _brackets(V[idx], k, n)) / eps
    return CyclicSeq(tuple(float(x) for x in diff), exact=False)


def kernel_basis(n: int, k: int, tol: float = 1e-9) -> np.ndarray:
    """Orthonormal basis (rows) of the null space of the linear map ``q -> c``."""
    _check_k(n, k)
    M = np.zeros((n, n))
    for j in range(n):
        e = np.zeros(n)
        e[j] = 1.0
        M[:, j] = c_sequence(DeformationInput(n, tuple(e), k)).c
    _, s, vt = np.linalg.svd(M)
    rank = int(np.sum(s > tol * max(1.0, s[0])))
    return vt[rank:]
