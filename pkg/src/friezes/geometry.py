"""Friezes as polygons in the projective line, and equilateral plane polygons.

A frieze of period ``n`` corresponds to a chain ``V_0, V_1, ...`` in the
plane with ``det(V_i, V_{i+1}) = 1`` and ``V_{i+n} = -V_i``.  Here the chain
is stored in polar form: angles ``0 <= theta_0 < ... < theta_{n-1} < pi`` and
positive radii, with ``theta_{i+n} = theta_i + pi``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import FLOAT_TOL, Frieze, FriezeError, build_from_first_row
from .signs import INF, CyclicSeq, PeriodMismatch


class InvalidLift(FriezeError):
    pass


class BadAngles(FriezeError):
    pass


class ClosureFailed(FriezeError):
    pass


@dataclass(frozen=True)
class ProjectivePolygon:
    n: int
    angles: tuple
    radii: tuple

    def vectors(self, count: int | None = None) -> np.ndarray:
        """``V_0 .. V_{count-1}`` using the antiperiodic extension."""
        count = self.n if count is None else count
        idx = np.arange(count)
        th = np.asarray(self.angles)[idx % self.n] + np.pi * (idx // self.n)
        r = np.asarray(self.radii)[idx % self.n]
        return np.stack([r * np.cos(th), r * np.sin(th)], axis=1)

    def points(self) -> list:
        """Affine coordinates ``cot(theta_i)`` on the projective line; ``theta = 0`` maps to ``INF``."""
        return [INF if th == 0.0 else math.cos(th) / math.sin(th) for th in self.angles]

    def to_json(self) -> dict:
        return {"n": self.n, "angles": list(self.angles), "radii": list(self.radii)}

    @classmethod
    def from_json(cls, obj: dict) -> "ProjectivePolygon":
        return cls(int(obj["n"]), tuple(map(float, obj["angles"])), tuple(map(float, obj["radii"])))


def frieze_to_polygon(f: Frieze) -> ProjectivePolygon:
    """Polar form of the frieze's Hill chain, put in a canonical SL(2) position.

    In the basis ``V_0 = (1, 0)``, ``V_1 = (0, 1)`` the chain is read straight
    off the entries, ``V_i = (-entry(1, i-1), entry(0, i))``, which avoids
    error growth along the recurrence.  It is then moved by the
    area-preserving map that makes its second moment matrix a multiple of the
    identity (unique up to rotation) and rotated so that ``theta_0 = 0``.
    For odd ``n`` the radii are re-derived from the angles so that
    consecutive determinants are 1 to rounding.  The constant frieze maps to
    the regular polygon.
    """
    n = f.n
    V = np.array([[1.0, 0.0]] + [[-float(f.entry(1, i - 1)), float(f.entry(0, i))] for i in range(1, n)])
    S = V.T @ V
    w, U = np.linalg.eigh(S)
    A = (w.prod() ** 0.25) * (U @ np.diag(w ** -0.5) @ U.T)
    V = V @ A.T
    th = np.arctan2(V[:, 1], V[:, 0])
    th = np.mod(th - th[0], 2 * np.pi)
    # the chain turns monotonically through less than pi before V_n = -V_0
    if np.any(np.diff(th) <= 0) or th[-1] >= np.pi:
        raise AssertionError("Hill chain of a positive frieze must turn monotonically")
    if n % 2:
        return lift_angles(th)
    r = np.hypot(V[:, 0], V[:, 1])
    return ProjectivePolygon(n, tuple(float(x) for x in th), tuple(float(x) for x in r))


def _check_lift(p: ProjectivePolygon, tol: float):
    V = p.vectors(p.n + 1)
    dets = V[:-1, 0] * V[1:, 1] - V[:-1, 1] * V[1:, 0]
    bad = np.flatnonzero(np.abs(dets - 1.0) > tol)
    if bad.size:
        i = int(bad[0])
        raise InvalidLift(f"det(V_{i}, V_{i + 1}) = {dets[i]!r}, expected 1")


def polygon_to_frieze(p: ProjectivePolygon, tol: float = FLOAT_TOL) -> Frieze:
    """Floating frieze with ``entry(i, d) = r_i r_{i+d} sin(theta_{i+d} - theta_i)``."""
    n = p.n
    if any(b <= a for a, b in zip(p.angles, p.angles[1:])) or not (0 <= p.angles[0] and p.angles[-1] < math.pi):
        raise BadAngles("angles must increase strictly inside [0, pi)")
    _check_lift(p, tol)
    th = np.asarray(p.angles)
    r = np.asarray(p.radii)
    idx = np.arange(2 * n + 1)
    TH = th[idx % n] + np.pi * (idx // n)
    R = r[idx % n]
    rows = []
    for d in range(n + 1):
        i = np.arange(n)
        rows.append(tuple(float(x) for x in R[i] * R[i + d] * np.sin(TH[i + d] - TH[i])))
    rows[0] = (0.0,) * n
    return Frieze(n, tuple(rows), exact=False)


def lift_angles(angles) -> ProjectivePolygon:
    """Radii for strictly increasing angles in ``[0, pi)`` so that consecutive determinants are 1 (odd n)."""
    th = np.asarray(angles, dtype=float)
    n = th.size
    if n % 2 == 0:
        raise FriezeError("radii are determined by the angles only for odd n")
    gaps = np.diff(np.append(th, th[0] + np.pi))
    if np.any(gaps <= 1e-12):
        raise BadAngles("angles must be distinct and increasing")
    s = np.sin(gaps)
    # r_{i+1} = 1 / (r_i s_i); for odd n, r_n = C / r_0 so r_0 = sqrt(C)
    r = 1.0
    for x in s:
        r = 1.0 / (r * x)
    radii = [math.sqrt(r)]
    for x in s[:-1]:
        radii.append(1.0 / (radii[-1] * x))
    return ProjectivePolygon(n, tuple(float(x) for x in th), tuple(radii))


def random_polygon(n: int, rng: np.random.Generator) -> ProjectivePolygon:
    if n % 2 == 0 or n < 5:
        raise FriezeError(f"random friezes need odd n >= 5, got {n}")
    th = np.sort(rng.uniform(0.0, np.pi, size=n))
    return lift_angles(th)


def random_frieze(n: int, seed) -> Frieze:
    """Random positive floating frieze from uniformly sampled points of the projective line."""
    return polygon_to_frieze(random_polygon(n, np.random.default_rng(seed)))


def exact_frieze_from_points(x) -> Frieze:
    """Exact frieze of odd period from rational points ``x_0 > x_1 > ... > x_{n-1}``.

    Lifting ``V_i = lambda_i (x_i, 1)`` with unit consecutive determinants gives
    rational ``lambda_i**2`` when ``n`` is odd, so the first row
    ``det(V_{i}, V_{i+2})`` is rational.
    """
    x = [Fraction(v) for v in x]
    n = len(x)
    if n % 2 == 0 or n < 5:
        raise FriezeError("exact reconstruction from points needs odd n >= 5")
    if any(b >= a for a, b in zip(x, x[1:])):
        raise BadAngles("points must be strictly decreasing")
    # m_i = lambda_i lambda_{i+1} (cyclically, all positive)
    m = [1 / abs(x[i] - x[(i + 1) % n]) for i in range(n)]
    lam0_sq = m[n - 1]
    for i in range(n - 1):
        lam0_sq = lam0_sq * m[i] if i % 2 == 0 else lam0_sq / m[i]
    lam_sq = [lam0_sq]
    for i in range(n - 1):
        lam_sq.append(m[i] ** 2 / lam_sq[-1])
    a = []
    for i in range(n):
        j, l = (i + 1) % n, (i + 2) % n
        a.append(m[i] * m[j] / lam_sq[j] * abs(x[i] - x[l]))
    return build_from_first_row(a)


def rationalize_polygon(p: ProjectivePolygon, max_den: int = 10**6) -> Frieze:
    """Exact frieze whose points approximate those of ``p`` (odd n)."""
    th = np.asarray(p.angles)
    if th[0] == 0.0:
        # a common rotation is a projective map and leaves the frieze unchanged
        th = th + (np.pi - th[-1]) / 2
    pts = [Fraction(math.cos(t) / math.sin(t)) for t in th]
    q = [v.limit_denominator(max_den) for v in pts]
    for i in range(1, len(q)):
        if q[i] >= q[i - 1]:
            raise BadAngles("rationalisation collapsed two points; raise max_den")
    return exact_frieze_from_points(q)


# ---------------------------------------------------------------- equilateral


@dataclass(frozen=True)
class EquilateralPolygon:
    n: int
    vertices: tuple
    convex: bool

    def array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=float)

    def to_json(self) -> dict:
        return {"n": self.n, "vertices": [list(v) for v in self.vertices]}


def _closure(phi: np.ndarray):
    Phi = np.cumsum(phi)
    e = np.stack([np.cos(Phi), np.sin(Phi)], axis=1)
    return e, e.sum(axis=0)


def is_convex(vertices: np.ndarray) -> bool:
    e = np.roll(vertices, -1, axis=0) - vertices
    cross = e[:, 0] * np.roll(e[:, 1], -1) - e[:, 1] * np.roll(e[:, 0], -1)
    return bool(np.all(cross > 0) or np.all(cross < 0))


def sample_equilateral_convex(n: int, seed, max_iter: int = 100, max_restarts: int = 10) -> EquilateralPolygon:
    """Random convex polygon with unit sides.

    Exterior angles start as a random positive vector scaled to sum ``2 pi``;
    damped Gauss-Newton steps on the closure equations (with the angle sum
    held fixed) drive ``|sum of edges|`` below ``1e-10`` while every exterior
    angle stays in ``(0, pi)``.
    """
    if n < 3:
        raise FriezeError("polygons need n >= 3")
    rng = np.random.default_rng(seed)
    for _ in range(max_restarts):
        phi = rng.uniform(0.2, 1.0, size=n)
        phi *= 2 * np.pi / phi.sum()
        if np.any(phi >= np.pi):
            continue
        for _ in range(max_iter):
            e, res = _closure(phi)
            if np.hypot(*res) < 1e-10:
                break
            # d(sum e_i)/d(phi_j) = sum_{i >= j} e_i rotated by 90 degrees
            tail = np.cumsum(e[::-1], axis=0)[::-1]
            J = np.vstack([-tail[:, 1], tail[:, 0], np.ones(n)])
            r = np.array([res[0], res[1], phi.sum() - 2 * np.pi])
            step = -np.linalg.lstsq(J, r, rcond=None)[0]
            t = 1.0
            while t > 1e-6:
                cand = phi + t * step
                if np.all(cand > 0) and np.all(cand < np.pi):
                    break
                t /= 2
            else:
                break
            phi = cand
        e, res = _closure(phi)
        if np.hypot(*res) < 1e-10:
            verts = np.vstack([np.zeros(2), np.cumsum(e, axis=0)[:-1]])
            return EquilateralPolygon(n, tuple(tuple(map(float, v)) for v in verts), is_convex(verts))
    raise ClosureFailed(f"no closed equilateral {n}-gon after {max_restarts} restarts")


def diagonal_difference(pa: EquilateralPolygon, pb: EquilateralPolygon, k: int) -> CyclicSeq:
    """``|A_{i+k} - A_{i-1}| - |B_{i+k} - B_{i-1}|`` for ``i = 0 .. n-1``."""
    if pa.n != pb.n:
        raise PeriodMismatch(f"polygon sizes differ: {pa.n} vs {pb.n}")
    n = pa.n
    if not 1 <= k <= n - 2:
        raise FriezeError(f"k={k} outside 1..{n - 2}")
    i = np.arange(n)

    def lengths(p):
        V = p.array()
        return np.hypot(*(V[(i + k) % n] - V[(i - 1) % n]).T)

    return CyclicSeq(tuple(float(x) for x in lengths(pa) - lengths(pb)), exact=False)


def problem2_experiment(ns, pairs: int, seed: int, ks=None, zero_threshold: float = 1e-9) -> dict:
    """Sign-change statistics of diagonal-length differences for random equilateral pairs.

    Pair ``p`` uses ``n = ns[p % len(ns)]`` and seeds ``[seed, p, 0]`` and
    ``[seed, p, 1]``.  Rows ``k`` default to ``1 .. n-2``; ``k = 1`` is the
    short-diagonal case where at least four changes are guaranteed.
    """
    from .signs import sign_changes

    ns = list(ns)
    records = []
    for p in range(pairs):
        n = ns[p % len(ns)]
        pa = sample_equilateral_convex(n, [seed, p, 0])
        pb = sample_equilateral_convex(n, [seed, p, 1])
        for k in (ks if ks is not None else range(1, n - 1)):
            if not 1 <= k <= n - 2:
                continue
            seq = diagonal_difference(pa, pb, k)
            seq = CyclicSeq(seq.values, exact=False, zero_threshold=zero_threshold)
            records.append({"pair": p, "n": n, "k": k, "count": sign_changes(seq),
                            "degenerate": seq.is_zero()})
    summary = {}
    for rec in records:
        if rec["degenerate"]:
            continue
        s = summary.setdefault(str(rec["k"]), {"min": rec["count"], "pairs": 0, "histogram": {}})
        s["min"] = min(s["min"], rec["count"])
        s["pairs"] += 1
        h = s["histogram"]
        h[str(rec["count"])] = h.get(str(rec["count"]), 0) + 1
    return {
        "reading": "differences |A_{i+k} - A_{i-1}| - |B_{i+k} - B_{i-1}| of two equilateral convex polygons",
        "scope": {"ns": ns, "pairs": pairs, "seed": seed},
        "legendre_cauchy_ok": all(r["count"] >= 4 for r in records if r["k"] == 1 and not r["degenerate"]),
        "summary": summary,
        "records": records,
    }
