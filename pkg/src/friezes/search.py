"""Scans for pairs of friezes whose row differences change sign fewer than four times."""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import Frieze, build_from_first_row, format_scalar
from .formats import encode_scalar
from .geometry import polygon_to_frieze, random_polygon, rationalize_polygon
from .signs import ZERO_CONVENTION, Degenerate, CyclicSeq, problem1_check, row_difference, sign_changes
from .triangulations import CapExceeded, enumerate_triangulations, triangulation_to_frieze

CUNTZ_FIRST = (2, 2, 4, 2, 3, Fraction(18, 41), 41, Fraction(30, 41))
CUNTZ_SECOND = (5, Fraction(21, 97), 194, Fraction(36, 97), 3, 5, 1, 5)

MAX_CC_WIDTH = 8


class InternalCheckFailed(AssertionError):
    pass


def _require(cond: bool, msg: str):
    if not cond:
        raise InternalCheckFailed(msg)


@dataclass
class ViolationCert:
    first_row_a: tuple
    first_row_b: tuple
    k: int
    difference: tuple
    count: int

    @classmethod
    def from_pair(cls, f: Frieze, g: Frieze, k: int) -> "ViolationCert":
        res = problem1_check(f, g, k)
        return cls(tuple(f.first_row), tuple(g.first_row), k, res.sequence.values, res.count)

    @property
    def zero_free(self) -> bool:
        """False when the count depends on how vanishing differences are read."""
        return all(x != 0 for x in self.difference)

    def key(self) -> tuple:
        return (self.k, tuple(map(format_scalar, self.first_row_a)), tuple(map(format_scalar, self.first_row_b)))

    def verify(self) -> bool:
        """Rebuild both friezes from their first rows alone and recount exactly."""
        f = build_from_first_row(self.first_row_a)
        g = build_from_first_row(self.first_row_b)
        if not (f.exact and g.exact):
            return False
        res = problem1_check(f, g, self.k)
        return res.count == self.count < 4 and res.sequence.values == tuple(self.difference)

    def to_dict(self) -> dict:
        return {"k": self.k, "count": self.count, "zero_free": self.zero_free,
                "first_row_a": [encode_scalar(x) for x in self.first_row_a],
                "first_row_b": [encode_scalar(x) for x in self.first_row_b],
                "difference": [encode_scalar(x) for x in self.difference]}


@dataclass
class ScanReport:
    scope: dict
    pairs_checked: int = 0
    min_count_per_k: dict = field(default_factory=dict)
    degenerate_per_k: dict = field(default_factory=dict)
    histogram_per_k: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    unconfirmed_candidates: int = 0
    truncated: bool = False

    def record(self, k: int, count: int | None):
        if count is None:
            self.degenerate_per_k[k] = self.degenerate_per_k.get(k, 0) + 1
            return
        prev = self.min_count_per_k.get(k)
        self.min_count_per_k[k] = count if prev is None else min(prev, count)
        hist = self.histogram_per_k.setdefault(k, {})
        hist[count] = hist.get(count, 0) + 1

    def merge(self, other: "ScanReport"):
        self.pairs_checked += other.pairs_checked
        for k, c in other.min_count_per_k.items():
            prev = self.min_count_per_k.get(k)
            self.min_count_per_k[k] = c if prev is None else min(prev, c)
        for k, c in other.degenerate_per_k.items():
            self.degenerate_per_k[k] = self.degenerate_per_k.get(k, 0) + c
        for k, hist in other.histogram_per_k.items():
            mine = self.histogram_per_k.setdefault(k, {})
            for c, m in hist.items():
                mine[c] = mine.get(c, 0) + m
        self.violations.extend(other.violations)
        self.unconfirmed_candidates += other.unconfirmed_candidates
        self.truncated = self.truncated or other.truncated

    def finalize(self) -> "ScanReport":
        self.violations.sort(key=ViolationCert.key)
        return self

    def to_dict(self) -> dict:
        ks = sorted(set(self.min_count_per_k) | set(self.degenerate_per_k))
        return {
            "scope": self.scope,
            "pairs_checked": self.pairs_checked,
            "truncated": self.truncated,
            "zero_convention": ZERO_CONVENTION,
            "min_count_per_k": {str(k): self.min_count_per_k[k] for k in ks if k in self.min_count_per_k},
            "degenerate_per_k": {str(k): self.degenerate_per_k.get(k, 0) for k in ks},
            "histogram_per_k": {str(k): {str(c): m for c, m in sorted(self.histogram_per_k.get(k, {}).items())}
                                for k in ks},
            "unconfirmed_candidates": self.unconfirmed_candidates,
            "violations": [v.to_dict() for v in self.violations],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


class ScanCapExceeded(CapExceeded):
    def __init__(self, report: ScanReport):
        self.report = report
        super().__init__(f"pair cap reached after {report.pairs_checked} pairs")


# ------------------------------------------------------------------ Cuntz


def cuntz_counterexample():
    """Both n = 8 friezes of the Cuntz pair and a report certifying the row-3 violation.

    Differences are taken as second minus first, the orientation in which the
    row-3 differences are strictly positive.
    """
    f = build_from_first_row(CUNTZ_FIRST)
    g = build_from_first_row(CUNTZ_SECOND)
    _require(f.n == g.n == 8 and f.width == 5, "Cuntz friezes must have n = 8, width 5")
    for h in (f, g):
        _require(h.exact, "Cuntz friezes must be exact")
        _require(all(x > 0 for d in range(2, h.n - 1) for x in h.rows[d]), "interior entries must be positive")

    report = ScanReport(scope={"kind": "cuntz", "n": 8, "orientation": "second - first", "k": [1, 2, 3]})
    report.pairs_checked = 1
    for k in (1, 2, 3):
        res = problem1_check(g, f, k)
        report.record(k, res.count)
        if k < 3:
            _require(res.count >= 4, f"row {k} must change sign at least four times")
    d3 = row_difference(g, f, 3).values
    _require(all(x > 0 for x in d3), "row-3 differences must be strictly positive")
    _require(d3[:4] == d3[4:], "row-3 differences must be 4-periodic")
    cert = ViolationCert.from_pair(g, f, 3)
    _require(cert.count == 0 and cert.verify(), "row-3 certificate must re-verify with count 0")
    report.violations.append(cert)
    return f, g, report.finalize()


# ------------------------------------------------------------------ CC scan


@lru_cache(maxsize=None)
def cc_first_rows(width: int) -> tuple:
    """First rows of all Conway-Coxeter friezes of the width, in enumeration order."""
    n = width + 3
    return tuple(tuple(int(x) for x in triangulation_to_frieze(t).first_row)
                 for t in enumerate_triangulations(n, cap=max(n, 14)))


@lru_cache(maxsize=None)
def _cc_rows(width: int) -> tuple:
    return tuple(tuple(tuple(int(x) for x in r) for r in build_from_first_row(a).rows)
                 for a in cc_first_rows(width))


def _pair_at(index: int, m: int) -> tuple:
    # unordered pairs (a, b), a < b, in lexicographic order
    a = 0
    while index >= m - 1 - a:
        index -= m - 1 - a
        a += 1
    return a, a + 1 + index


def _scan_cc_block(width: int, k_set: tuple, start: int, stop: int) -> ScanReport:
    rows = _cc_rows(width)
    m = len(rows)
    rep = ScanReport(scope={})
    a, b = _pair_at(start, m) if start < m * (m - 1) // 2 else (m, m)
    for _ in range(start, stop):
        ra, rb = rows[a], rows[b]
        for k in k_set:
            diff = [x - y for x, y in zip(ra[k + 1], rb[k + 1])]
            if not any(diff):
                rep.record(k, None)
                continue
            count = sign_changes(CyclicSeq(tuple(diff), exact=True))
            rep.record(k, count)
            if count < 4:
                fa = build_from_first_row(ra[2])
                fb = build_from_first_row(rb[2])
                rep.violations.append(ViolationCert.from_pair(fa, fb, k))
        rep.pairs_checked += 1
        b += 1
        if b == m:
            a += 1
            b = a + 1
    return rep


def _blocks(total: int, workers: int) -> list:
    size = max(1, -(-total // max(1, workers * 4)))
    return [(s, min(total, s + size)) for s in range(0, total, size)]


def _run_blocks(fn, args_list, workers: int) -> list:
    if workers <= 1 or len(args_list) <= 1:
        return [fn(*a) for a in args_list]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        futs = [ex.submit(fn, *a) for a in args_list]
        return [f.result() for f in futs]


def scan_cc(width: int, k_set, cap: int | None = None, workers: int = 1) -> ScanReport:
    """Check every unordered pair of Conway-Coxeter friezes of the width, exactly.

    Raises ``ScanCapExceeded`` (carrying the partial, truncated report) when
    the number of pairs exceeds ``cap``.
    """
    if not 1 <= width <= MAX_CC_WIDTH:
        raise ValueError(f"width={width} outside 1..{MAX_CC_WIDTH}")
    k_set = tuple(sorted(set(int(k) for k in k_set)))
    if not k_set or k_set[0] < 1 or k_set[-1] > width:
        raise ValueError(f"rows must lie in 1..{width}")
    m = len(cc_first_rows(width))
    total = m * (m - 1) // 2
    todo = total if cap is None else min(total, cap)
    report = ScanReport(scope={"kind": "cc", "width": width, "n": width + 3, "k": list(k_set),
                               "friezes": m, "pairs_total": total, "cap": cap})
    for part in _run_blocks(_scan_cc_block, [(width, k_set, s, e) for s, e in _blocks(todo, workers)], workers):
        report.merge(part)
    report.finalize()
    if todo < total:
        report.truncated = True
        raise ScanCapExceeded(report)
    return report


# ------------------------------------------------------------------ random scan


def _sample_pair(n: int, seed: int, s: int):
    rng = np.random.default_rng([seed, s])
    return random_polygon(n, rng), random_polygon(n, rng)


def _scan_random_block(n: int, k_set: tuple, seed: int, start: int, stop: int, max_den: int) -> ScanReport:
    rep = ScanReport(scope={})
    for s in range(start, stop):
        pa, pb = _sample_pair(n, seed, s)
        fa, fb = polygon_to_frieze(pa), polygon_to_frieze(pb)
        exact_pair = None
        for k in k_set:
            try:
                count = problem1_check(fa, fb, k).count
            except Degenerate:
                rep.record(k, None)
                continue
            if count < 4:
                # floating counts near the zero threshold are not trusted
                if exact_pair is None:
                    exact_pair = (rationalize_polygon(pa, max_den), rationalize_polygon(pb, max_den))
                try:
                    res = problem1_check(*exact_pair, k)
                except Degenerate:
                    rep.record(k, None)
                    continue
                count = res.count
                if count < 4:
                    rep.violations.append(ViolationCert.from_pair(*exact_pair, k))
                else:
                    rep.unconfirmed_candidates += 1
            rep.record(k, count)
        rep.pairs_checked += 1
    return rep


def scan_random(n: int, k_set, samples: int, seed: int, workers: int = 1, max_den: int = 10**6) -> ScanReport:
    """Random pairs of friezes of odd period ``n``; candidate violations are certified exactly.

    Sample ``s`` draws from ``numpy.random.default_rng([seed, s])`` so the
    report does not depend on ``workers``.
    """
    if n % 2 == 0 or n < 5:
        raise ValueError(f"n={n} must be odd and at least 5")
    k_set = tuple(sorted(set(int(k) for k in k_set)))
    if not k_set or k_set[0] < 1 or k_set[-1] > n - 3:
        raise ValueError(f"rows must lie in 1..{n - 3}")
    report = ScanReport(scope={"kind": "random", "n": n, "k": list(k_set), "samples": samples,
                               "seed": seed, "max_den": max_den})
    args = [(n, k_set, seed, s, e, max_den) for s, e in _blocks(samples, workers)]
    for part in _run_blocks(_scan_random_block, args, workers):
        report.merge(part)
    return report.finalize()
