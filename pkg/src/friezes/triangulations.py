"""Triangulations of a labelled convex polygon and the Conway-Coxeter map."""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .core import Frieze, build_from_first_row

DEFAULT_CAP = 14


class CapExceeded(ValueError):
    pass


def _crosses(p, q) -> bool:
    (a, b), (c, d) = p, q
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


@dataclass(frozen=True)
class Triangulation:
    """Labelled triangulation; ``diagonals`` is a sorted tuple of ``(p, q)`` with ``p < q``."""

    n: int
    diagonals: tuple

    @classmethod
    def from_diagonals(cls, n: int, diagonals) -> "Triangulation":
        if n < 3:
            raise ValueError(f"polygon needs n >= 3 vertices, got {n}")
        norm = set()
        for p, q in diagonals:
            p, q = sorted((int(p), int(q)))
            if not (0 <= p < n and 0 <= q < n):
                raise ValueError(f"diagonal ({p}, {q}) has a vertex outside 0..{n - 1}")
            if (q - p) % n in (0, 1, n - 1):
                raise ValueError(f"({p}, {q}) is a side or a point, not a diagonal")
            norm.add((p, q))
        diags = tuple(sorted(norm))
        if len(diags) != n - 3:
            raise ValueError(f"a triangulation of an {n}-gon has {n - 3} diagonals, got {len(diags)}")
        for x in range(len(diags)):
            for y in range(x + 1, len(diags)):
                if _crosses(diags[x], diags[y]):
                    raise ValueError(f"diagonals {diags[x]} and {diags[y]} cross")
        return cls(n, diags)

    def triangles(self) -> list:
        """The ``n - 2`` triangles as sorted vertex triples."""
        adj = {v: {(v - 1) % self.n, (v + 1) % self.n} for v in range(self.n)}
        for p, q in self.diagonals:
            adj[p].add(q)
            adj[q].add(p)
        tris = set()
        for p in range(self.n):
            for q in adj[p]:
                for r in adj[p] & adj[q]:
                    tris.add(tuple(sorted((p, q, r))))
        # in a triangulation every 3-clique of the edge graph is a face
        return sorted(tris)

    def vertex_counts(self) -> tuple:
        counts = [0] * self.n
        for tri in self.triangles():
            for v in tri:
                counts[v] += 1
        return tuple(counts)


def triangulation_to_frieze(t: Triangulation) -> Frieze:
    """Conway-Coxeter frieze: ``first_row[v]`` is the number of triangles at vertex ``v``."""
    if t.n < 4:
        raise ValueError("friezes need n >= 4")
    f = build_from_first_row(t.vertex_counts())
    for row in f.rows:
        if any(x.denominator != 1 for x in row):
            raise AssertionError(f"non-integral Conway-Coxeter frieze from {t}")
    return f


def catalan(m: int) -> int:
    if m < 0:
        raise ValueError("catalan index must be >= 0")
    return comb(2 * m, m) // (m + 1)


def _triangulate(poly: tuple) -> Iterator[list]:
    # apex of the triangle on edge (poly[0], poly[1]) splits the polygon in two
    if len(poly) < 3:
        yield []
        return
    last = len(poly) - 1
    for j in range(2, len(poly)):
        here = []
        if j != 2:
            here.append((poly[1], poly[j]))
        if j != last:
            here.append((poly[j], poly[0]))
        for left in _triangulate(poly[1:j + 1]):
            for right in _triangulate(poly[j:] + (poly[0],)):
                yield here + left + right


def enumerate_triangulations(n: int, cap: int = DEFAULT_CAP) -> Iterator[Triangulation]:
    """Yield all ``catalan(n - 2)`` triangulations of the labelled n-gon, in a fixed order."""
    if n < 3:
        raise ValueError(f"n={n} must be at least 3")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap}")
    for diags in _triangulate(tuple(range(n))):
        yield Triangulation(n, tuple(sorted(tuple(sorted(d)) for d in diags)))


def _random_dyck(m: int, rng: random.Random) -> list:
    # cycle lemma: the unique rotation of a random (m ups, m+1 downs) word
    # starting after its lowest point is a Dyck path followed by one down step
    steps = [1] * m + [-1] * (m + 1)
    rng.shuffle(steps)
    h, low, low_at = 0, 0, 0
    for idx, s in enumerate(steps):
        h += s
        if h < low:
            low, low_at = h, idx + 1
    rot = steps[low_at:] + steps[:low_at]
    return rot[:-1]


def _dyck_to_diagonals(word: list, poly: tuple) -> list:
    # word = U A D B  <->  apex j with |poly[1..j]| triangles encoded by A
    if len(poly) < 3:
        return []
    h = 0
    for pos, s in enumerate(word):
        h += s
        if h == 0:
            break
    inner, rest = word[1:pos], word[pos + 1:]
    j = 2 + len(inner) // 2
    here = []
    if j != 2:
        here.append((poly[1], poly[j]))
    if j != len(poly) - 1:
        here.append((poly[j], poly[0]))
    return (here + _dyck_to_diagonals(inner, poly[1:j + 1])
            + _dyck_to_diagonals(rest, poly[j:] + (poly[0],)))


def random_triangulation(n: int, seed: int) -> Triangulation:
    """Uniform random labelled triangulation, reproducible for a given seed."""
    if n < 3:
        raise ValueError(f"n={n} must be at least 3")
    rng = random.Random(seed)
    word = _random_dyck(n - 2, rng)
    diags = _dyck_to_diagonals(word, tuple(range(n)))
    return Triangulation(n, tuple(sorted(tuple(sorted(d)) for d in diags)))
