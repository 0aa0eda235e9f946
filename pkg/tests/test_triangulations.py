import itertools
from collections import Counter
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from friezes.core import validate
from friezes.triangulations import (CapExceeded, Triangulation, catalan, enumerate_triangulations,
                                    random_triangulation, triangulation_to_frieze)

from conftest import HEPTAGON_DISPLAY, HEPTAGON_ROW, display_row


def catalan_from_width(w):
    return factorial(2 * (w + 1)) // (factorial(w + 1) * factorial(w + 2))


def brute_force_triangulations(n):
    """All maximal non-crossing diagonal sets by exhaustive subset search."""
    diags = [(p, q) for p, q in itertools.combinations(range(n), 2) if (q - p) % n not in (1, n - 1)]
    out = set()
    for sub in itertools.combinations(diags, n - 3):
        try:
            out.add(Triangulation.from_diagonals(n, sub).diagonals)
        except ValueError:
            pass
    return out


def test_catalan_values():
    assert catalan(0) == 1
    assert catalan(3) == 5 == catalan_from_width(2)
    assert catalan(6) == 132 == catalan_from_width(5)
    assert [catalan(m) for m in range(10)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


@pytest.mark.parametrize("n, expected", [(3, 1), (4, 2), (5, 5), (7, 42)])
def test_enumeration_examples(n, expected):
    assert len(list(enumerate_triangulations(n))) == expected


@pytest.mark.parametrize("n", range(3, 13))
def test_enumeration_count_and_uniqueness(n):
    ts = list(enumerate_triangulations(n))
    assert len(ts) == catalan(n - 2)
    assert len({t.diagonals for t in ts}) == len(ts)
    if n <= 8:
        assert {t.diagonals for t in ts} == brute_force_triangulations(n)


def test_enumeration_is_deterministic():
    assert list(enumerate_triangulations(8)) == list(enumerate_triangulations(8))


def test_cap():
    with pytest.raises(CapExceeded):
        next(enumerate_triangulations(15))
    assert len(list(enumerate_triangulations(6, cap=6))) == 14


def test_heptagon_triangulation(heptagon_triangulation):
    f = triangulation_to_frieze(heptagon_triangulation)
    assert f.first_row == HEPTAGON_ROW
    for k, printed in enumerate(HEPTAGON_DISPLAY, start=1):
        assert display_row(f, k, len(printed)) == printed


def test_square_and_pentagon_fans():
    sq = triangulation_to_frieze(Triangulation.from_diagonals(4, [(0, 2)]))
    assert sq.first_row == (2, 1, 2, 1)
    fan = triangulation_to_frieze(Triangulation.from_diagonals(5, [(0, 2), (0, 3)]))
    assert fan.first_row == (3, 1, 2, 2, 1)


def test_rejects_bad_diagonal_sets():
    with pytest.raises(ValueError):
        Triangulation.from_diagonals(6, [(0, 3), (1, 4), (2, 5)])
    with pytest.raises(ValueError):
        Triangulation.from_diagonals(5, [(0, 1), (0, 3)])
    with pytest.raises(ValueError):
        Triangulation.from_diagonals(6, [(0, 2)])


@pytest.mark.parametrize("n", range(4, 11))
def test_conway_coxeter_positive_integers(n):
    for t in enumerate_triangulations(n):
        f = triangulation_to_frieze(t)
        assert validate(f).ok
        assert all(x.denominator == 1 and x >= 1 for d in range(1, n) for x in f.rows[d])


@pytest.mark.parametrize("n", range(4, 10))
def test_conway_coxeter_injective(n):
    rows = [triangulation_to_frieze(t).first_row for t in enumerate_triangulations(n)]
    assert len(set(rows)) == len(rows)


def test_random_triangulation_determinism():
    assert random_triangulation(7, 42) == random_triangulation(7, 42)
    assert random_triangulation(4, 3).diagonals in {((0, 2),), ((1, 3),)}


@settings(max_examples=50)
@given(st.integers(3, 16), st.integers(0, 2**32 - 1))
def test_random_triangulation_is_valid(n, seed):
    t = random_triangulation(n, seed)
    assert Triangulation.from_diagonals(n, t.diagonals) == t
    assert len(t.triangles()) == n - 2


def test_random_triangulation_uniform():
    draws = 100_000
    counts = Counter(random_triangulation(6, s).diagonals for s in range(draws))
    assert set(counts) == {t.diagonals for t in enumerate_triangulations(6)}
    p = 1 / 14
    sigma = (draws * p * (1 - p)) ** 0.5
    assert all(abs(c - draws * p) <= 3 * sigma for c in counts.values())
    chi2 = sum((c - draws * p) ** 2 / (draws * p) for c in counts.values())
    assert chi2 < 34.5  # 99.9% quantile, 13 degrees of freedom
