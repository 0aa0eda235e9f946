import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from friezes.core import (DivisionByZero, Frieze, IndexOutOfRange, NonClosing, NonPositiveEntry,
                          NotAFrieze, build_from_first_row, chebyshev_frieze, chebyshev_value,
                          continuant, continuant_entry, det, hill_basis, hill_entry, hill_solution,
                          monodromy, validate)
from friezes.formats import frieze_from_json, frieze_to_json
from friezes.triangulations import random_triangulation, triangulation_to_frieze

from conftest import HEPTAGON_DISPLAY, HEPTAGON_ROW, display_row


def cofactor_det(m):
    """Determinant by Laplace expansion along the first row (independent oracle)."""
    if not m:
        return Fraction(1)
    return sum((-1) ** j * m[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(len(m)) if m[0][j] != 0)


def tridiagonal(seq):
    size = len(seq)
    return [[Fraction(seq[r]) if r == c else Fraction(1) if abs(r - c) == 1 else Fraction(0)
             for c in range(size)] for r in range(size)]


def cyclic_rotations(seq):
    return {tuple(seq[i:] + seq[:i]) for i in range(len(seq))}


def test_pentagon_from_display_substitution():
    # x1 = x2 = 1 in the generic width-2 frieze
    f = build_from_first_row((1, 2, 2, 1, 3))
    assert f.width == 2
    assert tuple(f.row(2)) in cyclic_rotations([1, 3, 1, 2, 2])


@given(st.fractions(min_value=Fraction(1, 50), max_value=50),
       st.fractions(min_value=Fraction(1, 50), max_value=50))
def test_generic_width_two_frieze(x1, x2):
    a = (x1, (x2 + 1) / x1, (x1 + 1) / x2, x2, (x1 + x2 + 1) / (x1 * x2))
    f = build_from_first_row(a)
    row2 = list(f.row(2))
    # second printed row contains x2, (x1+x2+1)/(x1 x2), x1 consecutively
    target = [x2, (x1 + x2 + 1) / (x1 * x2), x1]
    doubled = row2 + row2
    assert any(doubled[s:s + 3] == target for s in range(5))


def test_heptagon_rows(heptagon):
    assert heptagon.width == 4
    for k, printed in enumerate(HEPTAGON_DISPLAY, start=1):
        assert display_row(heptagon, k, len(printed)) == printed
    assert 7 in heptagon.row(3)


def test_monodromy_of_all_ones_by_hand():
    # M = [[1,-1],[1,0]] has M^3 = -I, so M^5 = -M^2 = [[0,1],[-1,1]]
    assert monodromy([Fraction(1)] * 5) == ((0, 1), (-1, 1))
    with pytest.raises(NonClosing) as err:
        build_from_first_row((1, 1, 1, 1, 1))
    assert err.value.monodromy == ((0, 1), (-1, 1))


def test_closing_row_with_zero_entry_raises_division():
    # all-ones closes at n = 9 (M^3 = -I) but the span-3 entries vanish
    assert monodromy([Fraction(1)] * 9) == ((-1, 0), (0, -1))
    with pytest.raises(DivisionByZero):
        build_from_first_row((1,) * 9)


def test_non_positive_entries():
    with pytest.raises(NonPositiveEntry):
        build_from_first_row((-2, -1, -2, -1))
    # constant row 2cos(3 pi/7): the chain turns through 3 pi, so it closes
    # with negative interior entries
    with pytest.raises(NonPositiveEntry):
        build_from_first_row([2 * math.cos(3 * math.pi / 7)] * 7)


def test_borders_and_lookup(heptagon):
    for i in range(7):
        assert heptagon.entry(i, 0) == 0
        assert heptagon.entry(i, 1) == 1
    assert heptagon.entry(9, 2) == heptagon.entry(2, 2)
    with pytest.raises(IndexOutOfRange):
        heptagon.entry(0, 8)
    with pytest.raises(IndexOutOfRange):
        heptagon.row(5)


def test_continuant_examples():
    assert continuant([1, 3]) == 2
    assert continuant([Fraction(7, 3)]) == Fraction(7, 3)
    assert continuant([]) == 1
    assert continuant([2, 2, 2]) == cofactor_det(tridiagonal([2, 2, 2])) == 4


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), max_size=7))
def test_continuant_matches_cofactor_expansion(seq):
    assert continuant(seq) == cofactor_det(tridiagonal(seq))


def test_hill_solution_by_hand():
    f = build_from_first_row((1, 2, 2, 1, 3))
    sol = hill_solution(f, (1, 0), (0, 1))
    assert [tuple(v) for v in sol.values] == [(1, 0), (0, 1), (-1, 2), (-2, 3), (-1, 1)]
    assert sol.at(6) == (-1, 0)
    assert sol.at(7) == (0, -1)
    assert sol.basis_flag


def test_hill_solution_rejects_unvalidated():
    fake = Frieze(5, ((0,) * 5, (1,) * 5, tuple(Fraction(1) for _ in range(5))) + ((0,) * 5,) * 3)
    with pytest.raises(NotAFrieze):
        hill_solution(fake, (1, 0), (0, 1))


def test_hill_wronskian_constant(heptagon):
    sol = hill_solution(heptagon, (2, Fraction(1, 3)), (Fraction(-1, 2), 5))
    w = det(sol.values[0], sol.values[1])
    assert all(det(sol.at(i), sol.at(i + 1)) == w for i in range(1, 15))
    assert not sol.basis_flag


def test_chebyshev_examples():
    f6 = chebyshev_frieze(6)
    assert f6.first_row[0] == pytest.approx(math.sqrt(3), abs=1e-12)
    assert f6.row(2)[0] == pytest.approx(2.0, abs=1e-12)
    f4 = chebyshev_frieze(4)
    assert f4.width == 1 and f4.row(1)[0] == pytest.approx(math.sqrt(2), abs=1e-12)
    f5 = chebyshev_frieze(5)
    assert f5.first_row[0] == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-12)
    assert f5.row(2) == pytest.approx(f5.row(1), abs=1e-12)


@pytest.mark.parametrize("n", range(4, 21))
def test_chebyshev_closed_form(n):
    f = chebyshev_frieze(n)
    for k in range(1, n - 2):
        assert all(abs(x - chebyshev_value(n, k)) < 1e-12 for x in f.row(k))
    assert all(abs(x - 1) < 1e-12 for x in f.rows[n - 1])
    assert validate(f).ok


def test_validate_reports_corruption(heptagon):
    assert validate(heptagon).ok
    rows = [list(r) for r in heptagon.rows]
    rows[3][2] += 1
    bad = Frieze(7, tuple(tuple(r) for r in rows))
    rep = validate(bad)
    assert not rep.ok
    assert rep.first.check == "diamond"
    assert any(v.check == "diamond" and (v.i, v.d) in {(2, 3), (1, 3), (2, 2), (1, 4), (2, 4)}
               for v in rep.failures)


def test_json_round_trip(heptagon):
    obj = frieze_to_json(heptagon)
    assert obj["first_row"][0] == {"num": "1", "den": "1"}
    assert frieze_from_json(obj) == heptagon
    assert frieze_from_json(obj, rebuild=False) == heptagon
    big = build_from_first_row((2, 2, 4, 2, 3, Fraction(18, 41), 41, Fraction(30, 41)))
    assert frieze_from_json(frieze_to_json(big)) == big


@settings(max_examples=60, deadline=None)
@given(st.integers(5, 12), st.integers(0, 2**32 - 1))
def test_cc_frieze_invariants(n, seed):
    f = triangulation_to_frieze(random_triangulation(n, seed))
    sol = hill_basis(f)
    assert monodromy(f.first_row) == ((-1, 0), (0, -1))
    assert sol.at(n + 1) == tuple(-x for x in sol.at(1))
    assert sol.at(n + 2) == tuple(-x for x in sol.at(2))
    for i in range(n):
        for d in range(n + 1):
            assert f.entry(i, d) == f.entry(i + d, n - d)
            assert f.entry(i, d) == continuant_entry(f.first_row, i, d) == hill_entry(sol, i, d)
