import json
from fractions import Fraction

import pytest

from friezes.core import validate
from friezes.search import (CUNTZ_FIRST, CUNTZ_SECOND, ScanCapExceeded, ScanReport, ViolationCert,
                            cc_first_rows, cuntz_counterexample, scan_cc, scan_random)
from friezes.signs import problem1_check
from friezes.triangulations import catalan


def test_cuntz_counterexample():
    f, g, rep = cuntz_counterexample()
    assert f.first_row == CUNTZ_FIRST and g.first_row == CUNTZ_SECOND
    assert (f.n, f.width) == (g.n, g.width) == (8, 5)
    assert validate(f).ok and validate(g).ok
    assert rep.min_count_per_k[3] == 0
    assert rep.min_count_per_k[1] >= 4 and rep.min_count_per_k[2] >= 4
    (cert,) = rep.violations
    assert cert.k == 3 and cert.count == 0 and cert.zero_free and cert.verify()
    assert all(x > 0 for x in cert.difference)


@pytest.mark.parametrize("width", [2, 3, 4, 5])
def test_cc_first_rows_counts(width):
    rows = cc_first_rows(width)
    assert len(rows) == catalan(width + 1) == len(set(rows))


def test_scan_cc_width_two():
    rep = scan_cc(2, [1])
    assert rep.pairs_checked == 10
    assert rep.min_count_per_k[1] >= 4 and not rep.violations


def test_scan_cc_width_four():
    rep = scan_cc(4, [1, 2])
    assert rep.pairs_checked == 861
    assert min(rep.min_count_per_k.values()) >= 4
    assert sum(rep.histogram_per_k[1].values()) + rep.degenerate_per_k.get(1, 0) == 861


def test_scan_cc_cap_returns_partial_report():
    with pytest.raises(ScanCapExceeded) as err:
        scan_cc(4, [1], cap=100)
    rep = err.value.report
    assert rep.truncated and rep.pairs_checked == 100
    with pytest.raises(ValueError):
        scan_cc(9, [1])
    with pytest.raises(ValueError):
        scan_cc(3, [4])


def test_scan_cc_is_schedule_independent():
    a = scan_cc(4, [1, 2], workers=1).to_json()
    b = scan_cc(4, [1, 2], workers=3).to_json()
    assert a == b


def test_width_six_row_three_certificates_reverify():
    rep = scan_cc(6, [3])
    # every certificate reproduces from first rows alone; the count < 4 cases at this
    # width all involve vanishing differences, so they depend on the zero convention
    assert rep.violations
    assert all(c.verify() for c in rep.violations)
    assert not any(c.zero_free for c in rep.violations)
    assert min(rep.min_count_per_k.values()) < 4


def test_certificate_round_trip():
    _, _, rep = cuntz_counterexample()
    d = rep.violations[0].to_dict()
    assert d["count"] == 0 and d["k"] == 3
    assert json.loads(json.dumps(d)) == d
    bogus = ViolationCert(CUNTZ_FIRST, CUNTZ_SECOND, 1, (Fraction(1),) * 8, 0)
    assert not bogus.verify()


def test_report_invariant_violations_iff_min_below_four():
    rep = ScanReport(scope={})
    rep.record(1, 6)
    rep.record(1, None)
    assert rep.min_count_per_k == {1: 6} and rep.degenerate_per_k == {1: 1}
    assert not rep.violations


def test_scan_random_small():
    rep = scan_random(9, [1, 2], samples=60, seed=5)
    assert rep.pairs_checked == 60
    assert min(rep.min_count_per_k.values()) >= 4 and not rep.violations


def test_scan_random_is_deterministic():
    a = scan_random(11, [3, 4], samples=40, seed=1)
    b = scan_random(11, [3, 4], samples=40, seed=1, workers=2)
    assert a.to_json() == b.to_json()
    for cert in a.violations:
        assert cert.verify()
        f, g = cert.first_row_a, cert.first_row_b
        assert all(isinstance(x, Fraction) for x in f + g)


def test_scan_random_rejects_even_n():
    with pytest.raises(ValueError):
        scan_random(8, [1], samples=1, seed=0)


def test_cuntz_orientation_matters_only_by_sign():
    f, g, _ = cuntz_counterexample()
    assert problem1_check(f, g, 3).count == problem1_check(g, f, 3).count == 0
