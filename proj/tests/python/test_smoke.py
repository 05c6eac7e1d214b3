"""Smoke tests for the Python bindings: exact types, a few frozen values,
and one shallow verification sweep."""

from fractions import Fraction

import pytest

import wappell


def test_partition_basics():
    lam = wappell.Partition([2, 1])
    assert lam.size() == 3
    assert lam.length() == 2
    assert lam.parts == [2, 1]
    assert str(lam) == "2,1"
    assert lam.conjugate() == wappell.Partition([2, 1])
    assert wappell.Partition([5, 3, 2]).conjugate() == wappell.Partition(
        [3, 3, 2, 1, 1]
    )
    assert wappell.Partition.parse("2,1") == lam
    with pytest.raises(ValueError):
        wappell.Partition([1, 2])


def test_partition_enumeration_and_counts():
    assert len(wappell.partitions_of(6)) == 11
    assert len(wappell.partitions_up_to(4)) == 12
    assert wappell.syt_count(wappell.Partition([5, 3, 2])) == 450
    assert wappell.hook_product(wappell.Partition([5, 3, 2])) == 8064
    assert wappell.degree_vector(wappell.Partition([4, 3, 2])) == [2, 4, 6]


def test_exact_fraction_round_trip():
    spec = wappell.parse_spec("laguerre:1/2")
    c2 = spec.cumulant(2)
    assert isinstance(c2, Fraction)
    assert c2 == Fraction(-1, 2)
    assert spec.moment(0) == 1


def test_appell_and_wronskian_polynomials():
    hermite = wappell.parse_spec("hermite")
    assert wappell.appell_poly(hermite, 3) == [0, -3, 0, 1]
    coeffs = wappell.wap(hermite, wappell.Partition([2, 1]))
    assert coeffs == [0, 0, 0, 1]
    assert wappell.poly_str(coeffs) == "x^3"
    assert wappell.poly_latex([0, Fraction(1, 2)]) == "\\frac{1}{2}x"
    for route in ("direct", "phi", "recurrence", "cross"):
        assert wappell.wap(hermite, wappell.Partition([2, 2]), route=route) == [
            3,
            0,
            0,
            0,
            1,
        ]


def test_schur_expansion():
    table = wappell.schur(wappell.Partition([2, 1]))
    assert table == {(1, 1, 1): Fraction(1, 3), (3,): Fraction(-1, 3)}
    aug = wappell.augmented_schur_table(wappell.Partition([2, 1]))
    assert aug == {(1, 1, 1): 1, (3,): -1}


def test_identity_checks():
    hermite = wappell.parse_spec("hermite")
    lam = wappell.Partition([2, 2])
    assert wappell.derivative_identity_check(hermite, lam)
    assert wappell.topdown_check(hermite, lam, 2)
    assert wappell.dual_check(hermite, lam)
    assert wappell.integrality_check(hermite, lam)


def test_plancherel_report():
    report = wappell.plancherel_report(wappell.parse_spec("hermite"), 2)
    assert report["mean"] == [0, 0, 1]
    assert report["second_moment"] == [1, 0, 0, 0, 1]
    assert report["variance"] == [1]
    assert report["variance_degree_bound_ok"]


def test_run_suite_and_fault_injection():
    hermite = wappell.parse_spec("hermite")
    result = wappell.run_suite("routes", hermite, max_size=4)
    assert result["passed"]
    assert result["checked"] > 0

    bad = wappell.corrupted_for_testing(hermite, 2, 1, 12)
    with pytest.raises(wappell.RouteMismatch):
        wappell.wap(bad, wappell.Partition([1, 1]))
    out = wappell.run_verify("all", bad, max_size=4, k_max=3)
    assert any(not suite["passed"] for suite in out)


def test_rim_hooks():
    hooks = wappell.rim_hooks_up(wappell.Partition([1]), 2)
    assert [str(h.outer) for h in hooks] == ["3", "1,1,1"]
    assert [h.height for h in hooks] == [0, 1]
    down = wappell.rim_hooks_down(wappell.Partition([2, 1]), 3)
    assert len(down) == 1
    assert down[0].inner == wappell.Partition([])
    assert wappell.is_rim_hook(wappell.Partition([2, 2]), wappell.Partition([1, 1]))
