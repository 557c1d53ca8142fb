"""Closed forms, crossing numbers and audits for K(p, q)."""

import pytest

from kanenobu_knots.algebra import LaurentPoly1, breadth
from kanenobu_knots.diagram import kanenobu_diagram
from kanenobu_knots.kanenobu import (
    FAMILY_TABLES,
    Bounds,
    Exact,
    alternating_exceptions,
    breadth_closed_form,
    crossing_number,
    jones_closed_form,
    jones_crossing_lower_bound,
    khovanov_closed_form,
    khovanov_distinction,
    kidwell_audit,
    q_closed_form,
    q_degree_closed_form,
    sigma,
)
from kanenobu_knots.kanenobu.tables import FIG8_TOTAL, T0_TOTAL
from kanenobu_knots.khovanov import euler_check, knight_move_check, thinness_s
from kanenobu_knots.polyinv import KauffmanEngine, jones, q_polynomial

GRID_6 = [(p, q) for p in range(-6, 7) for q in range(-6, 7)]


def _x(coeffs):
    return LaurentPoly1.from_coefficients(coeffs, 0, "x")


def test_table_checksums():
    assert FAMILY_TABLES.t0.total == T0_TOTAL == 26
    assert FAMILY_TABLES.fig8.total == FIG8_TOTAL == 6
    assert FAMILY_TABLES.kk.max_dim() == 6


def test_jones_closed_form_values():
    v00 = LaurentPoly1.from_coefficients([1, -2, 3, -4, 5, -4, 3, -2, 1], -4, "t")
    assert jones_closed_form(0, 0) == v00
    assert jones_closed_form(1, -1) == v00
    assert jones_closed_form(2, -3) == jones_closed_form(-3, 2)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(-1, 2) for q in range(-1, 2)])
def test_jones_matches_generated_diagram(p, q):
    assert jones(kanenobu_diagram(p, q)) == jones_closed_form(p, q)


@pytest.mark.slow
@pytest.mark.parametrize("p,q", [(p, q) for p in range(-3, 4) for q in range(-3, 4)
                                 if max(abs(p), abs(q)) >= 2])
def test_jones_matches_generated_diagram_full_grid(p, q):
    assert jones(kanenobu_diagram(p, q)) == jones_closed_form(p, q)


@pytest.mark.parametrize("p,q,expected", [(0, 0, 8), (5, 0, 9), (10, -3, 11), (-2, -4, 10), (3, -3, 8)])
def test_breadth_closed_form(p, q, expected):
    assert breadth_closed_form(p, q) == expected
    assert breadth(jones_closed_form(p, q)) == expected


def test_sigma_values():
    assert sigma(0).is_zero()
    assert sigma(1) == _x([1])
    assert sigma(2) == _x([0, 1])
    assert sigma(-3) == -_x([-1, 0, 1])
    for n in range(1, 8):
        assert sigma(-n) == -sigma(n)
        assert sigma(n).max_exponent == n - 1


def test_q_closed_form_at_base_point():
    assert q_closed_form(0, 0) == _x([9, 12, -20, -28, 8, 16, 4])


def test_q_closed_form_has_no_negative_powers():
    for p, q in GRID_6:
        assert q_closed_form(p, q).min_exponent >= 0


@pytest.mark.parametrize("p,q,expected", [(0, 0, 6), (1, -1, 7), (2, 3, 11), (2, -1, 8), (3, -1, 9), (-2, -2, 10)])
def test_q_degree(p, q, expected):
    assert q_degree_closed_form(p, q) == expected
    assert q_closed_form(p, q).max_exponent == expected


def test_q_closed_form_is_symmetric():
    for p, q in GRID_6:
        assert q_closed_form(p, q) == q_closed_form(q, p)


@pytest.mark.parametrize("p,q", [(0, 0), (1, 0), (-1, 0), (0, -1), (1, -1), (-1, 1)])
def test_q_matches_generated_diagram(p, q):
    assert q_polynomial(kanenobu_diagram(p, q)) == q_closed_form(p, q)


def test_twist_columns_do_not_cancel():
    # K(1,-1) shares Jones with K(0,0) but not Q
    q_opposite = q_polynomial(kanenobu_diagram(1, -1))
    assert q_opposite.max_exponent == 7
    assert q_opposite != q_polynomial(kanenobu_diagram(0, 0))
    assert q_polynomial(kanenobu_diagram(1, 1)).max_exponent == 8


@pytest.mark.slow
def test_q_matches_generated_diagram_full_grid():
    engine = KauffmanEngine()
    for p in range(-2, 3):
        for q in range(-2, 3):
            qx = q_polynomial(kanenobu_diagram(p, q), engine)
            assert qx == q_closed_form(p, q), (p, q)
            assert qx.max_exponent == q_degree_closed_form(p, q)


def test_khovanov_closed_form_examples():
    assert khovanov_closed_form(0, 0)[(0, -1)] == 3
    assert khovanov_closed_form(-1, 0)[(0, 1)] == 3
    assert khovanov_closed_form(1, -1) == FAMILY_TABLES.t0
    assert khovanov_closed_form(3, -5) == khovanov_closed_form(-2, 0)


def test_khovanov_closed_form_mirror():
    for s in range(1, 7):
        positive = khovanov_closed_form(s, 0)
        negative = khovanov_closed_form(-s, 0)
        assert {(-i, -j): v for (i, j), v in negative.items()} == dict(positive.items())


@pytest.mark.parametrize("p,q", GRID_6)
def test_closed_forms_are_mutually_consistent(p, q):
    dims = khovanov_closed_form(p, q)
    v = jones_closed_form(p, q)
    assert euler_check(dims, v)
    assert thinness_s(dims) == 0
    assert knight_move_check(dims, 0)
    assert breadth_closed_form(p, q) == breadth(v)
    assert dims.total == 26


def test_crossing_number_exact_cases():
    for p, q in [(1, -1), (-1, 1), (1, 0), (-1, 0), (0, 1), (0, -1), (0, 0)]:
        assert crossing_number(p, q) == Exact(8, crossing_number(p, q).provenance)
    assert crossing_number(2, -1).n == 10
    assert crossing_number(3, -1).n == 11
    assert crossing_number(2, 3).n == 13
    assert crossing_number(-4, 0).n == 12
    assert crossing_number(-2, -3).n == 13


def test_crossing_number_bounds_carry_the_conjecture():
    result = crossing_number(3, -2)
    assert isinstance(result, Bounds)
    assert (result.lo, result.hi, result.conjectured) == (12, 13, 13)
    assert "|p|+|q|+8" in result.provenance
    assert str(crossing_number(-2, 2)) == "Bounds(11, 12, conjectured=12)"
    assert result.to_json() == {"lo": 12, "hi": 13, "conjectured": 13}
    assert crossing_number(2, 3).to_json() == {"exact": 13}


def test_bounds_validate_their_interval():
    with pytest.raises(ValueError):
        Bounds(10, 9, None, "")
    with pytest.raises(ValueError):
        Bounds(9, 10, 11, "")


def test_crossing_number_symmetries_and_lower_bound():
    for p in range(-10, 11):
        for q in range(-10, 11):
            result = str(crossing_number(p, q))
            assert result == str(crossing_number(q, p)) == str(crossing_number(-p, -q))
            value = crossing_number(p, q)
            low = value.n if isinstance(value, Exact) else value.lo
            assert low >= jones_crossing_lower_bound(p, q)


def test_alternating_exceptions():
    ex = alternating_exceptions()
    assert len(ex) == 7
    assert (0, 0) in ex
    assert (2, 0) not in ex
    assert {(q, p) for p, q in ex} == ex
    assert {(-p, -q) for p, q in ex} == ex


def test_khovanov_fails_to_separate_what_q_separates():
    classes = {c.total_twist: c for c in khovanov_distinction(2)}
    assert sorted(classes) == list(range(-4, 5))
    assert classes[0].members == ((-2, 2), (-1, 1), (0, 0), (1, -1), (2, -2))
    assert classes[0].distinct_q == 3
    assert classes[0].khovanov_total == 26


def test_kidwell_audit_at_base_point():
    report = kidwell_audit(0, 0)
    assert report.deg_q == 6
    assert report.crossings == 8
    assert report.inequality_holds
    assert report.jones_breadth == 8
    assert report.to_dict()["bridge"] == report.bridge


@pytest.mark.slow
@pytest.mark.parametrize("m", [1, 2])
def test_kidwell_audit_on_negative_clasp(m):
    report = kidwell_audit(m, -1, KauffmanEngine())
    assert report.deg_q == m + 6
    assert report.crossings == m + 9
    assert report.bridge <= 3
    assert report.inequality_holds
    assert report.breadth_below_crossings


@pytest.mark.slow
def test_kidwell_audit_is_tight_at_two_two():
    report = kidwell_audit(2, 2, KauffmanEngine())
    assert (report.deg_q, report.crossings, report.bridge) == (10, 12, 2)
    assert report.inequality_holds
