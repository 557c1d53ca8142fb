"""Laurent polynomial arithmetic and exact sparse rank."""

from fractions import Fraction

import pytest

from kanenobu_knots.algebra import LaurentPoly1, LaurentPoly2, SparseMatrixQ, breadth, poly_mul, rank
from kanenobu_knots.algebra.sparse import from_rows


def _t(coeffs, lowest):
    return LaurentPoly1.from_coefficients(coeffs, lowest, "t")


def test_binomial_square():
    s = _t([1, 0, 1], -1)
    assert s * s == _t([1, 0, 2, 0, 1], -2)
    assert poly_mul(s, s) == s * s


def test_multiplicative_identity(fig8_jones):
    assert fig8_jones * 1 == fig8_jones
    assert fig8_jones * LaurentPoly1.constant(1, "t") == fig8_jones


def test_figure_eight_jones_squared(fig8_jones):
    assert fig8_jones * fig8_jones == _t([1, -2, 3, -4, 5, -4, 3, -2, 1], -4)
    assert breadth(poly_mul(fig8_jones, fig8_jones)) == 2 * breadth(fig8_jones)
    square = fig8_jones * fig8_jones
    assert square.coefficient(0) == 5
    assert square.coefficient(-8) == square.coefficient(8) == 1
    assert square.coefficient(1) == square.coefficient(10) == 0


def test_ring_axioms_on_samples():
    a = _t([2, -1, 0, 3], -1)
    b = LaurentPoly1({1: 1, -3: -2}, "t")
    c = _t([1, 1], 0)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly1({}, "t")
    assert (a + b) - b == a


def test_no_stored_zero_coefficients():
    p = _t([1, 0, -1], 0) + _t([-1, 0, 1], 0)
    assert p.is_zero()
    assert p.pairs() == []


def test_variable_mismatch_is_rejected():
    with pytest.raises(ValueError):
        _t([1], 0) + LaurentPoly1.constant(1, "x")


def test_half_integer_exponents_and_rescale():
    # -A^3 -> t^(-3/4) is not a half-unit, but A^4 -> t^-1 is
    a4 = LaurentPoly1.monomial(8, 1, "A")
    assert a4.rescale(-1, 4, "t") == LaurentPoly1.monomial(-2, 1, "t")
    with pytest.raises(ValueError):
        LaurentPoly1.monomial(6, 1, "A").rescale(-1, 4, "t")
    half = LaurentPoly1.monomial(1, -1, "t")
    assert half.max_exponent == Fraction(1, 2)
    assert not half.has_integer_exponents()


def test_inverse_powers_of_monomials():
    m = LaurentPoly1.monomial(2, -1, "t")
    assert m ** -2 == LaurentPoly1.monomial(-4, 1, "t")
    with pytest.raises(ValueError):
        _t([1, 1], 0) ** -1


def test_substitute_inverse_is_involution(fig8_jones):
    p = _t([3, 0, -1, 2], -2)
    assert p.substitute_inverse().substitute_inverse() == p
    assert fig8_jones.substitute_inverse() == fig8_jones


def test_breadth_values():
    assert breadth(LaurentPoly1.constant(1, "t")) == 0
    assert breadth(_t([1, -2, 3, -4, 5, -4, 3, -2, 1], -4)) == 8
    with pytest.raises(ValueError):
        breadth(LaurentPoly1({}, "t"))


def test_string_rendering():
    assert str(_t([1, -1, 1], -1)) == "t^(-1) - 1 + t"
    assert str(LaurentPoly1({}, "x")) == "0"


def test_two_variable_specialization():
    a = LaurentPoly2.monomial(1, 0)
    x = LaurentPoly2.monomial(0, 1)
    delta = (a + LaurentPoly2.monomial(-1, 0)) * LaurentPoly2.monomial(0, -1) - 1
    assert delta.specialize_a(1) == LaurentPoly1.from_coefficients([2, -1], -1, "x")
    assert (a * x * 3).max_x_degree == 1
    assert LaurentPoly2.constant(0).is_zero()


def test_rank_identity_and_zero():
    assert rank(SparseMatrixQ.identity(3)) == 3
    assert rank(SparseMatrixQ.zero(4, 5)) == 0


def test_rank_is_exact_over_rationals():
    m = from_rows([[1, 2, 3], [2, 4, 6], [Fraction(1, 3), 1, 0]])
    assert m.rank() == 2
    assert m.nullity() == 1


def test_rank_invariant_under_row_operations():
    m = from_rows([[1, 0, 2, 0], [0, 1, 1, 0], [1, 1, 3, 0], [0, 0, 0, 5]])
    assert m.rank() == 3
    assert m.scale_row(1, Fraction(-7, 2)).rank() == 3
    assert m.permute_rows([3, 2, 1, 0]).rank() == 3


def test_matmul_and_restrict():
    m = from_rows([[1, 1], [0, 1]])
    assert m.matmul(m) == from_rows([[1, 2], [0, 1]])
    assert m.restrict([0], [1]) == from_rows([[1]])
    with pytest.raises(ValueError):
        m.matmul(SparseMatrixQ.zero(3, 1))


def test_stored_zero_is_rejected():
    with pytest.raises(ValueError):
        SparseMatrixQ(1, 1, ((0, 0, Fraction(0)),))
