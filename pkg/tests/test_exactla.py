from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from core.exactla import (HPoint, RatMatrix, affine_rank, dot, dual_basis, echelon_form, nullspace,
                          parse_decimal, particular_solution, primitive_integer_vector, rank,
                          round_decimal, simplex_vertices, solve)
from core.exceptions import DecimalParseError, RankDeficiencyError, ValidationError


def test_parse_decimal_is_exact():
    assert parse_decimal("0.1") == Fraction(1, 10)
    assert parse_decimal("-3.6225148") == Fraction(-36225148, 10 ** 7)
    assert parse_decimal("+2.5e-3") == Fraction(1, 400)
    assert parse_decimal("1E2") == 100
    assert parse_decimal(".5") == Fraction(1, 2)
    assert parse_decimal("7.") == 7
    assert parse_decimal("  42 ") == 42


@pytest.mark.parametrize("text, position", [("1.2.3", 3), ("abc", 0), ("1e", 2), ("", 0), ("-", 1), (" 1x", 2)])
def test_parse_decimal_reports_position(text, position):
    with pytest.raises(DecimalParseError) as info:
        parse_decimal(text)
    assert info.value.position == position
    assert info.value.text == text


def test_round_decimal_half_away_from_zero():
    assert round_decimal("1.25", 1) == Fraction(13, 10)
    assert round_decimal("-1.25", 1) == Fraction(-13, 10)
    assert round_decimal("1.2449", 2) == Fraction(124, 100)
    assert round_decimal("3.4083657", 5) == Fraction(340837, 100000)
    assert round_decimal("0.5", 0) == 1
    with pytest.raises(ValidationError):
        round_decimal("1.0", -1)


@given(st.integers(min_value=-10 ** 9, max_value=10 ** 9), st.integers(min_value=0, max_value=6),
       st.integers(min_value=0, max_value=4))
def test_round_decimal_error_is_at_most_half_unit(mantissa, places, digits):
    value = Fraction(mantissa, 10 ** places)
    whole, frac = divmod(abs(mantissa), 10 ** places)
    text = f"{'-' if mantissa < 0 else ''}{whole}" + (f".{frac:0{places}d}" if places else "")
    rounded = round_decimal(text, digits)
    assert parse_decimal(text) == value
    assert abs(rounded - value) <= Fraction(1, 2 * 10 ** digits)
    assert (rounded * 10 ** digits).denominator == 1


def test_hpoint_rejects_nonzero_sum():
    assert HPoint([1, -1, 0]).n == 3
    with pytest.raises(ValidationError):
        HPoint([1, 0, 0])


def test_rank_and_nullspace():
    m = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert rank(m) == 2
    basis = nullspace(m)
    assert basis == [(1, 1, -1)]
    for v in basis:
        assert all(dot(row, v) == 0 for row in m)


def test_nullspace_is_primitive_with_positive_lead():
    basis = nullspace([[Fraction(1, 2), Fraction(1, 3), 0, -1]])
    assert len(basis) == 3
    for v in basis:
        assert next(x for x in v if x) > 0
        assert primitive_integer_vector(v) == v


def test_nullspace_of_no_rows_needs_width():
    assert nullspace([], ncols=2) == [(1, 0), (0, 1)]
    with pytest.raises(ValidationError):
        nullspace([])


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_nullity(rows):
    basis = nullspace(rows)
    assert rank(rows) + len(basis) == 4
    for v in basis:
        assert all(dot(row, v) == 0 for row in rows)
    if basis:
        assert rank(basis) == len(basis)


def test_echelon_pivots_are_increasing():
    echelon, pivots = echelon_form([[0, 0, 1], [0, 2, 1], [0, 4, 2]])
    assert pivots == [1, 2]
    assert len(echelon) == 2


def test_ratmatrix_methods():
    m = RatMatrix([[1, 0, 1], [0, 1, 1]])
    assert m.rank() == 2
    assert m.nullspace() == [(1, 1, -1)]
    assert m.transpose() == RatMatrix([[1, 0], [0, 1], [1, 1]])
    with pytest.raises(ValidationError):
        RatMatrix([[1, 2], [3]])


def test_solve_and_singular_system():
    assert solve([[2, 1], [1, 3]], [3, 5]) == (Fraction(4, 5), Fraction(7, 5))
    with pytest.raises(RankDeficiencyError):
        solve([[1, 2], [2, 4]], [1, 2])


def test_particular_solution():
    x = particular_solution([[1, 1, 0], [0, 1, 1]], [2, 3])
    assert x is not None
    assert x[0] + x[1] == 2 and x[1] + x[2] == 3
    assert particular_solution([[1, 1], [1, 1]], [1, 2]) is None


def test_affine_rank():
    assert affine_rank([]) == -1
    assert affine_rank([(1, 1)]) == 0
    assert affine_rank([(0, 0), (1, 1), (2, 2)]) == 1
    assert affine_rank([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 3


def test_simplex_vertices_and_dual_basis():
    deltas = simplex_vertices(3)
    assert deltas[0] == (Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3))
    assert sum(deltas[0]) == 0
    duals = dual_basis(deltas[:-1])
    for i, u in enumerate(deltas[:-1]):
        for j, v in enumerate(duals):
            assert dot(u, v) == (1 if i == j else 0)
    with pytest.raises(ValidationError):
        simplex_vertices(1)


@pytest.mark.parametrize("text, position", [("1e999999999", 2), ("2.5E-4097", 5), ("1e00000000000000004097", 2)])
def test_parse_decimal_bounds_the_exponent(text, position):
    with pytest.raises(DecimalParseError) as info:
        parse_decimal(text)
    assert "exponent" in str(info.value)
    assert info.value.position == position


def test_parse_decimal_accepts_the_largest_exponent():
    assert parse_decimal("1e4096") == 10 ** 4096
    assert parse_decimal("1e-0004096") == Fraction(1, 10 ** 4096)
