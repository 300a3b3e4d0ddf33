from fractions import Fraction

import pytest

from quarticpos.algebra import (
    MultiPoly, PolyMatrix, RationalFunction, UniPoly, bareiss_determinant, cofactor_determinant,
    discriminant, form_generators, format_rational, parse_rational, sign_variations, sturm_chain,
    sturm_count_real_roots, sylvester_matrix, sylvester_resultant, to_rational,
)

F = Fraction


# -- rationals

def test_parse_and_format_round_trip():
    for text in ["3", "-7", "1/3", "-22/7", "0"]:
        assert format_rational(parse_rational(text)) == text
    assert parse_rational("2/4") == F(1, 2)
    assert parse_rational("0.25") == F(1, 4)


@pytest.mark.parametrize("bad", ["x", "", "1/0", "1//2"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_to_rational_rejects_floats():
    with pytest.raises(TypeError):
        to_rational(0.5)
    with pytest.raises(TypeError):
        to_rational(True)


def test_division_by_zero_is_distinct():
    with pytest.raises(ZeroDivisionError):
        F(1) / F(0)


# -- multivariate polynomials

def test_multipoly_arithmetic():
    a, b, m, d, e = form_generators()
    p = (a + b) ** 2
    assert p == a**2 + 2 * a * b + b**2
    assert (p - a**2 - 2 * a * b - b**2).is_zero()
    assert p.degree() == 2 and p.is_homogeneous()
    assert str(3 * a * m**2 - e) == "3*A1111*A1122^2 - A2222"


def test_multipoly_exact_division():
    a, b, *_ = form_generators()
    p = (a - b) * (a**2 + a * b + 7)
    assert p.exquo(a - b) == a**2 + a * b + 7
    assert p / (a - b) == a**2 + a * b + 7
    with pytest.raises(ValueError):
        (a**2 + 1).exquo(a + b)
    with pytest.raises(ZeroDivisionError):
        a.exquo(MultiPoly())


def test_multipoly_scalar_division_and_evaluation():
    a, b, m, d, e = form_generators()
    p = (a * b + 1) / 2
    assert p.evaluate([2, 3, 0, 0, 0]) == F(7, 2)
    assert p(2, 3, 0, 0, 0) == F(7, 2)


def test_rational_function_equality_by_cross_multiplication():
    a, b, *_ = form_generators()
    x = RationalFunction(a * b, a**2)
    y = RationalFunction(b, a)
    assert x == y
    assert (x - y).is_zero()
    assert (x * a).cleared(MultiPoly.constant(1)) == b


# -- determinants

def test_bareiss_matches_cofactor_expansion():
    a, b, m, d, e = form_generators()
    rows = [[a, b, m], [b, m, d], [m, d, e]]
    mat = PolyMatrix.from_rows(rows)
    assert bareiss_determinant(mat) == cofactor_determinant(mat)


def test_bareiss_needs_pivot_swap():
    mat = PolyMatrix.from_rows([[0, 1, 2], [3, 4, 5], [6, 7, 9]])
    assert bareiss_determinant(mat) == -3 == cofactor_determinant(mat)
    assert bareiss_determinant(PolyMatrix.from_rows([[1, 2], [2, 4]])) == 0
    with pytest.raises(ValueError):
        bareiss_determinant(PolyMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_bareiss_rational_entries():
    mat = PolyMatrix.from_rows([[F(1, 2), F(1, 3)], [F(1, 4), F(1, 5)]])
    assert bareiss_determinant(mat) == F(1, 10) - F(1, 12)


# -- univariate polynomials

def test_unipoly_basics():
    p = UniPoly.from_high([1, 0, -1])
    assert p.degree == 2 and p(3) == 8
    assert p.derivative() == UniPoly([0, 2])
    q, r = divmod(p, UniPoly([-1, 1]))
    assert q == UniPoly([1, 1]) and r.is_zero()


@pytest.mark.parametrize("high, count", [
    ([1, 0, 0, 0, 1], 0),
    ([1, 0, 0, 0, -1], 2),
    ([1, 0, -2, 0, 1], 2),       # (t^2 - 1)^2, repeated roots counted once
    ([1, -4, 6, -4, 1], 1),      # (t - 1)^4
    ([1, 0, -5, 0, 4], 4),
    ([3], 0),
    ([F(1, 2), F(-1, 3)], 1),
])
def test_sturm_counts(high, count):
    assert sturm_count_real_roots(UniPoly.from_high(high)) == count


def test_sturm_zero_polynomial_is_indeterminate():
    with pytest.raises(ValueError, match="indeterminate"):
        sturm_count_real_roots(UniPoly())


def test_sturm_chain_shape():
    chain = sturm_chain(UniPoly.from_high([1, 0, -3, 1]))
    assert chain[1] == UniPoly([-1, 0, 1])  # 3t^2 - 3 made primitive
    assert chain[-1].degree == 0


def test_sign_variations_skip_zeros():
    assert sign_variations([1, 0, -1, 0, 0, 1]) == 2


def test_resultants():
    assert sylvester_resultant(UniPoly.from_high([1, 0, -1]), UniPoly.from_high([2, 0])) == -4
    # with deg-q rows of p first: Res(t - a, t - b) = a - b
    assert sylvester_resultant(UniPoly.from_high([1, -1]), UniPoly.from_high([1, -2])) == 1 - 2
    assert sylvester_matrix(UniPoly.from_high([1, 2, 3]), UniPoly.from_high([1, 5])).rows == 3
    with pytest.raises(ValueError):
        sylvester_matrix(UniPoly([1]), UniPoly([1, 1]))


def test_discriminants():
    assert discriminant(UniPoly.from_high([1, 0, 0, 0, 1])) == 256
    assert discriminant(UniPoly.from_high([1, 0, -1])) == 4
    assert discriminant(UniPoly.from_high([1, -2, 1])) == 0


def test_symbolic_quadratic_discriminant():
    a, b, c, *_ = form_generators()
    assert discriminant(UniPoly([c, b, a])) == b**2 - 4 * a * c
