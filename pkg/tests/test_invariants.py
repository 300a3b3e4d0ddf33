from fractions import Fraction

import pytest

from quarticpos.algebra import discriminant
from quarticpos.invariants import (
    FormCoefficients, InvariantSet, ReducedQuartic, compute_invariants, quartic_discriminant,
    reduce_first, reduce_second,
)

F = Fraction


def test_parse_and_monomial_conventions():
    c = FormCoefficients.parse("1, 0 1/3 0 1")
    assert c == FormCoefficients.of(1, 0, F(1, 3), 0, 1)
    assert FormCoefficients.from_monomial(1, 0, 2, 0, 1) == c
    assert c.monomial_coefficients() == (1, 0, 2, 0, 1)
    assert str(c) == "1 0 1/3 0 1"


def test_parse_errors_name_the_token():
    with pytest.raises(ValueError, match="cannot parse coefficient 3: 'x'"):
        FormCoefficients.parse("1 0 x 0 1")
    with pytest.raises(ValueError, match="expected 5"):
        FormCoefficients.parse("1 2 3")


def test_dehomogenisations():
    c = FormCoefficients.from_monomial(1, 2, 3, 4, 5)
    assert c.p1()(2) == c.value(2, 1)
    assert c.p2()(2) == c.value(1, 2)
    assert c.swapped().value(3, 5) == c.value(5, 3)


def test_reduction_recovers_the_polynomial():
    c = FormCoefficients.of(2, -1, F(1, 3), 5, 7)
    rq = reduce_first(c)
    shift = F(-1) / 2  # A1112 / A1111
    for z in (F(0), F(1), F(-3, 2)):
        assert rq.poly()(z) == c.p1()(z - shift) / c.a1111


def test_reduction_undefined_on_zero_lead():
    with pytest.raises(ValueError, match="reduction undefined"):
        reduce_first(FormCoefficients.of(0, 0, 0, 0, 1))
    assert reduce_second(FormCoefficients.of(0, 0, 0, 0, 1)) == ReducedQuartic(0, 0, 0)


def test_missing_reductions_are_none():
    inv = compute_invariants(FormCoefficients.of(0, 0, 0, 0, 1))
    assert inv.q1 is None and inv.q2 == 0
    assert inv.to_record()["q1"] is None


def test_quartic_discriminant_matches_resultant():
    rq = ReducedQuartic(F(-3), F(1, 2), F(2))
    assert quartic_discriminant(rq) == discriminant(rq.poly())


def test_record_round_trip():
    inv = compute_invariants(FormCoefficients.of(F(1, 2), 3, -1, F(2, 7), 4))
    assert InvariantSet.from_record(inv.to_record()).to_record() == inv.to_record()


def test_swap_symmetry_of_invariants():
    c = FormCoefficients.of(3, F(1, 2), -2, 5, 7)
    a, b = compute_invariants(c), compute_invariants(c.swapped())
    assert (a.i1, a.i3, a.i5, a.i7) == (b.i2, b.i4, b.i6, b.i8)
    # the swap has det -1 and every pseudoscalar here has even weight
    assert (a.i0, a.beta, a.gamma) == (b.i0, b.beta, b.gamma)


def test_known_values():
    inv = compute_invariants(FormCoefficients.of(1, 0, 0, 0, 1))
    assert (inv.i0, inv.beta, inv.gamma, inv.i5, inv.i7) == (1, -2, 0, 1, -1)
    assert (inv.q1, inv.r1, inv.s1) == (0, 0, 1)
