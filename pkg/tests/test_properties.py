"""Property-based checks over random exact inputs."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from quarticpos.algebra import UniPoly, discriminant, sturm_count_real_roots
from quarticpos.invariants import FormCoefficients, compute_invariants
from quarticpos.oracle import descartes_root_count, dyadic_bracket_count, oracle_positive
from quarticpos.positivity import decide
from quarticpos.tensor import BasisChange
from quarticpos.verify import law_comparison, transformed_form

rationals = st.fractions(min_value=-12, max_value=12, max_denominator=9)
forms = st.builds(FormCoefficients, rationals, rationals, rationals, rationals, rationals)
small = st.integers(-5, 5)


@settings(max_examples=300, deadline=None)
@given(forms)
def test_criteria_agree_with_oracle(c):
    assert decide(c).positive == oracle_positive(c)


@settings(max_examples=150, deadline=None)
@given(forms, small, small, small, small)
def test_weight_laws(c, a, b, p, q):
    if a * q - b * p == 0:
        return
    basis = BasisChange.from_entries(a, b, p, q)
    assert all(v[3] for v in law_comparison(c, basis).values())
    assert decide(transformed_form(c, basis)).positive == decide(c).positive


@settings(max_examples=200, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=5))
def test_root_counters_agree(coeffs):
    p = UniPoly(coeffs)
    if p.is_zero():
        return
    n = sturm_count_real_roots(p)
    assert n == descartes_root_count(p) == dyadic_bracket_count(p)
    assert 0 <= n <= max(p.degree, 0)


@settings(max_examples=100, deadline=None)
@given(forms)
def test_i0_is_quarter_of_discriminant(c):
    if c.a1111 != 0:
        assert compute_invariants(c).i0 * 256 == discriminant(c.p1())


@settings(max_examples=100, deadline=None)
@given(forms, st.fractions(min_value=Fraction(1, 10), max_value=10))
def test_positive_scaling_preserves_verdict(c, k):
    assert decide(c.scaled(k)).positive == decide(c).positive
    assert decide(c.swapped()).positive == decide(c).positive
