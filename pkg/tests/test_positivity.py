from fractions import Fraction

import pytest

from quarticpos.invariants import FormCoefficients, ReducedQuartic, compute_invariants
from quarticpos.positivity import (
    PATHS, TheoremDisagreement, Verdict, decide, decide_both, dickson_no_real_roots,
    rees_no_real_roots,
)

F = Fraction


@pytest.mark.parametrize("q, r, s, expected", [
    (0, 1, 1, True),     # z^4 + z + 1
    (0, 4, 1, False),    # z^4 + 4z + 1 has two real roots
    (-5, 1, 4, False),
    (3, 1, 2, True),
])
def test_dickson(q, r, s, expected):
    assert dickson_no_real_roots(ReducedQuartic(F(q), F(r), F(s))) is expected


@pytest.mark.parametrize("q, s, expected", [
    (0, 1, True),      # z^4 + 1
    (2, 1, True),      # (z^2 + 1)^2
    (-2, 1, False),    # (z^2 - 1)^2
    (3, 2, True),      # (z^2 + 1)(z^2 + 2)
    (-3, 2, False),
    (1, -1, False),
    (0, 0, False),
])
def test_rees(q, s, expected):
    assert rees_no_real_roots(ReducedQuartic(F(q), F(0), F(s))) is expected


def test_dickson_and_rees_guard_their_cases():
    with pytest.raises(ValueError):
        dickson_no_real_roots(ReducedQuartic(0, 0, 1))
    with pytest.raises(ValueError):
        rees_no_real_roots(ReducedQuartic(0, 1, 1))


@pytest.mark.parametrize("coeffs, positive, path", [
    ((1, 0, 0, 0, 1), True, "T41-3"),
    ((1, 0, F(1, 3), 0, 1), True, "T41-4"),
    ((1, -1, 1, -1, 1), False, "T41-none"),
    ((1, 0, 0, 1, 1), False, "T41-none"),
    ((0, 0, 0, 0, 1), False, "T41-precondition-failed"),
    ((-1, 0, 0, 0, -1), False, "T41-precondition-failed"),
    ((4, -2, 0, 3, 26), True, "T41-1"),
    ((29, 1, 9, 1, 10), True, "T41-2"),
])
def test_decide(coeffs, positive, path):
    v = decide(FormCoefficients.of(*coeffs))
    assert (v.positive, v.path, v.theorems_agree) == (positive, path, True)


def test_second_theorem_paths():
    first, second = decide_both(FormCoefficients.of(1, 0, 0, 0, 1))
    assert second.path == "T42-3"
    _, second = decide_both(FormCoefficients.of(0, 0, 0, 0, 1))
    assert second.path == "T42-none" and not second.positive


def test_disagreement_is_raised_with_both_verdicts():
    c = FormCoefficients.of(1, 0, 0, 0, 1)
    inv = compute_invariants(c)
    broken = type(inv)(**{**inv.as_dict(), "i8": F(1), "i4": F(-1)})  # forge T42 into "none"
    with pytest.raises(TheoremDisagreement) as info:
        decide(c, broken)
    assert info.value.first.positive and not info.value.second.positive
    assert not info.value.first.theorems_agree


def test_verdict_validation():
    inv = compute_invariants(FormCoefficients.of(1, 0, 0, 0, 1))
    with pytest.raises(ValueError):
        Verdict(True, "T41-none", True, inv)
    with pytest.raises(ValueError):
        Verdict(False, "T43-1", True, inv)
    assert len(PATHS) == 12
    assert decide(FormCoefficients.of(1, 0, 0, 0, 1)).to_record()["path"] == "T41-3"
