"""Positivity decisions for depressed quartics and for binary quartic forms."""

from __future__ import annotations

from dataclasses import dataclass, replace

from .invariants import FormCoefficients, InvariantSet, ReducedQuartic, compute_invariants, quartic_discriminant

__all__ = [
    "PATHS",
    "Verdict",
    "TheoremDisagreement",
    "dickson_no_real_roots",
    "rees_no_real_roots",
    "positive_by_t41",
    "positive_by_t42",
    "decide",
]

PATHS = (
    "T41-1", "T41-2", "T41-3", "T41-4", "T41-none", "T41-precondition-failed",
    "T42-1", "T42-2", "T42-3", "T42-4", "T42-none", "T42-precondition-failed",
)


@dataclass(frozen=True)
class Verdict:
    positive: bool
    path: str
    theorems_agree: bool
    invariants: InvariantSet

    def __post_init__(self):
        if self.path not in PATHS:
            raise ValueError(f"unknown path {self.path!r}")
        if self.positive and not self.path[-1].isdigit():
            raise ValueError("a positive verdict must name the condition it matched")

    def to_record(self) -> dict:
        return {
            "positive": self.positive,
            "path": self.path,
            "theorems_agree": self.theorems_agree,
            "invariants": self.invariants.to_record(),
        }


class TheoremDisagreement(Exception):
    """The two form criteria returned different answers for the same form."""

    def __init__(self, form: FormCoefficients, first: Verdict, second: Verdict):
        self.form = form
        self.first = first
        self.second = second
        self.invariants = first.invariants
        super().__init__(
            f"criteria disagree on ({form}): {first.path}={first.positive}, "
            f"{second.path}={second.positive}"
        )


def dickson_no_real_roots(rq: ReducedQuartic) -> bool:
    """No real roots of ``z^4 + q z^2 + r z + s`` when ``r != 0``."""
    q, r, s = rq.q, rq.r, rq.s
    if r == 0:
        raise ValueError("r = 0: use the Rees test")
    if not quartic_discriminant(rq) > 0:
        return False
    return 4 * s >= q**2 or (4 * s < q**2 and q >= 0)


def rees_no_real_roots(rq: ReducedQuartic) -> bool:
    """No real roots of ``z^4 + q z^2 + s`` (the ``r = 0`` case)."""
    q, r, s = rq.q, rq.r, rq.s
    if r != 0:
        raise ValueError("r != 0: use the Dickson test")
    return 4 * s > q**2 or (0 < 4 * s <= q**2 and q > 0)


def _criterion(tag: str, lead, odd, i0, disc, quad, const) -> tuple[bool, str]:
    # odd ~ r, disc ~ q^2 - 4s, quad ~ q, const ~ s, each up to a positive factor
    if not lead > 0:
        return False, f"{tag}-precondition-failed"
    if odd != 0:
        if i0 > 0 and disc <= 0:
            return True, f"{tag}-1"
        if i0 > 0 and disc > 0 and quad >= 0:
            return True, f"{tag}-2"
    else:
        if disc < 0:
            return True, f"{tag}-3"
        if disc >= 0 and quad > 0 and const > 0:
            return True, f"{tag}-4"
    return False, f"{tag}-none"


def positive_by_t41(c: FormCoefficients, inv: InvariantSet) -> Verdict:
    ok, path = _criterion("T41", c.a1111, inv.i1, inv.i0, inv.i7, inv.i3, inv.i5)
    return Verdict(ok, path, True, inv)


def positive_by_t42(c: FormCoefficients, inv: InvariantSet) -> Verdict:
    ok, path = _criterion("T42", c.a2222, inv.i2, inv.i0, inv.i8, inv.i4, inv.i6)
    return Verdict(ok, path, True, inv)


def decide_both(c: FormCoefficients, inv: InvariantSet | None = None) -> tuple[Verdict, Verdict]:
    inv = compute_invariants(c) if inv is None else inv
    return positive_by_t41(c, inv), positive_by_t42(c, inv)


def decide(c: FormCoefficients, inv: InvariantSet | None = None) -> Verdict:
    """Run both criteria; raise :class:`TheoremDisagreement` if they differ."""
    first, second = decide_both(c, inv)
    if first.positive != second.positive:
        raise TheoremDisagreement(c, replace(first, theorems_agree=False),
                                  replace(second, theorems_agree=False))
    return first
