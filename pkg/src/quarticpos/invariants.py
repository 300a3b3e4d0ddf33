"""Closed-form parameters of a binary quartic form.

All functions are generic over the scalar type: ``Fraction`` for numeric
work, :class:`~quarticpos.algebra.MultiPoly` for symbolic identity checks.
Quantities that need a division (the depressed-quartic coefficients) are
lifted to :class:`~quarticpos.algebra.RationalFunction` when symbolic.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Iterator

from .algebra import MultiPoly, RationalFunction, UniPoly, form_generators, format_rational, parse_rational, to_rational

__all__ = [
    "FormCoefficients",
    "ReducedQuartic",
    "InvariantSet",
    "BINOMIAL_WEIGHTS",
    "reduce_first",
    "reduce_second",
    "quartic_discriminant",
    "compute_invariants",
    "closed_forms",
]

BINOMIAL_WEIGHTS = (1, 4, 6, 4, 1)


@dataclass(frozen=True)
class FormCoefficients:
    """Tensor components ``A1111 ... A2222`` (binomial weights not folded in).

    The form is ``a1111 x^4 + 4 a1112 x^3 y + 6 a1122 x^2 y^2 + 4 a1222 x y^3 + a2222 y^4``.
    """

    a1111: object
    a1112: object
    a1122: object
    a1222: object
    a2222: object

    @classmethod
    def of(cls, *values) -> "FormCoefficients":
        if len(values) == 1 and not isinstance(values[0], (int, str, Fraction)):
            values = tuple(values[0])
        if len(values) != 5:
            raise ValueError(f"expected 5 coefficients, got {len(values)}")
        return cls(*(to_rational(v) for v in values))

    @classmethod
    def parse(cls, text: str) -> "FormCoefficients":
        tokens = text.replace(",", " ").split()
        if len(tokens) != 5:
            raise ValueError(f"expected 5 coefficients, got {len(tokens)}")
        values = []
        for pos, tok in enumerate(tokens, 1):
            try:
                values.append(parse_rational(tok))
            except ValueError:
                raise ValueError(f"cannot parse coefficient {pos}: {tok!r}") from None
        return cls(*values)

    @classmethod
    def from_monomial(cls, *coeffs) -> "FormCoefficients":
        """From raw monomial coefficients of ``x^4, x^3 y, x^2 y^2, x y^3, y^4``."""
        if len(coeffs) == 1:
            coeffs = tuple(coeffs[0])
        raw = [to_rational(c) for c in coeffs]
        if len(raw) != 5:
            raise ValueError(f"expected 5 coefficients, got {len(raw)}")
        return cls(*(c / w for c, w in zip(raw, BINOMIAL_WEIGHTS)))

    @classmethod
    def symbolic(cls) -> "FormCoefficients":
        return cls(*form_generators())

    def __iter__(self) -> Iterator:
        return iter((self.a1111, self.a1112, self.a1122, self.a1222, self.a2222))

    def as_tuple(self) -> tuple:
        return tuple(self)

    def monomial_coefficients(self) -> tuple:
        return tuple(w * a for w, a in zip(BINOMIAL_WEIGHTS, self))

    def swapped(self) -> "FormCoefficients":
        """Exchange the roles of the two variables (index swap 1 <-> 2)."""
        return FormCoefficients(self.a2222, self.a1222, self.a1122, self.a1112, self.a1111)

    def scaled(self, factor) -> "FormCoefficients":
        return FormCoefficients(*(factor * a for a in self))

    def value(self, x, y):
        m = self.monomial_coefficients()
        return m[0] * x**4 + m[1] * x**3 * y + m[2] * x**2 * y**2 + m[3] * x * y**3 + m[4] * y**4

    def p1(self) -> UniPoly:
        """``a(t, 1)``: the dehomogenisation in ``t = x/y``."""
        return UniPoly(reversed(self.monomial_coefficients()))

    def p2(self) -> UniPoly:
        """``a(1, t)``: the dehomogenisation in ``t = y/x``."""
        return UniPoly(self.monomial_coefficients())

    def __str__(self):
        return " ".join(format_rational(a) if isinstance(a, (int, Fraction)) else str(a) for a in self)


@dataclass(frozen=True)
class ReducedQuartic:
    """The depressed monic quartic ``z^4 + q z^2 + r z + s``."""

    q: object
    r: object
    s: object

    def poly(self) -> UniPoly:
        return UniPoly([self.s, self.r, self.q, 0, 1])


def _field(x):
    if isinstance(x, MultiPoly):
        return RationalFunction(x)
    if isinstance(x, int):
        return Fraction(x)
    return x


def _reduce(lead, b, c, d, e) -> ReducedQuartic:
    # shared shape of the two reductions; ``lead`` is the quartic coefficient
    if not lead:
        raise ValueError("reduction undefined: leading tensor component is zero")
    a, b, c, d, e = (_field(v) for v in (lead, b, c, d, e))
    q = 6 * c / a - 6 * b**2 / a**2
    r = 4 * d / a - 12 * c * b / a**2 + 8 * b**3 / a**3
    s = e / a - 4 * d * b / a**2 + 6 * c * b**2 / a**3 - 3 * b**4 / a**4
    return ReducedQuartic(q, r, s)


def reduce_first(c: FormCoefficients) -> ReducedQuartic:
    """Depress ``P1(t)/A1111`` with the shift ``t = z - A1112/A1111``."""
    return _reduce(c.a1111, c.a1112, c.a1122, c.a1222, c.a2222)


def reduce_second(c: FormCoefficients) -> ReducedQuartic:
    """Depress ``P2(t)/A2222`` with the shift ``t = z - A1222/A2222``."""
    return _reduce(c.a2222, c.a1222, c.a1122, c.a1112, c.a1111)


def quartic_discriminant(rq: ReducedQuartic):
    q, r, s = rq.q, rq.r, rq.s
    return (256 * s**3 - 4 * q**3 * r**2 - 27 * r**4
            + 16 * q**4 * s - 128 * q**2 * s**2 + 144 * q * s * r**2)


def _d2(lead, b, c, d, e):
    a, b, c, d, e = (_field(v) for v in (lead, b, c, d, e))
    return (36 * c**2 / a**2 - 96 * c * b**2 / a**3 + 48 * b**4 / a**4
            + 16 * d * b / a**2 - 4 * e / a)


def closed_forms(c: FormCoefficients) -> dict:
    """The denominator-free parameters ``i0 ... i8``, ``beta``, ``gamma``."""
    a, b, m, d, e = c  # A1111, A1112, A1122, A1222, A2222
    i0 = (81 * a * m**4 * e - 18 * a**2 * e**2 * m**2 - 27 * b**4 * e**2
          - 12 * a**2 * b * d * e**2 - 54 * a * m**3 * d**2 + 108 * a * b * d**3 * m
          - 64 * b**3 * d**3 + 54 * a * e**2 * m * b**2 + a**3 * e**3
          + 54 * a**2 * e * m * d**2 + 36 * m**2 * b**2 * d**2 - 54 * m**3 * b**2 * e
          - 27 * a**2 * d**4 - 180 * a * b * d * m**2 * e + 108 * b**3 * d * m * e
          - 6 * a * b**2 * d**2 * e)
    return {
        "i0": i0,
        "i1": a**2 * d - 3 * a * b * m + 2 * b**3,
        "i2": e**2 * b - 3 * e * d * m + 2 * d**3,
        "i3": a * m - b**2,
        "i4": e * m - d**2,
        "i5": 6 * a * m * b**2 - 3 * b**4 - 4 * a**2 * d * b + a**3 * e,
        "i6": 6 * e * m * d**2 - 3 * d**4 - 4 * e**2 * b * d + e**3 * a,
        "i7": 9 * m**2 * a**2 - 24 * a * m * b**2 + 12 * b**4 + 4 * a**2 * d * b - a**3 * e,
        "i8": 9 * e**2 * m**2 - 24 * e * m * d**2 + 12 * d**4 + 4 * e**2 * b * d - e**3 * a,
        "beta": 8 * b * d - 6 * m**2 - 2 * a * e,
        "gamma": 12 * b * m * d + 6 * a * m * e - 6 * m**3 - 6 * b**2 * e - 6 * a * d**2,
    }


RECORD_KEYS = ("i0", "i1", "i2", "i3", "i4", "i5", "i6", "i7", "i8", "beta", "gamma",
               "q1", "r1", "s1", "q2", "r2", "s2")


@dataclass(frozen=True)
class InvariantSet:
    i0: object
    i1: object
    i2: object
    i3: object
    i4: object
    i5: object
    i6: object
    i7: object
    i8: object
    beta: object
    gamma: object
    q1: object = None
    r1: object = None
    s1: object = None
    q2: object = None
    r2: object = None
    s2: object = None
    d2_1: object = None
    d2_2: object = None

    def to_record(self) -> dict:
        """Flat mapping of exact rational strings; absent entries are ``None``."""
        out = {}
        for key in RECORD_KEYS:
            v = getattr(self, key)
            out[key] = None if v is None else format_rational(v)
        return out

    @classmethod
    def from_record(cls, record: dict) -> "InvariantSet":
        kwargs = {k: (None if record.get(k) is None else parse_rational(record[k])) for k in RECORD_KEYS}
        return cls(**kwargs)

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def compute_invariants(c: FormCoefficients, reduced: bool = True) -> InvariantSet:
    """Every named parameter of the form.

    The I-parameters come from their polynomial closed forms, so they are
    defined for every input.  With ``reduced`` the depressed-quartic
    coefficients and the ``q^2 - 4s`` discriminants are added where the
    corresponding leading component is nonzero.
    """
    values = closed_forms(c)
    if reduced:
        if c.a1111:
            first = reduce_first(c)
            values.update(q1=first.q, r1=first.r, s1=first.s,
                          d2_1=_d2(c.a1111, c.a1112, c.a1122, c.a1222, c.a2222))
        if c.a2222:
            second = reduce_second(c)
            values.update(q2=second.q, r2=second.r, s2=second.s,
                          d2_2=_d2(c.a2222, c.a1222, c.a1122, c.a1112, c.a1111))
    return InvariantSet(**values)
