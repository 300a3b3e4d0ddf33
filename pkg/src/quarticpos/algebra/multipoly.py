"""Sparse multivariate polynomials with exact rational coefficients.

The default generator set is the five independent components of a symmetric
binary quartic tensor, in the fixed order ``A1111, A1112, A1122, A1222,
A2222``.  Other generator tuples (e.g. ``("q", "r", "s")``) are allowed, but
polynomials over different generator tuples never mix.

Terms are kept in a dict ``exponent tuple -> coefficient`` with no zero
coefficients, so structural emptiness is exact zero-testing.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Sequence

from .rational import format_rational

A_GENERATORS = ("A1111", "A1112", "A1122", "A1222", "A2222")

__all__ = ["A_GENERATORS", "MultiPoly", "RationalFunction", "form_generators"]


def _canon(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _is_scalar(x) -> bool:
    return isinstance(x, (int, _RationalABC)) and not isinstance(x, bool)


def _grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


class MultiPoly:
    """Immutable sparse polynomial; see module docstring for conventions."""

    __slots__ = ("terms", "gens", "_hash")

    def __init__(self, terms: Mapping[tuple, object] | None = None,
                 gens: Sequence[str] = A_GENERATORS):
        self.gens = tuple(gens)
        clean = {}
        if terms:
            n = len(self.gens)
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != n or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for generators {self.gens}")
                if c:
                    clean[exps] = _canon(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, gens: tuple) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.gens = gens
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c, gens: Sequence[str] = A_GENERATORS) -> "MultiPoly":
        gens = tuple(gens)
        return cls({(0,) * len(gens): c}, gens)

    @classmethod
    def generator(cls, which, gens: Sequence[str] = A_GENERATORS) -> "MultiPoly":
        gens = tuple(gens)
        idx = gens.index(which) if isinstance(which, str) else int(which)
        exps = [0] * len(gens)
        exps[idx] = 1
        return cls({tuple(exps): 1}, gens)

    @classmethod
    def generators(cls, gens: Sequence[str] = A_GENERATORS) -> tuple["MultiPoly", ...]:
        return tuple(cls.generator(i, gens) for i in range(len(gens)))

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.gens != self.gens:
                raise TypeError(f"generator mismatch: {self.gens} vs {other.gens}")
            return other
        if _is_scalar(other):
            return MultiPoly.constant(other, self.gens)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = _canon(v)
            else:
                terms.pop(e, None)
        return MultiPoly._raw(terms, self.gens)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({e: -c for e, c in self.terms.items()}, self.gens)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            if not other:
                return MultiPoly._raw({}, self.gens)
            return MultiPoly._raw({e: _canon(c * other) for e, c in self.terms.items()}, self.gens)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple([a + b for a, b in zip(e1, e2)])
                out[e] = get(e, 0) + c1 * c2
        return MultiPoly._raw({e: _canon(c) for e, c in out.items() if c}, self.gens)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = MultiPoly.constant(1, self.gens)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        """Division by a nonzero scalar, or exact division by a polynomial."""
        if _is_scalar(other):
            if not other:
                raise ZeroDivisionError("division of polynomial by zero")
            inv = Fraction(1) / Fraction(other)
            return self * inv
        if isinstance(other, MultiPoly):
            return self.exquo(other)
        return NotImplemented

    def exquo(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact quotient; raises ``ValueError`` if ``divisor`` does not divide."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("exact division by the zero polynomial")
        lt_exp, lt_coef = divisor.leading_term()
        quotient: dict = {}
        rem = self
        while rem.terms:
            e, c = rem.leading_term()
            shift = tuple(a - b for a, b in zip(e, lt_exp))
            if any(s < 0 for s in shift):
                raise ValueError("polynomial division is not exact")
            coef = _canon(Fraction(c) / Fraction(lt_coef))
            quotient[shift] = coef
            rem = rem - MultiPoly._raw({shift: coef}, self.gens) * divisor
        return MultiPoly._raw(quotient, self.gens)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.gens == other.gens and self.terms == other.terms
        if _is_scalar(other):
            if not other:
                return not self.terms
            return self.terms == {(0,) * len(self.gens): _canon(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.gens, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- inspection -------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def leading_term(self) -> tuple[tuple, object]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def evaluate(self, point):
        """Evaluate at a sequence (generator order) or mapping name -> value."""
        if isinstance(point, Mapping):
            values = [point[g] for g in self.gens]
        else:
            values = list(point)
            if len(values) != len(self.gens):
                raise ValueError(f"expected {len(self.gens)} values, got {len(values)}")
        total = 0
        for exps, c in self.terms.items():
            term = c
            for v, k in zip(values, exps):
                if k:
                    term = term * v ** k
            total = total + term
        return total

    def __call__(self, *values):
        return self.evaluate(values)

    # -- rendering --------------------------------------------------------

    def _monomial(self, exps: tuple) -> str:
        parts = []
        for g, k in zip(self.gens, exps):
            if k == 1:
                parts.append(g)
            elif k > 1:
                parts.append(f"{g}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (exps, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            mag = -c if neg else c
            mono = self._monomial(exps)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)

    def __repr__(self):
        return f"MultiPoly({self})"


def form_generators() -> tuple[MultiPoly, ...]:
    """The five symbolic tensor components ``A1111 ... A2222``."""
    return MultiPoly.generators(A_GENERATORS)


class RationalFunction:
    """Quotient ``num/den`` of two polynomials, without gcd cancellation.

    Only used to run the division-based reductions symbolically; equality is
    decided by cross-multiplication, so no normal form is needed.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if not isinstance(num, MultiPoly):
            gens = den.gens if isinstance(den, MultiPoly) else A_GENERATORS
            num = MultiPoly.constant(num, gens)
        if not isinstance(den, MultiPoly):
            den = MultiPoly.constant(den, num.gens)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, MultiPoly) or _is_scalar(other):
            return RationalFunction(other, MultiPoly.constant(1, self.num.gens))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        return RationalFunction(self.num ** n, self.den ** n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        raise TypeError("RationalFunction is not hashable (no canonical form)")

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def cleared(self, multiplier: MultiPoly) -> MultiPoly:
        """``multiplier * self`` as a polynomial; raises if not exact."""
        return (self.num * multiplier).exquo(self.den)

    def __repr__(self):
        return f"RationalFunction(({self.num}) / ({self.den}))"
