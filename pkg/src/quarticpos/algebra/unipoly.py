"""Univariate polynomials over an exact commutative ring.

One class serves both numeric work (``Fraction``/``int`` coefficients: Sturm
chains, root counting) and symbolic work (:class:`MultiPoly` coefficients:
Sylvester resultants and discriminants of generic quartics).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .matrix import PolyMatrix, bareiss_determinant, exact_divide

__all__ = [
    "UniPoly",
    "sturm_chain",
    "sturm_count_real_roots",
    "sign_variations",
    "sylvester_matrix",
    "sylvester_resultant",
    "discriminant",
]


class UniPoly:
    """Coefficients stored low degree first; trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_high(cls, coeffs: Iterable) -> "UniPoly":
        """Build from coefficients listed highest degree first."""
        return cls(reversed(list(coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def __add__(self, other):
        other = _as_unipoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_unipoly(other))

    def __rsub__(self, other):
        return _as_unipoly(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [self.coeffs[0] * 0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = UniPoly([1])
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, other: "UniPoly"):
        """Euclidean division; coefficients must lie in a field."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) if isinstance(c, int) else c for c in self.coeffs]
        quot = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.lead
        dd = other.degree
        while len(rem) - 1 >= dd and rem:
            shift = len(rem) - 1 - dd
            f = rem[-1] / lead
            quot[shift] = f
            for k, c in enumerate(other.coeffs):
                rem[shift + k] = rem[shift + k] - f * c
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return UniPoly(quot), UniPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return self.coeffs == _as_unipoly(other).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def monic(self) -> "UniPoly":
        lead = Fraction(self.lead) if isinstance(self.lead, int) else self.lead
        return UniPoly(c / lead for c in self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            cs = str(c)
            if mono and c == 1:
                parts.append(mono)
            elif mono:
                parts.append(f"({cs})*{mono}" if " " in cs else f"{cs}*{mono}")
            else:
                parts.append(f"({cs})" if " " in cs else cs)
        return " + ".join(parts)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"


def _as_unipoly(x) -> UniPoly:
    return x if isinstance(x, UniPoly) else UniPoly([x])


def gcd_poly(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over the rationals."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


# -- integer kernels for Sturm counting ------------------------------------
#
# Sturm sign counts are unchanged when any chain member is multiplied by a
# positive constant, so the chain is carried as primitive integer polynomials.


def _primitive(cs: list[int]) -> list[int]:
    g = 0
    for c in cs:
        g = gcd(g, c)
    return [c // g for c in cs] if g > 1 else cs


def _to_integer(p: UniPoly) -> list[int]:
    den = 1
    for c in p.coeffs:
        den = lcm(den, Fraction(c).denominator)
    return _primitive([int(Fraction(c) * den) for c in p.coeffs])


def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _pseudo_divmod(a: list[int], b: list[int]) -> tuple[list[int], list[int], int]:
    """Return (q, r, e) with ``lead(b)**e * a == q*b + r``."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * max(len(a) - db, 0)
    steps = 0
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        q = [lb * c for c in q]
        q[shift] += lr
        r = [lb * c for c in r]
        for k, c in enumerate(b):
            r[shift + k] -= lr * c
        r.pop()
        _trim(r)
        steps += 1
    return q, r, steps


def _neg_rem(a: list[int], b: list[int]) -> list[int]:
    """A positive multiple of ``-(a mod b)``, made primitive."""
    _, r, steps = _pseudo_divmod(a, b)
    if b[-1] < 0 and steps % 2:
        r = [-c for c in r]
    return _primitive([-c for c in r]) if r else []


def _int_derivative(cs: list[int]) -> list[int]:
    return _primitive([k * c for k, c in enumerate(cs) if k]) if len(cs) > 1 else []


def _int_gcd(a: list[int], b: list[int]) -> list[int]:
    while b:
        _, r, _ = _pseudo_divmod(a, b)
        a, b = b, (_primitive(_trim(r)) if r else [])
    return a


def _squarefree_int(cs: list[int]) -> list[int]:
    if len(cs) <= 2:
        return cs
    g = _int_gcd(cs, _int_derivative(cs))
    if len(g) == 1:
        return cs
    q, r, _ = _pseudo_divmod(cs, g)
    assert not r
    return _primitive(_trim(q))


def sturm_chain(p: UniPoly, squarefree: bool = True) -> list[UniPoly]:
    """Negated-remainder Sturm sequence ``p0, p1 = p0', p_{k+1} = -(p_{k-1} mod p_k)``.

    Members are returned as primitive integer polynomials, i.e. positive
    rational multiples of the textbook chain.  With ``squarefree`` (default)
    the chain starts from ``p / gcd(p, p')``.
    """
    if p.is_zero():
        raise ValueError("indeterminate root count: zero polynomial")
    f = _to_integer(p)
    if squarefree:
        f = _squarefree_int(f)
    chain = [f]
    nxt = _int_derivative(f)
    while nxt:
        chain.append(nxt)
        nxt = _neg_rem(chain[-2], chain[-1])
    return [UniPoly(c) for c in chain]


def sign_variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def sturm_count_real_roots(p: UniPoly) -> int:
    """Number of distinct real roots of a rational polynomial."""
    chain = sturm_chain(p)
    at_pos = [1 if q.lead > 0 else -1 for q in chain]
    at_neg = [s if q.degree % 2 == 0 else -s for s, q in zip(at_pos, chain)]
    return sign_variations(at_neg) - sign_variations(at_pos)


# -- resultants -------------------------------------------------------------


def sylvester_matrix(p: UniPoly, q: UniPoly) -> PolyMatrix:
    """Rows: deg q shifted copies of p, then deg p shifted copies of q (leading coefficient first)."""
    m, n = p.degree, q.degree
    if m < 1 or n < 1:
        raise ValueError("Sylvester matrix needs non-constant polynomials")
    zero = p.lead * 0
    size = m + n
    rows = []
    ph = list(reversed(p.coeffs))
    qh = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([zero] * i + ph + [zero] * (size - i - m - 1))
    for i in range(m):
        rows.append([zero] * i + qh + [zero] * (size - i - n - 1))
    return PolyMatrix.from_rows(rows)


def sylvester_resultant(p: UniPoly, q: UniPoly):
    """``Res(p, q)`` as the determinant of the Sylvester matrix.

    With this row order ``Res(t - a, t - b) = a - b``.
    """
    return bareiss_determinant(sylvester_matrix(p, q))


def discriminant(p: UniPoly):
    """``(-1)^(n(n-1)/2) Res(p, p') / lead(p)``; for ``t^4 + 1`` this is 256."""
    n = p.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    res = sylvester_resultant(p, p.derivative())
    d = exact_divide(res, p.lead)
    return -d if (n * (n - 1) // 2) % 2 else d
