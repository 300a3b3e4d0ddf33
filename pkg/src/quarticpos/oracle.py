"""Ground truth for positivity, independent of the invariant criteria.

``oracle_positive`` decides positivity from a Sturm root count of the
dehomogenised polynomial.  Two further exact counters (Descartes bisection and
dyadic bracketing) exist only to cross-check the Sturm code, and
``sample_check`` is a cheap floating-point sanity probe.

Random forms come from :class:`FormGenerator`; form ``i`` of a generator is a
pure function of ``(seed, i)`` so batches can be split freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from .algebra import UniPoly, format_rational, parse_rational, sign_variations, sturm_count_real_roots
from .algebra.unipoly import gcd_poly
from .invariants import FormCoefficients

__all__ = [
    "PROFILES",
    "BOUNDARY_FIXTURES",
    "FormGenerator",
    "SampleCheck",
    "oracle_positive",
    "descartes_positive",
    "descartes_root_count",
    "dyadic_bracket_count",
    "sample_check",
    "generate",
    "form_at",
    "sos_factors",
    "linear_factors",
    "sos_form",
    "product_form",
    "read_forms",
    "write_forms",
]


def oracle_positive(c: FormCoefficients) -> bool:
    """``A1111 > 0`` and ``P1(t) = a(t, 1)`` has no real root."""
    if not c.a1111 > 0:
        return False
    return sturm_count_real_roots(c.p1()) == 0


def descartes_positive(c: FormCoefficients) -> bool:
    if not c.a1111 > 0:
        return False
    return descartes_root_count(c.p1()) == 0


# -- independent exact root counters ---------------------------------------


def _squarefree(p: UniPoly) -> UniPoly:
    if p.is_zero():
        raise ValueError("indeterminate root count: zero polynomial")
    p = UniPoly(Fraction(c) for c in p.coeffs)
    if p.degree < 2:
        return p
    g = gcd_poly(p, p.derivative())
    return p // g if g.degree > 0 else p


def _cauchy_bound(p: UniPoly) -> Fraction:
    lead = abs(p.lead)
    return 1 + max((abs(Fraction(c)) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def _dyadic_ceiling(x: Fraction) -> Fraction:
    m = Fraction(1)
    while m < x:
        m *= 2
    return m


def descartes_root_count(p: UniPoly) -> int:
    """Distinct real roots via Descartes' rule and interval bisection.

    For an open interval (a, b) the sign variations of
    ``(1 + x)^n p((a + b x) / (1 + x))`` bound the roots inside; 0 or 1 are
    exact, anything else bisects.
    """
    f = _squarefree(p)
    n = f.degree
    if n <= 0:
        return 0
    bound = _cauchy_bound(f)

    def variations(a, b):
        num = UniPoly([a, b])
        den = UniPoly([1, 1])
        total = UniPoly()
        for k, c in enumerate(f.coeffs):
            total = total + num**k * den ** (n - k) * c
        return sign_variations([(x > 0) - (x < 0) for x in total.coeffs])

    count = 0
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        v = variations(a, b)
        if v <= 1:
            count += v
            continue
        mid = (a + b) / 2
        if f(mid) == 0:
            count += 1
        stack.append((a, mid))
        stack.append((mid, b))
    return count


def _interval_eval(p: UniPoly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    acc_lo = acc_hi = Fraction(p.coeffs[-1])
    for c in reversed(p.coeffs[:-1]):
        prods = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
        acc_lo, acc_hi = min(prods) + c, max(prods) + c
    return acc_lo, acc_hi


def dyadic_bracket_count(p: UniPoly, max_depth: int = 200) -> int:
    """Distinct real roots by sign-change bracketing on adaptively refined dyadic cells.

    The search interval is ``[-M, M]`` with ``M`` a power of two past the
    Cauchy bound.  A cell is settled when interval arithmetic shows the
    squarefree part cannot vanish there, or that its derivative cannot, in
    which case the cell holds a root exactly when its endpoint signs differ.
    Roots landing on grid points are counted separately.
    """
    f = _squarefree(p)
    if f.degree <= 0:
        return 0
    df = f.derivative()
    m = _dyadic_ceiling(_cauchy_bound(f))
    grid_roots = set()
    inside = 0
    stack = [(-m, m, 0)]
    while stack:
        lo, hi, depth = stack.pop()
        flo, fhi = _interval_eval(f, lo, hi)
        if flo > 0 or fhi < 0:
            continue
        dlo, dhi = _interval_eval(df, lo, hi)
        if dlo > 0 or dhi < 0:
            if f(lo) * f(hi) < 0:
                inside += 1
            continue
        if depth >= max_depth:
            raise RuntimeError("bracketing did not settle; polynomial not squarefree?")
        mid = (lo + hi) / 2
        if f(mid) == 0:
            grid_roots.add(mid)
        stack.append((lo, mid, depth + 1))
        stack.append((mid, hi, depth + 1))
    return inside + len(grid_roots)


# -- floating-point probe ---------------------------------------------------


@dataclass(frozen=True)
class SampleCheck:
    consistent: bool
    minimum: float
    theta: float

    @property
    def suspicious(self) -> bool:
        return not self.consistent


def sample_check(c: FormCoefficients, verdict: bool, n: int = 64) -> SampleCheck:
    """Evaluate the form at ``n`` points of the unit circle in floating point.

    Only a positive verdict can be contradicted (by a sample <= 0); the probe
    is advisory and never overrides an exact decision.
    """
    if n < 8:
        raise ValueError("grid size must be at least 8")
    theta = 2 * np.pi * np.arange(n) / n
    x, y = np.cos(theta), np.sin(theta)
    m = [float(v) for v in c.monomial_coefficients()]
    values = m[0] * x**4 + m[1] * x**3 * y + m[2] * x**2 * y**2 + m[3] * x * y**3 + m[4] * y**4
    k = int(np.argmin(values))
    minimum = float(values[k])
    return SampleCheck(not (verdict and minimum <= 0), minimum, float(theta[k]))


# -- random forms ------------------------------------------------------------

PROFILES = ("uniform", "sos", "indefinite", "boundary")


def _shifted_even(lead, shift, q, s) -> FormCoefficients:
    # lead * P(t) where P(t + shift) = t^4 + q t^2 + s, so the first reduction has r = 0
    t = UniPoly([-shift, 1])
    p = (t**4 + t**2 * q + UniPoly([s])) * lead
    coeffs = [Fraction(x) for x in p.coeffs] + [Fraction(0)] * (5 - len(p.coeffs))
    return FormCoefficients.from_monomial(*reversed(coeffs))


BOUNDARY_FIXTURES: tuple[FormCoefficients, ...] = (
    FormCoefficients.of(1, -1, 1, -1, 1),                # (x - y)^4
    FormCoefficients.of(1, 0, Fraction(1, 3), 0, 1),     # (x^2 + y^2)^2
    FormCoefficients.of(1, 0, 0, 0, 1),                  # x^4 + y^4
    FormCoefficients.of(1, 0, 0, 0, 0),                  # x^4
    FormCoefficients.of(0, 0, 0, 0, 1),                  # y^4
    FormCoefficients.of(1, 0, Fraction(-1, 3), 0, 1),    # (x^2 - y^2)^2
    _shifted_even(1, 1, 0, 1),
    _shifted_even(1, 1, 2, 1),
    _shifted_even(1, 1, -2, 1),
    _shifted_even(2, -1, 3, 2),
    _shifted_even(1, Fraction(1, 2), -3, 2),
    _shifted_even(1, 2, 1, -1),
    _shifted_even(3, -2, 0, 0),
    _shifted_even(1, Fraction(-1, 3), 4, 4),
)


@dataclass(frozen=True)
class FormGenerator:
    seed: int
    profile: str = "uniform"
    numerators: tuple[int, int] = (-20, 20)
    denominators: tuple[int, int] = (1, 8)

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.profile not in PROFILES:
            raise ValueError(f"unknown profile {self.profile!r}; choose from {PROFILES}")
        lo, hi = self.numerators
        dlo, dhi = self.denominators
        if lo > hi or dlo > dhi:
            raise ValueError("empty coefficient range")
        if dlo < 1:
            raise ValueError("denominators must be positive")

    def rng(self, index: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, index])


def sos_factors(g: FormGenerator, index: int, bound: int = 5) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two quadratics ``(alpha, beta, gamma)``, ``(delta, eps, zeta)`` behind form ``index``."""
    r = g.rng(index).integers(-bound, bound + 1, size=6)
    return tuple(int(v) for v in r[:3]), tuple(int(v) for v in r[3:])


def linear_factors(g: FormGenerator, index: int, bound: int = 5) -> tuple[tuple[int, int], ...]:
    """Four nonzero linear forms ``(a, b)`` meaning ``a x + b y``."""
    rng = g.rng(index)
    out = []
    while len(out) < 4:
        a, b = (int(v) for v in rng.integers(-bound, bound + 1, size=2))
        if a or b:
            out.append((a, b))
    return tuple(out)


def sos_form(first, second) -> FormCoefficients:
    """``(a x^2 + b x y + c y^2)^2 + (d x^2 + e x y + f y^2)^2`` in tensor components."""
    total = UniPoly()
    for a, b, c in (first, second):
        quad = UniPoly([Fraction(c), Fraction(b), Fraction(a)])  # in t = x / y
        total = total + quad * quad
    coeffs = list(total.coeffs) + [Fraction(0)] * (5 - len(total.coeffs))
    return FormCoefficients.from_monomial(*reversed(coeffs))


def product_form(linears) -> FormCoefficients:
    total = UniPoly([Fraction(1)])
    for a, b in linears:
        total = total * UniPoly([Fraction(b), Fraction(a)])
    coeffs = list(total.coeffs) + [Fraction(0)] * (5 - len(total.coeffs))
    return FormCoefficients.from_monomial(*reversed(coeffs))


def form_at(g: FormGenerator, index: int) -> FormCoefficients:
    if g.profile == "uniform":
        rng = g.rng(index)
        nums = rng.integers(g.numerators[0], g.numerators[1] + 1, size=5)
        dens = rng.integers(g.denominators[0], g.denominators[1] + 1, size=5)
        return FormCoefficients(*(Fraction(int(n), int(d)) for n, d in zip(nums, dens)))
    if g.profile == "sos":
        return sos_form(*sos_factors(g, index))
    if g.profile == "indefinite":
        return product_form(linear_factors(g, index))
    return BOUNDARY_FIXTURES[index % len(BOUNDARY_FIXTURES)]


def iter_forms(g: FormGenerator, count: int, start: int = 0) -> Iterator[FormCoefficients]:
    if count < 1:
        raise ValueError("count must be positive")
    for i in range(start, start + count):
        yield form_at(g, i)


def generate(g: FormGenerator, count: int, start: int = 0) -> list[FormCoefficients]:
    return list(iter_forms(g, count, start))


# -- fixture files -----------------------------------------------------------


def parse_form_line(line: str) -> FormCoefficients | None:
    """One form per line, whitespace or comma separated; '#' starts a comment."""
    body = line.split("#", 1)[0].strip()
    if not body:
        return None
    return FormCoefficients.parse(body)


def read_forms(path) -> list[FormCoefficients]:
    forms = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        try:
            form = parse_form_line(line)
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from None
        if form is not None:
            forms.append(form)
    return forms


def write_forms(path, forms: Iterable[FormCoefficients], comment: str | None = None) -> None:
    """Append forms in exact rational notation."""
    with Path(path).open("a") as fh:
        if comment:
            for line in comment.splitlines():
                fh.write(f"# {line}\n")
        for form in forms:
            fh.write(" ".join(format_rational(a) for a in form) + "\n")
