"""Machine-checked identities, transformation laws and criterion fuzzing.

Every identity is checked over the polynomial ring in the five symbolic
components; "proved" means the difference of the two sides is the zero
polynomial, nothing weaker.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from .algebra import MultiPoly, RationalFunction, UniPoly, discriminant
from .invariants import (FormCoefficients, ReducedQuartic, closed_forms, compute_invariants,
                         quartic_discriminant, reduce_first, reduce_second, _d2)
from .oracle import FormGenerator, form_at, oracle_positive, write_forms
from .positivity import TheoremDisagreement, decide, decide_both
from .tensor import BasisChange, fundamental_lower, named_objects, symmetric_form_tensor, transform_components

__all__ = [
    "IDENTITY_IDS",
    "ASSERTED_IDS",
    "IdentityResult",
    "IdentityReport",
    "run_identity_suite",
    "TransformReport",
    "transform_law_check",
    "law_comparison",
    "transformed_form",
    "random_matrix",
    "check_form",
    "FuzzReport",
    "criterion_equivalence_fuzz",
    "expanded_eps5",
    "expanded_eps0",
    "expanded_gamma",
]

PROVED = "proved"
FAILED = "failed"
REPORTED = "reported-only"

REL_TABLE = (
    # (id, eps name, coefficient of eps0, coefficient of eps5)
    ("ID-REL-1", "eps1", 0, 1),
    ("ID-REL-2", "eps3", 0, 2),
    ("ID-REL-3", "eps4", 0, -1),
    ("ID-REL-4", "eps6", -1, 3),
    ("ID-REL-5", "eps7", 0, 1),
    ("ID-REL-6", "eps8", 0, -2),
    ("ID-REL-7", "eps9", 0, 2),
    ("ID-REL-8", "eps10", -1, 4),
)

IDENTITY_IDS = (
    "ID-BHAT", "ID-EPS2", *(r[0] for r in REL_TABLE), "ID-723", "ID-724A", "ID-724B",
    "ID-725", "ID-DELTA", "ID-62", "ID-64", "ID-68", "ID-69", "ID-610", "ID-33", "ID-25",
    "ID-QRS", "ID-GAMMA", "ID-EPS0", "ID-721",
)
ASSERTED_IDS = tuple(i for i in IDENTITY_IDS if i != "ID-721")


# -- expanded closed forms -----------------------------------------------------


def expanded_gamma(c: FormCoefficients):
    a, b, m, d, e = c
    return 12 * b * m * d + 6 * a * m * e - 6 * m**3 - 6 * b**2 * e - 6 * a * d**2


def expanded_eps0(c: FormCoefficients):
    a, b, m, d, e = c
    return (128 * b**3 * d**3 - 30 * a**2 * e**2 * m**2 - 30 * a * m**4 * e
            - 24 * a * m**3 * d**2 - 12 * b**4 * e**2 + 96 * a * b * d * m**2 * e
            + 48 * b**3 * d * m * e + 24 * a**2 * b * d * e**2 + 48 * a * b * d**3 * m
            + 24 * a * e**2 * m * b**2 + 24 * a**2 * e * m * d**2 - 336 * m**2 * b**2 * d**2
            - 24 * m**3 * b**2 * e - 120 * a * b**2 * d**2 * e - 12 * a**2 * d**4
            - 2 * a**3 * e**3 - 66 * m**6 + 264 * b * d * m**4)


def expanded_eps5(c: FormCoefficients):
    """Fifteen-term expansion of eps5, kept as an independent cross-check of the engine."""
    a, b, m, d, e = c
    return (12 * a * m**4 * e - 6 * a**2 * e**2 * m**2 - 12 * a * m**3 * d**2
            - 6 * b**4 * e**2 - 24 * a * b * d * m**2 * e + 24 * b**3 * d * m * e
            + 24 * a * b * d**3 * m + 12 * a * e**2 * m * b**2 + 12 * a**2 * e * m * d**2
            - 24 * m**2 * b**2 * d**2 - 12 * m**3 * b**2 * e - 12 * a * b**2 * d**2 * e
            - 6 * a**2 * d**4 - 6 * m**6 + 24 * b * d * m**4)


# -- report types -------------------------------------------------------------


@dataclass(frozen=True)
class IdentityResult:
    id: str
    status: str
    parts: tuple            # ((label, MultiPoly difference), ...)
    millis: float
    claim: str = ""

    @property
    def difference(self) -> str:
        if len(self.parts) == 1:
            return str(self.parts[0][1])
        return "; ".join(f"{label}: {poly}" for label, poly in self.parts)

    def to_record(self) -> dict:
        return {"id": self.id, "status": self.status, "difference": self.difference,
                "millis": round(self.millis, 3)}


@dataclass(frozen=True)
class IdentityReport:
    entries: tuple

    @property
    def ok(self) -> bool:
        return all(e.status != FAILED for e in self.entries)

    @property
    def failed(self) -> list:
        return [e for e in self.entries if e.status == FAILED]

    def __getitem__(self, ident: str) -> IdentityResult:
        for e in self.entries:
            if e.id == ident:
                return e
        raise KeyError(ident)

    def render(self, timings: bool = False) -> str:
        """Text report; timings are off by default so reruns are byte-identical."""
        lines = []
        for e in self.entries:
            head = f"{e.id:<10} {e.status:<13}"
            if timings:
                head += f" {e.millis:9.1f} ms"
            lines.append(f"{head} {e.claim}".rstrip())
            if e.status != PROVED:
                lines.append(f"    difference: {e.difference}")
        proved = sum(e.status == PROVED for e in self.entries)
        lines.append(f"{proved} proved, {len(self.failed)} failed, "
                     f"{sum(e.status == REPORTED for e in self.entries)} reported-only")
        return "\n".join(lines)

    def to_record(self) -> dict:
        return {"ok": self.ok, "entries": [e.to_record() for e in self.entries]}


# -- the identity suite -------------------------------------------------------


def _as_poly(x) -> MultiPoly:
    if isinstance(x, RationalFunction):
        return x.cleared(MultiPoly.constant(1, x.num.gens))
    return x


def _rf_difference(lhs, rhs) -> MultiPoly:
    # a difference of rational functions reported as a polynomial: exact when
    # it cancels, otherwise the cross-multiplied numerator
    diff = lhs - rhs
    if isinstance(diff, RationalFunction):
        try:
            return diff.cleared(MultiPoly.constant(1, diff.num.gens))
        except ValueError:
            return diff.num
    return diff


def _identity_checks():
    c = FormCoefficients.symbolic()
    a, b, m, d, e = c
    A = symmetric_form_tensor(c)
    cache: dict = {}

    def obj(name):
        return named_objects(A, [name], cache)[name]

    def scal(name):
        return obj(name).scalar

    cf = closed_forms(c)

    def bhat():
        beta = scal("beta")
        dl = fundamental_lower()
        Bh = obj("Bhat")
        return [(f"Bhat{i}{j}", Bh[i, j] - beta * dl[i, j] / 2) for i in (1, 2) for j in (1, 2)]

    checks = [("ID-BHAT", "Bhat = (beta/2) d", bhat),
              ("ID-EPS2", "eps2 = 0", lambda: [("eps2", scal("eps2"))])]
    for ident, name, k0, k5 in REL_TABLE:
        claim = f"{name} = " + " + ".join(
            f"{k}*{e}" for k, e in ((k0, "eps0"), (k5, "eps5")) if k)
        checks.append((ident, claim, lambda name=name, k0=k0, k5=k5:
                       [(name, scal(name) - k0 * scal("eps0") - k5 * scal("eps5"))]))
    checks += [
        ("ID-723", "I0 = -eps0/2 + 11 eps5/2",
         lambda: [("I0", cf["i0"] + scal("eps0") / 2 - Fraction(11, 2) * scal("eps5"))]),
        ("ID-724A", "eps0 = beta^3/4 - gamma^2/3",
         lambda: [("eps0", scal("eps0") - scal("beta") ** 3 / 4 + scal("gamma") ** 2 / 3)]),
        ("ID-724B", "eps5 = -gamma^2/6",
         lambda: [("eps5", scal("eps5") + scal("gamma") ** 2 / 6)]),
        ("ID-725", "I0 = -beta^3/8 - 3 gamma^2/4",
         lambda: [("I0", cf["i0"] + scal("beta") ** 3 / 8 + Fraction(3, 4) * scal("gamma") ** 2)]),
        ("ID-DELTA", "delta = beta^2/2",
         lambda: [("delta", scal("delta") - scal("beta") ** 2 / 2)]),
        ("ID-62", "I3 = -B1111/2, I4 = -B2222/2",
         lambda: [("I3", cf["i3"] + obj("B")[1, 1, 1, 1] / 2),
                  ("I4", cf["i4"] + obj("B")[2, 2, 2, 2] / 2)]),
        ("ID-64", "I1 = Chat111111, I2 = -Chat222222",
         lambda: [("I1", cf["i1"] - obj("Chat")[(1,) * 6]),
                  ("I2", cf["i2"] + obj("Chat")[(2,) * 6])]),
        ("ID-68", "D11111111 and D22222222 closed forms",
         lambda: [("D1", obj("D")[(1,) * 8] - (2 * b**4 + 2 * a**2 * m**2 - 4 * a * m * b**2)),
                  ("D2", obj("D")[(2,) * 8] - (2 * d**4 + 2 * e**2 * m**2 - 4 * e * m * d**2))]),
        ("ID-69", "I5, I6 = -3 D/2 - beta lead^2/2",
         lambda: [("I5", cf["i5"] + Fraction(3, 2) * obj("D")[(1,) * 8] + scal("beta") * a**2 / 2),
                  ("I6", cf["i6"] + Fraction(3, 2) * obj("D")[(2,) * 8] + scal("beta") * e**2 / 2)]),
        ("ID-610", "I7, I8 = 6 D + beta lead^2/2",
         lambda: [("I7", cf["i7"] - 6 * obj("D")[(1,) * 8] - scal("beta") * a**2 / 2),
                  ("I8", cf["i8"] - 6 * obj("D")[(2,) * 8] - scal("beta") * e**2 / 2)]),
        ("ID-33", "I0 = disc(P1)/256 = disc(P2)/256",
         lambda: [("P1", cf["i0"] - discriminant(c.p1()) / 256),
                  ("P2", cf["i0"] - discriminant(c.p2()) / 256)]),
        ("ID-25", "D4(q, 0, s) = 16 s (q^2 - 4s)^2", _check_25),
        ("ID-QRS", "I1..I8 = cleared q, r, s, D2", lambda: _check_qrs(c, cf)),
        ("ID-GAMMA", "engine gamma = expanded gamma",
         lambda: [("gamma", scal("gamma") - expanded_gamma(c))]),
        ("ID-EPS0", "engine eps0 = expanded eps0",
         lambda: [("eps0", scal("eps0") - expanded_eps0(c))]),
        ("ID-721", "engine eps5 = expanded eps5",
         lambda: [("eps5", scal("eps5") - expanded_eps5(c))]),
    ]
    return checks


def _check_25():
    q, r, s = MultiPoly.generators(("q", "r", "s"))
    zero = MultiPoly.constant(0, ("q", "r", "s"))
    d4 = quartic_discriminant(ReducedQuartic(q, zero, s))
    rq = ReducedQuartic(q, r, s)
    # the general discriminant must also agree with the resultant definition
    general = quartic_discriminant(rq) - discriminant(rq.poly())
    return [("r=0", d4 - 16 * s * (q**2 - 4 * s) ** 2), ("general", general)]


def _check_qrs(c, cf):
    a, e = c.a1111, c.a2222
    r1, r2 = reduce_first(c), reduce_second(c)
    d21 = _d2(c.a1111, c.a1112, c.a1122, c.a1222, c.a2222)
    d22 = _d2(c.a2222, c.a1222, c.a1122, c.a1112, c.a1111)
    pairs = [
        ("I1", cf["i1"], r1.r * a**3 / 4),
        ("I2", cf["i2"], r2.r * e**3 / 4),
        ("I3", cf["i3"], r1.q * a**2 / 6),
        ("I4", cf["i4"], r2.q * e**2 / 6),
        ("I5", cf["i5"], r1.s * a**4),
        ("I6", cf["i6"], r2.s * e**4),
        ("I7", cf["i7"], d21 * a**4 / 4),
        ("I8", cf["i8"], d22 * e**4 / 4),
        ("D2(1)", d21, r1.q**2 - 4 * r1.s),
        ("D2(2)", d22, r2.q**2 - 4 * r2.s),
    ]
    return [(label, _rf_difference(RationalFunction(lhs) if isinstance(lhs, MultiPoly) else lhs, rhs))
            for label, lhs, rhs in pairs]


def run_identity_suite() -> IdentityReport:
    entries = []
    for ident, claim, fn in _identity_checks():
        t0 = time.perf_counter()
        parts = tuple((label, _as_poly(poly)) for label, poly in fn())
        millis = (time.perf_counter() - t0) * 1000
        zero = all(p.is_zero() for _, p in parts)
        if ident == "ID-721":
            status = REPORTED
        else:
            status = PROVED if zero else FAILED
        entries.append(IdentityResult(ident, status, parts, millis, claim))
    return IdentityReport(tuple(entries))


# -- transformation laws ------------------------------------------------------

LAW_WEIGHTS = {"beta": 4, "gamma": 6, "i0": 12}


@dataclass(frozen=True)
class TransformReport:
    trials: int
    counterexamples: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def random_matrix(rng: np.random.Generator, bound: int = 5) -> BasisChange:
    while True:
        a, b, c, d = (int(v) for v in rng.integers(-bound, bound + 1, size=4))
        if a * d - b * c:
            return BasisChange.from_entries(a, b, c, d)


def transformed_form(c: FormCoefficients, basis: BasisChange) -> FormCoefficients:
    new = transform_components(symmetric_form_tensor(c), basis)
    return FormCoefficients(new[1, 1, 1, 1], new[1, 1, 1, 2], new[1, 1, 2, 2],
                            new[1, 2, 2, 2], new[2, 2, 2, 2])


def law_comparison(c: FormCoefficients, basis: BasisChange) -> dict:
    """``name -> (old, new, factor, holds)`` for beta, gamma, I0; new = detS^m * old."""
    new_c = transformed_form(c, basis)
    old_cf, new_cf = closed_forms(c), closed_forms(new_c)
    out = {}
    for name, m in LAW_WEIGHTS.items():
        factor = basis.detS ** m
        out[name] = (old_cf[name], new_cf[name], factor, new_cf[name] == factor * old_cf[name])
    return out


def _safe_flag(c: FormCoefficients):
    try:
        return decide(c).positive
    except TheoremDisagreement as exc:
        return exc


def transform_law_check(trials: int, seed: int = 0) -> TransformReport:
    if trials < 1:
        raise ValueError("trials must be positive")
    gen = FormGenerator(seed, "uniform")
    bad = []
    for i in range(trials):
        c = form_at(gen, i)
        basis = random_matrix(np.random.default_rng([seed, i, 1]))
        laws = law_comparison(c, basis)
        broken = [k for k, v in laws.items() if not v[3]]
        before, after = _safe_flag(c), _safe_flag(transformed_form(c, basis))
        if before != after or not isinstance(before, bool):
            broken.append("positivity")
        if broken:
            bad.append((c, basis, tuple(broken)))
    return TransformReport(trials, tuple(bad))


# -- criterion equivalence fuzzing ------------------------------------------


@dataclass
class FuzzReport:
    profile: str
    seed: int
    tested: int = 0
    positives: int = 0
    disagreements: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.disagreements

    @property
    def rate(self) -> float:
        return self.tested / self.seconds if self.seconds else float("inf")

    def summary(self) -> str:
        return (f"{self.profile}: {self.tested} tested, {len(self.disagreements)} disagreements, "
                f"{self.positives} positive, {self.rate:.0f} forms/s")


def check_form(c: FormCoefficients) -> tuple[bool, bool, bool]:
    """``(first criterion, second criterion, oracle)`` verdicts for one form."""
    first, second = decide_both(c, compute_invariants(c, reduced=False))
    return first.positive, second.positive, oracle_positive(c)


def criterion_equivalence_fuzz(count: int, seed: int = 0, profile: str = "uniform",
                               fixture_path=None, start: int = 0) -> FuzzReport:
    """Both criteria and the Sturm oracle on ``count`` generated forms.

    Disagreeing forms are kept in the report and, with ``fixture_path``,
    appended to that file in the fixture format.
    """
    if count < 1:
        raise ValueError("count must be positive")
    gen = FormGenerator(seed, profile)
    report = FuzzReport(profile, seed)
    t0 = time.perf_counter()
    for i in range(start, start + count):
        c = form_at(gen, i)
        t41, t42, truth = check_form(c)
        report.tested += 1
        report.positives += truth
        if not (t41 == t42 == truth):
            report.disagreements.append((i, c, t41, t42, truth))
    report.seconds = time.perf_counter() - t0
    if report.disagreements and fixture_path is not None:
        Path(fixture_path).parent.mkdir(parents=True, exist_ok=True)
        for i, c, t41, t42, truth in report.disagreements:
            write_forms(fixture_path, [c],
                        f"{profile} seed={seed} index={i}: T41={t41} T42={t42} oracle={truth}")
    return report
