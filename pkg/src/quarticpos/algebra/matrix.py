"""Square matrices over an exact ring and their determinants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .multipoly import MultiPoly

__all__ = ["PolyMatrix", "bareiss_determinant", "cofactor_determinant", "exact_divide"]


@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"expected {self.rows * self.cols} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


def exact_divide(a, b):
    """``a / b`` where the quotient is known to lie in the ring of ``a``."""
    if b == 1:
        return a
    if isinstance(a, MultiPoly):
        return a.exquo(b) if isinstance(b, MultiPoly) else a / b
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ValueError(f"{a} is not divisible by {b}")
        return q
    if isinstance(b, MultiPoly):
        return MultiPoly.constant(a, b.gens).exquo(b)
    return Fraction(a) / Fraction(b) if isinstance(a, int) else a / b


def bareiss_determinant(m: PolyMatrix):
    """Fraction-free Gaussian elimination (Bareiss, one-step variant).

    Every division is exact in the entry ring, so this runs over the integers
    and over :class:`MultiPoly` without ever leaving the ring.
    """
    if not m.is_square:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    a = m.to_rows()
    zero = a[0][0] * 0
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return zero
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = exact_divide(row_i[j] * akk - aik * row_k[j], prev)
        prev = akk
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def cofactor_determinant(m: PolyMatrix):
    """Laplace expansion along the first row; exponential, for cross-checks only."""
    if not m.is_square:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")

    def expand(rows):
        if len(rows) == 1:
            return rows[0][0]
        total = rows[0][0] * 0
        for j, x in enumerate(rows[0]):
            if not x:
                continue
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            term = x * expand(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    return expand(m.to_rows())
