"""Exact positivity tests and pseudotensorial invariants for bivariate quartic forms."""

__version__ = "0.1.0"
