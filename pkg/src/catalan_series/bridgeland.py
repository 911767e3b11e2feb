"""Elliptic-surface constants (m, alpha, e) to (A, B) and the v = 1/w threshold.

A = m + alpha - e and B = -(m - e/2). The series solution converges for
w below 1 / (2 sqrt|AB|), equivalently for v = 1/w above 2 sqrt|AB|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Literal

from .convergence import radius_closed_form
from .solver import QuadraticParams

__all__ = ["BridgelandParams", "ThresholdReport", "ab_from_geometry", "threshold", "sign_regime_check"]

RegimeNote = Literal["generic", "A_zero", "B_zero"]


@dataclass(frozen=True)
class BridgelandParams:
    """m, alpha > 0 fix the ray of the ample class; e is minus the
    self-intersection of the section. e need not be an integer here."""

    m: Fraction | float
    alpha: Fraction | float
    e: Fraction | float

    def __post_init__(self):
        for name in ("m", "alpha", "e"):
            v = getattr(self, name)
            object.__setattr__(self, name, Fraction(v) if isinstance(v, Rational) else float(v))


def _ab(params: BridgelandParams):
    return params.m + params.alpha - params.e, -(params.m - params.e / 2)


def ab_from_geometry(params: BridgelandParams) -> QuadraticParams:
    if not params.m > 0:
        raise ValueError(f"m must be positive, got {params.m}")
    if not params.alpha > 0:
        raise ValueError(f"alpha must be positive, got {params.alpha}")
    return QuadraticParams(*_ab(params))


@dataclass(frozen=True)
class ThresholdReport:
    A: Fraction | float
    B: Fraction | float
    radius: float
    v_threshold: float
    regime_note: RegimeNote


def threshold(params: BridgelandParams) -> ThresholdReport:
    """Radius in w and the matching lower bound on v = 1/w.

    If A or B is zero the series is zero or a polynomial, so any v works and
    v_threshold is 0.
    """
    q = ab_from_geometry(params)
    if q.a_zero:
        return ThresholdReport(q.A, q.B, math.inf, 0.0, "A_zero")
    if q.b_zero:
        return ThresholdReport(q.A, q.B, math.inf, 0.0, "B_zero")
    v = 2.0 * math.sqrt(abs(float(q.A * q.B)))
    return ThresholdReport(q.A, q.B, radius_closed_form(q), v, "generic")


def sign_regime_check(params: BridgelandParams) -> bool:
    """True iff A > 0 and B < 0, i.e. m + alpha > e and m > e/2."""
    A, B = _ab(params)
    return A > 0 and B < 0
