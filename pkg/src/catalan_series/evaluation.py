"""Closed-form evaluation of the series branch and comparison with partial sums."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .convergence import radius_closed_form
from .power_series import series_evaluate
from .solver import QuadraticParams, lemma1_series

__all__ = ["ComplexBranchError", "EvalReport", "closed_form_branch", "compare_series_to_closed"]


class ComplexBranchError(ValueError):
    """Raised when 1 - 4ABw^2 < 0, i.e. w lies past the real branch point."""

    def __init__(self, params: QuadraticParams, w: float):
        self.branch_point = radius_closed_form(params)
        super().__init__(
            f"complex branch: 1 - 4ABw^2 < 0 at w = {w!r}; "
            f"the real branch ends at |w| = {self.branch_point!r}"
        )


def closed_form_branch(params: QuadraticParams, w: float) -> float:
    """Root of B w u^2 - u + A w = 0 with u -> 0 as w -> 0.

    Uses u = 2Aw / (1 + sqrt(1 - 4ABw^2)), which has no cancellation near
    w = 0.
    """
    A, B, w = float(params.A), float(params.B), float(w)
    if B == 0 or w == 0:
        return A * w
    disc = 1.0 - 4.0 * A * B * w * w
    if disc < 0:
        raise ComplexBranchError(params, w)
    return 2.0 * A * w / (1.0 + math.sqrt(disc))


@dataclass(frozen=True)
class EvalReport:
    w: float
    series_value: float
    closed_value: float
    abs_error: float
    order_used: int
    inside_radius: bool


def compare_series_to_closed(params: QuadraticParams, w: float, order: int) -> EvalReport:
    closed = closed_form_branch(params, w)
    series = lemma1_series(params, order)
    value = series_evaluate(series, w).value
    inside = abs(w) < radius_closed_form(params)
    return EvalReport(w, value, closed, abs(value - closed), order, inside)
