"""Closed-form series for u = (A + B u^2) w and its cross-checks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .catalan_core import catalan_recurrence
from .power_series import (
    ScalarKind,
    TruncatedSeries,
    as_scalar,
    fixed_point_solve,
    kind_of,
    series_add,
    series_mul,
    series_shift_scale,
)

__all__ = ["QuadraticParams", "OracleReport", "lemma1_series", "verify_against_oracle", "residual"]


@dataclass(frozen=True)
class QuadraticParams:
    """Constants A, B of u = (A + B u^2) w. Ints are promoted to Fraction."""

    A: Fraction | float
    B: Fraction | float

    def __post_init__(self):
        for name in ("A", "B"):
            v = getattr(self, name)
            if isinstance(v, Rational):
                object.__setattr__(self, name, Fraction(v))
            else:
                v = float(v)
                if not math.isfinite(v):
                    raise ValueError(f"{name} must be finite, got {v}")
                object.__setattr__(self, name, v)

    @property
    def kind(self) -> ScalarKind:
        return kind_of(self.A, self.B)

    @property
    def a_zero(self) -> bool:
        return self.A == 0

    @property
    def b_zero(self) -> bool:
        return self.B == 0

    @property
    def degenerate(self) -> bool:
        return self.a_zero or self.b_zero


def lemma1_series(params: QuadraticParams, order: int) -> TruncatedSeries:
    """Return sum over 2n+1 <= order of c_n A^{n+1} B^n w^{2n+1}.

    For A = 0 this is the zero series: u = 0 is then the solution that
    vanishes at w = 0.
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    kind = params.kind
    A, B = as_scalar(params.A, kind), as_scalar(params.B, kind)
    coeffs = [as_scalar(0, kind)] * (order + 1)
    if A == 0:
        return TruncatedSeries(tuple(coeffs), kind)
    term = A  # A^{n+1} B^n
    for n in range((order - 1) // 2 + 1):
        coeffs[2 * n + 1] = catalan_recurrence(n) * term
        term *= A * B
    return TruncatedSeries(tuple(coeffs), kind)


@dataclass(frozen=True)
class OracleReport:
    order: int
    equal: bool
    first_mismatch: int | None
    closed: TruncatedSeries
    oracle: TruncatedSeries


def verify_against_oracle(params: QuadraticParams, order: int) -> OracleReport:
    """Compare lemma1_series with fixed_point_solve coefficient by coefficient.

    Exact equality is only meaningful for rational A, B. A mismatch is
    reported, not raised.
    """
    closed = lemma1_series(params, order)
    oracle = fixed_point_solve(params.A, params.B, order)
    k = closed.first_difference(oracle)
    return OracleReport(order, k is None, k, closed, oracle)


def residual(series: TruncatedSeries, params: QuadraticParams) -> TruncatedSeries:
    """(A + B s^2) w - s, truncated at the order of s."""
    kind = series.kind
    A, B = as_scalar(params.A, kind), as_scalar(params.B, kind)
    rhs = series_add(
        TruncatedSeries.constant(A, series.order, kind),
        series_shift_scale(series_mul(series, series), 0, B),
    )
    rhs = series_shift_scale(rhs, 1, 1)
    return series_add(rhs, series_shift_scale(series, 0, -1))
