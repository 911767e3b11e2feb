"""Truncated formal power series over exact rationals or floats."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple, Sequence, Union

__all__ = [
    "ScalarKind",
    "TruncatedSeries",
    "SeriesTrace",
    "as_scalar",
    "kind_of",
    "series_add",
    "series_mul",
    "series_shift_scale",
    "fixed_point_solve",
    "series_evaluate",
]

Scalar = Union[Fraction, float]


class ScalarKind(str, enum.Enum):
    EXACT = "exact_rational"
    FLOAT = "float"


def kind_of(*values) -> ScalarKind:
    """EXACT if every value is an int or rational, FLOAT otherwise."""
    if all(isinstance(v, Rational) for v in values):
        return ScalarKind.EXACT
    return ScalarKind.FLOAT


def as_scalar(value, kind: ScalarKind) -> Scalar:
    if kind is ScalarKind.EXACT:
        if not isinstance(value, Rational):
            raise TypeError(f"{value!r} is not an exact rational")
        return Fraction(value)
    return float(value)


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients a_0..a_N of a power series; coeffs[k] multiplies w^k."""

    coeffs: tuple
    kind: ScalarKind = ScalarKind.EXACT

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a truncated series keeps at least the constant term")
        kind = ScalarKind(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "coeffs", tuple(as_scalar(c, kind) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int, kind: ScalarKind = ScalarKind.EXACT) -> "TruncatedSeries":
        return cls((0,) * (order + 1), kind)

    @classmethod
    def constant(cls, value, order: int, kind: ScalarKind = ScalarKind.EXACT) -> "TruncatedSeries":
        return cls((value,) + (0,) * order, kind)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], self.kind)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def first_difference(self, other: "TruncatedSeries") -> int | None:
        """Lowest degree where the two series differ, up to the common order."""
        for k, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return k
        return None

    def to_float(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(float(c) for c in self.coeffs), ScalarKind.FLOAT)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __add__(self, other):
        return series_add(self, other)

    def __mul__(self, other):
        return series_mul(self, other)


def _check_kinds(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.kind is not b.kind:
        raise TypeError(f"cannot combine {a.kind.value} and {b.kind.value} series")


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_kinds(a, b)
    n = min(a.order, b.order)
    return TruncatedSeries(tuple(x + y for x, y in zip(a.coeffs[: n + 1], b.coeffs)), a.kind)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller of the two orders."""
    _check_kinds(a, b)
    n = min(a.order, b.order)
    x, y = a.coeffs, b.coeffs
    zero = x[0] * 0
    out = []
    for k in range(n + 1):
        s = zero
        for i in range(k + 1):
            xi = x[i]
            if xi:
                s += xi * y[k - i]
        out.append(s)
    return TruncatedSeries(tuple(out), a.kind)


def series_shift_scale(a: TruncatedSeries, power: int, scalar) -> TruncatedSeries:
    """Multiply by scalar * w^power, keeping the original order."""
    if power < 0:
        raise ValueError(f"power must be non-negative, got {power}")
    s = as_scalar(scalar, a.kind)
    zero = s * 0
    kept = a.coeffs[: max(a.order + 1 - power, 0)]
    return TruncatedSeries((zero,) * min(power, a.order + 1) + tuple(s * c for c in kept), a.kind)


def _fixed_point_step(u: TruncatedSeries, A, B) -> TruncatedSeries:
    # u <- (A + B u^2) w
    inner = series_add(TruncatedSeries.constant(A, u.order, u.kind), series_shift_scale(series_mul(u, u), 0, B))
    return series_shift_scale(inner, 1, 1)


def fixed_point_solve(A, B, order: int) -> TruncatedSeries:
    """Solve u = (A + B u^2) w by repeated substitution starting from u = 0.

    Each pass fixes two more degrees, so floor(order/2) + 1 passes suffice.
    One further pass must leave the series unchanged; if it does not, an
    ArithmeticError is raised.

    >>> fixed_point_solve(1, 1, 7).coeffs
    (Fraction(0, 1), Fraction(1, 1), Fraction(0, 1), Fraction(1, 1), Fraction(0, 1), Fraction(2, 1), Fraction(0, 1), Fraction(5, 1))
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    kind = kind_of(A, B)
    A, B = as_scalar(A, kind), as_scalar(B, kind)
    u = TruncatedSeries.zero(order, kind)
    for _ in range(order // 2 + 1):
        u = _fixed_point_step(u, A, B)
    again = _fixed_point_step(u, A, B)
    if again != u:
        raise ArithmeticError(
            f"fixed-point iteration not stable at degree {u.first_difference(again)}"
        )
    return u


class SeriesTrace(NamedTuple):
    value: float
    partial_sums: list[float]


def series_evaluate(a: TruncatedSeries, w: float) -> SeriesTrace:
    """Evaluate at w by Horner's rule; also return partial sums S_0..S_N."""
    coeffs = [float(c) for c in a.coeffs]
    value = 0.0
    for c in reversed(coeffs):
        value = value * w + c
    partial, s, p = [], 0.0, 1.0
    for c in coeffs:
        s += c * p
        partial.append(s)
        p *= w
    return SeriesTrace(value, partial)


def series_from(values: Sequence, kind: ScalarKind | None = None) -> TruncatedSeries:
    return TruncatedSeries(tuple(values), kind or kind_of(*values))
