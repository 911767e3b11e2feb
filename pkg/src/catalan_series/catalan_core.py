"""Catalan numbers: convolution recurrence, binomial closed form, asymptotics."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .power_series import ScalarKind, TruncatedSeries

__all__ = [
    "CatalanTable",
    "catalan_recurrence",
    "catalan_closed",
    "catalan_generating_series",
    "catalan_asymptotic",
    "log_catalan_asymptotic",
]

# The recurrence is O(n^2) big-int multiplications; n of a few thousand
# takes seconds, n = 10^4 takes minutes. Use catalan_closed beyond that.
PRACTICAL_RECURRENCE_CEILING = 5000

_memo: list[int] = [1]
_memo_lock = threading.Lock()


@dataclass(frozen=True)
class CatalanTable:
    values: tuple[int, ...]
    generated_by: Literal["recurrence", "closed_form"]

    def __post_init__(self):
        if not self.values or self.values[0] != 1:
            raise ValueError("a Catalan table starts with c_0 = 1")

    @classmethod
    def build(cls, n_max: int, generated_by: str = "recurrence") -> "CatalanTable":
        if generated_by == "recurrence":
            values = _recurrence_table(n_max, memoize=True)
        elif generated_by == "closed_form":
            values = [catalan_closed(n) for n in range(n_max + 1)]
        else:
            raise ValueError(f"unknown generator {generated_by!r}")
        return cls(tuple(values[: n_max + 1]), generated_by)

    def satisfies_recurrence(self) -> bool:
        v = self.values
        return all(
            v[n] == sum(v[i] * v[n - 1 - i] for i in range(n)) for n in range(1, len(v))
        )

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]


def _extend(table: list[int], n: int) -> None:
    for k in range(len(table), n + 1):
        # symmetric convolution: pair (i, k-1-i) with (k-1-i, i)
        half = k // 2
        total = 2 * sum(table[i] * table[k - 1 - i] for i in range(half))
        if k % 2 == 1:
            total += table[half] * table[half]
        table.append(total)


def _recurrence_table(n: int, memoize: bool) -> list[int]:
    if not memoize:
        table = [1]
        _extend(table, n)
        return table
    if n >= len(_memo):
        with _memo_lock:
            if n >= len(_memo):
                grown = list(_memo)
                _extend(grown, n)
                # readers never see a partially built list
                _memo[:] = grown
    return _memo


def catalan_recurrence(n: int, *, memoize: bool = True) -> int:
    """Return c_n from c_0 = 1 and c_n = sum_{i+j=n-1} c_i c_j.

    With ``memoize=False`` the table is rebuilt from scratch, which keeps
    the computation independent of anything cached by earlier calls.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return _recurrence_table(n, memoize)[n]


def catalan_closed(n: int) -> int:
    """Return binom(2n, n) / (n + 1) in exact integer arithmetic."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    q, r = divmod(math.comb(2 * n, n), n + 1)
    if r:
        raise ArithmeticError(f"binom(2n, n) not divisible by n + 1 at n = {n}")
    return q


def catalan_generating_series(order: int) -> TruncatedSeries:
    """Truncated generating function sum_{n<=order} c_n x^n over exact rationals."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    table = _recurrence_table(order, memoize=True)
    return TruncatedSeries(
        tuple(Fraction(c) for c in table[: order + 1]), ScalarKind.EXACT
    )


def catalan_asymptotic(n: int) -> float:
    """Leading-order estimate 4^n / (sqrt(pi) n^{3/2}), evaluated in log space.

    Past n ~ 516 the value exceeds the float range and inf is returned;
    use log_catalan_asymptotic there.
    """
    log_value = log_catalan_asymptotic(n)
    try:
        return math.exp(log_value)
    except OverflowError:
        return math.inf


def log_catalan_asymptotic(n: int) -> float:
    if n < 1:
        raise ValueError(f"the asymptotic estimate needs n >= 1, got {n}")
    return n * math.log(4.0) - 0.5 * math.log(math.pi) - 1.5 * math.log(n)
