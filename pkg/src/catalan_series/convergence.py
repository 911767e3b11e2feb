"""Radius of convergence: analytic value, root-test estimate, diagnostics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Literal

from .catalan_core import catalan_recurrence, log_catalan_asymptotic
from .solver import QuadraticParams

__all__ = [
    "ConvergenceReport",
    "radius_closed_form",
    "hadamard_estimate",
    "asymptotic_ratio",
    "divergence_probe",
    "convergence_report",
    "log_abs",
]

Classification = Literal["terms_vanish", "terms_blow_up", "inconclusive"]

# heuristic thresholds for divergence_probe
PROBE_WINDOW = 10
PROBE_FACTOR = 1e3
BOUNDARY_RTOL = 1e-9


def log_abs(x) -> float:
    """Natural log of |x| for ints, Fractions and floats of any magnitude."""
    if isinstance(x, Rational):
        num, den = abs(x.numerator), x.denominator
        if num == 0:
            return -math.inf
        return _log_int(num) - _log_int(den)
    x = abs(float(x))
    return math.log(x) if x else -math.inf


def _log_int(n: int) -> float:
    # leading 53 bits as mantissa, the rest as a power of two
    shift = max(n.bit_length() - 53, 0)
    return math.log(n >> shift) + shift * math.log(2.0)


def radius_closed_form(params: QuadraticParams) -> float:
    """1 / (2 sqrt|AB|); +inf when A or B vanishes (the series is then
    zero or the polynomial u = A w)."""
    if params.degenerate:
        return math.inf
    return 1.0 / (2.0 * math.sqrt(abs(float(params.A * params.B))))


def _log_abs_coefficient(params: QuadraticParams, n: int) -> float:
    # log |c_n A^{n+1} B^n|
    return log_abs(catalan_recurrence(n)) + (n + 1) * log_abs(params.A) + n * log_abs(params.B)


def hadamard_estimate(params: QuadraticParams, n: int) -> float:
    """Root-test estimate of the radius from the n-th coefficient.

    rho_n = |c_n A^{n+1} B^n|^{1/n} estimates 1/radius of the series in w^2;
    the u-series radius is its inverse square root.
    """
    if params.degenerate:
        raise ValueError("the root-test estimate needs A and B both nonzero")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    log_rho = _log_abs_coefficient(params, n) / n
    return math.exp(-0.5 * log_rho)


def asymptotic_ratio(n: int) -> float:
    """c_n / (4^n / (sqrt(pi) n^{3/2})) from the exact c_n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return math.exp(log_abs(catalan_recurrence(n)) - log_catalan_asymptotic(n))


def divergence_probe(params: QuadraticParams, w: float, max_terms: int = 200) -> Classification:
    """Classify the terms |c_n A^{n+1} B^n w^{2n+1}|, n < max_terms.

    terms_vanish: the last 10 terms decrease and the final one is below
    1e-3 of the first. terms_blow_up: the last 10 increase and the final one
    exceeds 1e3 times the first. Anything else, and any w on the radius
    itself, is inconclusive. The thresholds are a heuristic.
    """
    if params.degenerate:
        raise ValueError("divergence_probe needs A and B both nonzero")
    if not w > 0:
        raise ValueError(f"w must be positive, got {w}")
    if max_terms < PROBE_WINDOW + 1:
        raise ValueError(f"max_terms must be at least {PROBE_WINDOW + 1}")
    if math.isclose(w, radius_closed_form(params), rel_tol=BOUNDARY_RTOL):
        return "inconclusive"
    log_w = math.log(w)
    logs = [_log_abs_coefficient(params, n) + (2 * n + 1) * log_w for n in range(max_terms)]
    tail = logs[-PROBE_WINDOW:]
    steps = [b - a for a, b in zip(tail, tail[1:])]
    span = logs[-1] - logs[0]
    log_factor = math.log(PROBE_FACTOR)
    if all(s < 0 for s in steps) and span < -log_factor:
        return "terms_vanish"
    if all(s > 0 for s in steps) and span > log_factor:
        return "terms_blow_up"
    return "inconclusive"


@dataclass(frozen=True)
class ConvergenceReport:
    analytic_radius: float
    hadamard_estimate: float | None
    n_used: int
    asymptotic_ratio: float
    relative_gap: float | None


def convergence_report(params: QuadraticParams, n: int = 1000) -> ConvergenceReport:
    radius = radius_closed_form(params)
    ratio = asymptotic_ratio(n)
    if math.isinf(radius):
        return ConvergenceReport(radius, None, n, ratio, None)
    est = hadamard_estimate(params, n)
    return ConvergenceReport(radius, est, n, ratio, abs(est - radius) / radius)
