"""Command-line front end.

Usage:
    catseries catalan 0 --count 7
    catseries series --A 2 --B -3/2 --order 5 --source both
    catseries radius --m 2 --alpha 1 --e 1
    catseries eval --A 1 --B -1 --w 0.25 --order 81

Output is a JSON envelope {command, inputs, results, exact} with sorted
keys, floats at 17 significant digits, and exact rationals and big
integers as strings. Exit codes: 0 success, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import csv
import json
import math
import sys
from fractions import Fraction

import click

from .bridgeland import BridgelandParams, sign_regime_check, threshold
from .catalan_core import catalan_closed, catalan_recurrence
from .convergence import convergence_report
from .evaluation import ComplexBranchError, compare_series_to_closed
from .solver import QuadraticParams, lemma1_series, verify_against_oracle
from .power_series import fixed_point_solve

__all__ = ["cli", "main", "dumps", "render_number"]

DOMAIN_ERROR = 3


class RationalType(click.ParamType):
    """Parses "p/q" or a decimal literal into an exact Fraction (0.25 -> 1/4)."""

    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational number", param, ctx)


RATIONAL = RationalType()
NONNEG = click.IntRange(min=0)


def render_number(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        if math.isnan(x):
            return "nan"
        return x
    return x


def _encode(obj) -> str:
    obj = render_number(obj)
    if isinstance(obj, dict):
        items = sorted(obj.items())
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_encode(v)}" for k, v in items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    if isinstance(obj, float):
        return format(obj, ".17g")
    return json.dumps(obj)


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, '%.17g' floats; parse then dumps is a no-op."""
    return _encode(obj)


def _emit(fmt: str, command: str, inputs: dict, results: dict, exact: bool, rows=None) -> None:
    if fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        header, body = rows if rows is not None else (("key", "value"), sorted(results.items()))
        writer.writerow(header)
        for row in body:
            writer.writerow([_csv_cell(c) for c in row])
        return
    envelope = {"command": command, "inputs": inputs, "results": results, "exact": exact}
    click.echo(dumps(envelope))


def _csv_cell(value) -> str:
    value = render_number(value)
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, (list, dict)):
        return dumps(value)
    return "" if value is None else str(value)


def _domain_error(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(DOMAIN_ERROR)


format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True
)


@click.group()
@click.version_option(package_name="artifact")
def cli():
    """Series solutions of u = (A + B u^2) w, Catalan numbers, convergence radii."""


@cli.command()
@click.argument("n", type=NONNEG)
@click.option("--count", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--mode", type=click.Choice(["recurrence", "closed", "both"]), default="recurrence", show_default=True)
@format_option
def catalan(n, count, mode, fmt):
    """Catalan numbers c_n .. c_{n+count-1}."""
    indices = range(n, n + count)
    if mode == "closed":
        values = [catalan_closed(k) for k in indices]
    else:
        values = [catalan_recurrence(k) for k in indices]
    results = {"values": [str(v) for v in values]}
    if mode == "both":
        results["agreement"] = all(catalan_closed(k) == v for k, v in zip(indices, values))
    inputs = {"n": n, "count": count, "mode": mode}
    rows = (("n", "value"), [(k, str(v)) for k, v in zip(indices, values)])
    _emit(fmt, "catalan", inputs, results, True, rows)


@cli.command()
@click.option("--A", "A", type=RATIONAL, required=True)
@click.option("--B", "B", type=RATIONAL, required=True)
@click.option("--order", type=NONNEG, required=True)
@click.option("--source", type=click.Choice(["lemma1", "oracle", "both"]), default="lemma1", show_default=True)
@format_option
def series(A, B, order, source, fmt):
    """Coefficients of the series solution through w^order, exact."""
    params = QuadraticParams(A, B)
    results = {}
    if source == "both":
        report = verify_against_oracle(params, order)
        coeffs = report.closed
        results["mismatch"] = report.first_mismatch
    elif source == "oracle":
        coeffs = fixed_point_solve(A, B, order)
    else:
        coeffs = lemma1_series(params, order)
    results["coefficients"] = list(coeffs.coeffs)
    inputs = {"A": A, "B": B, "order": order, "source": source}
    rows = (("degree", "coefficient"), list(enumerate(coeffs.coeffs)))
    _emit(fmt, "series", inputs, results, True, rows)


@cli.command()
@click.option("--A", "A", type=RATIONAL)
@click.option("--B", "B", type=RATIONAL)
@click.option("--m", type=RATIONAL)
@click.option("--alpha", type=RATIONAL)
@click.option("--e", type=RATIONAL)
@click.option("--n", type=click.IntRange(min=1), default=1000, show_default=True, help="coefficient index for the root test")
@format_option
def radius(A, B, m, alpha, e, n, fmt):
    """Radius of convergence from (A, B) or from (m, alpha, e)."""
    quad = (A, B)
    geo = (m, alpha, e)
    has_quad = any(v is not None for v in quad)
    has_geo = any(v is not None for v in geo)
    if has_quad == has_geo:
        raise click.UsageError("give exactly one of --A/--B or --m/--alpha/--e")
    if has_quad and None in quad:
        raise click.UsageError("--A and --B must be given together")
    if has_geo and None in geo:
        raise click.UsageError("--m, --alpha and --e must be given together")

    results = {}
    if has_geo:
        inputs = {"m": m, "alpha": alpha, "e": e, "n": n}
        bp = BridgelandParams(m, alpha, e)
        try:
            t = threshold(bp)
        except ValueError as exc:
            _domain_error(str(exc))
        params = QuadraticParams(t.A, t.B)
        results.update(
            A=t.A, B=t.B, v_threshold=t.v_threshold, regime_note=t.regime_note,
            sign_regime=sign_regime_check(bp),
        )
    else:
        inputs = {"A": A, "B": B, "n": n}
        params = QuadraticParams(A, B)

    rep = convergence_report(params, n)
    results.update(analytic_radius=rep.analytic_radius, n_used=rep.n_used, asymptotic_ratio=rep.asymptotic_ratio)
    if rep.hadamard_estimate is not None:
        results.update(hadamard_estimate=rep.hadamard_estimate, relative_gap=rep.relative_gap)
    _emit(fmt, "radius", inputs, results, False)


@cli.command(name="eval")
@click.option("--A", "A", type=RATIONAL, required=True)
@click.option("--B", "B", type=RATIONAL, required=True)
@click.option("--w", type=float, required=True)
@click.option("--order", type=NONNEG, default=41, show_default=True)
@format_option
def eval_(A, B, w, order, fmt):
    """Partial sum of the series at w against the closed-form branch."""
    params = QuadraticParams(A, B)
    try:
        rep = compare_series_to_closed(params, w, order)
    except ComplexBranchError as exc:
        _domain_error(str(exc))
    results = {
        "w": rep.w, "series_value": rep.series_value, "closed_value": rep.closed_value,
        "abs_error": rep.abs_error, "order_used": rep.order_used, "inside_radius": rep.inside_radius,
    }
    inputs = {"A": A, "B": B, "w": w, "order": order}
    _emit(fmt, "eval", inputs, results, False)


def main(argv=None):
    cli.main(args=argv, prog_name="catseries")


if __name__ == "__main__":
    main()
