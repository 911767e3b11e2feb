"""Exit criteria for the package. Run ``pytest tests/test_acceptance.py -s``
for one PASS/FAIL line per criterion, or execute this file directly."""

import json
import math
import time
from fractions import Fraction

import pytest
from click.testing import CliRunner

from catalan_series.bridgeland import BridgelandParams, threshold
from catalan_series.catalan_core import (
    _recurrence_table,
    catalan_closed,
    catalan_generating_series,
    catalan_recurrence,
)
from catalan_series.cli import cli, dumps
from catalan_series.convergence import asymptotic_ratio, divergence_probe, hadamard_estimate, radius_closed_form
from catalan_series.evaluation import closed_form_branch
from catalan_series.power_series import (
    TruncatedSeries,
    fixed_point_solve,
    series_add,
    series_evaluate,
    series_mul,
    series_shift_scale,
)
from catalan_series.solver import QuadraticParams, lemma1_series, residual

from conftest import rational_sample

SAMPLE = rational_sample(50)


def c1_catalan_ground_truth():
    t0 = time.perf_counter()
    first = [catalan_recurrence(n, memoize=False) for n in range(7)]
    table = _recurrence_table(500, memoize=False)
    agree = all(table[n] == catalan_closed(n) for n in range(501))
    elapsed = time.perf_counter() - t0
    ok = first == [1, 1, 2, 5, 14, 42, 132] and agree and elapsed < 5.0
    return ok, f"first seven {first}, n<=500 agree={agree}, {elapsed:.2f}s (< 5s)"


def c2_generating_identity():
    N = 128
    C = catalan_generating_series(N)
    rhs = series_add(TruncatedSeries.constant(1, N), series_shift_scale(series_mul(C, C), 1, 1))
    return rhs == C, f"C = 1 + x C^2 exactly through order {N}"


def c3_lemma1_equivalence():
    bad = [(A, B) for A, B in SAMPLE if lemma1_series(QuadraticParams(A, B), 64) != fixed_point_solve(A, B, 64)]
    return not bad, f"{len(SAMPLE) - len(bad)}/{len(SAMPLE)} sampled (A, B) equal at order 64"


def c4_residual_vanishes():
    bad = []
    for A, B in SAMPLE:
        p = QuadraticParams(A, B)
        if not residual(lemma1_series(p, 64), p).is_zero():
            bad.append((A, B))
    return not bad, f"{len(SAMPLE) - len(bad)}/{len(SAMPLE)} zero residuals at order 64"


def c5_radius_agreement():
    t0 = time.perf_counter()
    c1000 = catalan_recurrence(1000, memoize=False)
    gaps = []
    for A, B in [(1, -1), (2, Fraction(-3, 2)), (5, Fraction(-1, 5))]:
        p = QuadraticParams(A, B)
        r = radius_closed_form(p)
        gaps.append(abs(hadamard_estimate(p, 1000) - r) / r)
    elapsed = time.perf_counter() - t0
    ok = c1000 == catalan_closed(1000) and max(gaps) < 0.02 and elapsed < 10.0
    return ok, "relative gaps " + ", ".join(f"{g:.4%}" for g in gaps) + f" (< 2%), {elapsed:.2f}s (< 10s)"


def c6_asymptotic_estimate():
    r20, r200 = asymptotic_ratio(20), asymptotic_ratio(200)
    ok = 0.90 < r20 < 1.0 and 0.99 < r200 < 1.0
    return ok, f"ratio(20) = {r20:.6f} in (0.90, 1), ratio(200) = {r200:.6f} in (0.99, 1)"


def c7_series_closed_agreement():
    p = QuadraticParams(1, -1)
    w = radius_closed_form(p) / 2
    err = abs(series_evaluate(lemma1_series(p, 81), w).value - closed_form_branch(p, w))
    return w == 0.25 and err < 1e-10, f"|partial sum - closed form| = {err:.3e} at w = {w} (< 1e-10)"


def c8_divergence_witness():
    p = QuadraticParams(1, -1)
    r = radius_closed_form(p)
    inside = divergence_probe(p, 0.45 * (2 * r), 200)
    outside = divergence_probe(p, 1.1 * r, 200)
    ok = inside == "terms_vanish" and outside == "terms_blow_up"
    return ok, f"w = 0.9r -> {inside}, w = 1.1r -> {outside}"


def c9_threshold_pipeline():
    t = threshold(BridgelandParams(2, 1, 1))
    rel = abs(t.v_threshold - 2 * math.sqrt(3)) / (2 * math.sqrt(3))
    d = threshold(BridgelandParams(1, 1, 2))
    ok = t.A == 2 and t.B == Fraction(-3, 2) and rel < 1e-12 and d.regime_note == "A_zero"
    return ok, f"A = {t.A}, B = {t.B}, v rel err {rel:.1e} (< 1e-12); (1,1,2) -> {d.regime_note}"


CLI_SCRIPT = [
    (["catalan", "0", "--count", "7"], 0),
    (["catalan", "10", "--mode", "both"], 0),
    (["series", "--A", "1", "--B", "1", "--order", "9", "--source", "both"], 0),
    (["series", "--A", "2", "--B", "-3/2", "--order", "5"], 0),
    (["radius", "--A", "1", "--B", "-1", "--n", "1000"], 0),
    (["radius", "--m", "2", "--alpha", "1", "--e", "1"], 0),
    (["radius", "--A", "1", "--B", "0"], 0),
    (["eval", "--A", "1", "--B", "-1", "--w", "0.25", "--order", "81"], 0),
    (["catalan", "-1"], 2),
    (["series", "--A", "one", "--B", "1", "--order", "3"], 2),
    (["radius"], 2),
    (["eval", "--A", "1", "--B", "1", "--w", "0.6", "--order", "5"], 3),
]


def c10_cli_contract():
    runner = CliRunner()
    failures = []
    for args, code in CLI_SCRIPT:
        result = runner.invoke(cli, args)
        if result.exit_code != code:
            failures.append(f"{args[0]} exit {result.exit_code} != {code}")
        elif code == 0:
            text = result.stdout.rstrip("\n")
            if dumps(json.loads(text)) != text:
                failures.append(f"{' '.join(args)} not byte-stable")
    commands = {args[0] for args, _ in CLI_SCRIPT}
    codes = {code for _, code in CLI_SCRIPT}
    ok = not failures and commands == {"catalan", "series", "radius", "eval"} and codes == {0, 2, 3}
    return ok, f"{len(CLI_SCRIPT) - len(failures)}/{len(CLI_SCRIPT)} invocations conform" + (
        "; " + "; ".join(failures) if failures else ""
    )


CRITERIA = [
    ("1 Catalan ground truth", c1_catalan_ground_truth),
    ("2 generating-function identity", c2_generating_identity),
    ("3 series equivalence", c3_lemma1_equivalence),
    ("4 residual vanishing", c4_residual_vanishes),
    ("5 radius agreement", c5_radius_agreement),
    ("6 asymptotic estimate", c6_asymptotic_estimate),
    ("7 series vs closed form", c7_series_closed_agreement),
    ("8 divergence witness", c8_divergence_witness),
    ("9 threshold pipeline", c9_threshold_pipeline),
    ("10 CLI contract", c10_cli_contract),
]


@pytest.mark.parametrize("name, check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, check):
    ok, detail = check()
    print(f"\n{'PASS' if ok else 'FAIL'} criterion {name}: {detail}")
    assert ok, detail


if __name__ == "__main__":
    for name, check in CRITERIA:
        ok, detail = check()
        print(f"{'PASS' if ok else 'FAIL'} criterion {name}: {detail}")
