"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines as they complete.  Heavy experiment runs are cached in module-scoped
fixtures and reused by the determinism criterion.
"""

import json
import math
import time
from fractions import Fraction
from math import factorial

import pytest

from frobstat import experiments as ex
from frobstat.ff import make_field
from frobstat.frob import type_from_point_counts, type_from_univariate
from frobstat.mpoly import BiPoly
from frobstat.groups import (
    GroupShape,
    full_cycle_probability,
    predict,
    wreath_cycle_counts,
    wreath_oracle,
)
from frobstat.poly import Poly, count_roots_in_extension, is_squarefree
from frobstat.rng import SplitMix64
from frobstat.stats import tv_sampling_se

X2_PLUS_T = {(0, 2): 1, (1, 0): 1}
X2_PLUS_T2 = {(0, 2): 1, (2, 0): 1}


def _line(num: int, ok: bool, desc: str) -> None:
    print(f"[ACCEPTANCE {num}] {'PASS' if ok else 'FAIL'} {desc}", flush=True)


def _strip_runtime(obj):
    if isinstance(obj, dict):
        return {k: _strip_runtime(v) for k, v in obj.items() if k != "runtime_ms"}
    if isinstance(obj, list):
        return [_strip_runtime(v) for v in obj]
    return obj


def _stable_json(report) -> str:
    return json.dumps(_strip_runtime(report.to_dict()))


# --- cached heavy runs -------------------------------------------------------


@pytest.fixture(scope="module")
def scan_run():
    start = time.perf_counter()
    report = ex.run_q_scan([X2_PLUS_T], 2, [13, 17, 29, 37, 53], seed=0)
    return report, time.perf_counter() - start


@pytest.fixture(scope="module")
def wreath_runs():
    start = time.perf_counter()
    reports = {}
    for q in (11, 19, 23):
        field = make_field(q)
        cfg = ex.BHConfig(
            field=field,
            polys=(BiPoly.from_int_terms(field, X2_PLUS_T2),),
            n=2,
            seed=2024,
        )
        reports[q] = ex.run_bateman_horn(cfg)
    return reports, time.perf_counter() - start


@pytest.fixture(scope="module")
def intersect_runs():
    start = time.perf_counter()
    reports = {
        q: ex.run_plane_intersections(2, 2, q, samples=20000, seed=777)
        for q in (11, 23, 47)
    }
    return reports, time.perf_counter() - start


@pytest.fixture(scope="module")
def galois_runs():
    start = time.perf_counter()
    positive = ex.run_galois_detect(
        [[0, 0, 0, 0, 0, 1], [0, 1], [1]], [31, 41], samples=20000, seed=99, alpha=1e-3
    )
    negative = ex.run_galois_detect(
        [[0, 0, 0, 0, 1], [0, 0, 1], [1]], [31], samples=20000, seed=99, alpha=1e-3
    )
    return positive, negative, time.perf_counter() - start


# --- criteria ----------------------------------------------------------------


def test_criterion_1_wreath_combinatorics():
    start = time.perf_counter()
    ok = True
    for d, nu in ((2, 2), (3, 2), (2, 3), (4, 2)):
        counts, total = wreath_cycle_counts(d, nu)
        ok &= total == factorial(d) ** nu
        ok &= counts[(d * nu,)] == factorial(d) ** nu // d
        marginal = {label[0]: p for label, p in predict(GroupShape((d,), (nu,))).items()}
        ok &= marginal == wreath_oracle(d, nu)
    elapsed = time.perf_counter() - start
    ok &= elapsed < 1.0
    _line(1, ok, f"coset full-cycle counts and oracle agreement ({elapsed:.2f}s)")
    assert ok


def test_criterion_2_full_cycle_probability():
    start = time.perf_counter()
    ok = True
    degrees = range(1, 7)
    splittings = range(1, 4)
    import itertools

    for m in (1, 2, 3):
        for ds in itertools.product(degrees, repeat=m):
            for vs in itertools.product(splittings, repeat=m):
                shape = GroupShape(ds, vs)
                want = Fraction(1)
                for d in ds:
                    want /= d
                if full_cycle_probability(shape) != want:
                    ok = False
    elapsed = time.perf_counter() - start
    ok &= elapsed < 1.0
    _line(2, ok, f"full-cycle probability = prod 1/d_i over all small shapes ({elapsed:.2f}s)")
    assert ok


def test_criterion_3_cross_oracle():
    start = time.perf_counter()
    failures = 0
    for p in (2, 3, 5, 7):
        field = make_field(p)
        rng = SplitMix64(p * 7919)
        produced = 0
        while produced < 1000:
            d = 1 + rng.randbelow(8)
            f = Poly(field, [rng.randbelow(p) for _ in range(d)] + [1])
            if not is_squarefree(f):
                continue
            produced += 1
            counts = [count_roots_in_extension(f, k) for k in range(1, d + 1)]
            if type_from_univariate(f, d) != type_from_point_counts(counts, d):
                failures += 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 30.0
    _line(3, ok, f"DDF vs point-count inversion on 4000 polynomials ({elapsed:.1f}s)")
    assert ok


def test_criterion_4_bateman_horn_equidistribution(scan_run):
    report, elapsed = scan_run
    ok = True
    details = []
    for pt in report.points:
        bound = 2.0 / math.sqrt(pt.q)
        details.append(f"q={pt.q}: tv={pt.tv:.4f}<={bound:.4f}")
        ok &= pt.tv <= bound
    ok &= report.fit.slope <= -0.35
    ok &= elapsed < 120.0
    _line(
        4,
        ok,
        f"exhaustive x^2+t scan: {'; '.join(details)}; slope={report.fit.slope:.3f}<=-0.35 "
        f"({elapsed:.1f}s)",
    )
    assert ok


def test_criterion_5_wreath_end_to_end(wreath_runs):
    reports, elapsed = wreath_runs
    ok = True
    details = []
    for q, report in reports.items():
        bound = 2.0 / math.sqrt(q)
        ok &= report.shape.splittings == (2,)
        ok &= set(report.counts) <= {((2, 2),), ((4,),)}
        ok &= report.predicted == {((2, 2),): Fraction(1, 2), ((4,),): Fraction(1, 2)}
        ok &= report.tv <= bound
        details.append(f"q={q}: nu=2, tv={report.tv:.4f}<={bound:.4f}")
    ok &= elapsed < 60.0
    _line(5, ok, f"x^2+t^2 wreath case: {'; '.join(details)} ({elapsed:.1f}s)")
    assert ok


def test_criterion_6_plane_intersections(intersect_runs):
    reports, elapsed = intersect_runs
    ok = True
    details = []
    for q, report in reports.items():
        se = tv_sampling_se(report.predicted, report.accepted)
        bound = 2.0 / math.sqrt(q) + 3.0 * se
        ok &= report.tv <= bound
        details.append(f"q={q}: tv={report.tv:.4f}<={bound:.4f}")
    ok &= elapsed < 120.0
    _line(6, ok, f"degree-(2,2) intersections: {'; '.join(details)} ({elapsed:.1f}s)")
    assert ok


def test_criterion_7_galois_detector(galois_runs):
    positive, negative, elapsed = galois_runs
    ok = positive.verdict == "consistent with S_5"
    ok &= negative.verdict == "rejects S_4"
    ok &= negative.witnesses[0]["label"] == [[3, 1]]
    ok &= negative.witnesses[0]["observed_freq"] == 0.0
    ok &= abs(negative.witnesses[0]["predicted"] - 1 / 3) < 1e-12
    ok &= elapsed < 60.0
    _line(
        7,
        ok,
        f"trinomial verdict '{positive.verdict}', biquadratic verdict "
        f"'{negative.verdict}' ({elapsed:.1f}s)",
    )
    assert ok


def test_criterion_8_determinism(scan_run, wreath_runs, intersect_runs, galois_runs):
    start = time.perf_counter()
    ok = True

    scan_report, _ = scan_run
    for workers in (1, 4):
        again = ex.run_q_scan([X2_PLUS_T], 2, [13, 17, 29, 37, 53], seed=0, workers=workers)
        ok &= _stable_json(again) == _stable_json(scan_report)

    wreath_reports, _ = wreath_runs
    for q, report in wreath_reports.items():
        field = make_field(q)
        for workers in (1, 4):
            cfg = ex.BHConfig(
                field=field,
                polys=(BiPoly.from_int_terms(field, X2_PLUS_T2),),
                n=2,
                seed=2024,
                workers=workers,
            )
            ok &= _stable_json(ex.run_bateman_horn(cfg)) == _stable_json(report)

    intersect_reports, _ = intersect_runs
    for q, report in intersect_reports.items():
        for workers in (1, 4):
            again = ex.run_plane_intersections(
                2, 2, q, samples=20000, seed=777, workers=workers
            )
            ok &= _stable_json(again) == _stable_json(report)

    positive, negative, _ = galois_runs
    for workers in (1, 4):
        again_pos = ex.run_galois_detect(
            [[0, 0, 0, 0, 0, 1], [0, 1], [1]], [31, 41], samples=20000, seed=99,
            alpha=1e-3, workers=workers,
        )
        again_neg = ex.run_galois_detect(
            [[0, 0, 0, 0, 1], [0, 0, 1], [1]], [31], samples=20000, seed=99,
            alpha=1e-3, workers=workers,
        )
        ok &= _stable_json(again_pos) == _stable_json(positive)
        ok &= _stable_json(again_neg) == _stable_json(negative)

    elapsed = time.perf_counter() - start
    _line(8, ok, f"byte-identical reports across reruns and 1 vs 4 workers ({elapsed:.1f}s)")
    assert ok
