"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The exhaustive sweep (all connected labelled graphs with n <= 7) backs most
criteria and runs once as a module fixture; expect the full module to take on
the order of an hour on two cores.
"""

import math
import os
import statistics
import time
from multiprocessing import get_context

import pytest

from hampath.cli import _bench_once
from hampath.generators import GenSpec
from hampath.sweep import randomized_check, run_sweep

N_MAX = 7
RANDOM_COUNT = 10_000
RANDOM_SIZES = (8, 10, 12)
RANDOM_CLASSES = (3, 4, 5)


def _line(num: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {detail}", flush=True)


@pytest.fixture(scope="module")
def sweep_stats():
    threads = max(os.cpu_count() or 1, 1)
    t0 = time.time()
    stats = run_sweep(N_MAX, threads=threads)
    print(f"\n[sweep n<={N_MAX}: {stats.graphs} graphs, {stats.checks} checks, "
          f"{time.time()-t0:.0f}s on {threads} workers]", flush=True)
    return stats


def _mismatch_total(stats, prefix: str) -> int:
    return sum(v for k, v in stats.mismatches.items() if k.startswith(prefix))


def test_criterion_1_exhaustive_3k1(sweep_stats):
    bad = _mismatch_total(sweep_stats, "ham3")
    checks = sum(v for k, v in sweep_stats.counts.items() if k.startswith("ham3"))
    ok = bad == 0 and checks > 0
    _line(1, ok, f"3K1-free sweep n<={N_MAX}: {checks} decisions, {bad} mismatches")
    assert ok
    for ex in sweep_stats.examples:
        assert not ex.startswith("ham3"), ex


def test_criterion_2_exhaustive_4k1(sweep_stats):
    bad = _mismatch_total(sweep_stats, "ham4")
    checks = sum(v for k, v in sweep_stats.counts.items() if k.startswith("ham4"))
    moreover = sweep_stats.moreover_failures
    ok = bad == 0 and moreover == 0 and checks > 0
    _line(
        2,
        ok,
        f"4K1-free sweep n<={N_MAX}: {checks} decisions, {bad} mismatches, "
        f"{moreover} missing size-2 covers on No",
    )
    assert ok


def test_criterion_3_exhaustive_5k1(sweep_stats):
    bad = _mismatch_total(sweep_stats, "ham5")
    checks = sum(v for k, v in sweep_stats.counts.items() if k.startswith("ham5"))
    ok = bad == 0 and checks > 0
    _line(3, ok, f"5K1-free sweep n<={N_MAX}: {checks} decisions, {bad} mismatches")
    assert ok


def _random_job(args):
    n, k, count, base_seed = args
    return randomized_check(n, k, count, base_seed=base_seed)


def test_criterion_4_randomized_cross_check():
    shard = 1250
    jobs = []
    for k in RANDOM_CLASSES:
        for n in RANDOM_SIZES:
            base = k * 1_000_000 + n * 10_000
            for off in range(0, RANDOM_COUNT, shard):
                jobs.append((n, k, shard, base + off))
    mismatches = 0
    graphs = checks = exceeded = calls = 0
    witness = reval = 0
    ctx = get_context("fork")
    with ctx.Pool(max(os.cpu_count() or 1, 1)) as pool:
        for st in pool.imap_unordered(_random_job, jobs):
            graphs += st.graphs
            checks += st.checks
            mismatches += sum(st.mismatches.values())
            exceeded += st.budget_exceeded
            calls += st.oracle_calls
            witness += st.witness_failures
            reval += st.revalidation_failures
    rate = exceeded / calls if calls else 0.0
    ok = mismatches == 0 and witness == 0 and reval == 0 and rate < 0.01
    _line(
        4,
        ok,
        f"randomized {graphs} graphs ({checks} checks): {mismatches} mismatches, "
        f"budget-exceeded rate {rate:.4%}",
    )
    assert ok
    assert graphs == RANDOM_COUNT * len(RANDOM_SIZES) * len(RANDOM_CLASSES)


def test_criterion_5_witness_validity(sweep_stats):
    ok = sweep_stats.witness_failures == 0
    _line(5, ok, f"witness validity across sweep: {sweep_stats.witness_failures} failures")
    assert ok


def test_criterion_6_certificate_revalidation(sweep_stats):
    ok = sweep_stats.revalidation_failures == 0
    _line(6, ok, f"obstacle re-validation across sweep: {sweep_stats.revalidation_failures} failures")
    assert ok


def test_criterion_7_pair_cut_equivalence(sweep_stats):
    checked = sweep_stats.counts.get("pair-cut-equivalence", 0)
    bad = sweep_stats.equivalence_counterexamples
    ok = bad == 0 and checked > 0
    _line(7, ok, f"minimum-cut vs any-cut formulations: {checked} pairs, {bad} counterexamples")
    assert ok


def test_criterion_8_polynomial_scaling():
    sizes = (500, 1000, 2000, 4000)
    rows = []
    for n in sizes:
        med, verdict = _bench_once(GenSpec(n=n, k=4, seed=11, extra_edge_prob=0.1), repeats=3)
        rows.append((n, med))
        assert verdict == "YES"
    xs = [math.log(n) for n, _ in rows]
    ys = [math.log(ms) for _, ms in rows]
    mean_x, mean_y = statistics.fmean(xs), statistics.fmean(ys)
    slope = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys)) / sum(
        (x - mean_x) ** 2 for x in xs
    )
    at_2000 = dict(rows)[2000]
    ok = slope <= 3.5 and at_2000 < 30_000
    _line(
        8,
        ok,
        "scaling: "
        + ", ".join(f"n={n}: {ms:.0f}ms" for n, ms in rows)
        + f"; loglog slope {slope:.2f} (<=3.5), t(2000)={at_2000/1000:.2f}s (<30s)",
    )
    assert ok


def test_criterion_9_dense_fast_paths(sweep_stats):
    free = sweep_stats.counts.get("fast.free-path", 0)
    pairs = sweep_stats.counts.get("fast.connected-pair", 0)
    bad = sweep_stats.fast_path_failures
    ok = bad == 0 and free > 0 and pairs > 0
    _line(
        9,
        ok,
        f"connectivity fast paths: {free} free constructions, {pairs} pair constructions, "
        f"{bad} failures",
    )
    assert ok
