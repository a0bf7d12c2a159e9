from hampath.sweep import SweepStats, randomized_check, run_sweep, sweep_range


def test_small_sweep_is_clean():
    stats = run_sweep(4)
    assert stats.clean
    assert stats.graphs == 1 + 1 + 4 + 38
    assert stats.mismatches == {}


def test_sweep_merge():
    a = sweep_range(4, 0, 32)
    b = sweep_range(4, 32, 64)
    whole = sweep_range(4, 0, 64)
    a.merge(b)
    assert a.graphs == whole.graphs
    assert a.checks == whole.checks
    assert a.counts == whole.counts


def test_parallel_sweep_matches_serial():
    serial = run_sweep(5, threads=1)
    parallel = run_sweep(5, threads=2)
    assert serial.graphs == parallel.graphs
    assert serial.checks == parallel.checks
    assert serial.counts == parallel.counts
    assert parallel.clean


def test_report_lines_mention_failures():
    stats = SweepStats()
    stats.witness_failures = 2
    lines = "\n".join(stats.report_lines())
    assert "WITNESS FAILURES: 2" in lines
    assert not stats.clean


def test_randomized_check_small():
    st = randomized_check(8, 4, 15, base_seed=5)
    assert st.clean and st.graphs == 15
    assert st.exceeded_rate == 0.0
