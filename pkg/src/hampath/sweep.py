"""Exhaustive oracle-equivalence sweep over all connected labelled graphs.

For every graph up to n vertices this drives each theorem battery against the
DP oracle tables, validates every witness, re-validates every obstacle, tests
the endpoint-pair cut formulations against each other, and exercises the
connectivity-vs-independence fast paths.  Used by the CLI sweep command and
the acceptance suite; partitionable over edge-code ranges for multiprocessing.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import get_context

from . import ham3, ham4, ham5
from .connectivity import _two_cut_pairs, articulation_mask, comps_minus_cached, mask_of
from .crossover import ce_hamiltonian_path, ham_path_between
from .generators import corpus_line, enumerate_connected_stats, graph_from_code
from .graph import Graph, bits, is_cover_valid, is_path_valid
from .independence import ClassLabel
from .oracle import oracle_tables

__all__ = ["SweepStats", "check_graph", "sweep_range", "run_sweep", "ALL_CHECKS"]

ALL_CHECKS = frozenset({"ham3", "ham4", "ham5", "pair-cut-equivalence", "dense-fast-paths"})

_MAX_EXAMPLES = 12


@dataclass
class SweepStats:
    graphs: int = 0
    checks: int = 0
    counts: Counter = field(default_factory=Counter)
    mismatches: Counter = field(default_factory=Counter)
    witness_failures: int = 0
    revalidation_failures: int = 0
    moreover_failures: int = 0
    equivalence_counterexamples: int = 0
    fast_path_failures: int = 0
    examples: list = field(default_factory=list)

    def merge(self, other: "SweepStats") -> None:
        self.graphs += other.graphs
        self.checks += other.checks
        self.counts.update(other.counts)
        self.mismatches.update(other.mismatches)
        self.witness_failures += other.witness_failures
        self.revalidation_failures += other.revalidation_failures
        self.moreover_failures += other.moreover_failures
        self.equivalence_counterexamples += other.equivalence_counterexamples
        self.fast_path_failures += other.fast_path_failures
        self.examples.extend(other.examples[: max(0, _MAX_EXAMPLES - len(self.examples))])

    @property
    def clean(self) -> bool:
        return (
            not self.mismatches
            and not self.witness_failures
            and not self.revalidation_failures
            and not self.moreover_failures
            and not self.equivalence_counterexamples
            and not self.fast_path_failures
        )

    def report_lines(self) -> list[str]:
        out = [f"graphs={self.graphs} checks={self.checks}"]
        for key in sorted(self.counts):
            out.append(f"  {key}: {self.counts[key]}")
        for key in sorted(self.mismatches):
            out.append(f"  MISMATCH {key}: {self.mismatches[key]}")
        if self.witness_failures:
            out.append(f"  WITNESS FAILURES: {self.witness_failures}")
        if self.revalidation_failures:
            out.append(f"  REVALIDATION FAILURES: {self.revalidation_failures}")
        if self.moreover_failures:
            out.append(f"  SIZE-2 COVER FAILURES: {self.moreover_failures}")
        if self.equivalence_counterexamples:
            out.append(f"  PAIR-CUT EQUIVALENCE COUNTEREXAMPLES: {self.equivalence_counterexamples}")
        if self.fast_path_failures:
            out.append(f"  DENSE FAST-PATH FAILURES: {self.fast_path_failures}")
        for ex in self.examples:
            out.append(f"  example: {ex}")
        return out


def _note(stats: SweepStats, g: Graph, tag: str, detail: str = "") -> None:
    if len(stats.examples) < _MAX_EXAMPLES:
        stats.examples.append(f"{tag} {detail} {corpus_line(g)}")


def _seed_class(g: Graph, alpha: int) -> None:
    bound = max(alpha, 2) if alpha <= 4 else None
    label = ClassLabel(alpha_bound=bound, witness=(0,) * alpha)
    g._cache["classlabel"] = label
    g._cache["connected"] = True


def _connectivity_exact(g: Graph) -> int:
    """Exact vertex connectivity using the cached articulation/2-cut data."""
    if g.n <= 1:
        return 0
    if all(g.adj[v] == g.full_mask ^ (1 << v) for v in range(g.n)):
        return g.n - 1
    if articulation_mask(g):
        return 1
    if _two_cut_pairs(g):
        return 2
    for size in range(3, g.n - 1):
        for combo in itertools.combinations(range(g.n), size):
            if len(comps_minus_cached(g, mask_of(combo))) >= 2:
                return size
    return g.n - 1


def _check_ham3(g: Graph, tab, stats: SweepStats) -> None:
    n = g.n
    for u in range(n):
        got = ham3.decide_path_from(g, u)
        stats.checks += 1
        stats.counts["ham3.from"] += 1
        if got.yes != bool(tab.ham_from[u]):
            stats.mismatches["ham3.from"] += 1
            _note(stats, g, "ham3.from", f"u={u}")
        if got.yes:
            if not (is_path_valid(g, got.path, True) and got.path[0] == u):
                stats.witness_failures += 1
                _note(stats, g, "ham3.from-witness", f"u={u}")
        elif not ham3.revalidate_obstacle(g, got.obstacle, u):
            stats.revalidation_failures += 1
            _note(stats, g, "ham3.from-revalidate", f"u={u}")
    for u, v in itertools.permutations(range(n), 2):
        got = ham3.decide_path_uv(g, u, v)
        stats.checks += 1
        stats.counts["ham3.uv"] += 1
        if got.yes != bool(tab.ham_uv[u][v]):
            stats.mismatches["ham3.uv"] += 1
            _note(stats, g, "ham3.uv", f"u={u} v={v}")
        if got.yes:
            ok = (
                is_path_valid(g, got.path, True)
                and got.path[0] == u
                and got.path[-1] == v
            )
            if not ok:
                stats.witness_failures += 1
                _note(stats, g, "ham3.uv-witness", f"u={u} v={v}")
        elif not ham3.revalidate_obstacle(g, got.obstacle, u, v):
            stats.revalidation_failures += 1
            _note(stats, g, "ham3.uv-revalidate", f"u={u} v={v}")
        cover = ham3.path_cover_uv(g, u, v)
        stats.checks += 1
        stats.counts["ham3.pc"] += 1
        if not is_cover_valid(g, cover, starts=(u, v)):
            stats.witness_failures += 1
            _note(stats, g, "ham3.pc-witness", f"u={u} v={v}")
        if not tab.pc_uv[u][v]:
            stats.mismatches["ham3.pc"] += 1
            _note(stats, g, "ham3.pc-oracle", f"u={u} v={v}")


def _check_pair_cut_equivalence(g: Graph, stats: SweepStats) -> None:
    """Minimum-cut vs any-cut formulation of the endpoint-pair condition."""
    n = g.n
    art = articulation_mask(g)
    kappa_is_2 = not art and bool(_two_cut_pairs(g))
    for u, v in itertools.combinations(range(n), 2):
        if art >> u & 1 or art >> v & 1:
            continue
        same_side = False
        for x in bits(art):
            for c in comps_minus_cached(g, 1 << x):
                if c >> u & 1 and c >> v & 1:
                    same_side = True
        if same_side:
            continue
        pair = (1 << u) | (1 << v)
        is_cut = len(comps_minus_cached(g, pair)) >= 2
        is_minimum_cut = is_cut and (kappa_is_2 if not art else False)
        stats.checks += 1
        stats.counts["pair-cut-equivalence"] += 1
        if is_cut != is_minimum_cut:
            stats.equivalence_counterexamples += 1
            _note(stats, g, "pair-cut-equivalence", f"u={u} v={v}")


def _check_ham4(g: Graph, tab, stats: SweepStats) -> None:
    n = g.n
    got = ham4.decide_ham_path(g)
    stats.checks += 1
    stats.counts["ham4.ham"] += 1
    if got.yes != tab.ham_any:
        stats.mismatches["ham4.ham"] += 1
        _note(stats, g, "ham4.ham")
    if got.yes:
        if not is_path_valid(g, got.path, True):
            stats.witness_failures += 1
            _note(stats, g, "ham4.ham-witness")
    else:
        if not (got.cover and len(got.cover) == 2 and is_cover_valid(g, got.cover)):
            stats.moreover_failures += 1
            _note(stats, g, "ham4.ham-cover")
        if not ham4.revalidate_obstacle(g, got.obstacle):
            stats.revalidation_failures += 1
            _note(stats, g, "ham4.ham-revalidate")
    for u in range(n):
        got = ham4.decide_path_from(g, u)
        stats.checks += 1
        stats.counts["ham4.from"] += 1
        if got.yes != bool(tab.ham_from[u]):
            stats.mismatches["ham4.from"] += 1
            _note(stats, g, "ham4.from", f"u={u}")
        if got.yes:
            if not (is_path_valid(g, got.path, True) and got.path[0] == u):
                stats.witness_failures += 1
                _note(stats, g, "ham4.from-witness", f"u={u}")
        elif not ham4.revalidate_obstacle(g, got.obstacle, u):
            stats.revalidation_failures += 1
            _note(stats, g, "ham4.from-revalidate", f"u={u}")
    for u, v in itertools.permutations(range(n), 2):
        got = ham4.path_cover_uv(g, u, v)
        stats.checks += 1
        stats.counts["ham4.pc"] += 1
        if got.yes != bool(tab.pc_uv[u][v]):
            stats.mismatches["ham4.pc"] += 1
            _note(stats, g, "ham4.pc", f"u={u} v={v}")
        if got.yes:
            if not is_cover_valid(g, got.cover, starts=(u, v)):
                stats.witness_failures += 1
                _note(stats, g, "ham4.pc-witness", f"u={u} v={v}")
        elif not ham4.revalidate_obstacle(g, got.obstacle, u, v):
            stats.revalidation_failures += 1
            _note(stats, g, "ham4.pc-revalidate", f"u={u} v={v}")


def _check_ham5(g: Graph, tab, stats: SweepStats, also_ham4: bool) -> None:
    got = ham5.decide_ham_path(g)
    stats.checks += 1
    stats.counts["ham5.ham"] += 1
    if got.yes != tab.ham_any:
        stats.mismatches["ham5.ham"] += 1
        _note(stats, g, "ham5.ham")
    if got.yes:
        if not is_path_valid(g, got.path, True):
            stats.witness_failures += 1
            _note(stats, g, "ham5.ham-witness")
    elif not ham5.revalidate_obstacle(g, got.obstacle):
        stats.revalidation_failures += 1
        _note(stats, g, "ham5.ham-revalidate")
    if also_ham4:
        agree = got.yes == ham4.decide_ham_path(g).yes
        stats.checks += 1
        stats.counts["ham5.agrees-ham4"] += 1
        if not agree:
            stats.mismatches["ham5.agrees-ham4"] += 1
            _note(stats, g, "ham5.agrees-ham4")


def _check_dense_fast_paths(g: Graph, alpha: int, tab, stats: SweepStats) -> None:
    """Connectivity-vs-independence fast paths: free path, then all pairs."""
    kappa = _connectivity_exact(g)
    if alpha < kappa + 2:
        stats.checks += 1
        stats.counts["fast.free-path"] += 1
        try:
            path = ce_hamiltonian_path(g, kappa, alpha)
            ok = is_path_valid(g, path, require_hamiltonian=True)
        except Exception:
            ok = False
        if not ok or not tab.ham_any:
            stats.fast_path_failures += 1
            _note(stats, g, "fast.free-path", f"kappa={kappa} alpha={alpha}")
    if alpha < kappa and g.n >= 2:
        for u, v in itertools.permutations(range(g.n), 2):
            stats.checks += 1
            stats.counts["fast.connected-pair"] += 1
            try:
                path = ham_path_between(g, u, v, kappa, alpha)
                ok = (
                    is_path_valid(g, path, require_hamiltonian=True)
                    and path[0] == u
                    and path[-1] == v
                )
            except Exception:
                ok = False
            if not ok or not tab.ham_uv[u][v]:
                stats.fast_path_failures += 1
                _note(stats, g, "fast.connected-pair", f"u={u} v={v} kappa={kappa}")


def check_graph(g: Graph, alpha: int, stats: SweepStats, checks=ALL_CHECKS) -> None:
    """Run every applicable battery for one connected graph."""
    stats.graphs += 1
    _seed_class(g, alpha)
    tab = oracle_tables(g)
    if alpha <= 2 and "ham3" in checks:
        _check_ham3(g, tab, stats)
        if "pair-cut-equivalence" in checks:
            _check_pair_cut_equivalence(g, stats)
    if alpha <= 3 and "ham4" in checks:
        _check_ham4(g, tab, stats)
    if alpha <= 4 and "ham5" in checks:
        _check_ham5(g, tab, stats, also_ham4=alpha <= 3)
    if "dense-fast-paths" in checks:
        _check_dense_fast_paths(g, alpha, tab, stats)


def sweep_range(n: int, lo: int, hi: int, checks=ALL_CHECKS) -> SweepStats:
    stats = SweepStats()
    for code, alpha in enumerate_connected_stats(n, lo, hi):
        g = graph_from_code(n, code)
        check_graph(g, alpha, stats, checks)
    return stats


def _worker(args):
    n, lo, hi, checks = args
    return sweep_range(n, lo, hi, frozenset(checks))


def run_sweep(n_max: int, threads: int = 1, checks=ALL_CHECKS, progress=None) -> SweepStats:
    """Sweep all connected graphs with 1 <= n <= n_max; optionally parallel."""
    if not 1 <= n_max <= 7:
        raise ValueError("sweep supports n_max between 1 and 7")
    total = SweepStats()
    for n in range(1, n_max + 1):
        top = 1 << (n * (n - 1) // 2)
        if threads <= 1 or top < (1 << 12):
            part = sweep_range(n, 0, top, checks)
            total.merge(part)
        else:
            pieces = threads * 8
            step = (top + pieces - 1) // pieces
            jobs = [
                (n, lo, min(lo + step, top), tuple(checks)) for lo in range(0, top, step)
            ]
            ctx = get_context("fork")
            with ctx.Pool(threads) as pool:
                for part in pool.imap_unordered(_worker, jobs):
                    total.merge(part)
                    if progress is not None:
                        progress(n, total)
        if progress is not None:
            progress(n, total)
    return total


# -- randomized cross-check (seeded corpora at n beyond the exhaustive range) ----------


@dataclass
class RandomStats:
    graphs: int = 0
    checks: int = 0
    mismatches: Counter = field(default_factory=Counter)
    witness_failures: int = 0
    revalidation_failures: int = 0
    budget_exceeded: int = 0
    oracle_calls: int = 0
    examples: list = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.mismatches and not self.witness_failures and not self.revalidation_failures

    @property
    def exceeded_rate(self) -> float:
        return self.budget_exceeded / self.oracle_calls if self.oracle_calls else 0.0


def _pc_from_ends(ends, n: int, u: int, v: int) -> bool:
    import numpy as np

    size = 1 << n
    idx = np.arange(size, dtype=np.int64)
    sel = ((idx >> u) & 1 == 1) & ((idx >> v) & 1 == 0) & (idx != size - 1)
    masks = idx[sel]
    a = (ends[masks] >> u) & 1
    b = (ends[(size - 1) ^ masks] >> v) & 1
    return bool(np.any((a == 1) & (b == 1)))


def randomized_check(
    n: int,
    k: int,
    count: int,
    base_seed: int = 0,
    extra_edge_prob: float = 0.1,
    node_limit: int = 500_000,
    pair_sample: int = 10,
) -> RandomStats:
    """Seeded random graphs vs the oracle; class-appropriate decision set.

    The free Hamiltonian decision is checked against the budgeted backtracking
    oracle (budget overruns are counted, not failed); start-vertex and cover
    decisions are checked against the subset DP.
    """
    import numpy as np

    from . import _kernels
    from .generators import GenSpec, random_kk1_free
    from .oracle import OracleBudget, OracleBudgetExceeded, brute_ham_path, ham_path_exists

    stats = RandomStats()
    kern = _kernels.get()
    for i in range(count):
        spec = GenSpec(n=n, k=k, seed=base_seed + i, extra_edge_prob=extra_edge_prob)
        g = random_kk1_free(spec, connect_repair=True)
        stats.graphs += 1
        ends = kern.ham_ends(g.adj_array())
        full = g.full_mask
        from_mask = int(ends[full])
        rng = np.random.Generator(np.random.Philox(base_seed + i + (1 << 40)))
        pairs = []
        for a in rng.integers(0, n, size=pair_sample):
            b = int(rng.integers(0, n - 1))
            if b >= int(a):
                b += 1
            pairs.append((int(a), b))

        def compare(tag, got_yes, want_yes):
            stats.checks += 1
            if got_yes != want_yes:
                stats.mismatches[tag] += 1
                if len(stats.examples) < _MAX_EXAMPLES:
                    stats.examples.append(f"{tag} {spec} {corpus_line(g)}")

        # free decision vs the budgeted backtracking oracle
        module = {3: ham4, 4: ham4, 5: ham5}[k]
        got = module.decide_ham_path(g)
        budget = OracleBudget(node_limit=node_limit)
        stats.oracle_calls += 1
        try:
            want = brute_ham_path(g, budget=budget) is not None
            compare(f"k{k}.ham", got.yes, want)
        except OracleBudgetExceeded:
            stats.budget_exceeded += 1
        if got.yes:
            if not is_path_valid(g, got.path, True):
                stats.witness_failures += 1
        elif k == 5:
            if not ham5.revalidate_obstacle(g, got.obstacle):
                stats.revalidation_failures += 1
        else:
            if not ham4.revalidate_obstacle(g, got.obstacle):
                stats.revalidation_failures += 1

        if k == 3:
            for u in range(n):
                got = ham3.decide_path_from(g, u)
                compare("k3.from", got.yes, bool(from_mask >> u & 1))
                if got.yes and not (is_path_valid(g, got.path, True) and got.path[0] == u):
                    stats.witness_failures += 1
            for u, v in pairs:
                got = ham3.decide_path_uv(g, u, v)
                compare("k3.uv", got.yes, ham_path_exists(g, u, v))
                if got.yes and not (
                    is_path_valid(g, got.path, True)
                    and got.path[0] == u
                    and got.path[-1] == v
                ):
                    stats.witness_failures += 1
                cover = ham3.path_cover_uv(g, u, v)
                if not is_cover_valid(g, cover, starts=(u, v)):
                    stats.witness_failures += 1
                compare("k3.pc", True, _pc_from_ends(ends, n, u, v))
        elif k == 4:
            for u in range(n):
                got = ham4.decide_path_from(g, u)
                compare("k4.from", got.yes, bool(from_mask >> u & 1))
                if got.yes and not (is_path_valid(g, got.path, True) and got.path[0] == u):
                    stats.witness_failures += 1
                elif not got.yes and not ham4.revalidate_obstacle(g, got.obstacle, u):
                    stats.revalidation_failures += 1
            for u, v in pairs:
                got = ham4.path_cover_uv(g, u, v)
                compare("k4.pc", got.yes, _pc_from_ends(ends, n, u, v))
                if got.yes and not is_cover_valid(g, got.cover, starts=(u, v)):
                    stats.witness_failures += 1
                elif not got.yes and not ham4.revalidate_obstacle(g, got.obstacle, u, v):
                    stats.revalidation_failures += 1
    return stats
