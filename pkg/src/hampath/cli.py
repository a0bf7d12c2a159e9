"""Command-line front end.

Subcommands: ``decide`` (structural decision with certificate report),
``sweep`` (exhaustive oracle-equivalence run), ``gen`` (seeded corpora) and
``bench`` (scaling benchmark with kernel comparison).

Exit codes for ``decide``: 0 = Yes, 1 = No, 2 = unsupported class or oracle
fallback used, >= 3 = error.  The report is line-oriented ``key: value`` text
under a fixed schema; timing comes last and is not comparison-relevant.
"""

from __future__ import annotations

import argparse
import hashlib
import statistics
import sys
import time

from . import _kernels, ham3, ham4, ham5
from .connectivity import components_masks
from .generators import GenSpec, corpus_line, random_kk1_free
from .graph import Graph, GraphError, bits, is_cover_valid, is_path_valid
from .independence import classify
from .io import load_graph
from .oracle import OracleBudget, OracleBudgetExceeded, brute_ham_path, brute_pc_uv
from .sweep import ALL_CHECKS, run_sweep
from .verdicts import Verdict, WrongClassError

SCHEMA = "hampath-report-1"

EXIT_YES = 0
EXIT_NO = 1
EXIT_FALLBACK = 2
EXIT_ERROR = 3


def _digest(g: Graph) -> str:
    payload = f"{g.n};" + ",".join(f"{a}-{b}" for a, b in g.edges())
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


class Report:
    def __init__(self):
        self.lines: list[str] = [f"schema: {SCHEMA}"]

    def add(self, key: str, value) -> None:
        if isinstance(value, (list, tuple)):
            value = " ".join(str(x) for x in value)
        self.lines.append(f"{key}: {value}")

    def emit(self) -> None:
        print("\n".join(self.lines))


def _revalidate(g: Graph, module, verdict: Verdict, u=None, v=None) -> bool:
    if verdict.yes:
        if verdict.path is not None:
            return is_path_valid(g, verdict.path, require_hamiltonian=True)
        return is_cover_valid(g, verdict.cover)
    if verdict.obstacle is None:
        return False
    if module is ham3:
        return ham3.revalidate_obstacle(g, verdict.obstacle, u, v)
    if module is ham4:
        return ham4.revalidate_obstacle(g, verdict.obstacle, u, v)
    return ham5.revalidate_obstacle(g, verdict.obstacle)


def _emit_verdict(report: Report, g: Graph, module, verdict: Verdict, u=None, v=None) -> int:
    report.add("verdict", "YES" if verdict.yes else "NO")
    if verdict.path is not None:
        report.add("witness-path", verdict.path)
    if verdict.cover is not None:
        for i, leg in enumerate(verdict.cover, 1):
            report.add(f"witness-cover-{i}", leg)
    if verdict.obstacle is not None:
        ob = verdict.obstacle
        report.add("obstacle-kind", ob.kind)
        report.add("obstacle-vertices", ob.vertices)
        if ob.cut is not None:
            report.add("obstacle-cut", ob.cut)
        if ob.components is not None:
            for i, comp in enumerate(ob.components, 1):
                report.add(f"obstacle-component-{i}", comp)
    report.add("revalidated", str(_revalidate(g, module, verdict, u, v)).lower())
    return EXIT_YES if verdict.yes else EXIT_NO


def _disconnected_report(report: Report, g: Graph) -> int:
    comps = components_masks(g, 0)
    report.add("verdict", "NO")
    report.add("obstacle-kind", "disconnected")
    for i, comp in enumerate(comps, 1):
        report.add(f"obstacle-component-{i}", tuple(bits(comp)))
    report.add("revalidated", str(len(comps) >= 2).lower())
    return EXIT_NO


def _oracle_fallback(report: Report, g: Graph, mode: str, u, v) -> int:
    report.add("oracle-fallback", "true")
    report.add("warning", "exponential search; structural theorems do not cover this query")
    budget = OracleBudget(max_vertices=max(14, g.n), node_limit=50_000_000)
    if mode == "pc-uv":
        cover = brute_pc_uv(g, u, v, budget=budget)
        report.add("verdict", "YES" if cover else "NO")
        if cover:
            for i, leg in enumerate(cover, 1):
                report.add(f"witness-cover-{i}", leg)
    elif mode == "hamcycle":
        found = None
        for a, b in g.edges():
            path = brute_ham_path(g, a, b, budget=budget)
            if path is not None:
                found = path
                break
        report.add("verdict", "YES" if found else "NO")
        if found:
            report.add("witness-cycle", found)
    else:
        path = brute_ham_path(g, u, v, budget=budget)
        report.add("verdict", "YES" if path else "NO")
        if path:
            report.add("witness-path", path)
    return EXIT_FALLBACK


def cmd_decide(args) -> int:
    t0 = time.perf_counter()
    report = Report()
    try:
        g = load_graph(args.file, args.format)
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report.add("input", args.file)
    report.add("digest", _digest(g))
    report.add("n", g.n)
    report.add("m", g.m)
    mode = args.mode
    report.add("mode", mode)
    u, v = args.u, args.v
    needs_u = mode in ("hampath-from", "hampath-uv", "pc-uv")
    needs_v = mode in ("hampath-uv", "pc-uv")
    if needs_u and u is None or needs_v and v is None:
        print("error: mode requires --u/--v arguments", file=sys.stderr)
        return EXIT_ERROR
    if g.n == 0:
        print("error: decision operations require a nonempty graph", file=sys.stderr)
        return EXIT_ERROR
    label = classify(g)
    report.add("class", label.label)
    report.add("alpha-bound", label.alpha_bound if label.alpha_bound else "above")

    connected = len(components_masks(g, 0)) == 1
    if not connected and mode != "pc-uv":
        code = _disconnected_report(report, g)
        report.add("time-ms", f"{(time.perf_counter() - t0) * 1000:.3f}")
        report.emit()
        return code

    bound = label.alpha_bound
    try:
        if mode == "hampath":
            if bound is not None and bound <= 3:
                report.add("decider", "4K1-free existence")
                code = _emit_verdict(report, g, ham4, ham4.decide_ham_path(g))
            elif bound == 4:
                report.add("decider", "5K1-free existence")
                code = _emit_verdict(report, g, ham5, ham5.decide_ham_path(g))
            elif args.oracle_fallback:
                code = _oracle_fallback(report, g, mode, None, None)
            else:
                report.add("verdict", "UNSUPPORTED")
                code = EXIT_FALLBACK
        elif mode == "hampath-from":
            if bound is not None and bound <= 2:
                report.add("decider", "3K1-free start-vertex")
                code = _emit_verdict(report, g, ham3, ham3.decide_path_from(g, u), u)
            elif bound == 3:
                report.add("decider", "4K1-free start-vertex")
                code = _emit_verdict(report, g, ham4, ham4.decide_path_from(g, u), u)
            elif args.oracle_fallback:
                code = _oracle_fallback(report, g, mode, u, None)
            else:
                report.add("verdict", "UNSUPPORTED")
                code = EXIT_FALLBACK
        elif mode == "hampath-uv":
            if bound is not None and bound <= 2:
                report.add("decider", "3K1-free endpoint-pair")
                code = _emit_verdict(report, g, ham3, ham3.decide_path_uv(g, u, v), u, v)
            elif args.oracle_fallback:
                code = _oracle_fallback(report, g, mode, u, v)
            else:
                report.add("verdict", "UNSUPPORTED")
                code = EXIT_FALLBACK
        elif mode == "pc-uv":
            if bound is not None and bound <= 2 and connected:
                report.add("decider", "3K1-free cover")
                cover = ham3.path_cover_uv(g, u, v)
                code = _emit_verdict(report, g, ham3, Verdict(yes=True, cover=tuple(map(tuple, cover))), u, v)
            elif bound is not None and bound <= 3:
                report.add("decider", "4K1-free cover")
                code = _emit_verdict(report, g, ham4, ham4.path_cover_uv(g, u, v), u, v)
            elif args.oracle_fallback:
                code = _oracle_fallback(report, g, mode, u, v)
            else:
                report.add("verdict", "UNSUPPORTED")
                code = EXIT_FALLBACK
        elif mode == "hamcycle":
            if bound is not None and bound <= 2 and g.n >= 3:
                report.add("decider", "3K1-free endpoint-pair over closing edges")
                cycle = None
                for a, b in g.edges():
                    got = ham3.decide_path_uv(g, a, b)
                    if got.yes:
                        cycle = got.path
                        break
                report.add("verdict", "YES" if cycle else "NO")
                if cycle:
                    report.add("witness-cycle", cycle)
                    report.add("revalidated", str(is_path_valid(g, cycle, True) and g.has_edge(cycle[0], cycle[-1])).lower())
                else:
                    report.add("note", "no closing edge admits a spanning path")
                code = EXIT_YES if cycle else EXIT_NO
            elif args.oracle_fallback:
                code = _oracle_fallback(report, g, mode, None, None)
            else:
                report.add("verdict", "UNSUPPORTED")
                code = EXIT_FALLBACK
        else:
            print(f"error: unknown mode {mode}", file=sys.stderr)
            return EXIT_ERROR
    except (WrongClassError, ValueError, OracleBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report.add("time-ms", f"{(time.perf_counter() - t0) * 1000:.3f}")
    report.emit()
    return code


def cmd_sweep(args) -> int:
    t0 = time.perf_counter()

    def progress(n, stats):
        if args.verbose:
            print(
                f"# n<={n}: graphs={stats.graphs} checks={stats.checks}",
                file=sys.stderr,
                flush=True,
            )

    stats = run_sweep(args.n_max, threads=args.threads, checks=ALL_CHECKS, progress=progress)
    for line in stats.report_lines():
        print(line)
    print(f"elapsed-s: {time.perf_counter() - t0:.1f}")
    if not stats.clean:
        print("SWEEP FAILED", file=sys.stderr)
        return 1
    print("sweep clean: all decisions match the oracle")
    return 0


def cmd_gen(args) -> int:
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        print(f"# prng: {args.prng_note}", file=out)
        for i in range(args.count):
            spec = GenSpec(
                n=args.n, k=args.k, seed=args.seed + i, extra_edge_prob=args.extra_edge_prob
            )
            g = random_kk1_free(spec, connect_repair=args.connect_repair)
            print(corpus_line(g), file=out)
    finally:
        if args.out:
            out.close()
    return 0


def _bench_once(spec: GenSpec, repeats: int):
    g = random_kk1_free(spec, connect_repair=True)
    edges = list(g.edges())
    label = classify(g)
    times = []
    verdict = None
    for _ in range(repeats):
        from .graph import from_edges

        g2 = from_edges(spec.n, edges)
        g2._cache["classlabel"] = label
        g2._cache["connected"] = True
        t0 = time.perf_counter()
        if spec.k <= 4:
            got = ham4.decide_ham_path(g2)
        else:
            got = ham5.decide_ham_path(g2)
        times.append((time.perf_counter() - t0) * 1000.0)
        verdict = "YES" if got.yes else "NO"
    return statistics.median(times), verdict


def cmd_bench(args) -> int:
    specs = []
    for item in args.spec:
        parts = item.split(",")
        if len(parts) not in (3, 4):
            print(f"error: bad spec {item!r}; want n,k,seed[,p]", file=sys.stderr)
            return EXIT_ERROR
        n, k, seed = int(parts[0]), int(parts[1]), int(parts[2])
        p = float(parts[3]) if len(parts) == 4 else 0.1
        specs.append(GenSpec(n=n, k=k, seed=seed, extra_edge_prob=p))
    kernels = ["numba", "numpy"] if args.kernel == "both" else [args.kernel]
    print("n,k,seed,median_ms,verdict")
    for kernel in kernels:
        if kernel != "auto":
            try:
                _kernels.set_backend(kernel)
            except RuntimeError as exc:
                print(f"# kernel {kernel} unavailable: {exc}", file=sys.stderr)
                continue
        if len(kernels) > 1:
            print(f"# kernel={kernel}")
        rows = []
        for spec in specs:
            med, verdict = _bench_once(spec, args.repeats)
            rows.append((spec.n, med))
            print(f"{spec.n},{spec.k},{spec.seed},{med:.3f},{verdict}", flush=True)
        sizes = sorted({r[0] for r in rows})
        if len(sizes) >= 2:
            import math

            pairs = sorted(rows)
            slope = (math.log(pairs[-1][1]) - math.log(pairs[0][1])) / (
                math.log(pairs[-1][0]) - math.log(pairs[0][0])
            )
            print(f"# loglog-slope[{kernel}]: {slope:.2f}", file=sys.stderr)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="hampath",
        description="Hamiltonian paths and two-path covers in graphs of small independence number",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide one instance and print a certificate report")
    p.add_argument("file")
    p.add_argument(
        "--mode",
        default="hampath",
        choices=["hampath", "hampath-from", "hampath-uv", "pc-uv", "hamcycle"],
    )
    p.add_argument("--u", type=int)
    p.add_argument("--v", type=int)
    p.add_argument("--format", default="edgelist", choices=["edgelist", "dimacs"])
    p.add_argument("--oracle-fallback", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("sweep", help="exhaustive oracle-equivalence sweep")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gen", help="emit a seeded corpus of clique-partition graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True, choices=[3, 4, 5])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--extra-edge-prob", type=float, default=0.1)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--connect-repair", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen, prng_note="philox4x32 (numpy.random.Philox)")

    p = sub.add_parser("bench", help="time the structural decision at scale (CSV)")
    p.add_argument("--spec", action="append", default=[], help="n,k,seed[,p]; repeatable")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--kernel", default="auto", choices=["auto", "numba", "numpy", "both"])
    p.set_defaults(func=cmd_bench)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
