"""Exponential ground truth: backtracking searches and bulk DP tables.

Never used on the structural decision path; only tests, the sweep and the
CLI verify/fallback modes call in here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .graph import Graph, bits

__all__ = [
    "OracleBudget",
    "OracleBudgetExceeded",
    "brute_ham_path",
    "brute_pc_uv",
    "exact_alpha",
    "OracleTables",
    "oracle_tables",
]


class OracleBudgetExceeded(RuntimeError):
    """Search aborted: the instance exceeded the oracle budget."""


@dataclass
class OracleBudget:
    max_vertices: int = 14
    node_limit: int = 2_000_000
    nodes: int = field(default=0, compare=False)

    def charge(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise OracleBudgetExceeded(f"node limit {self.node_limit} exceeded")

    def admit(self, g: Graph) -> None:
        if g.n > self.max_vertices:
            raise OracleBudgetExceeded(f"n={g.n} exceeds oracle cap {self.max_vertices}")


def _default_budget(budget: OracleBudget | None) -> OracleBudget:
    return budget if budget is not None else OracleBudget()


def brute_ham_path(
    g: Graph, start: int | None = None, end: int | None = None, budget: OracleBudget | None = None
):
    """Hamiltonian path honouring fixed endpoint(s), or None.

    Deterministic lowest-id branching; prunes on reachability of the unvisited
    region and on counting forced path-ends.
    """
    budget = _default_budget(budget)
    budget.admit(g)
    if g.n == 0:
        return None
    full = g.full_mask
    adj = g.adj

    def reach_ok(cur: int, visited: int) -> bool:
        rest = full & ~visited
        if not rest:
            return True
        frontier = adj[cur] & rest
        seen = frontier
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & rest & ~seen
            seen |= frontier
        if seen | visited != full:
            return False
        # a vertex with <= 1 usable neighbour must terminate the remaining walk
        forced = 0
        for v in bits(rest):
            avail = adj[v] & (rest | (1 << cur))
            if avail.bit_count() <= 1:
                if end is not None and v != end:
                    return False
                forced += 1
                if forced > 1:
                    return False
        return True

    def extend(cur: int, visited: int, path: list[int]):
        budget.charge()
        if visited == full:
            if end is None or cur == end:
                return list(path)
            return None
        if end is not None and cur == end:
            return None
        if not reach_ok(cur, visited):
            return None
        for v in bits(adj[cur] & ~visited):
            path.append(v)
            got = extend(v, visited | (1 << v), path)
            if got is not None:
                return got
            path.pop()
        return None

    starts = [start] if start is not None else list(range(g.n))
    for s in starts:
        if end is not None and s == end and g.n > 1:
            continue
        got = extend(s, 1 << s, [s])
        if got is not None:
            return got
    return None


def brute_pc_uv(g: Graph, u: int, v: int, budget: OracleBudget | None = None):
    """Two vertex-disjoint paths starting at u and v covering V(g), or None.

    Single-vertex paths count; a lone Hamiltonian path does not (the cover has
    exactly two parts).
    """
    if u == v:
        raise ValueError("path cover start vertices must differ")
    budget = _default_budget(budget)
    budget.admit(g)
    full = g.full_mask
    adj = g.adj
    vbit = 1 << v

    def second_path(rest_mask: int) -> list[int] | None:
        # Hamiltonian path of g[rest] starting at v, free end
        def extend(cur: int, visited: int, path: list[int]):
            budget.charge()
            if visited == rest_mask:
                return list(path)
            for w in bits(adj[cur] & rest_mask & ~visited):
                path.append(w)
                got = extend(w, visited | (1 << w), path)
                if got is not None:
                    return got
                path.pop()
            return None

        return extend(v, vbit, [v])

    best: list[list[int]] | None = None

    def extend_first(cur: int, visited: int, path: list[int]):
        nonlocal best
        budget.charge()
        for w in bits(adj[cur] & ~visited & ~vbit):
            path.append(w)
            if extend_first(w, visited | (1 << w), path):
                return True
            path.pop()
        rest = full & ~visited
        tail = second_path(rest)
        if tail is not None:
            best = [list(path), tail]
            return True
        return False

    if extend_first(u, (1 << u), [u]):
        return best
    return None


def exact_alpha(g: Graph, budget: OracleBudget | None = None) -> int:
    """Exact independence number by branch and bound (small graphs)."""
    budget = _default_budget(budget)
    budget.admit(g)
    adj = g.adj
    best = 0

    def bnb(cand: int, size: int):
        nonlocal best
        budget.charge()
        if size + cand.bit_count() <= best:
            return
        if not cand:
            if size > best:
                best = size
            return
        v = (cand & -cand).bit_length() - 1
        bnb(cand & ~adj[v] & ~(1 << v), size + 1)
        bnb(cand & ~(1 << v), size)

    bnb(g.full_mask, 0)
    return best


# -- bulk tables ----------------------------------------------------------------


@dataclass(frozen=True)
class OracleTables:
    """All-pairs ground truth for one graph (n <= 20)."""

    ham_uv: np.ndarray  # ham_uv[u,v]: Hamiltonian u->v path exists
    ham_from: np.ndarray  # ham_from[u]: Hamiltonian path starting at u exists
    pc_uv: np.ndarray  # pc_uv[u,v]: two-path cover with starts u,v exists

    @property
    def ham_any(self) -> bool:
        return bool(self.ham_from.any())


def oracle_tables(g: Graph) -> OracleTables:
    if g.n > 20:
        raise OracleBudgetExceeded("oracle tables limited to n <= 20")
    kern = _kernels.get()
    adj = g.adj_array()
    reach = kern.ham_reach(adj)
    ham_uv, ham_from, pc = kern.oracle_tables_from_reach(adj, reach)
    return OracleTables(ham_uv=ham_uv, ham_from=ham_from, pc_uv=pc)


def ham_path_exists(g: Graph, u: int, v: int) -> bool:
    """Exact u->v Hamiltonian path existence from the subset DP (n <= 20).

    Complements the budgeted backtracking search where a guaranteed answer is
    needed on dense instances; rows are memoised per start vertex.
    """
    if g.n > 20:
        raise OracleBudgetExceeded("DP existence check limited to n <= 20")
    rows = g.cached("reach_rows", dict)
    row = rows.get(u)
    if row is None:
        row = _kernels.get().ham_reach_single(g.adj_array(), u)
        rows[u] = row
    return bool(int(row[g.full_mask]) >> v & 1)
