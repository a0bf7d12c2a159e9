"""Decisions and constructions for 3K1-free graphs.

Endpoint-prescribed Hamiltonian paths, start-prescribed Hamiltonian paths and
the always-feasible two-path cover.  Obstacles:

* ``endpoint-is-articulation`` (v): a prescribed endpoint disconnects the graph.
* ``endpoints-same-side-of-articulation`` (x): both prescribed endpoints land
  in one component of g - x.
* ``endpoint-pair-is-two-cut``: removing both prescribed endpoints disconnects.
"""

from __future__ import annotations

from .connectivity import articulation_mask, components_masks, comps_minus_cached
from .crossover import ce_hamiltonian_cycle, extend_path_between, ham_path_between
from .graph import Graph, bits, is_path_valid, mask_of
from .pathtools import clique_path, lowest, open_cycle_at, split_path_before
from .verdicts import Obstacle, Verdict, no, require_instance, yes_path

__all__ = [
    "ENDPOINT_ARTICULATION",
    "SAME_SIDE_OF_ARTICULATION",
    "ENDPOINT_PAIR_TWO_CUT",
    "decide_path_uv",
    "decide_path_from",
    "path_cover_uv",
    "crossover_extend",
    "revalidate_obstacle",
]

ENDPOINT_ARTICULATION = "endpoint-is-articulation"
SAME_SIDE_OF_ARTICULATION = "endpoints-same-side-of-articulation"
ENDPOINT_PAIR_TWO_CUT = "endpoint-pair-is-two-cut"


def _gate(g: Graph) -> None:
    require_instance(g, 3)


def _check_vertices(g: Graph, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")


def _cut_obstacle(g: Graph, kind: str, vertices: tuple[int, ...], cut_mask: int) -> Obstacle:
    comps = comps_minus_cached(g, cut_mask)
    return Obstacle(
        kind=kind,
        vertices=vertices,
        cut=tuple(bits(cut_mask)),
        components=tuple(tuple(bits(c)) for c in comps),
    )


def _first_violation(g: Graph, u: int, v: int) -> Obstacle | None:
    """Conditions checked in order: endpoints, separation side, endpoint pair."""
    art = articulation_mask(g)
    for w in (u, v):
        if art >> w & 1:
            return _cut_obstacle(g, ENDPOINT_ARTICULATION, (w,), 1 << w)
    for x in bits(art):
        for c in comps_minus_cached(g, 1 << x):
            if c >> u & 1 and c >> v & 1:
                return _cut_obstacle(g, SAME_SIDE_OF_ARTICULATION, (x,), 1 << x)
    pair = (1 << u) | (1 << v)
    if len(comps_minus_cached(g, pair)) >= 2:
        return _cut_obstacle(g, ENDPOINT_PAIR_TWO_CUT, (u, v), pair)
    return None


def _split_components(g: Graph, x: int) -> list[int]:
    comps = comps_minus_cached(g, 1 << x)
    if len(comps) != 2:
        raise AssertionError("a 3K1-free graph splits into exactly two parts")
    return comps


def _clique_leg_to_cut(g: Graph, comp_mask: int, end_in_comp: int, x: int) -> list[int]:
    """Path covering a clique component from ``end_in_comp`` to a neighbour of x."""
    if comp_mask == 1 << end_in_comp:
        return [end_in_comp]
    exits = g.adj[x] & comp_mask & ~(1 << end_in_comp)
    if not exits:
        raise AssertionError("cut vertex has no second neighbour in the clique side")
    return clique_path(comp_mask, first=end_in_comp, last=lowest(exits))


def decide_path_uv(g: Graph, u: int, v: int) -> Verdict:
    """Hamiltonian path with both endpoints prescribed, or the first obstacle."""
    _gate(g)
    _check_vertices(g, u, v)
    if u == v:
        raise ValueError("endpoints must differ")
    obstacle = _first_violation(g, u, v)
    if obstacle is not None:
        return no(obstacle)
    art = articulation_mask(g)
    if art:
        x = lowest(art)
        comps = _split_components(g, x)
        qu = next(c for c in comps if c >> u & 1)
        qv = next(c for c in comps if c >> v & 1)
        left = _clique_leg_to_cut(g, qu, u, x)
        right = _clique_leg_to_cut(g, qv, v, x)
        path = left + [x] + right[::-1]
    else:
        path = ham_path_between(g, u, v, 2, 2)
    if not is_path_valid(g, path, require_hamiltonian=True):
        raise AssertionError("constructed witness failed validation")
    return yes_path(path)


def _ham_path_from(g: Graph, u: int) -> list[int]:
    """Hamiltonian path from non-articulation u (class and gate pre-checked)."""
    art = articulation_mask(g)
    if art:
        x = lowest(art)
        comps = _split_components(g, x)
        qu = next(c for c in comps if c >> u & 1)
        qo = next(c for c in comps if not c >> u & 1)
        left = _clique_leg_to_cut(g, qu, u, x)
        entry = lowest(g.adj[x] & qo)
        return left + [x] + clique_path(qo, first=entry)
    cycle = g.cached("cycle3", lambda: ce_hamiltonian_cycle(g, 2, 2)) if g.n >= 3 else list(range(g.n))
    return open_cycle_at(list(cycle), u)


def decide_path_from(g: Graph, u: int) -> Verdict:
    """Hamiltonian path with prescribed start; infeasible iff u is an articulation."""
    _gate(g)
    _check_vertices(g, u)
    if articulation_mask(g) >> u & 1:
        return no(_cut_obstacle(g, ENDPOINT_ARTICULATION, (u,), 1 << u))
    path = _ham_path_from(g, u)
    if not is_path_valid(g, path, require_hamiltonian=True):
        raise AssertionError("constructed witness failed validation")
    return yes_path(path)


def path_cover_uv(g: Graph, u: int, v: int) -> tuple[list[int], list[int]]:
    """Two disjoint paths starting at u and v covering the graph (always exists).

    Returned in (u-path, v-path) order.
    """
    _gate(g)
    _check_vertices(g, u, v)
    if u == v:
        raise ValueError("cover start vertices must differ")
    art = articulation_mask(g)
    if not art >> u & 1:
        full = _ham_path_from(g, u)
        u_leg, v_leg = split_path_before(full, v)
        return u_leg, v_leg
    comps = _split_components(g, u)
    q1 = next(c for c in comps if c >> v & 1)
    q2 = next(c for c in comps if not c >> v & 1)
    entry = lowest(g.adj[u] & q2)
    return [u] + clique_path(q2, first=entry), clique_path(q1, first=v)


def crossover_extend(g: Graph, p, u: int, v: int) -> list[int]:
    """One crossover step: a strictly longer u->v path, or CrossoverBlocked."""
    _gate(g)
    path = list(p)
    if not is_path_valid(g, path) or path[0] != u or path[-1] != v:
        raise ValueError("p must be a valid u->v path")
    if mask_of(path) == g.full_mask:
        raise ValueError("path is already Hamiltonian")
    return extend_path_between(g, path, 2, 2)


def revalidate_obstacle(g: Graph, obstacle: Obstacle, u: int | None = None, v: int | None = None) -> bool:
    """Re-check an obstacle from scratch using only connectivity primitives."""
    kind = obstacle.kind
    if kind == ENDPOINT_ARTICULATION:
        (w,) = obstacle.vertices
        if u is not None and w not in (u, v):
            return False
        return len(components_masks(g, 1 << w)) >= 2
    if kind == SAME_SIDE_OF_ARTICULATION:
        (x,) = obstacle.vertices
        if u is None or v is None or x in (u, v):
            return False
        comps = components_masks(g, 1 << x)
        if len(comps) < 2:
            return False
        return any(c >> u & 1 and c >> v & 1 for c in comps)
    if kind == ENDPOINT_PAIR_TWO_CUT:
        a, b = obstacle.vertices
        if u is not None and {a, b} != {u, v}:
            return False
        return len(components_masks(g, (1 << a) | (1 << b))) >= 2
    return False
