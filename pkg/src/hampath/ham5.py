"""Hamiltonian path decision and construction for 5K1-free graphs.

Four conditions: no articulation splits three ways, no articulation triangle,
beside every articulation with a clique side the other side admits a
Hamiltonian path from a neighbour of the cut vertex (delegated to the 4K1-free
start-vertex decision), and no 2-cut splits four ways.

Obstacles:

* ``articulation-splits-three-ways`` (x) and ``articulation-triangle`` (x,y,z)
  as in the 4K1-free case,
* ``no-hamiltonian-start-beside-articulation`` (x): every neighbour of x in
  the non-clique side fails the side's start-vertex decision,
* ``two-cut-splits-four-ways`` (x, y).
"""

from __future__ import annotations

from . import ham3, ham4
from .connectivity import _two_cut_pairs, articulation_mask, components_masks
from .crossover import ce_hamiltonian_path
from .graph import Graph, bits, induced_mask, is_path_valid, mask_of
from .independence import has_independent_set
from .pathtools import lowest, open_cycle_at, traverse_clique_between
from .verdicts import Obstacle, Verdict, no, require_instance, yes_path

__all__ = [
    "ART_THREE_WAYS",
    "ART_TRIANGLE",
    "NO_GOOD_START_BESIDE",
    "TWO_CUT_FOUR_WAYS",
    "decide_ham_path",
    "both_sides_3k1_start_pair",
    "revalidate_obstacle",
]

ART_THREE_WAYS = ham4.ART_THREE_WAYS
ART_TRIANGLE = ham4.ART_TRIANGLE
NO_GOOD_START_BESIDE = "no-hamiltonian-start-beside-articulation"
TWO_CUT_FOUR_WAYS = "two-cut-splits-four-ways"


def _gate(g: Graph) -> None:
    require_instance(g, 5)


def _unmap(path, mapping):
    inv = {new: old for old, new in mapping.items()}
    return [inv[p] for p in path]


def _clique_assignments(g: Graph, comps: list[int]):
    """(clique side, other side) splits to test; both orders when both qualify."""
    a, b = comps
    out = []
    if ham4._is_clique(g, a):
        out.append((a, b))
    if ham4._is_clique(g, b):
        out.append((b, a))
    return out


def _side_start(g: Graph, x: int, side: int) -> int | None:
    """Lowest neighbour of x in the side whose start-vertex decision is Yes."""
    sub, mapping = induced_mask(g, side)
    for t in bits(g.adj[x] & side):
        if ham4.decide_path_from(sub, mapping[t]).yes:
            return t
    return None


def _violation(g: Graph) -> Obstacle | None:
    art = articulation_mask(g)
    for x in bits(art):
        if len(ham4._comps_minus(g, 1 << x)) >= 3:
            return ham4._cut_obstacle(g, ART_THREE_WAYS, (x,), 1 << x)
    tri = ham4._art_triangles(g)
    if tri:
        x, y, z = tri[0]
        return ham4._cut_obstacle(g, ART_TRIANGLE, (x, y, z), mask_of(tri[0]))
    for x in bits(art):
        comps = ham4._comps_minus(g, 1 << x)
        for q1, q2 in _clique_assignments(g, comps):
            if _side_start(g, x, q2) is None:
                return ham4._cut_obstacle(g, NO_GOOD_START_BESIDE, (x,), 1 << x)
    if not art:
        for a, b in _two_cut_pairs(g):
            pair = (1 << a) | (1 << b)
            if len(ham4._comps_minus(g, pair)) >= 4:
                return ham4._cut_obstacle(g, TWO_CUT_FOUR_WAYS, (a, b), pair)
    return None


def both_sides_3k1_start_pair(g: Graph, x: int, q1: int, q2: int):
    """Non-articulation neighbours of x on each 3K1-free side, or None.

    ``q1`` and ``q2`` are the component masks of g - x; both must induce
    3K1-free graphs.
    """
    pair = []
    for side in (q1, q2):
        options = g.adj[x] & side & ~ham4._sub_articulations(g, side)
        if not options:
            return None
        pair.append(lowest(options))
    return tuple(pair)


def decide_ham_path(g: Graph) -> Verdict:
    """Free Hamiltonian path for a connected 5K1-free graph."""
    _gate(g)
    obstacle = _violation(g)
    if obstacle is not None:
        return no(obstacle)
    path = g.cached("ham5_path", lambda: _construct(g))
    if not is_path_valid(g, path, require_hamiltonian=True):
        raise ham4.ConstructionError("constructed witness failed validation")
    return yes_path(path)


def _construct(g: Graph) -> list[int]:
    if g.n <= 2:
        return list(range(g.n))
    art = articulation_mask(g)
    if art:
        return _construct_cut_vertex(g, lowest(art))
    cuts = _two_cut_pairs(g)
    if not cuts:
        return ce_hamiltonian_path(g, 3, 4)
    for a, b in cuts:
        comps = ham4._comps_minus(g, (1 << a) | (1 << b))
        if len(comps) == 3:
            return _construct_three_parts(g, a, b, comps)
    return _construct_two_parts(g, *cuts[0])


def _construct_cut_vertex(g: Graph, x: int) -> list[int]:
    comps = ham4._comps_minus(g, 1 << x)
    if len(comps) != 2:
        raise ham4.ConstructionError("three-way articulation survived the conditions")
    assignments = _clique_assignments(g, comps)
    if assignments:
        q1, q2 = assignments[0]
        t = _side_start(g, x, q2)
        if t is None:
            raise ham4.ConstructionError("side start vanished between check and build")
        sub, mapping = induced_mask(g, q2)
        tail = _unmap(ham4.decide_path_from(sub, mapping[t]).path, mapping)
        return traverse_clique_between(g, q1, None, x) + [x] + tail
    # neither side is a clique: both are 3K1-free and meet x off their cuts
    c1, c2 = comps
    pair = both_sides_3k1_start_pair(g, x, c1, c2)
    if pair is None:
        raise ham4.ConstructionError("no two-sided start beside the articulation")
    x1, x2 = pair
    left = _sub_path_from(g, c1, x1)
    right = _sub_path_from(g, c2, x2)
    return left[::-1] + [x] + right


def _sub_path_from(g: Graph, side: int, t: int) -> list[int]:
    sub, mapping = induced_mask(g, side)
    verdict = ham3.decide_path_from(sub, mapping[t])
    if not verdict.yes:
        raise ham4.ConstructionError("3K1-free side refuses its promised start")
    return _unmap(verdict.path, mapping)


def _construct_three_parts(g: Graph, a: int, b: int, comps: list[int]) -> list[int]:
    """A 2-cut with three parts: two cliques and one 3K1-free side."""
    non_cliques = [c for c in comps if not ham4._is_clique(g, c)]
    q3 = non_cliques[0] if non_cliques else comps[0]
    others = [c for c in comps if c != q3]
    art3 = ham4._sub_articulations(g, q3)
    for s, t in ((a, b), (b, a)):
        options = g.adj[s] & q3 & ~art3
        if not options:
            continue
        body = _sub_path_from(g, q3, lowest(options))
        try:
            mid = traverse_clique_between(g, others[0], s, t)
            tail = traverse_clique_between(g, others[1], t, None)
        except ValueError:
            try:
                mid = traverse_clique_between(g, others[1], s, t)
                tail = traverse_clique_between(g, others[0], t, None)
            except ValueError:
                continue
        return body[::-1] + [s] + mid + [t] + tail
    raise ham4.ConstructionError("no free start borders the three-part cut")


def _construct_two_parts(g: Graph, a: int, b: int) -> list[int]:
    """Every 2-cut leaves two parts; route by the sides' classes."""
    pair = (1 << a) | (1 << b)
    comps = ham4._comps_minus(g, pair)
    q1, q2 = comps
    if _side_is_3k1(g, q1) and _side_is_3k1(g, q2):
        return _two_parts_both_small(g, a, b, q1, q2)
    assignments = _clique_assignments(g, comps)
    if not assignments:
        raise ham4.ConstructionError("neither side of the cut is a clique")
    qc, qo = assignments[0]
    return _two_parts_clique_side(g, a, b, qc, qo)


def _side_is_3k1(g: Graph, mask: int) -> bool:
    sub, _ = induced_mask(g, mask)
    return has_independent_set(sub, 3) is None


def _cover_pair_into(g: Graph, x: int, y: int, side: int):
    """Distinct neighbours (of x, of y) inside the side, lowest ids."""
    for a2 in bits(g.adj[x] & side):
        b_opts = g.adj[y] & side & ~(1 << a2)
        if b_opts:
            return a2, lowest(b_opts)
    return None


def _two_parts_both_small(g: Graph, x: int, y: int, q1: int, q2: int) -> list[int]:
    """Both sides 3K1-free: thread one side, cover the other with two paths."""
    for qi, qo in ((q1, q2), (q2, q1)):
        subi, mapi = induced_mask(g, qi)
        bodies: list[list[int]] = []
        if qi.bit_count() == 1 and g.adj[x] & qi and g.adj[y] & qi:
            bodies.append([lowest(qi)])
        for p in bits(g.adj[x] & qi):
            for q in bits(g.adj[y] & qi & ~(1 << p)):
                vd = ham3.decide_path_uv(subi, mapi[p], mapi[q])
                if vd.yes:
                    bodies.append(_unmap(vd.path, mapi))
                    break
            if bodies:
                break
        if not bodies:
            continue
        body = bodies[0]
        if qo.bit_count() == 1:
            return [x] + body + [y, lowest(qo)]
        subo, mapo = induced_mask(g, qo)
        pair = _cover_pair_into(g, x, y, qo)
        if pair is None:
            raise ham4.ConstructionError("cut pinched to one vertex of a side")
        a2, b2 = pair
        x_leg, y_leg = ham3.path_cover_uv(subo, mapo[a2], mapo[b2])
        return _unmap(x_leg, mapo)[::-1] + [x] + body + [y] + _unmap(y_leg, mapo)
    # an all-articulation side forces the chained routing
    for s, t in ((x, y), (y, x)):
        for qi, qo in ((q1, q2), (q2, q1)):
            nbrs = g.adj[s] & qi
            if nbrs and not nbrs & ~ham4._sub_articulations(g, qi):
                return _chain_past_choked_side(g, s, t, qi, qo)
    return _cycle_plus_tail(g, x, y, q1, q2)


def _chain_past_choked_side(g: Graph, s: int, t: int, qi: int, qo: int) -> list[int]:
    """The side meets s only at articulations: sweep it ending at s, then cross."""
    w = lowest(g.adj[s] & qi)
    wcomps = ham4._mask_components(g, qi & ~(1 << w))
    if len(wcomps) != 2:
        raise ham4.ConstructionError("side articulation must split its side in two")
    j1 = next((c for c in wcomps if not c & ~g.adj[w]), None)
    if j1 is None:
        raise ham4.ConstructionError("side articulation saturates neither block")
    j2 = next(c for c in wcomps if c != j1)
    left = (
        traverse_clique_between(g, j2, None, t)
        + [t]
        + traverse_clique_between(g, j1, t, w)
        + [w, s]
    )
    for r in bits(g.adj[s] & qo):
        tail = _try_sub_path_from(g, qo, r)
        if tail is not None:
            return left + tail
    raise ham4.ConstructionError("no start beside the cut on the far side")


def _try_sub_path_from(g: Graph, side: int, t: int):
    sub, mapping = induced_mask(g, side)
    verdict = ham3.decide_path_from(sub, mapping[t])
    if not verdict.yes:
        return None
    return _unmap(verdict.path, mapping)


def _cycle_plus_tail(g: Graph, x: int, y: int, q1: int, q2: int) -> list[int]:
    """Both sides 2-connected: a two-entry cut vertex closes one side into a
    cycle; the other side hangs off the second cut vertex."""
    for s, t in ((x, y), (y, x)):
        for qi, qo in ((q1, q2), (q2, q1)):
            ents = list(bits(g.adj[s] & qi))
            if len(ents) != 2:
                continue
            subi, mapi = induced_mask(g, qi)
            vd = ham3.decide_path_uv(subi, mapi[ents[0]], mapi[ents[1]])
            if not vd.yes:
                continue
            cyc = [s] + _unmap(vd.path, mapi)
            t_in = g.adj[t] & qi
            if not t_in:
                continue
            for r in bits(g.adj[t] & qo):
                tail = _try_sub_path_from(g, qo, r)
                if tail is not None:
                    return tail[::-1] + [t] + open_cycle_at(cyc, lowest(t_in))
    raise ham4.ConstructionError("no two-entry cut vertex closes a side cycle")


def _two_parts_clique_side(g: Graph, x: int, y: int, qc: int, qo: int) -> list[int]:
    """One clique side: a two-path cover of the big side bridges the cut."""
    if qo.bit_count() == 1:
        w = lowest(qo)
        if not (g.adj[x] >> w & 1 and g.adj[y] & qc):
            raise ham4.ConstructionError("singleton side misses the cut")
        return [w, x] + traverse_clique_between(g, qc, x, y) + [y]
    subo, mapo = induced_mask(g, qo)
    for p in bits(g.adj[x] & qo):
        for q in bits(g.adj[y] & qo & ~(1 << p)):
            vd = ham4.path_cover_uv(subo, mapo[p], mapo[q])
            if not vd.yes:
                continue
            p_leg = _unmap(vd.cover[0], mapo)
            q_leg = _unmap(vd.cover[1], mapo)
            return p_leg[::-1] + [x] + traverse_clique_between(g, qc, x, y) + [y] + q_leg
    raise ham4.ConstructionError("no side cover anchors at the cut neighbourhoods")


def revalidate_obstacle(g: Graph, obstacle) -> bool:
    """Re-check an obstacle from scratch (cuts, components, side decisions)."""
    kind = obstacle.kind
    if kind == ART_THREE_WAYS:
        (x,) = obstacle.vertices
        return len(components_masks(g, 1 << x)) >= 3
    if kind == ART_TRIANGLE:
        x, y, z = obstacle.vertices
        if not (g.has_edge(x, y) and g.has_edge(x, z) and g.has_edge(y, z)):
            return False
        return all(len(components_masks(g, 1 << w)) >= 2 for w in (x, y, z))
    if kind == NO_GOOD_START_BESIDE:
        (x,) = obstacle.vertices
        comps = components_masks(g, 1 << x)
        if len(comps) != 2:
            return False
        for q1, q2 in _clique_assignments(g, comps):
            if _side_start(g, x, q2) is None:
                return True
        return False
    if kind == TWO_CUT_FOUR_WAYS:
        x, y = obstacle.vertices
        return len(components_masks(g, (1 << x) | (1 << y))) >= 4
    return False
