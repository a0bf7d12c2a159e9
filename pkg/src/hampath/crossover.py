"""Path and cycle growing engines.

Two engines drive every construction in the dense (2-connected and beyond)
cases:

* :func:`extend_path_between` lengthens a fixed-endpoint u->v path through an
  off-path vertex, via a disjoint-path fan and either a splice between
  consecutive attachment points or the successor-edge exchange that the small
  independence number forces.
* :func:`ce_hamiltonian_cycle` grows a cycle the same way (on a cycle every
  attachment point has a successor).  The free-endpoint Hamiltonian path comes
  from running it on the graph plus one universal vertex and opening the
  cycle there.

All free choices take the lowest vertex id, so outputs are deterministic.
"""

from __future__ import annotations

from .connectivity import _disjoint_fan
from .graph import Graph, bits, mask_of

__all__ = [
    "CrossoverBlocked",
    "EngineStall",
    "shortest_path",
    "extend_path_between",
    "ham_path_between",
    "ce_hamiltonian_cycle",
    "ce_hamiltonian_path",
]


class CrossoverBlocked(RuntimeError):
    """The prescribed endpoints form a two-cut: no extension exists."""


class EngineStall(RuntimeError):
    """Progress argument failed; a precondition (class or connectivity) is off."""


def shortest_path(g: Graph, u: int, v: int) -> list[int] | None:
    """BFS shortest u->v path with lowest-id parent choices."""
    if u == v:
        return [u]
    parent = {u: -1}
    frontier = [u]
    while frontier:
        nxt = []
        for a in frontier:
            for b in bits(g.adj[a]):
                if b not in parent:
                    parent[b] = a
                    if b == v:
                        path = [v]
                        while path[-1] != u:
                            path.append(parent[path[-1]])
                        path.reverse()
                        return path
                    nxt.append(b)
        frontier = nxt
    return None


def _cheap_insert(g: Graph, path: list[int]) -> list[int] | None:
    """Insert an off-path vertex between a consecutive adjacent pair, if any.

    This is the fan splice specialised to single-edge fan legs; it resolves
    the vast majority of extension steps without building a flow network.
    """
    off = g.full_mask & ~mask_of(path)
    if not off:
        return None
    for i in range(len(path) - 1):
        common = g.adj[path[i]] & g.adj[path[i + 1]] & off
        if common:
            x = (common & -common).bit_length() - 1
            return path[: i + 1] + [x] + path[i + 1 :]
    return None


def _try_extend_directed(g: Graph, path: list[int], s: int, alpha: int):
    """One extension attempt in the path's own direction; None if stuck."""
    n = g.n
    pmask = mask_of(path)
    off = g.full_mask & ~pmask
    if not off:
        return None
    x = (off & -off).bit_length() - 1
    u, v = path[0], path[-1]
    t = min(s, len(path))
    interior_mask = pmask & ~(1 << u) & ~(1 << v)
    groups = [interior_mask, pmask] if interior_mask else [pmask]
    fan = _disjoint_fan(g, x, groups, pmask, t)
    if len(fan) < t:
        raise EngineStall(f"fan from {x} found only {len(fan)} paths; expected {t}")
    pos = {w: i for i, w in enumerate(path)}
    fan.sort(key=lambda p: pos[p[-1]])

    # splice between consecutive attachment points
    for a in range(len(fan) - 1):
        for b in range(a + 1, len(fan)):
            pa, pb = fan[a], fan[b]
            ia, ib = pos[pa[-1]], pos[pb[-1]]
            if ib == ia + 1:
                rev = pa[::-1]  # y_a ... x
                return path[: ia + 1] + rev[1:] + pb[1:] + path[ib + 1 :]

    # an off-path detour to y_i plus a direct edge x -> successor(y_i)
    for p in fan:
        i = pos[p[-1]]
        if i + 1 < len(path) and g.adj[x] >> path[i + 1] & 1:
            rev = p[::-1]
            return path[: i + 1] + rev[1:] + path[i + 1 :]

    # successor-successor edge exchange
    with_succ = [p for p in fan if pos[p[-1]] + 1 < len(path)]
    for a in range(len(with_succ) - 1):
        for b in range(a + 1, len(with_succ)):
            pa, pb = with_succ[a], with_succ[b]
            ia, ib = pos[pa[-1]], pos[pb[-1]]
            ya_s, yb_s = path[ia + 1], path[ib + 1]
            if not g.adj[ya_s] >> yb_s & 1:
                continue
            # u..y_a | y_a->x via pa | x->y_b via pb | y_b-1..y_a' backwards |
            # edge y_a' y_b' | y_b'..v
            out = path[: ia + 1]
            out += pa[::-1][1:]
            out += pb[1:]
            out += path[ib - 1 : ia : -1]
            out += path[ib + 1 :]
            return out
    return None


def extend_path_between(g: Graph, path: list[int], s: int, alpha: int) -> list[int]:
    """Strictly longer path with the same endpoints, or raise.

    Needs the fan guarantee of an s-connected graph and independence number
    at most ``alpha``; raises :class:`CrossoverBlocked` when the endpoints
    pinch off the remaining vertices (only possible for s = 2), and
    :class:`EngineStall` if the exchange argument finds nothing (violated
    precondition).
    """
    pmask = mask_of(path)
    if pmask == g.full_mask:
        raise ValueError("path is already Hamiltonian")
    got = _cheap_insert(g, path)
    if got is not None:
        return got
    got = _try_extend_directed(g, path, s, alpha)
    if got is not None:
        return got
    rev = path[::-1]
    got = _try_extend_directed(g, rev, s, alpha)
    if got is not None:
        return got[::-1]
    # no interior attachment reachable at all <=> endpoints form a cut
    off = g.full_mask & ~pmask
    x = (off & -off).bit_length() - 1
    interior_mask = pmask & ~(1 << path[0]) & ~(1 << path[-1])
    if not interior_mask or not _disjoint_fan(g, x, interior_mask, pmask, 1):
        raise CrossoverBlocked(f"endpoints {{{path[0]},{path[-1]}}} cut off vertex {x}")
    raise EngineStall("no exchange applies; class preconditions violated")


def ham_path_between(g: Graph, u: int, v: int, s: int, alpha: int) -> list[int]:
    """Hamiltonian u->v path via iterated crossover extension.

    Caller guarantees: g is s-connected (s >= 2) and the exchange argument
    closes at independence number ``alpha`` (alpha <= 2 with avoidance, or
    alpha < s in general).  Raises CrossoverBlocked when {u,v} is a two-cut.
    """
    path = shortest_path(g, u, v)
    if path is None:
        raise ValueError("endpoints not connected")
    guard = 0
    while mask_of(path) != g.full_mask:
        path = extend_path_between(g, path, s, alpha)
        guard += 1
        if guard > g.n + 1:
            raise EngineStall("extension loop exceeded vertex count")
    return path


# -- cycle engine -----------------------------------------------------------------


def _initial_cycle(g: Graph) -> list[int]:
    """Shortest cycle through the lowest edge (g must be 2-connected, n >= 3)."""
    a = next(i for i in range(g.n) if g.adj[i])
    b = (g.adj[a] & -g.adj[a]).bit_length() - 1
    # BFS a -> b without using edge (a, b)
    parent = {a: -1}
    frontier = [a]
    while frontier:
        nxt = []
        for p in frontier:
            for q in bits(g.adj[p]):
                if p == a and q == b:
                    continue
                if q not in parent:
                    parent[q] = p
                    if q == b:
                        cyc = [b]
                        while cyc[-1] != a:
                            cyc.append(parent[cyc[-1]])
                        cyc.reverse()
                        return cyc
                    nxt.append(q)
        frontier = nxt
    raise EngineStall("no alternative path closes the lowest edge into a cycle")


def _absorb_round(g: Graph, cycle: list[int]) -> list[int]:
    """Insert off-cycle vertices adjacent to consecutive cycle pairs (one pass)."""
    off = g.full_mask & ~mask_of(cycle)
    if not off:
        return cycle
    out = []
    k = len(cycle)
    for i, c in enumerate(cycle):
        out.append(c)
        d = cycle[(i + 1) % k]
        common = g.adj[c] & g.adj[d] & off
        if common:
            x = (common & -common).bit_length() - 1
            out.append(x)
            off ^= 1 << x
    return out


def _cycle_fan_step(g: Graph, cycle: list[int], s: int, alpha: int) -> list[int]:
    """Grow the cycle through the lowest off-cycle vertex via a fan exchange."""
    cmask = mask_of(cycle)
    off = g.full_mask & ~cmask
    x = (off & -off).bit_length() - 1
    t = min(s, len(cycle))
    fan = _disjoint_fan(g, x, cmask, cmask, t)
    if len(fan) < t:
        raise EngineStall(f"cycle fan from {x} found only {len(fan)} paths")
    pos = {w: i for i, w in enumerate(cycle)}
    fan.sort(key=lambda p: pos[p[-1]])
    k = len(cycle)

    # consecutive attachment points (cyclically)
    for a in range(len(fan)):
        for b in range(len(fan)):
            if a == b:
                continue
            ia, ib = pos[fan[a][-1]], pos[fan[b][-1]]
            if (ia + 1) % k == ib:
                rot = cycle[ib:] + cycle[:ib]  # starts y_b, ends y_a
                return rot + fan[a][::-1][1:] + fan[b][1:-1]

    # direct edge from x to a cyclic successor
    for p in fan:
        i = pos[p[-1]]
        succ = cycle[(i + 1) % k]
        if g.adj[x] >> succ & 1:
            rot = cycle[(i + 1) % k :] + cycle[: (i + 1) % k]  # starts at succ, ends y_i
            return rot + p[::-1][1:]

    # successor-successor edge exchange
    for a in range(len(fan)):
        for b in range(a + 1, len(fan)):
            ia, ib = pos[fan[a][-1]], pos[fan[b][-1]]
            ya_s = cycle[(ia + 1) % k]
            yb_s = cycle[(ib + 1) % k]
            if not g.adj[ya_s] >> yb_s & 1:
                continue
            pa, pb = fan[a], fan[b]
            # x ->pb y_b, walk back to y_a', edge y_a' y_b', walk on to y_a, pa-> x
            seg_back = [cycle[j % k] for j in range(ib, ia, -1)]  # y_b .. y_a'
            seg_fwd = [cycle[j % k] for j in range(ib + 1, ib + 1 + (ia - ib) % k)]  # y_b' .. y_a
            out = pb + seg_back[1:] + seg_fwd + pa[::-1][1:-1]
            return out
    raise EngineStall("cycle exchange argument found no adjacent successors")


def ce_hamiltonian_cycle(g: Graph, s: int, alpha: int) -> list[int]:
    """Hamiltonian cycle for an s-connected graph with independence <= alpha <= s."""
    if g.n < 3:
        raise ValueError("cycles need n >= 3")
    if alpha > s:
        raise ValueError("cycle engine needs independence number <= connectivity")
    cycle = _initial_cycle(g)
    full = g.full_mask
    guard = 0
    while mask_of(cycle) != full:
        grown = _absorb_round(g, cycle)
        if len(grown) == len(cycle):
            grown = _cycle_fan_step(g, cycle, s, alpha)
            if len(grown) <= len(cycle):
                raise EngineStall("cycle fan step made no progress")
        cycle = grown
        guard += 1
        if guard > 2 * g.n + 4:
            raise EngineStall("cycle growth exceeded iteration budget")
    return cycle


def ce_hamiltonian_path(g: Graph, s: int, alpha: int) -> list[int]:
    """Free-endpoint Hamiltonian path for an s-connected graph with alpha <= s+1.

    Adds a universal vertex, builds the Hamiltonian cycle there, and opens it.
    """
    if g.n == 1:
        return [0]
    if g.n == 2:
        if not g.has_edge(0, 1):
            raise ValueError("graph is disconnected")
        return [0, 1]
    w = g.n
    full = g.full_mask
    aug = Graph(g.n + 1, [g.adj[v] | (1 << w) for v in range(g.n)] + [full])
    cycle = ce_hamiltonian_cycle(aug, s + 1, max(alpha, 1))
    i = cycle.index(w)
    opened = cycle[i + 1 :] + cycle[:i]
    return opened
