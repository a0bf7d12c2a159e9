"""Connectivity primitives: components, articulation points, small cuts, fans.

Everything here is a pure function of an immutable :class:`~hampath.graph.Graph`.
Small graphs (n <= 64) run on Python int bitmasks; larger graphs delegate the
hot sweeps to the kernel backend (numba or the numpy fallback).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _kernels
from .graph import Graph, bits, mask_of

__all__ = [
    "CutDecomposition",
    "PathFan",
    "FanError",
    "components",
    "components_masks",
    "is_connected",
    "articulation_points",
    "articulation_mask",
    "min_cut_size_at_most",
    "two_cuts_containing",
    "two_cut_decompositions",
    "path_fan",
    "vertex_connectivity_small",
]

_KERNEL_MIN_N = 65


class FanError(RuntimeError):
    """Fewer disjoint paths than the claimed connectivity admits."""


@dataclass(frozen=True)
class CutDecomposition:
    """A removed vertex set together with the component partition it leaves."""

    cut: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.components)

    def component_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(c) for c in self.components)


@dataclass(frozen=True)
class PathFan:
    """Internally disjoint paths from ``center`` ending in distinct targets."""

    center: int
    targets: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]


# -- components --------------------------------------------------------------


def components_masks(g: Graph, removed_mask: int = 0) -> list[int]:
    """Vertex-set masks of the components of g minus ``removed_mask``.

    Ordered by minimum vertex id.
    """
    if g.n >= _KERNEL_MIN_N:
        return _components_masks_kernel(g, removed_mask)
    rem = g.full_mask & ~removed_mask
    comps = []
    while rem:
        seed = rem & -rem
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & rem & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


def _components_masks_kernel(g: Graph, removed_mask: int) -> list[int]:
    indptr, indices = g.csr()
    removed = np.zeros(g.n, dtype=np.uint8)
    for v in bits(removed_mask):
        removed[v] = 1
    labels, count = _kernels.get().component_labels(g.n, indptr, indices, removed)
    comps = [0] * count
    for v in range(g.n):
        lab = labels[v]
        if lab >= 0:
            comps[lab] |= 1 << v
    return comps


def comps_minus_cached(g: Graph, cut_mask: int) -> list[int]:
    """Memoised component masks of g minus a cut mask (graphs are immutable)."""
    table = g.cached("comps_minus", dict)
    hit = table.get(cut_mask)
    if hit is None:
        hit = components_masks(g, cut_mask)
        table[cut_mask] = hit
    return hit


def components(g: Graph, removed=()) -> CutDecomposition:
    """Decompose g minus ``removed`` into connected components."""
    removed = tuple(sorted(set(removed)))
    rmask = mask_of(removed)
    comps = components_masks(g, rmask)
    return CutDecomposition(cut=removed, components=tuple(tuple(bits(c)) for c in comps))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(components_masks(g, 0)) == 1


# -- articulation points ------------------------------------------------------


def articulation_mask(g: Graph) -> int:
    """Bitmask of articulation vertices (memoised; works per component)."""

    def build():
        if g.n >= _KERNEL_MIN_N:
            indptr, indices = g.csr()
            art = _kernels.get().articulation_mask(g.n, indptr, indices)
            out = 0
            for v in range(g.n):
                if art[v]:
                    out |= 1 << v
            return out
        return _articulation_mask_py(g)

    return g.cached("art", build)


def _articulation_mask_py(g: Graph) -> int:
    n = g.n
    art = 0
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    rest = list(g.adj)
    time = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        disc[root] = low[root] = time
        time += 1
        stack = [root]
        while stack:
            v = stack[-1]
            if rest[v]:
                wbit = rest[v] & -rest[v]
                rest[v] ^= wbit
                w = wbit.bit_length() - 1
                if w == parent[v]:
                    continue
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = low[w] = time
                    time += 1
                    stack.append(w)
                    if v == root:
                        root_children += 1
                elif disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                p = parent[v]
                if p != -1:
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if p != root and low[v] >= disc[p]:
                        art |= 1 << p
        if root_children >= 2:
            art |= 1 << root
    return art


def articulation_points(g: Graph) -> frozenset[int]:
    """The set of vertices whose removal disconnects the (connected) graph."""
    if not is_connected(g):
        raise ValueError("articulation_points requires a connected graph")
    return frozenset(bits(articulation_mask(g)))


# -- small cuts ----------------------------------------------------------------


def min_cut_size_at_most(g: Graph, s: int):
    """Exact vertex connectivity when it is <= s, else (None, None) for "greater".

    Returns ``(size, cut)``; for complete graphs the convention c_v(K_n)=n-1
    applies and the witness is None.  Exhaustive over subsets of size <= s <= 3.
    """
    if s > 3:
        raise ValueError("min_cut_size_at_most supports thresholds up to 3")
    if not is_connected(g):
        raise ValueError("min_cut_size_at_most requires a connected graph")
    if all(g.adj[v] == g.full_mask ^ (1 << v) for v in range(g.n)):
        return (g.n - 1, None) if g.n - 1 <= s else (None, None)
    for size in range(1, s + 1):
        for combo in itertools.combinations(range(g.n), size):
            if len(components_masks(g, mask_of(combo))) >= 2:
                return size, combo
    return None, None


def vertex_connectivity_small(g: Graph) -> int:
    """Exact vertex connectivity by exhaustive cut search; for small n only."""
    if not is_connected(g):
        return 0
    if all(g.adj[v] == g.full_mask ^ (1 << v) for v in range(g.n)):
        return g.n - 1
    for size in range(1, g.n - 1):
        for combo in itertools.combinations(range(g.n), size):
            if len(components_masks(g, mask_of(combo))) >= 2:
                return size
    return g.n - 1


def _two_cut_pairs(g: Graph) -> list[tuple[int, int]]:
    """All pairs {a, b} whose removal disconnects g, ascending; memoised."""

    def build():
        pairs = []
        for a in range(g.n):
            amask = 1 << a
            comps_a = components_masks(g, amask)
            # b splits (or empties) a component of g - a, or g - a is already split
            art_by_comp: dict[int, int] = {}
            for cm in comps_a:
                sub_art = _induced_articulations(g, cm)
                art_by_comp[cm] = sub_art
            for b in range(a + 1, g.n):
                bbit = 1 << b
                cnt = len(comps_a)
                for cm in comps_a:
                    if cm & bbit:
                        if cm == bbit:
                            cnt -= 1
                        elif art_by_comp[cm] & bbit:
                            cnt += _split_count(g, cm & ~bbit) - 1
                        break
                if cnt >= 2:
                    pairs.append((a, b))
        return pairs

    return g.cached("two_cuts", build)


def _induced_articulations(g: Graph, comp_mask: int) -> int:
    """Articulation vertices of the subgraph induced by ``comp_mask``, as a mask."""
    from .graph import induced_mask

    sub, mapping = induced_mask(g, comp_mask)
    sub_art = articulation_mask(sub)
    out = 0
    inv = {new: old for old, new in mapping.items()}
    for v in bits(sub_art):
        out |= 1 << inv[v]
    return out


def _split_count(g: Graph, vertex_mask: int) -> int:
    rem = vertex_mask
    count = 0
    while rem:
        seed = rem & -rem
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & rem & ~comp
            comp |= frontier
        count += 1
        rem &= ~comp
    return count


def two_cut_decompositions(g: Graph, fixed: int | None = None) -> Iterator[CutDecomposition]:
    """Stream every disconnecting pair {a,b} (containing ``fixed`` if given)."""
    for a, b in _two_cut_pairs(g):
        if fixed is not None and fixed != a and fixed != b:
            continue
        yield components(g, (a, b))


def two_cuts_containing(g: Graph, fixed: int | None = None) -> Iterator[CutDecomposition]:
    if not is_connected(g):
        raise ValueError("two_cuts_containing requires a connected graph")
    return two_cut_decompositions(g, fixed)


# -- disjoint path fans ---------------------------------------------------------


def _disjoint_fan(
    g: Graph, x: int, target_groups, blocked_mask: int, limit: int
) -> list[list[int]]:
    """Up to ``limit`` vertex-disjoint x -> target paths.

    ``target_groups`` is one mask or an ordered list of masks: sinks open one
    group at a time, so units into earlier groups are maximised first (later
    augmentations reroute but never cancel a finished unit's sink arc).
    Interior vertices avoid ``blocked_mask`` entirely; target vertices are
    usable only as endpoints.  Unit-capacity max flow on the split graph.
    """
    if isinstance(target_groups, int):
        target_groups = [target_groups]
    targets_mask = 0
    for m in target_groups:
        targets_mask |= m
    n = g.n
    # node ids: 2v = in, 2v+1 = out, source = 2n, sink = 2n+1
    source, sink = 2 * n, 2 * n + 1
    graph_arcs: list[list[int]] = [[] for _ in range(2 * n + 2)]
    arc_to: list[int] = []
    arc_cap: list[int] = []

    def add_arc(a: int, b: int, cap: int) -> int:
        idx = len(arc_to)
        graph_arcs[a].append(idx)
        arc_to.append(b)
        arc_cap.append(cap)
        graph_arcs[b].append(idx + 1)
        arc_to.append(a)
        arc_cap.append(0)
        return idx

    xbit = 1 << x
    usable_interior = ~blocked_mask & ~targets_mask & ~xbit
    sink_arc_of: dict[int, int] = {}
    for v in range(n):
        vbit = 1 << v
        if vbit & usable_interior and g.adj[v]:
            add_arc(2 * v, 2 * v + 1, 1)
        if vbit & targets_mask:
            sink_arc_of[v] = add_arc(2 * v, sink, 0)
    add_arc(source, 2 * x + 1, limit)
    for u in range(n):
        ubit = 1 << u
        u_can_out = u == x or (ubit & usable_interior)
        if not u_can_out:
            continue
        for w in bits(g.adj[u]):
            wbit = 1 << w
            if wbit & targets_mask or wbit & usable_interior:
                add_arc(2 * u + 1, 2 * w, 1)

    flow = 0
    parent_arc = [-1] * (2 * n + 2)

    def augment_to_max():
        nonlocal flow
        while flow < limit:
            for i in range(len(parent_arc)):
                parent_arc[i] = -1
            parent_arc[source] = -2
            queue = [source]
            qi = 0
            reached = False
            while qi < len(queue):
                node = queue[qi]
                qi += 1
                for ai in graph_arcs[node]:
                    if arc_cap[ai] > 0 and parent_arc[arc_to[ai]] == -1:
                        parent_arc[arc_to[ai]] = ai
                        if arc_to[ai] == sink:
                            reached = True
                            break
                        queue.append(arc_to[ai])
                if reached:
                    break
            if not reached:
                return
            node = sink
            while node != source:
                ai = parent_arc[node]
                arc_cap[ai] -= 1
                arc_cap[ai ^ 1] += 1
                node = arc_to[ai ^ 1]
            flow += 1

    opened = 0
    for group in target_groups:
        for t in bits(group & targets_mask & ~opened):
            ai = sink_arc_of[t]
            arc_cap[ai] = 1 - arc_cap[ai ^ 1]  # open this sink (capacity 1)
        opened |= group
        augment_to_max()

    # follow arcs carrying flow from the source to recover vertex paths
    paths = []
    for _ in range(flow):
        node = source
        path: list[int] = []
        while node != sink:
            for ai in graph_arcs[node]:
                if ai % 2 == 0 and arc_cap[ai ^ 1] > 0:
                    arc_cap[ai ^ 1] -= 1
                    node = arc_to[ai]
                    break
            else:
                raise AssertionError("flow decomposition lost a unit")
            if node != sink:
                v = node // 2
                if not path or path[-1] != v:
                    path.append(v)
        paths.append(path)
    paths.sort(key=lambda p: p[-1])
    return paths


def path_fan(g: Graph, x: int, y_set, s: int) -> PathFan:
    """Internally disjoint paths from x into y_set, one per target.

    Requires the caller-established s-connectivity; produces
    m = min(s, |y_set|) paths that meet y_set only in their own endpoint.
    """
    y_list = sorted(set(y_set))
    if x in y_list:
        raise ValueError("fan center may not belong to the target set")
    if s < 1:
        raise ValueError("connectivity bound must be >= 1")
    ymask = mask_of(y_list)
    m = min(s, len(y_list))
    paths = _disjoint_fan(g, x, ymask, ymask, m)
    if len(paths) < m:
        raise FanError(f"only {len(paths)} disjoint paths from {x}; expected {m}")
    return PathFan(center=x, targets=tuple(p[-1] for p in paths), paths=tuple(tuple(p) for p in paths))
