"""Small deterministic path-assembly helpers shared by the construction code.

All constructions pick lowest ids at free choices so witnesses are stable.
"""

from __future__ import annotations

from .graph import Graph, bits

__all__ = [
    "clique_path",
    "open_cycle_at",
    "split_path_before",
    "traverse_clique_between",
    "lowest",
    "pick",
]


def lowest(mask: int) -> int:
    """Lowest set bit position; mask must be nonzero."""
    if not mask:
        raise ValueError("empty vertex mask")
    return (mask & -mask).bit_length() - 1


def pick(mask: int) -> int | None:
    return lowest(mask) if mask else None


def clique_path(vertices_mask: int, first: int | None = None, last: int | None = None) -> list[int]:
    """Order a clique's vertices into a path honouring optional endpoints.

    The middle runs in ascending id order.  ``first``/``last`` must belong to
    the mask and differ unless the clique is a single vertex.
    """
    verts = list(bits(vertices_mask))
    if not verts:
        raise ValueError("empty clique")
    if first is not None and not vertices_mask >> first & 1:
        raise ValueError(f"first={first} not in clique")
    if last is not None and not vertices_mask >> last & 1:
        raise ValueError(f"last={last} not in clique")
    if len(verts) == 1:
        return verts
    if first is not None and first == last:
        raise ValueError("first == last in a clique of size > 1")
    middle = [v for v in verts if v != first and v != last]
    out = []
    if first is not None:
        out.append(first)
    out.extend(middle)
    if last is not None:
        out.append(last)
    return out


def open_cycle_at(cycle: list[int], u: int) -> list[int]:
    """Rotate a cycle list so the path it induces starts at u."""
    i = cycle.index(u)
    return cycle[i:] + cycle[:i]


def split_path_before(path: list[int], v: int) -> tuple[list[int], list[int]]:
    """Split a path into (prefix, suffix-starting-at-v); v must not be path[0]."""
    i = path.index(v)
    if i == 0:
        raise ValueError("cannot split a path before its first vertex")
    return path[:i], path[i:]


def traverse_clique_between(
    g: Graph, vertices_mask: int, enter_from: int | None, exit_to: int | None
) -> list[int]:
    """Path through all of a clique, starting adjacent to ``enter_from`` and
    ending adjacent to ``exit_to`` (either may be None).

    Picks the lowest feasible entry/exit vertices; raises when no choice fits.
    """
    size = vertices_mask.bit_count()
    entry_opts = g.adj[enter_from] & vertices_mask if enter_from is not None else vertices_mask
    exit_opts = g.adj[exit_to] & vertices_mask if exit_to is not None else vertices_mask
    if not entry_opts or not exit_opts:
        raise ValueError("clique not reachable from the requested side")
    if size == 1:
        return [lowest(vertices_mask)]
    for e in bits(entry_opts):
        rest = exit_opts & ~(1 << e)
        if rest:
            return clique_path(vertices_mask, first=e, last=lowest(rest))
    raise ValueError("no disjoint entry/exit pair in clique")
