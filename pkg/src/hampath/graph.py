"""Core graph representation: immutable simple undirected graphs on dense ids.

Adjacency is kept as one Python int bitmask per vertex.  Arbitrary-precision
ints give word-parallel set operations at every size, so the same code path
serves both the exhaustive n <= 7 sweeps and the n ~ 4000 benchmarks.  A CSR
export is cached per graph for the numba kernels.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Graph",
    "GraphError",
    "bits",
    "mask_of",
    "from_edges",
    "induced",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "is_path_valid",
    "is_cover_valid",
]


class GraphError(ValueError):
    """Bad graph input: self-loop, out-of-range id, malformed file."""


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple undirected graph with vertices 0..n-1."""

    __slots__ = ("n", "adj", "_cache")

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = tuple(adj)
        self._cache: dict = {}
        if len(self.adj) != n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={n}")

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for off in bits(rest):
                yield (u, u + 1 + off)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- cached derived data ----------------------------------------------

    def cached(self, key, build):
        """Memoise ``build()`` under ``key``; graphs are immutable so this is safe."""
        try:
            return self._cache[key]
        except KeyError:
            value = build()
            self._cache[key] = value
            return value

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """CSR arrays (indptr, indices) for the numba kernels."""

        def build():
            if 0 < self.n <= 8192:
                width = (self.n + 7) // 8
                buf = bytearray()
                for v in range(self.n):
                    buf += self.adj[v].to_bytes(width, "little")
                rows = np.frombuffer(bytes(buf), dtype=np.uint8).reshape(self.n, width)
                matrix = np.unpackbits(rows, axis=1, bitorder="little")[:, : self.n]
                indptr = np.zeros(self.n + 1, dtype=np.int64)
                np.cumsum(matrix.sum(axis=1, dtype=np.int64), out=indptr[1:])
                indices = np.nonzero(matrix)[1].astype(np.int32)
                return indptr, indices
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            for v in range(self.n):
                indptr[v + 1] = indptr[v] + self.adj[v].bit_count()
            indices = np.empty(int(indptr[-1]), dtype=np.int32)
            pos = 0
            for v in range(self.n):
                for w in bits(self.adj[v]):
                    indices[pos] = w
                    pos += 1
            return indptr, indices

        return self.cached("csr", build)

    def adj_array(self) -> np.ndarray:
        """Adjacency bitmasks as an int64 array; only valid for n <= 63."""

        def build():
            if self.n > 63:
                raise GraphError("adjacency mask array requires n <= 63")
            return np.array(self.adj, dtype=np.int64)

        return self.cached("adj_array", build)


# -- construction -----------------------------------------------------------


def from_edges(n: int, edges) -> Graph:
    """Build a graph from an edge list; duplicates collapse, loops are rejected.

    Accepts any iterable of pairs, or an (m, 2) integer array.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    if not isinstance(edges, np.ndarray):
        edges = list(edges)
        if len(edges) <= 50_000 or n > 8192:
            adj = [0] * n
            for u, v in edges:
                if u == v:
                    raise GraphError(f"self-loop at vertex {u}")
                if not (0 <= u < n and 0 <= v < n):
                    raise GraphError(f"edge ({u},{v}) out of range for n={n}")
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            return Graph(n, adj)
    return _from_edges_bulk(n, edges)


def _from_edges_bulk(n: int, edges) -> Graph:
    """Vectorised construction through a packed boolean matrix."""
    arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if n > 8192:
        raise GraphError("bulk construction supports n <= 8192")
    if len(arr) == 0:
        return Graph(n, [0] * n)
    us, vs = arr[:, 0], arr[:, 1]
    if (us == vs).any():
        raise GraphError("self-loop in edge list")
    if us.min() < 0 or vs.min() < 0 or us.max() >= n or vs.max() >= n:
        raise GraphError(f"edge endpoint out of range for n={n}")
    matrix = np.zeros((n, n), dtype=bool)
    matrix[us, vs] = True
    matrix[vs, us] = True
    packed = np.packbits(matrix, axis=1, bitorder="little")
    row_bytes = packed.tobytes()
    width = packed.shape[1]
    adj = [
        int.from_bytes(row_bytes[i * width : (i + 1) * width], "little") for i in range(n)
    ]
    return Graph(n, adj)


def induced(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on vertex set ``s`` plus the old-id -> new-id mapping."""
    keep = sorted(set(s))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph")
    mapping = {v: i for i, v in enumerate(keep)}
    smask = mask_of(keep)
    adj = []
    for v in keep:
        row = g.adj[v] & smask
        new_row = 0
        for w in bits(row):
            new_row |= 1 << mapping[w]
        adj.append(new_row)
    return Graph(len(keep), adj), mapping


def induced_mask(g: Graph, smask: int) -> tuple[Graph, dict[int, int]]:
    """As :func:`induced` but taking the subset as a bitmask; memoised per graph."""
    table = g.cached("induced", dict)
    hit = table.get(smask)
    if hit is None:
        hit = induced(g, bits(smask))
        table[smask] = hit
    return hit


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


# -- witness validation ------------------------------------------------------


def is_path_valid(g: Graph, path: Sequence[int], require_hamiltonian: bool = False) -> bool:
    """True iff ``path`` is a sequence of distinct adjacent vertices of ``g``.

    With ``require_hamiltonian`` the path must also cover every vertex.
    """
    if not path:
        return False
    seen = 0
    for v in path:
        if not 0 <= v < g.n:
            return False
        b = 1 << v
        if seen & b:
            return False
        seen |= b
    for a, b in zip(path, path[1:]):
        if not g.adj[a] >> b & 1:
            return False
    if require_hamiltonian and seen != g.full_mask:
        return False
    return True


def is_cover_valid(
    g: Graph,
    paths: Sequence[Sequence[int]],
    starts: Sequence[int] | None = None,
    full: bool = True,
) -> bool:
    """True iff ``paths`` are pairwise-disjoint valid paths.

    ``full`` requires the union to be all of V(g); ``starts`` prescribes the
    start vertex of each path, in order matching ``paths``.
    """
    seen = 0
    for p in paths:
        if not is_path_valid(g, p):
            return False
        pm = mask_of(p)
        if seen & pm:
            return False
        seen |= pm
    if full and seen != g.full_mask:
        return False
    if starts is not None:
        if len(starts) != len(paths):
            return False
        for p, s in zip(paths, starts):
            if p[0] != s:
                return False
    return True
