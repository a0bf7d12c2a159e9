"""Test corpora: exhaustive small-graph enumeration and seeded random graphs.

Random graphs come from a clique partition (guaranteeing the independence
bound by construction) plus Bernoulli cross edges.  The PRNG is Philox
(``numpy.random.Philox``), whose stream is stable across platforms, so a
GenSpec reproduces byte-identical graphs anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _kernels
from .connectivity import components_masks
from .graph import Graph, bits, from_edges

__all__ = [
    "GenSpec",
    "PRNG_NAME",
    "enumerate_connected",
    "enumerate_connected_stats",
    "random_kk1_free",
    "corpus_line",
    "parse_corpus_line",
]

PRNG_NAME = "philox4x32"

_EDGE_INDEX_CACHE: dict[int, list[tuple[int, int]]] = {}


def _edge_order(n: int) -> list[tuple[int, int]]:
    """Edge index order used by the enumeration codes: (i, j), i < j, colex."""
    if n not in _EDGE_INDEX_CACHE:
        _EDGE_INDEX_CACHE[n] = [(i, j) for j in range(1, n) for i in range(j)]
    return _EDGE_INDEX_CACHE[n]


def graph_from_code(n: int, code: int) -> Graph:
    pairs = _edge_order(n)
    return from_edges(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])


def code_of_graph(g: Graph) -> int:
    code = 0
    for i, (a, b) in enumerate(_edge_order(g.n)):
        if g.has_edge(a, b):
            code |= 1 << i
    return code


def enumerate_connected_stats(
    n: int, lo: int = 0, hi: int | None = None, chunk: int = 1 << 16
) -> Iterator[tuple[int, int]]:
    """(edge-code, independence number) for every connected labelled graph.

    Streams in ascending code order over [lo, hi); kernel-accelerated.
    """
    if not 1 <= n <= 7:
        raise ValueError("exhaustive enumeration is limited to 1 <= n <= 7")
    top = 1 << (n * (n - 1) // 2)
    hi = top if hi is None else min(hi, top)
    kern = _kernels.get()
    pos = lo
    while pos < hi:
        end = min(pos + chunk, hi)
        codes, alphas = kern.enumerate_connected_stats(n, pos, end)
        for c, a in zip(codes.tolist(), alphas.tolist()):
            yield c, a
        pos = end


def enumerate_connected(n: int) -> Iterator[Graph]:
    """All connected labelled graphs on n vertices, ascending edge-code order."""
    for code, _alpha in enumerate_connected_stats(n):
        yield graph_from_code(n, code)


@dataclass(frozen=True)
class GenSpec:
    """Deterministic recipe for one random graph with independence < k."""

    n: int
    k: int
    seed: int
    extra_edge_prob: float = 0.1

    def __post_init__(self):
        if self.k not in (3, 4, 5):
            raise ValueError("class parameter k must be 3, 4 or 5")
        if self.n < self.k - 1:
            raise ValueError("need at least k-1 vertices for k-1 cliques")
        if not 0.0 <= self.extra_edge_prob <= 1.0:
            raise ValueError("edge probability out of range")


def random_kk1_free(spec: GenSpec, connect_repair: bool = False) -> Graph:
    """Random graph with alpha <= k-1: k-1 cliques plus Bernoulli cross edges.

    Contiguous id blocks form the cliques.  ``connect_repair`` adds the minimum
    number of random cross edges joining components.
    """
    rng = np.random.Generator(np.random.Philox(spec.seed))
    parts = spec.k - 1
    # random positive block sizes summing to n
    if parts == 1:
        sizes = [spec.n]
    else:
        cuts = np.sort(rng.choice(np.arange(1, spec.n), size=parts - 1, replace=False))
        bounds = np.concatenate(([0], cuts, [spec.n]))
        sizes = np.diff(bounds).tolist()
    starts = np.cumsum([0] + sizes[:-1]).tolist()
    parts_u = []
    parts_v = []
    for s, size in zip(starts, sizes):
        bi, bj = np.triu_indices(size, 1)
        parts_u.append(bi + s)
        parts_v.append(bj + s)
    # cross pairs in lexicographic order, one Bernoulli draw each
    block = np.empty(spec.n, dtype=np.int64)
    for b, (s, size) in enumerate(zip(starts, sizes)):
        block[s : s + size] = b
    iu, ju = np.triu_indices(spec.n, 1)
    keep = block[iu] != block[ju]
    iu, ju = iu[keep], ju[keep]
    if len(iu):
        chosen = rng.random(len(iu)) < spec.extra_edge_prob
        parts_u.append(iu[chosen])
        parts_v.append(ju[chosen])
    edges = np.stack([np.concatenate(parts_u), np.concatenate(parts_v)], axis=1)
    g = from_edges(spec.n, edges)
    if connect_repair:
        extra: list[tuple[int, int]] = []
        comps = components_masks(g, 0)
        while len(comps) > 1:
            first = list(bits(comps[0]))
            second = list(bits(comps[1]))
            a = first[int(rng.integers(len(first)))]
            b = second[int(rng.integers(len(second)))]
            extra.append((a, b))
            g = from_edges(spec.n, np.concatenate([edges, np.array(extra)]))
            comps = components_masks(g, 0)
    return g


def corpus_line(g: Graph) -> str:
    """One-graph-per-line dump format: ``n:m:u-v,u-v,...``."""
    body = ",".join(f"{a}-{b}" for a, b in g.edges())
    return f"{g.n}:{g.m}:{body}"


def parse_corpus_line(line: str) -> Graph:
    head, mid, body = line.strip().split(":")
    n, m = int(head), int(mid)
    edges = []
    if body:
        for item in body.split(","):
            a, b = item.split("-")
            edges.append((int(a), int(b)))
    g = from_edges(n, edges)
    if g.m != m:
        raise ValueError(f"corpus line claims {m} edges, found {g.m}")
    return g
