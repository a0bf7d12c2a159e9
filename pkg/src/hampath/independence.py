"""Independence number bounds and class membership (kK1-freeness).

The class gate only ever needs independent sets up to size 5.  The search is
branch-and-prune over vertices in id order; a greedy clique cover provides the
pruning bound, which also makes the "no larger set" direction cheap on the
clique-partition graphs the generators emit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits

__all__ = ["ClassLabel", "has_independent_set", "classify", "greedy_clique_cover"]

_MAX_K = 5


@dataclass(frozen=True)
class ClassLabel:
    """Smallest class bound alpha_bound in {2,3,4} (or None for "above").

    ``witness`` is the lexicographically least maximum independent set found,
    capped at size 5.  alpha_bound = 2 means 3K1-free, 3 means 4K1-free,
    4 means 5K1-free; None means alpha >= 5.
    """

    alpha_bound: int | None
    witness: tuple[int, ...]

    @property
    def alpha(self) -> int:
        return len(self.witness)

    @property
    def label(self) -> str:
        if self.alpha_bound is None:
            return "above"
        return f"{self.alpha_bound + 1}K1-free"

    def admits(self, k: int) -> bool:
        """True iff the graph is kK1-free."""
        return self.alpha_bound is not None and self.alpha_bound <= k - 1


def greedy_clique_cover(g: Graph) -> list[int]:
    """Clique vertex-masks covering V(g); greedy in ascending id order."""

    def build():
        covered = 0
        cliques = []
        for v in range(g.n):
            vbit = 1 << v
            if covered & vbit:
                continue
            clique = vbit
            cand = g.adj[v] & ~covered
            while cand:
                ubit = cand & -cand
                clique |= ubit
                cand &= g.adj[ubit.bit_length() - 1]
            cliques.append(clique)
            covered |= clique
        return cliques

    return g.cached("clique_cover", build)


def has_independent_set(g: Graph, k: int):
    """Lexicographically least independent set of size k, or None.

    Capped at k <= 5: the library only reasons about alpha <= 4.
    """
    if k < 1:
        raise ValueError("independent set size must be >= 1")
    if k > _MAX_K:
        raise ValueError(f"independence search capped at k={_MAX_K}")
    if k > g.n:
        return None
    cover = greedy_clique_cover(g)

    chosen: list[int] = []

    def bound(cand: int) -> int:
        hits = 0
        for cl in cover:
            if cl & cand:
                hits += 1
                if hits >= k:  # bound only needs to reach k
                    break
        return hits

    def extend(cand: int, start: int) -> bool:
        if len(chosen) == k:
            return True
        if len(chosen) + bound(cand) < k:
            return False
        sub = cand >> start << start
        for v in bits(sub):
            chosen.append(v)
            if extend(cand & ~g.adj[v] & ~(1 << v), v + 1):
                return True
            chosen.pop()
        return False

    if extend(g.full_mask, 0):
        return tuple(chosen)
    return None


def classify(g: Graph) -> ClassLabel:
    """Class membership: 3K1-/4K1-/5K1-free, or "above" when alpha >= 5."""
    if g.n < 1:
        raise ValueError("classify requires a nonempty graph")
    best: tuple[int, ...] = (0,) if g.n else ()
    for k in (2, 3, 4, 5):
        found = has_independent_set(g, k)
        if found is None:
            return ClassLabel(alpha_bound=max(k - 1, 2), witness=best)
        best = found
    return ClassLabel(alpha_bound=None, witness=best)
