"""Pure numpy/python twins of the numba kernels.

Reference implementations: correct at any size, slower at benchmark sizes.
The numba backend must agree with these bit for bit.
"""

from __future__ import annotations

import numpy as np


def articulation_mask(n: int, indptr: np.ndarray, indices: np.ndarray) -> np.ndarray:
    """Articulation vertices via iterative lowpoint DFS over all roots."""
    art = np.zeros(n, dtype=np.uint8)
    disc = np.full(n, -1, dtype=np.int64)
    low = np.zeros(n, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    pos = np.zeros(n, dtype=np.int64)
    time = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        disc[root] = low[root] = time
        time += 1
        pos[root] = indptr[root]
        stack = [root]
        while stack:
            v = stack[-1]
            if pos[v] < indptr[v + 1]:
                w = int(indices[pos[v]])
                pos[v] += 1
                if w == parent[v]:
                    continue
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = low[w] = time
                    time += 1
                    pos[w] = indptr[w]
                    stack.append(w)
                    if v == root:
                        root_children += 1
                else:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                p = parent[v]
                if p != -1:
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if p != root and low[v] >= disc[p]:
                        art[p] = 1
        if root_children >= 2:
            art[root] = 1
    return art


def component_labels(
    n: int, indptr: np.ndarray, indices: np.ndarray, removed: np.ndarray
) -> tuple[np.ndarray, int]:
    """Connected-component labels of the graph minus ``removed`` vertices.

    Removed vertices get label -1; components are numbered in ascending order
    of their minimum vertex id.
    """
    labels = np.full(n, -1, dtype=np.int32)
    count = 0
    stack = np.empty(n, dtype=np.int64)
    for s in range(n):
        if removed[s] or labels[s] != -1:
            continue
        labels[s] = count
        top = 0
        stack[0] = s
        top = 1
        while top:
            top -= 1
            v = int(stack[top])
            for k in range(indptr[v], indptr[v + 1]):
                w = int(indices[k])
                if not removed[w] and labels[w] == -1:
                    labels[w] = count
                    stack[top] = w
                    top += 1
        count += 1
    return labels, count


def enumerate_connected_stats(n: int, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    """Scan labelled-graph edge codes in [lo, hi); keep connected ones.

    Edge code: bit ``j*(j-1)//2 + i`` set iff edge (i, j) with i < j present.
    Returns the connected codes and their independence numbers.
    """
    codes = []
    alphas = []
    full = (1 << n) - 1
    for code in range(lo, hi):
        adj = [0] * n
        idx = 0
        for j in range(1, n):
            for i in range(j):
                if code >> idx & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                idx += 1
        reach = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in range(n):
                if frontier >> v & 1:
                    nxt |= adj[v]
            frontier = nxt & ~reach
            reach |= frontier
        if reach != full:
            continue
        alpha = 1
        for sub in range(1, 1 << n):
            k = bin(sub).count("1")
            if k <= alpha:
                continue
            ok = True
            for v in range(n):
                if sub >> v & 1 and adj[v] & sub:
                    ok = False
                    break
            if ok:
                alpha = k
        codes.append(code)
        alphas.append(alpha)
    return np.array(codes, dtype=np.int64), np.array(alphas, dtype=np.int8)


def ham_reach(adj: np.ndarray) -> np.ndarray:
    """Per-start path DP over vertex subsets.

    ``reach[s, mask]`` is the bitmask of vertices that can terminate a path
    which starts at ``s`` and covers exactly ``mask``.  Requires n <= 20.
    """
    n = len(adj)
    size = 1 << n
    reach = np.zeros((n, size), dtype=np.int64)
    for s in range(n):
        row = reach[s]
        row[1 << s] = 1 << s
        for mask in range(size):
            ends = int(row[mask])
            if not ends or not mask >> s & 1:
                continue
            for last in range(n):
                if not ends >> last & 1:
                    continue
                nxt = int(adj[last]) & ~mask
                while nxt:
                    bit = nxt & -nxt
                    v = bit.bit_length() - 1
                    row[mask | bit] |= bit
                    nxt ^= bit
    return reach


def oracle_tables_from_reach(
    adj: np.ndarray, reach: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Derive (u,v)-path, from-u-path and two-path-cover tables from the DP."""
    n = len(adj)
    full = (1 << n) - 1
    ham_uv = np.zeros((n, n), dtype=np.uint8)
    ham_from = np.zeros(n, dtype=np.uint8)
    pc = np.zeros((n, n), dtype=np.uint8)
    for u in range(n):
        ends = int(reach[u, full])
        if ends:
            ham_from[u] = 1
        for v in range(n):
            if ends >> v & 1:
                ham_uv[u][v] = 1
    for u in range(n):
        for mask in range(1 << n):
            if not mask >> u & 1 or not reach[u, mask]:
                continue
            rest = full & ~mask
            if rest == 0:
                continue
            v = rest
            while v:
                bit = v & -v
                w = bit.bit_length() - 1
                if reach[w, rest]:
                    pc[u][w] = 1
                v ^= bit
    return ham_uv, ham_from, pc


def ham_ends(adj: np.ndarray) -> np.ndarray:
    """Any-start path DP: ends[mask] = bitmask of feasible path endpoints.

    A path "covering mask ending at v" exists iff bit v of ends[mask] is set;
    by reversal the same table answers "starting at v".
    """
    n = len(adj)
    size = 1 << n
    ends = np.zeros(size, dtype=np.int64)
    for v in range(n):
        ends[1 << v] = np.int64(1 << v)
    for mask in range(size):
        cur = int(ends[mask])
        if not cur:
            continue
        for last in range(n):
            if not cur >> last & 1:
                continue
            nxt = int(adj[last]) & ~mask
            while nxt:
                bit = nxt & -nxt
                ends[mask | bit] |= bit
                nxt ^= bit
    return ends


def ham_reach_single(adj: np.ndarray, s: int) -> np.ndarray:
    """One start's row of the per-start path DP (see ``ham_reach``)."""
    n = len(adj)
    size = 1 << n
    row = np.zeros(size, dtype=np.int64)
    row[1 << s] = np.int64(1 << s)
    for mask in range(size):
        ends = int(row[mask])
        if not ends or not mask >> s & 1:
            continue
        for last in range(n):
            if not ends >> last & 1:
                continue
            nxt = int(adj[last]) & ~mask
            while nxt:
                bit = nxt & -nxt
                row[mask | bit] |= bit
                nxt ^= bit
    return row
