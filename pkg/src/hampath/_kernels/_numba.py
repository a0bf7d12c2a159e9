"""Numba-jitted kernels; signatures and outputs match ``_numpy`` exactly."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def articulation_mask(n, indptr, indices):
    art = np.zeros(n, dtype=np.uint8)
    disc = np.full(n, -1, dtype=np.int64)
    low = np.zeros(n, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    pos = np.zeros(n, dtype=np.int64)
    stack = np.empty(n, dtype=np.int64)
    time = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        disc[root] = time
        low[root] = time
        time += 1
        pos[root] = indptr[root]
        stack[0] = root
        top = 1
        while top:
            v = stack[top - 1]
            if pos[v] < indptr[v + 1]:
                w = indices[pos[v]]
                pos[v] += 1
                if w == parent[v]:
                    continue
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = time
                    low[w] = time
                    time += 1
                    pos[w] = indptr[w]
                    stack[top] = w
                    top += 1
                    if v == root:
                        root_children += 1
                else:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                top -= 1
                p = parent[v]
                if p != -1:
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if p != root and low[v] >= disc[p]:
                        art[p] = 1
        if root_children >= 2:
            art[root] = 1
    return art


@njit(cache=True)
def component_labels(n, indptr, indices, removed):
    labels = np.full(n, -1, dtype=np.int32)
    count = 0
    stack = np.empty(n, dtype=np.int64)
    for s in range(n):
        if removed[s] or labels[s] != -1:
            continue
        labels[s] = count
        stack[0] = s
        top = 1
        while top:
            top -= 1
            v = stack[top]
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if removed[w] == 0 and labels[w] == -1:
                    labels[w] = count
                    stack[top] = w
                    top += 1
        count += 1
    return labels, count


@njit(cache=True)
def enumerate_connected_stats(n, lo, hi):
    cap = hi - lo
    codes = np.empty(cap, dtype=np.int64)
    alphas = np.empty(cap, dtype=np.int8)
    out = 0
    full = (1 << n) - 1
    adj = np.zeros(n, dtype=np.int64)
    for code in range(lo, hi):
        for v in range(n):
            adj[v] = 0
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
            k = 0
            ok = True
            for v in range(n):
                if sub >> v & 1:
                    k += 1
                    if adj[v] & sub:
                        ok = False
                        break
            if ok and k > alpha:
                alpha = k
        codes[out] = code
        alphas[out] = alpha
        out += 1
    return codes[:out].copy(), alphas[:out].copy()


@njit(cache=True)
def ham_reach(adj):
    n = len(adj)
    size = 1 << n
    reach = np.zeros((n, size), dtype=np.int64)
    for s in range(n):
        reach[s, 1 << s] = 1 << s
        for mask in range(size):
            ends = reach[s, mask]
            if ends == 0 or mask >> s & 1 == 0:
                continue
            for last in range(n):
                if ends >> last & 1 == 0:
                    continue
                nxt = adj[last] & ~mask
                for v in range(n):
                    if nxt >> v & 1:
                        reach[s, mask | (1 << v)] |= 1 << v
    return reach


@njit(cache=True)
def oracle_tables_from_reach(adj, reach):
    n = len(adj)
    full = (1 << n) - 1
    ham_uv = np.zeros((n, n), dtype=np.uint8)
    ham_from = np.zeros(n, dtype=np.uint8)
    pc = np.zeros((n, n), dtype=np.uint8)
    for u in range(n):
        ends = reach[u, full]
        if ends:
            ham_from[u] = 1
        for v in range(n):
            if ends >> v & 1:
                ham_uv[u, v] = 1
    for u in range(n):
        for mask in range(1 << n):
            if mask >> u & 1 == 0 or reach[u, mask] == 0:
                continue
            rest = full & ~mask
            if rest == 0:
                continue
            for w in range(n):
                if rest >> w & 1 and reach[w, rest]:
                    pc[u, w] = 1
    return ham_uv, ham_from, pc


@njit(cache=True)
def ham_ends(adj):
    n = len(adj)
    size = 1 << n
    ends = np.zeros(size, dtype=np.int64)
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(size):
        cur = ends[mask]
        if cur == 0:
            continue
        for last in range(n):
            if cur >> last & 1 == 0:
                continue
            nxt = adj[last] & ~mask
            for v in range(n):
                if nxt >> v & 1:
                    ends[mask | (1 << v)] |= 1 << v
    return ends


@njit(cache=True)
def ham_reach_single(adj, s):
    n = len(adj)
    size = 1 << n
    row = np.zeros(size, dtype=np.int64)
    row[1 << s] = 1 << s
    for mask in range(size):
        ends = row[mask]
        if ends == 0 or mask >> s & 1 == 0:
            continue
        for last in range(n):
            if ends >> last & 1 == 0:
                continue
            nxt = adj[last] & ~mask
            for v in range(n):
                if nxt >> v & 1:
                    row[mask | (1 << v)] |= 1 << v
    return row
