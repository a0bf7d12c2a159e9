"""The numba kernels must agree bit for bit with the numpy fallbacks."""

import numpy as np
import pytest

from hampath._kernels import _numpy

numba_backend = pytest.importorskip("hampath._kernels._numba")

from hampath.generators import GenSpec, random_kk1_free  # noqa: E402
from hampath.graph import from_edges  # noqa: E402


def _random_graph(seed, n=40, k=4):
    return random_kk1_free(GenSpec(n=n, k=k, seed=seed, extra_edge_prob=0.15), connect_repair=True)


@pytest.mark.parametrize("seed", range(6))
def test_articulation_kernels_agree(seed):
    g = _random_graph(seed)
    indptr, indices = g.csr()
    a = _numpy.articulation_mask(g.n, indptr, indices)
    b = numba_backend.articulation_mask(g.n, indptr, indices)
    assert np.array_equal(a, b)


@pytest.mark.parametrize("seed", range(6))
def test_component_kernels_agree(seed):
    g = _random_graph(seed, n=30)
    indptr, indices = g.csr()
    rng = np.random.default_rng(seed)
    removed = (rng.random(g.n) < 0.2).astype(np.uint8)
    la, ca = _numpy.component_labels(g.n, indptr, indices, removed)
    lb, cb = numba_backend.component_labels(g.n, indptr, indices, removed)
    assert ca == cb and np.array_equal(la, lb)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_enumeration_kernels_agree(n):
    top = 1 << (n * (n - 1) // 2)
    ca, aa = _numpy.enumerate_connected_stats(n, 0, top)
    cb, ab = numba_backend.enumerate_connected_stats(n, 0, top)
    assert np.array_equal(ca, cb) and np.array_equal(aa, ab)


@pytest.mark.parametrize("seed", range(4))
def test_dp_kernels_agree(seed):
    g = _random_graph(seed, n=9, k=3)
    adj = g.adj_array()
    ra = _numpy.ham_reach(adj)
    rb = numba_backend.ham_reach(adj)
    assert np.array_equal(ra, rb)
    ta = _numpy.oracle_tables_from_reach(adj, ra)
    tb = numba_backend.oracle_tables_from_reach(adj, rb)
    for x, y in zip(ta, tb):
        assert np.array_equal(x, y)
    ea = _numpy.ham_ends(adj)
    eb = numba_backend.ham_ends(adj)
    assert np.array_equal(ea, eb)


def test_ends_consistent_with_reach():
    g = from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    adj = g.adj_array()
    reach = _numpy.ham_reach(adj)
    ends = _numpy.ham_ends(adj)
    full = (1 << g.n) - 1
    # a full path ends at v iff some start reaches v over the full mask
    want = 0
    for s in range(g.n):
        want |= int(reach[s, full])
    assert int(ends[full]) == want


def test_backend_selection_roundtrip():
    from hampath import _kernels

    original = _kernels.backend_name()
    _kernels.set_backend("numpy")
    assert _kernels.backend_name() == "numpy"
    _kernels.set_backend("numba")
    assert _kernels.backend_name() == "numba"
    _kernels.set_backend(original)
