import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hampath.graph import (
    GraphError,
    complete_graph,
    cycle_graph,
    from_edges,
    induced,
    is_cover_valid,
    is_path_valid,
    path_graph,
)


def test_from_edges_path_graph_degrees():
    g = from_edges(3, [(0, 1), (1, 2)])
    assert [g.degree(v) for v in range(3)] == [1, 2, 1]


def test_from_edges_collapses_duplicates():
    g = from_edges(3, [(0, 1), (1, 0)])
    assert g.m == 1
    assert g.has_edge(0, 1) and g.has_edge(1, 0)


def test_from_edges_singleton():
    g = from_edges(1, [])
    assert g.n == 1 and g.m == 0


def test_from_edges_rejects_self_loop():
    with pytest.raises(GraphError):
        from_edges(2, [(1, 1)])


def test_from_edges_rejects_out_of_range():
    with pytest.raises(GraphError):
        from_edges(2, [(0, 2)])


def test_induced_k3_pair_is_edge():
    sub, mapping = induced(complete_graph(3), {0, 1})
    assert sub.n == 2 and sub.m == 1
    assert mapping == {0: 0, 1: 1}


def test_induced_p3_endpoints_no_edges():
    sub, _ = induced(path_graph(3), {0, 2})
    assert sub.n == 2 and sub.m == 0


def test_induced_c5_three_consecutive_is_path():
    sub, mapping = induced(cycle_graph(5), {0, 1, 2})
    # C5 edges among {0,1,2} are 01 and 12 only
    assert sub.m == 2
    assert sub.has_edge(mapping[0], mapping[1]) and sub.has_edge(mapping[1], mapping[2])
    assert not sub.has_edge(mapping[0], mapping[2])


def test_induced_full_set_is_identity():
    g = cycle_graph(6)
    sub, mapping = induced(g, range(6))
    assert sub == g and mapping == {v: v for v in range(6)}


def test_is_path_valid_examples():
    p3 = path_graph(3)
    assert is_path_valid(p3, [0, 1, 2], require_hamiltonian=True)
    assert not is_path_valid(p3, [0, 2])
    assert is_path_valid(cycle_graph(5), [0, 1, 2, 3, 4], require_hamiltonian=True)
    assert not is_path_valid(p3, [])
    assert not is_path_valid(p3, [0, 1, 0])
    assert not is_path_valid(p3, [0, 1], require_hamiltonian=True)


def test_cover_validity():
    claw = from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert is_cover_valid(claw, [[1, 0, 3], [2]], starts=(1, 2))
    assert not is_cover_valid(claw, [[1, 0, 3], [3]])  # overlap
    assert not is_cover_valid(claw, [[1, 0, 3]])  # misses vertex 2


edge_lists = st.integers(2, 8).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                lambda e: e[0] != e[1]
            ),
            max_size=20,
        ),
    )
)


@settings(deadline=None, max_examples=200)
@given(edge_lists)
def test_from_edges_roundtrips_edge_set(case):
    n, edges = case
    g = from_edges(n, edges)
    rebuilt = from_edges(n, list(g.edges()))
    assert rebuilt == g
    assert {tuple(sorted(e)) for e in edges} == set(g.edges())
