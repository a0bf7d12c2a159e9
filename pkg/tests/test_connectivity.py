import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hampath.connectivity import (
    FanError,
    _disjoint_fan,
    articulation_points,
    components,
    components_masks,
    min_cut_size_at_most,
    path_fan,
    two_cuts_containing,
    vertex_connectivity_small,
)
from hampath.graph import complete_graph, cycle_graph, from_edges, mask_of, path_graph

CLAW = from_edges(4, [(0, 1), (0, 2), (0, 3)])
NET = from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def test_components_claw_center_removed():
    dec = components(CLAW, {0})
    assert dec.components == ((1,), (2,), (3,))


def test_components_c5_two_removed():
    dec = components(cycle_graph(5), {0, 2})
    assert dec.components == ((1,), (3, 4))


def test_components_k4_one_removed():
    dec = components(complete_graph(4), {0})
    assert dec.components == ((1, 2, 3),)


def test_articulation_points_examples():
    assert articulation_points(path_graph(3)) == {1}
    assert articulation_points(cycle_graph(5)) == set()
    assert articulation_points(NET) == {0, 1, 2}


def test_articulation_points_rejects_disconnected():
    with pytest.raises(ValueError):
        articulation_points(from_edges(4, [(0, 1), (2, 3)]))


def test_min_cut_examples():
    assert min_cut_size_at_most(path_graph(3), 3) == (1, (1,))
    size, cut = min_cut_size_at_most(cycle_graph(5), 3)
    assert size == 2 and not cycle_graph(5).has_edge(*cut)
    assert min_cut_size_at_most(complete_graph(4), 2) == (None, None)
    assert min_cut_size_at_most(complete_graph(3), 2) == (2, None)


def test_two_cuts_c5_all_nonadjacent_pairs():
    g = cycle_graph(5)
    got = {dec.cut for dec in two_cuts_containing(g)}
    want = {
        (a, b)
        for a, b in itertools.combinations(range(5), 2)
        if not g.has_edge(a, b)
    }
    assert got == want and len(got) == 5


def test_two_cuts_k4_empty():
    assert list(two_cuts_containing(complete_graph(4))) == []


def test_two_cuts_p4_fixed():
    g = path_graph(4)
    got = [dec.cut for dec in two_cuts_containing(g, fixed=1)]
    assert got == [(1, 2), (1, 3)]


def test_two_cuts_against_definition_small():
    for n in (4, 5, 6):
        for _ in range(1):
            pass
        for code in range(0, 1 << (n * (n - 1) // 2), 7):
            from hampath.generators import graph_from_code

            g = graph_from_code(n, code)
            if len(components_masks(g, 0)) != 1:
                continue
            got = {dec.cut for dec in two_cuts_containing(g)}
            want = {
                pair
                for pair in itertools.combinations(range(n), 2)
                if len(components_masks(g, mask_of(pair))) >= 2
            }
            assert got == want, (n, code)


def test_path_fan_k4():
    fan = path_fan(complete_graph(4), 0, {1, 2, 3}, 3)
    assert fan.paths == ((0, 1), (0, 2), (0, 3))


def test_path_fan_c5():
    fan = path_fan(cycle_graph(5), 0, {2, 3}, 2)
    assert fan.paths == ((0, 1, 2), (0, 4, 3))


def test_path_fan_p3():
    fan = path_fan(path_graph(3), 0, {2}, 1)
    assert fan.paths == ((0, 1, 2),)


def test_path_fan_detects_broken_precondition():
    with pytest.raises(FanError):
        path_fan(path_graph(4), 0, {2, 3}, 2)  # path graph is only 1-connected


def _fan_invariants(g, fan, y_set):
    seen_interior = set()
    for p in fan.paths:
        assert p[0] == fan.center and p[-1] in y_set
        interior = set(p[1:-1])
        assert not interior & y_set
        assert not interior & seen_interior
        seen_interior |= interior
        for a, b in zip(p, p[1:]):
            assert g.has_edge(a, b)
    assert len({p[-1] for p in fan.paths}) == len(fan.paths)


def test_fan_invariants_on_samples():
    from hampath.generators import graph_from_code

    for n in (5, 6):
        for code in range(1, 1 << (n * (n - 1) // 2), 97):
            g = graph_from_code(n, code)
            if len(components_masks(g, 0)) != 1:
                continue
            kappa = vertex_connectivity_small(g)
            if kappa < 1:
                continue
            y_set = set(range(1, min(n, 4)))
            if 0 in y_set:
                continue
            fan = path_fan(g, 0, y_set, min(kappa, 3))
            _fan_invariants(g, fan, y_set)


def _kappa_by_fans(g):
    """Independent connectivity oracle via max internally disjoint s-t paths.

    kappa(s, t) for nonadjacent s, t equals the max fan from s into N(t) with
    t itself excluded; the global connectivity is the minimum over pairs.
    """
    n = g.n
    if all(g.adj[v] == g.full_mask ^ (1 << v) for v in range(n)):
        return n - 1
    best = n - 1
    for s in range(n):
        for t in range(n):
            if s == t or g.has_edge(s, t):
                continue
            nt = g.adj[t]
            paths = _disjoint_fan(g, s, nt, nt | (1 << t), n)
            best = min(best, len(paths))
    return best


def test_min_cut_agrees_with_flow_oracle():
    from hampath.generators import enumerate_connected_stats, graph_from_code

    for n in range(2, 6):
        for code, _alpha in enumerate_connected_stats(n):
            g = graph_from_code(n, code)
            size, cut = min_cut_size_at_most(g, 3)
            kappa = _kappa_by_fans(g)
            if size is None:
                assert kappa > 3
            else:
                assert size == kappa
                if cut is not None:
                    assert len(components_masks(g, mask_of(cut))) >= 2


@settings(deadline=None, max_examples=120)
@given(st.integers(0, (1 << 15) - 1))
def test_articulation_matches_removal_definition(code):
    from hampath.generators import graph_from_code

    g = graph_from_code(6, code)
    if len(components_masks(g, 0)) != 1:
        return
    art = articulation_points(g)
    want = {v for v in range(6) if len(components_masks(g, 1 << v)) > 1}
    assert art == want


def test_emitted_two_cuts_revalidate_through_components():
    from hampath.generators import graph_from_code

    for code in range(0, 1 << 10, 3):
        g = graph_from_code(5, code)
        if len(components_masks(g, 0)) != 1:
            continue
        for dec in two_cuts_containing(g):
            again = components(g, dec.cut)
            assert again == dec
            assert len(dec.components) >= 2
