import itertools

import pytest

from hampath import ham4
from hampath.generators import enumerate_connected_stats, graph_from_code
from hampath.graph import cycle_graph, from_edges, is_cover_valid, is_path_valid, path_graph
from hampath.oracle import oracle_tables
from hampath.verdicts import WrongClassError

CLAW = from_edges(4, [(0, 1), (0, 2), (0, 3)])
NET = from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
CHAIR = from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
K23 = from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
TWO_TRIANGLES = from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])


def test_ham_claw_no_with_cover():
    got = ham4.decide_ham_path(CLAW)
    assert not got.yes
    assert got.obstacle.kind == ham4.ART_THREE_WAYS and got.obstacle.vertices == (0,)
    assert len(got.cover) == 2 and is_cover_valid(CLAW, got.cover)


def test_ham_net_graph_triangle_obstacle():
    got = ham4.decide_ham_path(NET)
    assert not got.yes
    assert got.obstacle.kind == ham4.ART_TRIANGLE
    assert got.obstacle.vertices == (0, 1, 2)
    assert len(got.cover) == 2 and is_cover_valid(NET, got.cover)


def test_ham_chair_three_way_split():
    got = ham4.decide_ham_path(CHAIR)
    assert not got.yes
    assert got.obstacle.kind == ham4.ART_THREE_WAYS and got.obstacle.vertices == (1,)


def test_ham_c5_yes():
    got = ham4.decide_ham_path(cycle_graph(5))
    assert got.yes and is_path_valid(cycle_graph(5), got.path, require_hamiltonian=True)


def test_from_p4_examples():
    p4 = path_graph(4)
    got = ham4.decide_path_from(p4, 1)
    assert not got.yes and got.obstacle.kind == ham4.START_ARTICULATION
    got = ham4.decide_path_from(p4, 0)
    assert got.yes and got.path == (0, 1, 2, 3)


def test_from_k23_pair_splits_three_ways():
    # u=0 and x=1 leave three isolated vertices; yet a Hamiltonian path exists
    assert ham4.decide_ham_path(K23).yes
    got = ham4.decide_path_from(K23, 0)
    assert not got.yes
    assert got.obstacle.kind == ham4.START_PAIR_THREE_WAYS
    assert got.obstacle.vertices == (1,)


def test_pc_claw_examples():
    got = ham4.path_cover_uv(CLAW, 1, 2)
    assert got.yes and is_cover_valid(CLAW, got.cover, starts=(1, 2))
    got = ham4.path_cover_uv(CLAW, 0, 1)
    assert not got.yes and got.obstacle.kind == ham4.PC_TRIPLE_SPLIT
    assert got.obstacle.vertices == (0,)


def test_pc_disconnected_two_triangles():
    got = ham4.path_cover_uv(TWO_TRIANGLES, 0, 3)
    assert got.yes and is_cover_valid(TWO_TRIANGLES, got.cover, starts=(0, 3))
    got = ham4.path_cover_uv(TWO_TRIANGLES, 0, 1)
    assert not got.yes and got.obstacle.kind == ham4.PC_DISCONNECTED


def test_pc_net_graph_pendant_pair():
    got = ham4.path_cover_uv(NET, 3, 4)
    assert got.yes and is_cover_valid(NET, got.cover, starts=(3, 4))


def test_gate_rejects_wrong_class():
    k14 = from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])  # alpha = 4
    with pytest.raises(WrongClassError):
        ham4.decide_ham_path(k14)
    with pytest.raises(WrongClassError):
        ham4.decide_ham_path(TWO_TRIANGLES)  # disconnected


def test_monotone_with_start_decision():
    # a Yes start-vertex decision implies a Yes existence decision
    for code, alpha in enumerate_connected_stats(5):
        if alpha > 3:
            continue
        g = graph_from_code(5, code)
        if any(ham4.decide_path_from(g, u).yes for u in range(5)):
            assert ham4.decide_ham_path(g).yes


def test_exhaustive_against_oracle_small():
    for n in range(1, 6):
        for code, alpha in enumerate_connected_stats(n):
            if alpha > 3:
                continue
            g = graph_from_code(n, code)
            tab = oracle_tables(g)
            got = ham4.decide_ham_path(g)
            assert got.yes == tab.ham_any
            if not got.yes:
                assert len(got.cover) == 2 and is_cover_valid(g, got.cover)
                assert ham4.revalidate_obstacle(g, got.obstacle)
            for u in range(n):
                got = ham4.decide_path_from(g, u)
                assert got.yes == bool(tab.ham_from[u]), (n, code, u)
                if not got.yes:
                    assert ham4.revalidate_obstacle(g, got.obstacle, u), (n, code, u)
            for u, v in itertools.permutations(range(n), 2):
                got = ham4.path_cover_uv(g, u, v)
                assert got.yes == bool(tab.pc_uv[u][v]), (n, code, u, v)
                if got.yes:
                    assert is_cover_valid(g, got.cover, starts=(u, v))
                else:
                    assert ham4.revalidate_obstacle(g, got.obstacle, u, v), (n, code, u, v)


def test_agrees_with_ham3_on_smaller_class():
    # on 3K1-free inputs the 4K1-free start decision coincides with the
    # 3K1-free one, and existence is equivalent to some feasible start
    from hampath import ham3

    for code, alpha in enumerate_connected_stats(5):
        if alpha > 2:
            continue
        g = graph_from_code(5, code)
        starts = []
        for u in range(5):
            a = ham3.decide_path_from(g, u).yes
            b = ham4.decide_path_from(g, u).yes
            assert a == b, (code, u)
            starts.append(a)
        assert ham4.decide_ham_path(g).yes == any(starts)
