import itertools

import pytest

from hampath import ham3
from hampath.crossover import CrossoverBlocked
from hampath.generators import enumerate_connected_stats, graph_from_code
from hampath.graph import complete_graph, cycle_graph, from_edges, is_cover_valid, is_path_valid, path_graph
from hampath.oracle import oracle_tables
from hampath.verdicts import WrongClassError

P3 = path_graph(3)
C5 = cycle_graph(5)


def test_uv_p3_endpoints():
    got = ham3.decide_path_uv(P3, 0, 2)
    assert got.yes and got.path == (0, 1, 2)


def test_uv_p3_center_blocked():
    got = ham3.decide_path_uv(P3, 0, 1)
    assert not got.yes
    assert got.obstacle.kind == ham3.ENDPOINT_ARTICULATION
    assert got.obstacle.vertices == (1,)


def test_uv_c5_nonadjacent_pair_is_cut():
    got = ham3.decide_path_uv(C5, 0, 2)
    assert not got.yes
    assert got.obstacle.kind == ham3.ENDPOINT_PAIR_TWO_CUT
    assert got.obstacle.vertices == (0, 2)


def test_uv_c5_adjacent_pair():
    got = ham3.decide_path_uv(C5, 0, 1)
    assert got.yes and got.path == (0, 4, 3, 2, 1)


def test_uv_same_side_obstacle():
    # bowtie: two triangles glued at 2; endpoints in one triangle share a side
    g = from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    got = ham3.decide_path_uv(g, 0, 1)
    assert not got.yes
    assert got.obstacle.kind == ham3.SAME_SIDE_OF_ARTICULATION
    assert got.obstacle.vertices == (2,)


def test_from_examples():
    assert not ham3.decide_path_from(P3, 1).yes
    assert ham3.decide_path_from(P3, 0).path == (0, 1, 2)
    got = ham3.decide_path_from(complete_graph(4), 2)
    assert got.yes and got.path[0] == 2


def test_path_cover_examples():
    assert ham3.path_cover_uv(P3, 1, 0) == ([1, 2], [0])
    cover = ham3.path_cover_uv(complete_graph(3), 0, 1)
    assert is_cover_valid(complete_graph(3), cover, starts=(0, 1))
    cover = ham3.path_cover_uv(C5, 0, 2)
    assert is_cover_valid(C5, cover, starts=(0, 2))


def test_gate_rejects_wrong_class():
    with pytest.raises(WrongClassError):
        ham3.decide_path_uv(from_edges(4, [(0, 1), (0, 2), (0, 3)]), 1, 2)  # claw has alpha 3
    with pytest.raises(WrongClassError):
        ham3.decide_path_from(from_edges(3, [(0, 1)]), 0)  # disconnected


def test_crossover_extend_examples():
    got = ham3.crossover_extend(C5, [0, 1], 0, 1)
    assert got == [0, 4, 3, 2, 1]
    got = ham3.crossover_extend(complete_graph(4), [0, 1], 0, 1)
    assert len(got) == 3 and got[0] == 0 and got[-1] == 1
    with pytest.raises(CrossoverBlocked):
        ham3.crossover_extend(C5, [0, 1, 2], 0, 2)


def test_crossover_strictly_increases_until_hamiltonian():
    # complement of C7: 3K1-free and 4-connected
    g = from_edges(
        7,
        [
            (i, j)
            for i in range(7)
            for j in range(i + 1, 7)
            if (j - i) % 7 not in (1, 6)
        ],
    )
    path = [0, 2]
    for _ in range(g.n):
        if len(path) == g.n:
            break
        longer = ham3.crossover_extend(g, path, 0, 2)
        assert len(longer) > len(path)
        path = longer
    assert is_path_valid(g, path, require_hamiltonian=True)
    assert path[0] == 0 and path[-1] == 2


def test_exhaustive_against_oracle_small():
    checked = 0
    for n in range(1, 6):
        for code, alpha in enumerate_connected_stats(n):
            if alpha > 2:
                continue
            g = graph_from_code(n, code)
            tab = oracle_tables(g)
            for u in range(n):
                got = ham3.decide_path_from(g, u)
                assert got.yes == bool(tab.ham_from[u])
                if not got.yes:
                    assert ham3.revalidate_obstacle(g, got.obstacle, u)
            for u, v in itertools.permutations(range(n), 2):
                got = ham3.decide_path_uv(g, u, v)
                assert got.yes == bool(tab.ham_uv[u][v])
                if got.yes:
                    assert got.path[0] == u and got.path[-1] == v
                    assert is_path_valid(g, got.path, require_hamiltonian=True)
                else:
                    assert ham3.revalidate_obstacle(g, got.obstacle, u, v)
                checked += 1
    assert checked > 1000
