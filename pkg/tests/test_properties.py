"""Property tests: random small instances against the oracle and invariants."""

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from hampath import ham3, ham4, ham5
from hampath.connectivity import components_masks, path_fan, vertex_connectivity_small
from hampath.generators import GenSpec, graph_from_code, random_kk1_free
from hampath.graph import is_cover_valid, is_path_valid, mask_of
from hampath.independence import classify
from hampath.oracle import brute_ham_path, brute_pc_uv, exact_alpha, oracle_tables

SETTINGS = settings(deadline=None, max_examples=150)

codes7 = st.integers(0, (1 << 21) - 1)


def _connected(g):
    return g.n > 0 and len(components_masks(g, 0)) == 1


@SETTINGS
@given(codes7)
def test_decisions_match_oracle_on_random_codes(code):
    g = graph_from_code(7, code)
    if not _connected(g):
        return
    alpha = exact_alpha(g)
    tab = oracle_tables(g)
    if alpha <= 2:
        for u, v in itertools.permutations(range(7), 2):
            assert ham3.decide_path_uv(g, u, v).yes == bool(tab.ham_uv[u][v])
    if alpha <= 3:
        assert ham4.decide_ham_path(g).yes == tab.ham_any
        for u in range(7):
            assert ham4.decide_path_from(g, u).yes == bool(tab.ham_from[u])
    if alpha <= 4:
        assert ham5.decide_ham_path(g).yes == tab.ham_any


@SETTINGS
@given(codes7, st.integers(0, 6), st.integers(0, 6))
def test_ham4_cover_matches_oracle(code, u, v):
    if u == v:
        return
    g = graph_from_code(7, code)
    if not _connected(g) or exact_alpha(g) > 3:
        return
    tab = oracle_tables(g)
    got = ham4.path_cover_uv(g, u, v)
    assert got.yes == bool(tab.pc_uv[u][v])
    if got.yes:
        assert is_cover_valid(g, got.cover, starts=(u, v))
    else:
        assert ham4.revalidate_obstacle(g, got.obstacle, u, v)


@SETTINGS
@given(codes7)
def test_every_verdict_carries_checkable_evidence(code):
    g = graph_from_code(7, code)
    if not _connected(g) or exact_alpha(g) > 3:
        return
    got = ham4.decide_ham_path(g)
    if got.yes:
        assert is_path_valid(g, got.path, require_hamiltonian=True)
    else:
        assert len(got.cover) == 2 and is_cover_valid(g, got.cover)
        assert ham4.revalidate_obstacle(g, got.obstacle)


@SETTINGS
@given(codes7, st.integers(0, 6), st.sets(st.integers(0, 6), min_size=1, max_size=4))
def test_fan_output_invariants(code, x, targets):
    g = graph_from_code(7, code)
    if not _connected(g) or x in targets:
        return
    kappa = vertex_connectivity_small(g)
    if kappa < 1:
        return
    fan = path_fan(g, x, targets, min(kappa, 3))
    assert len(fan.paths) == min(min(kappa, 3), len(targets))
    tmask = mask_of(targets)
    interior_seen = 0
    for p in fan.paths:
        assert p[0] == x and p[-1] in targets
        inner = mask_of(p[1:-1])
        assert not inner & tmask and not inner & interior_seen
        interior_seen |= inner
        for a, b in zip(p, p[1:]):
            assert g.has_edge(a, b)


@SETTINGS
@given(st.integers(6, 11), st.sampled_from([3, 4, 5]), st.integers(0, 10_000))
def test_generator_class_bound_and_brute_match(n, k, seed):
    if n < k - 1:
        return
    g = random_kk1_free(GenSpec(n=n, k=k, seed=seed, extra_edge_prob=0.15), connect_repair=True)
    label = classify(g)
    assert label.admits(k)
    alpha = exact_alpha(g)
    assert alpha <= k - 1
    module = ham4 if alpha <= 3 else ham5
    assert module.decide_ham_path(g).yes == (brute_ham_path(g) is not None)


@SETTINGS
@given(codes7, st.integers(0, 6), st.integers(0, 6))
def test_pc_oracle_agrees_with_split_construction(code, u, v):
    if u == v:
        return
    g = graph_from_code(7, code)
    if not _connected(g):
        return
    if brute_ham_path(g, u) is not None:
        assert brute_pc_uv(g, u, v) is not None
