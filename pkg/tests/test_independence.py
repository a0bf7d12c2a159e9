import pytest

from hampath.connectivity import articulation_points, components_masks
from hampath.generators import enumerate_connected_stats, graph_from_code
from hampath.graph import bits, complete_graph, cycle_graph, from_edges
from hampath.independence import classify, greedy_clique_cover, has_independent_set
from hampath.oracle import exact_alpha

CLAW = from_edges(4, [(0, 1), (0, 2), (0, 3)])
NET = from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
K23 = from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
K24 = from_edges(6, [(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5)])


def test_has_independent_set_examples():
    assert has_independent_set(CLAW, 3) == (1, 2, 3)
    assert has_independent_set(cycle_graph(5), 3) is None
    assert has_independent_set(K23, 4) is None
    assert has_independent_set(K23, 3) == (2, 3, 4)


def test_has_independent_set_is_lexicographically_least():
    g = from_edges(5, [(0, 1), (2, 3)])
    assert has_independent_set(g, 3) == (0, 2, 4)


def test_has_independent_set_bounds():
    with pytest.raises(ValueError):
        has_independent_set(CLAW, 6)
    with pytest.raises(ValueError):
        has_independent_set(CLAW, 0)


def test_classify_examples():
    assert classify(complete_graph(5)).label == "3K1-free"
    label = classify(NET)
    # lexicographically least maximum independent set ({3,4,5} is independent
    # too, but the determinism rule picks the least witness)
    assert label.label == "4K1-free" and label.witness == (0, 4, 5)
    label = classify(K24)
    assert label.label == "5K1-free" and label.witness == (2, 3, 4, 5)


def test_classify_above():
    g = from_edges(5, [])
    # disconnected and edgeless: independence 5 exceeds every class
    assert classify(g).label == "above"


def test_labels_are_monotone():
    for n in range(1, 6):
        for code, _alpha in enumerate_connected_stats(n):
            lab = classify(graph_from_code(n, code))
            if lab.alpha_bound is not None and lab.alpha_bound <= 2:
                assert lab.admits(3) and lab.admits(4) and lab.admits(5)
            if lab.alpha_bound is not None and lab.alpha_bound <= 3:
                assert lab.admits(4) and lab.admits(5)


def test_classify_agrees_with_exact_alpha_small():
    for n in range(1, 6):
        for code, kernel_alpha in enumerate_connected_stats(n):
            g = graph_from_code(n, code)
            lab = classify(g)
            want = exact_alpha(g)
            assert kernel_alpha == want
            if want <= 4:
                assert lab.alpha == want and lab.alpha_bound == max(want, 2)
            else:
                assert lab.alpha_bound is None


def test_clique_cover_covers_and_is_cliques():
    for code, _alpha in enumerate_connected_stats(5):
        g = graph_from_code(5, code)
        cover = greedy_clique_cover(g)
        seen = 0
        for cl in cover:
            assert not seen & cl
            seen |= cl
            verts = list(bits(cl))
            for i, a in enumerate(verts):
                for b in verts[i + 1 :]:
                    assert g.has_edge(a, b)
        assert seen == g.full_mask


def test_3k1_articulation_sides_are_cliques():
    # structural consequence: both sides of any articulation in a 3K1-free
    # graph induce cliques
    for n in range(3, 7):
        for code, alpha in enumerate_connected_stats(n):
            if alpha > 2:
                continue
            g = graph_from_code(n, code)
            if len(components_masks(g, 0)) != 1:
                continue
            for x in articulation_points(g):
                comps = components_masks(g, 1 << x)
                assert len(comps) == 2
                for comp in comps:
                    verts = list(bits(comp))
                    for i, a in enumerate(verts):
                        for b in verts[i + 1 :]:
                            assert g.has_edge(a, b)


def test_classify_agrees_with_enumeration_alpha_larger_n():
    # sampled cross-check at n = 6, 7 (n <= 5 runs in full above)
    for n, step in ((6, 11), (7, 211)):
        for code, kernel_alpha in enumerate_connected_stats(n):
            if code % step:
                continue
            lab = classify(graph_from_code(n, code))
            if kernel_alpha <= 4:
                assert lab.alpha == kernel_alpha
            else:
                assert lab.alpha_bound is None
