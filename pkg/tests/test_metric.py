"""Bounds, resolving-set checks, brute force oracle, exact solver."""

from itertools import product as iproduct

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph_from_edges, random_connected_graph
from pismetric.errors import DisconnectedGraph, TooLarge
from pismetric.metric import (
    EXACT,
    info_lower_bound,
    is_resolving,
    metric_dimension_bruteforce,
    metric_dimension_exact,
    twin_lower_bound,
    twin_partition,
)
from pismetric.pisgraph import all_pairs_distances, build
from pismetric.rings import RingSpec


def pis(counts):
    return build(RingSpec(counts))


def test_twin_partition_figure1_all_singletons():
    tp = twin_partition(pis((2, 2, 2)))
    assert len(tp) == 6
    assert all(kind == "singleton" for kind in tp.kinds)
    assert twin_lower_bound(tp, 6) == 0


def test_twin_partition_star_from_single_chain():
    # [5] is the star with leaves (8), (4) around (2): leaves share neighborhoods
    tp = twin_partition(pis((5,)))
    assert tp.classes == ((0, 1), (2,))
    assert tp.kinds == ("open", "singleton")


def test_twin_partition_chain_square():
    g = pis((4, 4))
    tp = twin_partition(g)
    assert g.n == 14
    assert len(tp) == 8
    assert twin_lower_bound(tp, g.n) == 6


def test_twin_partition_closed_twins():
    g = pis((4,))  # two adjacent vertices, identical closed neighborhoods
    tp = twin_partition(g)
    assert tp.classes == ((0, 1),)
    assert tp.kinds == ("closed",)
    assert twin_lower_bound(tp, 2) == 1


@pytest.mark.parametrize(
    "n_vertices,diam,want",
    [(25, 2, 5), (7, 2, 3), (14, 2, 4)],
)
def test_info_bound_formula(n_vertices, diam, want):
    # smallest k with k + diam^k >= |V|
    k = 0
    while k + diam**k < n_vertices:
        k += 1
    assert k == want


@pytest.mark.parametrize(
    "counts,want", [((3, 3, 3), 5), ((3, 3), 3), ((2, 2, 2, 2), 4)]
)
def test_info_bound_on_graphs(counts, want):
    g = pis(counts)
    assert info_lower_bound(g) == want


def test_is_resolving_paper_sets():
    g = pis((2, 2, 2))
    d = all_pairs_distances(g)
    w = [g.ideals.index((0, 1, 1)), g.ideals.index((1, 0, 1))]
    ok, witness = is_resolving(g, d, w)
    assert ok and witness is None

    g = pis((3, 3, 3))
    d = all_pairs_distances(g)
    w = [g.ideals.index(v) for v in [(0, 2, 2), (2, 0, 2), (2, 2, 0), (2, 1, 1), (1, 1, 2)]]
    ok, _ = is_resolving(g, d, w)
    assert ok

    ok, _ = is_resolving(g, d, range(g.n))  # S = V always resolves
    assert ok


def test_is_resolving_failure_witness():
    g = pis((3, 3))
    d = all_pairs_distances(g)
    ok, witness = is_resolving(g, d, [0])
    assert not ok
    u, v = witness
    assert d[u, 0] == d[v, 0] and u != v and u != 0 and v != 0


def test_bruteforce_small_classics():
    p3 = graph_from_edges(3, [(0, 1), (1, 2)])
    assert metric_dimension_bruteforce(p3) == 1
    k4 = graph_from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert metric_dimension_bruteforce(k4) == 3
    assert metric_dimension_bruteforce(pis((3, 2))) == 2


def test_bruteforce_size_cap():
    g = pis((4, 4))  # 14 vertices: allowed
    assert metric_dimension_bruteforce(g) == 6
    with pytest.raises(TooLarge):
        metric_dimension_bruteforce(pis((4, 5)))


@pytest.mark.parametrize(
    "counts,want",
    [
        ((2, 2, 2), 2),
        ((3, 3), 3),
        ((3, 3, 3), 5),
        ((3, 2), 2),
        ((3, 2, 2), 3),
        ((4, 4), 6),
    ],
)
def test_exact_paper_values(counts, want):
    rep = metric_dimension_exact(pis(counts))
    assert rep.size == want
    assert rep.status == EXACT
    assert rep.twin_bound <= want and rep.info_bound <= want


def test_exact_report_fields():
    g = pis((3, 2))
    rep = metric_dimension_exact(g)
    d = all_pairs_distances(g)
    ok, _ = is_resolving(g, d, rep.vertices)
    assert ok
    assert rep.size == len(rep.vertices) == 2
    body = rep.to_json_dict(g.labels)
    assert set(body) == {"set", "size", "status", "bounds", "millis"}
    assert set(body["bounds"]) == {"twin", "info"}
    assert all(isinstance(s, str) for s in body["set"])


def test_exact_rejects_disconnected():
    g = graph_from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraph):
        metric_dimension_exact(g)
    with pytest.raises(DisconnectedGraph):
        metric_dimension_bruteforce(g)


def test_exact_single_vertex():
    rep = metric_dimension_exact(pis((3,)))
    assert rep.size == 0 and rep.status == EXACT


def test_exact_budget_exhaustion_reports_upper_bound():
    g = pis((3, 3, 3))
    rep = metric_dimension_exact(g, budget_s=0.0)
    assert rep.status in ("upper_bound", "infeasible_budget")
    if rep.status == "upper_bound":
        d = all_pairs_distances(g)
        ok, _ = is_resolving(g, d, rep.vertices)
        assert ok
        assert rep.size >= 5


def test_oracle_equivalence_chain_product_corpus():
    # every spec with at most 14 ideals in total
    corpus = []
    for size in (1, 2, 3):
        for combo in iproduct((2, 3, 4, 5, 6, 7), repeat=size):
            t = 1
            for c in combo:
                t *= c
            if t <= 14 and combo != (2, 2) and t > 2:
                corpus.append(combo)
    assert len(corpus) > 15
    for combo in corpus:
        g = pis(combo)
        rep = metric_dimension_exact(g)
        assert rep.status == EXACT
        assert rep.size == metric_dimension_bruteforce(g), combo


def test_oracle_equivalence_random_graphs(rng):
    for _ in range(60):
        g = random_connected_graph(rng, int(rng.integers(4, 13)))
        rep = metric_dimension_exact(g)
        assert rep.status == EXACT
        assert rep.size == metric_dimension_bruteforce(g)


def test_minimality_spot_check(rng):
    # no subset one smaller than the certified optimum resolves
    from itertools import combinations

    for counts in [(3, 2), (3, 3), (2, 2, 2)]:
        g = pis(counts)
        d = all_pairs_distances(g)
        rep = metric_dimension_exact(g)
        assert rep.size is not None and rep.size >= 1
        for s in combinations(range(g.n), rep.size - 1):
            ok, _ = is_resolving(g, d, s)
            assert not ok


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_resolving_monotone_under_additions(data):
    seed = data.draw(st.integers(0, 2**31))
    rng = np.random.default_rng(seed)
    g = random_connected_graph(rng, int(rng.integers(4, 10)))
    d = all_pairs_distances(g)
    rep = metric_dimension_exact(g)
    s = set(rep.vertices)
    extra = data.draw(st.sets(st.integers(0, g.n - 1), max_size=4))
    ok, _ = is_resolving(g, d, s | extra)
    assert ok


def test_twin_preselection_members_required():
    # dropping any forced twin-class member from the optimum breaks it
    g = pis((4, 4))
    d = all_pairs_distances(g)
    rep = metric_dimension_exact(g)
    tp = twin_partition(g)
    forced = {v for cls in tp.classes if len(cls) > 1 for v in cls[:-1]}
    assert forced.intersection(rep.vertices)
    for v in forced & set(rep.vertices):
        ok, _ = is_resolving(g, d, set(rep.vertices) - {v})
        assert not ok


def test_bounds_never_exceed_exact(rng):
    for _ in range(30):
        g = random_connected_graph(rng, int(rng.integers(4, 11)))
        rep = metric_dimension_exact(g)
        assert rep.twin_bound <= rep.size
        assert rep.info_bound <= rep.size
