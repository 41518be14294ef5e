"""Closed-form dispatch, explicit constructions, and their agreement."""

import pytest

from pismetric.errors import NotCovered
from pismetric.formulas import (
    construct_resolving,
    formula_metric_dim,
    mixed_formula_value,
    mixed_resolving_vectors,
    pattern_classes,
)
from pismetric.metric import is_resolving, metric_dimension_exact, twin_partition
from pismetric.pisgraph import all_pairs_distances, build
from pismetric.rings import RingSpec


@pytest.mark.parametrize(
    "counts,value,tid",
    [
        ((2, 2, 2), 2, "reduced_n3"),
        ((2, 2, 2, 2), 4, "reduced_general"),
        ((2,) * 6, 6, "reduced_general"),
        ((3,), 0, "three_n1"),
        ((3, 3), 3, "three_small"),
        ((3, 3, 3), 5, "three_small"),
        ((3, 3, 3, 3), 8, "three_general"),
        ((3,) * 5, 10, "three_general"),
        ((4,), 1, "chain_n1_small"),
        ((5,), 1, "chain_general"),
        ((6,), 2, "chain_general"),
        ((4, 4), 6, "chain_c4"),
        ((4, 4, 4), 36, "chain_c4"),
        ((4, 5), 10, "chain_general"),
        ((4,) * 4 + (3,) * 4 + (2,) * 4, 4**4 * 3**4 * 2**4 - 2 - 3**8 * 2**4 + 8 + 4 + 2,
         "mixed_corollary"),
        ((3,) * 4 + (2,) * 5, 3**4 * 2**5 - 2 - 3**4 * 2**5 + 8 + 5 + 2, "mixed_corollary"),
    ],
)
def test_formula_dispatch(counts, value, tid):
    res = formula_metric_dim(RingSpec(counts))
    assert res.value == value
    assert res.theorem_id == tid


@pytest.mark.parametrize(
    "counts",
    [(2,), (2, 2), (3, 2), (3, 2, 2), (4, 3), (4, 2), (4, 4, 3), (3, 3, 2, 2)],
)
def test_formula_not_covered(counts):
    with pytest.raises(NotCovered):
        formula_metric_dim(RingSpec(counts))
    with pytest.raises(NotCovered):
        construct_resolving(RingSpec(counts))


def test_chain_c4_specializes_general_formula():
    for n in (1, 2, 3, 4):
        spec = RingSpec((4,) * n)
        want = 4**n - 3**n - 1
        if n == 1:
            assert formula_metric_dim(spec).value == 1  # the K2 special case
        else:
            assert formula_metric_dim(spec).value == want == spec.vertex_count - 3**n + 1


def test_naive_mixed_formula_on_counterexamples():
    assert mixed_formula_value(RingSpec((3, 2))) == 3
    assert mixed_formula_value(RingSpec((3, 2, 2))) == 4


@pytest.mark.parametrize(
    "counts",
    [
        (2, 2, 2), (2, 2, 2, 2), (2,) * 5,
        (3,), (3, 3), (3, 3, 3), (3, 3, 3, 3),
        (4,), (5,), (6,), (4, 4), (4, 5), (5, 5), (4, 4, 4),
    ],
)
def test_construction_resolves_and_matches_formula(counts):
    spec = RingSpec(counts)
    con = construct_resolving(spec)
    res = formula_metric_dim(spec)
    assert len(con.indices) == res.value
    assert con.theorem_id == res.theorem_id
    g = build(spec)
    d = all_pairs_distances(g)
    ok, _ = is_resolving(g, d, con.indices)
    assert ok
    assert all(g.ideals[i] == v for i, v in zip(con.indices, sorted(con.vectors)))


@pytest.mark.parametrize("counts", [(2, 2, 2), (3, 3), (3, 3, 3), (4,), (4, 4), (4, 5)])
def test_construction_is_optimal(counts):
    spec = RingSpec(counts)
    g = build(spec)
    rep = metric_dimension_exact(g)
    assert rep.size == len(construct_resolving(spec).indices)


def test_reduced_constructions_are_the_known_sets():
    con = construct_resolving(RingSpec((2, 2, 2)))
    assert set(con.vectors) == {(0, 1, 1), (1, 0, 1)}
    con = construct_resolving(RingSpec((2, 2, 2, 2)))
    # Max(R): one zero slot, fields elsewhere
    assert set(con.vectors) == {
        (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0)
    }


def test_chain_square_construction_size():
    # 14 vertices; skeleton has the 7 pattern vertices plus (1,1)
    spec = RingSpec((4, 4))
    con = construct_resolving(spec)
    assert len(con.indices) == 6
    assert (1, 1) not in con.vectors
    assert (1, 2) in con.vectors  # a strictly-intermediate slot survives


def test_pattern_classes_match_twin_classes_on_chain_specs():
    for counts in [(4,), (5,), (4, 4), (4, 5), (5, 5), (4, 4, 4), (4, 4, 5)]:
        spec = RingSpec(counts)
        n = len(counts)
        classes = pattern_classes(spec)
        assert len(classes) == 3**n - 1
        g = build(spec)
        by_open = {}
        for v in range(g.n):
            by_open.setdefault(g.adj[v].tobytes(), []).append(v)
        open_classes = sorted((tuple(m) for m in by_open.values()), key=lambda c: c[0])
        if counts == (4,):
            # the one exception: K2, whose two vertices are closed twins and
            # merge in the full twin partition but not under open grouping
            assert open_classes == [(0,), (1,)]
            assert twin_partition(g).classes == ((0, 1),)
        else:
            assert open_classes == classes
            assert twin_partition(g).classes == tuple(classes)


def test_mixed_recipe_resolves_downscaled_groups():
    # group sizes below the side condition: recipe still resolves, just not
    # at minimum size; documented as informational behavior
    for counts in [(4, 3, 2), (4, 4, 3, 3, 2), (3, 2, 2)]:
        spec = RingSpec(counts)
        vectors = mixed_resolving_vectors(spec)
        assert len(vectors) == mixed_formula_value(spec)
        g = build(spec)
        d = all_pairs_distances(g)
        index_of = {v: i for i, v in enumerate(g.ideals)}
        ok, _ = is_resolving(g, d, [index_of[v] for v in vectors])
        assert ok


def test_counterexamples_show_the_side_condition_matters():
    for counts, naive in [((3, 2), 3), ((3, 2, 2), 4)]:
        spec = RingSpec(counts)
        exact = metric_dimension_exact(build(spec)).size
        assert mixed_formula_value(spec) == naive
        assert naive != exact
