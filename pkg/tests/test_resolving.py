import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from metricdim import (
    Graph,
    GraphError,
    Pair,
    Pendant,
    add_pendant,
    all_pairs_distances,
    complete_graph,
    corona_k1,
    cycle_graph,
    grid_corona,
    is_resolving_set,
    metric_dimension_exact,
    metric_representation,
    path_graph,
    pendant_bound_check,
    twin_classes,
    witness_pair,
)
from metricdim.resolving import are_twins, pendant_bound_dims

from conftest import oracle_dim, random_connected, random_corpus


def test_metric_representation_path():
    dm = all_pairs_distances(path_graph(3))
    assert metric_representation(dm, 2, [0]) == (2,)


def test_metric_representation_rejects_bad_ids():
    dm = all_pairs_distances(path_graph(3))
    with pytest.raises(GraphError):
        metric_representation(dm, 5, [0])
    with pytest.raises(GraphError):
        metric_representation(dm, 0, [1, 1])


@pytest.mark.parametrize("n,m", [(3, 2), (4, 3), (5, 5)])
def test_grid_corona_closed_form_representations(n, m):
    inst = grid_corona(n, m)
    dm = all_pairs_distances(inst.graph)
    s = [inst.v(1, 1), inst.v(1, m), inst.v(n, m)]
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            assert metric_representation(dm, inst.v(i, j), s) == (i + j - 2, m + i - j - 1, m + n - i - j)
            assert metric_representation(dm, inst.u(i, j), s) == (i + j - 1, m + i - j, m + n - i - j + 1)


def test_is_resolving_examples():
    assert is_resolving_set(all_pairs_distances(path_graph(4)), [0])
    c4 = all_pairs_distances(cycle_graph(4))
    assert not any(is_resolving_set(c4, [v]) for v in range(4))
    inst = grid_corona(3, 2)
    dm = all_pairs_distances(inst.graph)
    assert is_resolving_set(dm, [inst.v(1, 1), inst.v(1, 2), inst.v(3, 2)])


def test_witness_pair_examples():
    assert witness_pair(all_pairs_distances(path_graph(4)), [0]) is None
    c4 = cycle_graph(4)
    dm = all_pairs_distances(c4)
    for a in range(4):
        assert witness_pair(dm, [a]) == tuple(sorted(c4.neighbors(a)))


def test_witness_pair_grid_corona_two_landmarks():
    inst = grid_corona(4, 2)
    dm = all_pairs_distances(inst.graph)
    s = [inst.u(1, 1), inst.v(1, 1)]
    pair = witness_pair(dm, s)
    assert pair is not None
    a, b = pair
    assert a < b and dm[a, s].tolist() == dm[b, s].tolist()
    # the tie family used in the lower-bound argument: pendant u(i,1) vs v(i+1,1)
    for i in range(2, 4):
        x, y = inst.u(i, 1), inst.v(i + 1, 1)
        assert metric_representation(dm, x, s) == metric_representation(dm, y, s)


def test_witness_pair_is_lexicographically_least():
    g = cycle_graph(6)
    dm = all_pairs_distances(g)
    s = [0]
    ties = [(u, v) for u, v in itertools.combinations(range(6), 2) if dm[u, 0] == dm[v, 0]]
    assert witness_pair(dm, s) == min(ties)


def test_twin_classes_examples():
    tp = twin_classes(all_pairs_distances(complete_graph(5)))
    assert tp.classes == ((0, 1, 2, 3, 4),)
    assert tp.lower_bound == 4
    tp = twin_classes(all_pairs_distances(path_graph(4)))
    assert all(len(c) == 1 for c in tp.classes) and len(tp.classes) == 4
    tp = twin_classes(all_pairs_distances(corona_k1(complete_graph(3))))
    assert all(len(c) == 1 for c in tp.classes) and len(tp.classes) == 6
    assert tp.lower_bound == 1


def test_twin_classes_star():
    star = Graph(complete_graph(4).labels, [(0, 1), (0, 2), (0, 3)])
    tp = twin_classes(all_pairs_distances(star))
    assert tp.class_of(1) == (1, 2, 3)
    assert tp.lower_bound == 2


@pytest.mark.parametrize("n", range(1, 8))
def test_dim_of_paths(n):
    cert = metric_dimension_exact(path_graph(n))
    assert cert.dim == (0 if n == 1 else 1)


@pytest.mark.parametrize("n,expected", [(2, 1), (3, 2), (4, 3), (5, 4)])
def test_dim_of_complete_graphs(n, expected):
    cert = metric_dimension_exact(complete_graph(n))
    assert cert.dim == expected
    assert cert.witness == tuple(range(expected))


def test_dim_grid_corona_certificate():
    cert = metric_dimension_exact(grid_corona(3, 2).graph)
    assert cert.dim == 3
    assert cert.exhausted_size == 2
    assert cert.subsets_checked == math.comb(12, 2) == 66
    assert cert.skipped_sizes == ()
    assert cert.exhaustive


def test_twin_bound_skip_is_recorded():
    cert = metric_dimension_exact(complete_graph(5))
    assert cert.twins.lower_bound == 4
    assert cert.skipped_sizes == (1, 2, 3)
    assert 3 not in cert.checked
    assert not cert.exhaustive
    unpruned = metric_dimension_exact(complete_graph(5), use_twins=False)
    assert unpruned.dim == 4 and unpruned.exhaustive
    assert unpruned.subsets_checked == math.comb(5, 3)
    assert unpruned.witness == cert.witness


def test_dim_rejects_disconnected():
    g = Graph(path_graph(3).labels, [(0, 1)])
    with pytest.raises(GraphError):
        metric_dimension_exact(g)


def test_verbose_callback_streams_every_failing_subset():
    seen = []
    cert = metric_dimension_exact(cycle_graph(5), on_fail=lambda s, pair: seen.append((s, pair)))
    dm = all_pairs_distances(cycle_graph(5))
    failing = [s for s, _ in seen]
    # the empty set, all 5 singletons; the first pair (0, 1) resolves C5
    assert failing == [(), (0,), (1,), (2,), (3,), (4,)]
    assert cert.witness == (0, 1)
    for s, pair in seen:
        assert pair is not None and witness_pair(dm, s) == pair


@pytest.mark.parametrize("threads", [1, 2, 4])
def test_parallel_search_is_deterministic(threads, monkeypatch):
    import metricdim.resolving as res

    monkeypatch.setattr(res, "CHUNK", 7)
    g = grid_corona(3, 3).graph
    ref = metric_dimension_exact(g, threads=1)
    cert = metric_dimension_exact(g, threads=threads)
    assert (cert.dim, cert.witness, cert.checked) == (ref.dim, ref.witness, ref.checked)


def test_certificate_serialisation_is_deterministic():
    g = grid_corona(3, 2).graph
    labels = [str(lab) for lab in g.labels]
    a = metric_dimension_exact(g).to_text(labels)
    b = metric_dimension_exact(g).to_text(labels)
    assert a == b
    assert a.splitlines()[0] == "dim = 3"
    assert "wall time" in metric_dimension_exact(g).to_text(labels, timing=True)


def test_wide_landmark_sets_use_fallback_path():
    # base**k overflows int64 packing; solver must still be exact
    g = corona_k1(complete_graph(6))
    assert metric_dimension_exact(g).dim == oracle_dim(g)[0]
    dm = all_pairs_distances(g)
    from metricdim.resolving import _resolving_mask

    combos = np.array([list(range(k)) for k in [11]], dtype=np.int64)
    assert _resolving_mask(dm, combos, 2**40).tolist() == [True]


@pytest.mark.parametrize(
    "g,v,expected",
    [
        (path_graph(3), 1, (1, 2)),
        (complete_graph(3), 0, (2, 2)),
        (complete_graph(3), 2, (2, 2)),
    ],
)
def test_pendant_bound_examples(g, v, expected):
    assert pendant_bound_dims(g, v) == expected
    assert pendant_bound_check(g, v)


@pytest.mark.parametrize("v", range(4))
def test_pendant_bound_c4(v):
    assert pendant_bound_check(cycle_graph(4), v)


def test_pendant_bound_needs_two_vertices():
    with pytest.raises(GraphError):
        pendant_bound_check(path_graph(1), 0)


def test_single_vertex_has_dim_zero():
    cert = metric_dimension_exact(path_graph(1))
    assert cert.dim == 0 and cert.witness == ()


# property tests on random small connected graphs

graphs = st.builds(
    lambda n, seed: random_connected(np.random.default_rng(seed), n),
    st.integers(2, 8),
    st.integers(0, 2**32 - 1),
)


@settings(max_examples=80, deadline=None)
@given(graphs, st.data())
def test_resolving_iff_no_witness_and_monotone(g, data):
    dm = all_pairs_distances(g)
    n = g.order
    s = data.draw(st.lists(st.integers(0, n - 1), unique=True, max_size=n))
    resolves = is_resolving_set(dm, s)
    assert resolves == (witness_pair(dm, s) is None)
    if resolves:
        for extra in range(n):
            if extra not in s:
                assert is_resolving_set(dm, s + [extra])


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_full_and_almost_full_vertex_sets_resolve(g):
    dm = all_pairs_distances(g)
    n = g.order
    assert is_resolving_set(dm, list(range(n)))
    for drop in range(n):
        assert is_resolving_set(dm, [v for v in range(n) if v != drop])


@settings(max_examples=60, deadline=None)
@given(graphs, st.data())
def test_twins_are_never_separated_externally(g, data):
    dm = all_pairs_distances(g)
    tp = twin_classes(dm)
    covered = sorted(v for c in tp.classes for v in c)
    assert covered == list(range(g.order))
    for c in tp.classes:
        for u, v in itertools.combinations(c, 2):
            assert are_twins(dm, u, v)
            others = [x for x in range(g.order) if x not in (u, v)]
            s = data.draw(st.lists(st.sampled_from(others), unique=True)) if others else []
            assert metric_representation(dm, u, s) == metric_representation(dm, v, s)
    assert tp.lower_bound <= metric_dimension_exact(g).dim


def test_pruned_solver_matches_oracle_on_random_graphs():
    for g in random_corpus(60, seed=7):
        cert = metric_dimension_exact(g)
        dim, wit = oracle_dim(g)
        assert cert.dim == dim
        assert cert.witness == wit


def test_add_pendant_dims_on_corona_hub():
    inst = grid_corona(3, 2)
    g1 = add_pendant(inst.graph, inst.v(2, 1))
    assert g1.label(g1.order - 1) == Pendant(Pair(2, 1), 2)
    assert pendant_bound_check(inst.graph, inst.v(2, 1))
