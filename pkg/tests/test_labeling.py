"""Labeling solver: fixtures, variant agreement, stores, invariants."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordpaths.errors import (DetachedError, InvalidGraphError, NoPathError,
                             TimeoutExceededError)
from ordpaths.generate import (gen_antisymmetry_fixture, gen_bellman_fixture,
                               gen_detour_fixture, gen_exponential_instance,
                               gen_grid, gen_random_dag)
from ordpaths.graph import Arc, make_dag
from ordpaths.labeling import (DictStore, Label, SortedStore, Variant,
                               extend, initial_label, reconstruct_path,
                               sink_update, solve)
from ordpaths.oracle import oracle_front
from ordpaths.ordinal import (cum_from_freq, freq_vector, label_bound,
                              sort_vector, sorted_from_freq)

ALL_VARIANTS = list(Variant)


def random_instances(count=60, nmax=12, seed0=0):
    out = []
    seed = seed0
    while len(out) < count:
        rng = random.Random(seed * 7919)
        try:
            out.append(gen_random_dag(rng.randint(4, nmax),
                                      rng.uniform(0.2, 0.8),
                                      rng.randint(1, 5), seed))
        except NoPathError:
            pass
        seed += 1
    return out


# ---------------------------------------------------------------------------
# labels

def test_extend_updates_freq_and_cum():
    g = gen_bellman_fixture()
    lab = extend(initial_label(g), Arc(0, 1, 1))
    assert lab.freq == (1, 0, 0) and lab.cum == (1, 1, 1)
    lab = extend(lab, Arc(1, 2, 2))
    assert lab.freq == (1, 1, 0) and lab.cum == (1, 2, 2)
    assert lab.length == 2
    assert reconstruct_path(lab) == (0, 1, 2)


def test_extend_detached():
    g = gen_bellman_fixture()
    with pytest.raises(DetachedError):
        extend(initial_label(g), Arc(1, 2, 2))


# ---------------------------------------------------------------------------
# stores

def _label(freq, node=0):
    return Label(tuple(freq), cum_from_freq(freq), node)


@pytest.mark.parametrize("store_cls", [DictStore, SortedStore])
def test_store_insert_remove_contains(store_cls):
    store = store_cls(3)
    labels = [_label(f) for f in [(1, 0, 0), (0, 1, 0), (2, 0, 1)]]
    for lab in labels:
        store.insert(lab)
    assert len(store) == 3
    assert (1, 0, 0) in store and (0, 0, 1) not in store
    store.remove(labels[1])
    assert len(store) == 2
    assert (0, 1, 0) not in store
    assert not labels[1].alive
    assert set(store.labels()) == {labels[0], labels[2]}


def test_sorted_store_matches_dict_store_under_random_ops():
    rng = random.Random(3)
    a, b = DictStore(3), SortedStore(3)
    live = []
    for _ in range(500):
        if live and rng.random() < 0.4:
            la, lb = live.pop(rng.randrange(len(live)))
            a.remove(la)
            b.remove(lb)
        else:
            freq = (rng.randint(0, 5), rng.randint(0, 5), rng.randint(0, 5))
            if freq in a:
                continue
            pair = (_label(freq), _label(freq))
            a.insert(pair[0])
            b.insert(pair[1])
            live.append(pair)
        assert len(a) == len(b)
        assert {l.freq for l in a.labels()} == {l.freq for l in b.labels()}


@pytest.mark.parametrize("store_cls", [DictStore, SortedStore])
def test_equal_length_scan_semantics(store_cls):
    store = store_cls(3)
    # Sorted vectors (1,2), (1,3), (3,) at one node.
    for f in [(1, 1, 0), (1, 0, 1), (0, 0, 1)]:
        store.insert(_label(f))
    # (1,1) evicts both length-2 incumbents, ignores the length-1 one.
    accept, evict = store.equal_length_scan(_label((2, 0, 0)))
    assert accept and {l.freq for l in evict} == {(1, 1, 0), (1, 0, 1)}
    # (2,3) is rejected by the incumbent (1,2).
    accept, evict = store.equal_length_scan(_label((0, 1, 1)))
    assert not accept and evict == []


def _run_sink(store_cls, arrivals):
    store = store_cls(3)
    for f in arrivals:
        cand = _label(tuple(f))
        store.frontier_update(cand)
    return {l.freq for l in store.labels()}


def test_sink_update_keeps_mutual_pair():
    # (2,) then (2,2): mutually dominating, both retained.
    assert _run_sink(DictStore, [(0, 1, 0), (0, 2, 0)]) == {
        (0, 1, 0), (0, 2, 0)}
    assert _run_sink(SortedStore, [(0, 1, 0), (0, 2, 0)]) == {
        (0, 1, 0), (0, 2, 0)}


def test_sink_update_evicts_and_rejects():
    # (1,3) evicts (2,3); a later (3,3) is rejected.
    arrivals = [(0, 1, 1), (1, 0, 1), (0, 0, 2)]
    want = {(1, 0, 1)}
    assert _run_sink(DictStore, arrivals) == want
    assert _run_sink(SortedStore, arrivals) == want


def test_vectorized_frontier_matches_reference_on_random_streams():
    rng = random.Random(11)
    for _ in range(200):
        k = rng.randint(1, 4)
        arrivals = []
        seen = set()
        for _ in range(rng.randint(1, 25)):
            f = tuple(rng.randint(0, 3) for _ in range(k))
            if sum(f) == 0 or f in seen:
                continue
            seen.add(f)
            arrivals.append(f)
        ref = DictStore(k)
        vec = SortedStore(k)
        for f in arrivals:
            a = sink_update(ref, _label(f))
            b = vec.frontier_update(_label(f))
            assert a == b
        assert ({l.freq for l in ref.labels()}
                == {l.freq for l in vec.labels()})


# ---------------------------------------------------------------------------
# solve: fixtures

def test_bellman_fixture_front_and_intermediate_sets():
    g = gen_bellman_fixture()
    res = solve(g, Variant.BASE, keep_node_vectors=True)
    assert res.front == {(1, 3), (1, 2, 3)}
    # The dominated partial path s-a-b survives at b and is the one that
    # completes to (1,2,3): pruning it would lose a front vector.
    assert res.node_vectors[2] == {(1,), (1, 2)}
    assert res.representatives[(1, 3)] == (0, 2, 3)
    assert res.representatives[(1, 2, 3)] == (0, 1, 2, 3)


def test_antisymmetry_fixture_front():
    for j in range(1, 5):
        res = solve(gen_antisymmetry_fixture(j, k=5))
        assert res.front == {(j,), (j, j)}


def test_detour_fixture_front():
    res = solve(gen_detour_fixture())
    assert res.front == {(1, 3), (1, 1, 3, 3)}


def test_exponential_fixture_front():
    for n in (4, 7, 10):
        res = solve(gen_exponential_instance(n, 2))
        length = 2 * (n - 1) // 3
        assert res.front == {(2,) * length}


# ---------------------------------------------------------------------------
# solve: agreement and invariants

def test_variants_match_oracle_on_random_instances():
    for g in random_instances(40):
        want = oracle_front(g)
        for variant in ALL_VARIANTS:
            assert set(solve(g, variant).front) == want


def test_selection_rule_does_not_change_front():
    for g in random_instances(25, seed0=100):
        fronts = {solve(g, selection=s).front
                  for s in ("grouped", "fifo", "lifo")}
        assert len(fronts) == 1
    with pytest.raises(ValueError):
        solve(gen_bellman_fixture(), selection="random")


def test_representative_paths_realize_their_vectors():
    for g in random_instances(25, seed0=200):
        res = solve(g)
        for vec, path in res.representatives.items():
            assert path[0] == g.source and path[-1] == g.sink
            levels = [g.arc_levels[e] for e in zip(path, path[1:])]
            assert sort_vector(levels) == vec


def test_peak_labels_within_bound():
    for g in random_instances(25, seed0=300):
        stats = solve(g, Variant.BASE).stats
        assert stats.max_peak_labels <= label_bound(g.n, g.k)


def test_base_stores_every_distinct_prefix_vector():
    # On the grid every monotone lattice path reaches the sink, so the
    # label count at an intermediate node equals its distinct-vector count.
    g = gen_grid(4, 4, 2, seed=9)
    res = solve(g, Variant.BASE, keep_node_vectors=True)
    for v in range(g.n):
        assert len(res.node_vectors[v]) <= label_bound(g.n, g.k)


def test_mod1_prunes_dominated_equal_length_labels():
    g = gen_grid(6, 6, 3, seed=4)
    base = solve(g, Variant.BASE).stats.max_peak_labels
    mod1 = solve(g, Variant.MOD1).stats.max_peak_labels
    assert mod1 <= base
    assert solve(g, Variant.MOD1).front == solve(g, Variant.BASE).front


def test_solve_rejects_invalid_graphs():
    with pytest.raises(InvalidGraphError):
        solve(make_dag(3, [(0, 1, 1), (1, 0, 1), (1, 2, 1)], k=2))
    with pytest.raises(InvalidGraphError):
        solve(make_dag(2, [(0, 1, 5)], k=2))
    with pytest.raises(NoPathError):
        solve(make_dag(3, [(0, 1, 1)], k=2))
    g = make_dag(2, [(0, 1, 1)], k=1, sink=0)
    with pytest.raises(InvalidGraphError):
        solve(g)


def test_solve_no_path_without_validation():
    with pytest.raises(NoPathError):
        solve(make_dag(3, [(0, 1, 1)], k=2), validate_input=False)


def test_timeout_raises():
    g = gen_grid(25, 25, 10, seed=1)
    with pytest.raises(TimeoutExceededError):
        solve(g, Variant.BASE, timeout_secs=0.05)


def test_stats_shape():
    g = gen_bellman_fixture()
    stats = solve(g).stats
    assert stats.iterations > 0
    assert len(stats.peak_labels) == g.n
    assert stats.wall_secs >= 0
    assert stats.max_peak_labels == max(stats.peak_labels)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_solver_front_is_oracle_front(seed):
    rng = random.Random(seed)
    try:
        g = gen_random_dag(rng.randint(4, 10), rng.uniform(0.2, 0.9),
                           rng.randint(1, 4), seed)
    except NoPathError:
        return
    want = oracle_front(g)
    for variant in ALL_VARIANTS:
        assert set(solve(g, variant).front) == want
