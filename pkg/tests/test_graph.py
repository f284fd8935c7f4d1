"""Graph structure, validation, topological order, and instance I/O."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordpaths.errors import (BadShapeError, CycleError, NoPathError,
                             ParseError)
from ordpaths.generate import (gen_antisymmetry_fixture, gen_bellman_fixture,
                               gen_detour_fixture, gen_exponential_instance,
                               gen_grid, gen_random_dag)
from ordpaths.graph import (Arc, Dag, make_dag, prune_unreachable,
                            read_instance, topological_order, validate,
                            write_instance)
from ordpaths.oracle import enumerate_paths


def test_make_dag_defaults():
    g = make_dag(3, [(0, 1, 1), (1, 2, 2)], k=2)
    assert g.source == 0 and g.sink == 2
    assert g.m == 2
    assert g.adjacency[0] == ((1, 1),)
    assert g.arc_levels[(1, 2)] == 2


def test_validate_ok():
    assert validate(gen_bellman_fixture()).ok


def test_validate_loop_and_parallel():
    g = make_dag(3, [(0, 0, 1), (0, 1, 1), (0, 1, 2), (1, 2, 1)], k=2)
    rep = validate(g)
    assert not rep.ok
    assert rep.loops == (Arc(0, 0, 1),)
    assert rep.parallel_arcs == ((0, 1),)
    assert any("loop" in msg for msg in rep.issues())


def test_validate_cycle():
    g = make_dag(3, [(0, 1, 1), (1, 0, 1), (1, 2, 1)], k=2)
    rep = validate(g)
    assert not rep.is_acyclic
    with pytest.raises(CycleError):
        topological_order(g)


def test_validate_bad_level_and_endpoint():
    g = make_dag(2, [(0, 1, 5)], k=2)
    assert validate(g).bad_levels == (Arc(0, 1, 5),)
    g = make_dag(2, [(0, 3, 1), (0, 1, 1)], k=2)
    assert validate(g).bad_endpoints == (Arc(0, 3, 1),)


def test_validate_unreachable_sink():
    g = make_dag(3, [(0, 1, 1)], k=2)
    rep = validate(g)
    assert rep.is_acyclic and not rep.sink_reachable
    assert not rep.ok


def test_topological_order_is_deterministic():
    g = gen_bellman_fixture()
    order = topological_order(g)
    assert order == topological_order(g)
    pos = {v: i for i, v in enumerate(order)}
    assert all(pos[a.tail] < pos[a.head] for a in g.arcs)


def test_prune_unreachable():
    # Node 1 is a dead end, node 3 is unreachable; both must go.
    g = make_dag(5, [(0, 1, 1), (0, 2, 1), (2, 4, 2), (3, 4, 1)], k=2,
                 sink=4)
    pruned, mapping = prune_unreachable(g)
    assert pruned.n == 3
    assert set(mapping) == {0, 2, 4}
    assert pruned.m == 2
    assert pruned.source == mapping[0] and pruned.sink == mapping[4]


def test_prune_unreachable_no_path():
    g = make_dag(3, [(0, 1, 1)], k=2)
    with pytest.raises(NoPathError):
        prune_unreachable(g)


def test_instance_roundtrip():
    g = gen_random_dag(10, 0.5, 3, seed=1)
    back = read_instance(write_instance(g))
    assert back.n == g.n and back.k == g.k
    assert back.source == g.source and back.sink == g.sink
    assert set(back.arcs) == set(g.arcs)


def test_instance_comments_and_blank_lines():
    text = "# instance\n\n2 1 2 1 2\n# arc\n1 2 2\n"
    g = read_instance(text)
    assert g.n == 2 and g.arcs == (Arc(0, 1, 2),)


@pytest.mark.parametrize("text,line_no", [
    ("", 1),
    ("2 1 2 1\n1 2 1\n", 1),
    ("2 x 2 1 2\n1 2 1\n", 1),
    ("2 1 2 1 9\n1 2 1\n", 1),
    ("2 2 2 1 2\n1 2 1\n", 1),
    ("2 1 2 1 2\n1 2\n", 2),
    ("2 1 2 1 2\n1 2 7\n", 2),
    ("2 1 2 1 2\n1 9 1\n", 2),
])
def test_parse_errors_carry_line_numbers(text, line_no):
    with pytest.raises(ParseError) as exc:
        read_instance(text)
    assert exc.value.line_no == line_no


def test_random_dag_reproducible():
    a = gen_random_dag(12, 0.4, 3, seed=5)
    b = gen_random_dag(12, 0.4, 3, seed=5)
    assert a.arcs == b.arcs
    assert a.arcs != gen_random_dag(12, 0.4, 3, seed=6).arcs


def test_random_dag_is_upper_triangular():
    g = gen_random_dag(15, 0.5, 4, seed=2)
    assert all(a.tail < a.head for a in g.arcs)
    assert all(1 <= a.level <= 4 for a in g.arcs)
    assert validate(g).ok


def test_random_dag_arc_count_statistics():
    # Arc count is Binomial(C(n,2), p); the mean over many seeds must sit
    # within 4 standard errors. Samples without an s-t path still count,
    # via the graph attached to the exception.
    n, p, trials = 10, 0.3, 1000
    pairs = n * (n - 1) // 2
    total = 0
    for seed in range(trials):
        try:
            g = gen_random_dag(n, p, 3, seed)
        except NoPathError as exc:
            g = exc.dag
        total += g.m
    mean = total / trials
    se = math.sqrt(pairs * p * (1 - p) / trials)
    assert abs(mean - pairs * p) < 4 * se


def test_random_dag_no_path_raises():
    # p=1 on n=2 always has the arc; a tiny p eventually has none.
    with pytest.raises(NoPathError) as exc:
        for seed in range(200):
            gen_random_dag(2, 0.01, 2, seed)
    assert exc.value.dag is not None


def test_grid_structure():
    g = gen_grid(3, 2, 4, seed=0)
    assert g.n == 6 and g.m == 7
    assert g.source == 0 and g.sink == 5
    # (x, y) has index y*width + x; arcs go right and up only.
    assert all(a.head - a.tail in (1, 3) for a in g.arcs)
    assert validate(g).ok


def test_grid_path_count_is_binomial():
    for w, h in [(3, 3), (4, 2), (5, 4)]:
        g = gen_grid(w, h, 2, seed=1)
        paths = enumerate_paths(g)
        assert len(paths) == math.comb(w + h - 2, w - 1)
        assert all(len(r.vector) == w + h - 2 for r in paths)


def test_exponential_structure():
    for n in (4, 7, 10, 13):
        g = gen_exponential_instance(n, 2)
        assert g.m == (4 * n - 4) // 3
        assert validate(g).ok
        assert len(enumerate_paths(g)) == 2 ** ((n - 1) // 3)


def test_exponential_bad_shape():
    for n in (3, 5, 6, 8):
        with pytest.raises(BadShapeError):
            gen_exponential_instance(n, 1)


def test_fixture_shapes():
    assert gen_bellman_fixture().n == 4
    assert gen_detour_fixture().n == 6
    g = gen_antisymmetry_fixture(2)
    assert g.n == 3 and g.k == 2
    assert all(a.level == 2 for a in g.arcs)
    with pytest.raises(ValueError):
        gen_antisymmetry_fixture(3, k=2)


@settings(max_examples=60)
@given(st.integers(0, 10_000))
def test_instance_roundtrip_random(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 12)
    try:
        g = gen_random_dag(n, rng.uniform(0.1, 0.9), rng.randint(1, 5),
                           seed)
    except NoPathError as exc:
        g = exc.dag
    back = read_instance(write_instance(g))
    assert set(back.arcs) == set(g.arcs)
    assert (back.n, back.k, back.source, back.sink) == (
        g.n, g.k, g.source, g.sink)
