"""Instance generators: random upper-triangular DAGs, corner-to-corner
grids, the exponential diamond chain, and the small hand fixtures.

All randomness comes from ``random.Random(seed)`` (Mersenne Twister); the
exact draw order is pinned and documented per generator, so instances are
reproducible across platforms for a fixed seed.
"""

from __future__ import annotations

import random

from .errors import BadShapeError, NoPathError
from .graph import Arc, Dag, _forward_reachable


def gen_random_dag(n: int, p: float, k: int, seed: int) -> Dag:
    """G(n, p) DAG: arc i->j for each i < j independently with probability p.

    Acyclic by construction. Node 0 is the source, node n-1 the sink.
    Draw order: for each i, for each j > i, one uniform for inclusion,
    then (if included) one uniform level in [1, k].

    Raises NoPathError when the sample has no source-sink path; the
    exception carries the sampled graph so callers can still inspect it
    (the bench runner resamples with the next seed instead).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 0 < p <= 1:
        raise ValueError("p must be in (0, 1]")
    rng = random.Random(seed)
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                arcs.append(Arc(i, j, rng.randint(1, k)))
    g = Dag(n=n, arcs=tuple(arcs), k=k, source=0, sink=n - 1)
    if g.sink not in _forward_reachable(g):
        raise NoPathError(f"no s-t path for seed {seed}", dag=g)
    return g


def gen_grid(width: int, height: int, k: int, seed: int) -> Dag:
    """Acyclic grid: node (x, y) has arcs right to (x+1, y) and up to (x, y+1).

    Source is the (0, 0) corner, sink the (width-1, height-1) corner; node
    (x, y) has index y*width + x. Levels are uniform in [1, k], drawn
    right-arc first then up-arc, iterating y then x.
    """
    if width < 1 or height < 1:
        raise ValueError("width and height must be at least 1")
    rng = random.Random(seed)
    arcs = []
    idx = lambda x, y: y * width + x
    for y in range(height):
        for x in range(width):
            if x + 1 < width:
                arcs.append(Arc(idx(x, y), idx(x + 1, y), rng.randint(1, k)))
            if y + 1 < height:
                arcs.append(Arc(idx(x, y), idx(x, y + 1), rng.randint(1, k)))
    return Dag(n=width * height, arcs=tuple(arcs), k=k,
               source=0, sink=width * height - 1)


def gen_exponential_instance(n: int, level: int, k: int | None = None) -> Dag:
    """Diamond chain with 2^((n-1)/3) source-sink paths, all on one vector.

    Arcs (1-based): (v_i, v_{i+1}) and (v_i, v_{i+2}) for i = 1, 4, ..., n-3;
    (v_i, v_{i+2}) for i = 2, 5, ..., n-2; (v_i, v_{i+1}) for i = 3, 6, ...,
    n-1. All arcs carry ``level``; arc count is (4n-4)/3.
    """
    if n < 4 or (n - 1) % 3 != 0:
        raise BadShapeError("n must be >= 4 with (n - 1) divisible by 3")
    if k is None:
        k = level
    if not 1 <= level <= k:
        raise ValueError(f"level {level} outside [1, {k}]")
    arcs = []
    for i in range(1, n - 2, 3):
        arcs.append(Arc(i - 1, i, level))
        arcs.append(Arc(i - 1, i + 1, level))
    for i in range(2, n - 1, 3):
        arcs.append(Arc(i - 1, i + 1, level))
    for i in range(3, n, 3):
        arcs.append(Arc(i - 1, i, level))
    return Dag(n=n, arcs=tuple(arcs), k=k, source=0, sink=n - 1)


def gen_antisymmetry_fixture(level: int, k: int | None = None) -> Dag:
    """Triangle s->a->t plus shortcut s->t, every arc at ``level``.

    Its two paths mutually dominate each other while having different
    sorted vectors, so the dominance preorder is not antisymmetric.
    """
    if k is None:
        k = level
    if not 1 <= level <= k:
        raise ValueError(f"level {level} outside [1, {k}]")
    s, a, t = 0, 1, 2
    arcs = (Arc(s, a, level), Arc(a, t, level), Arc(s, t, level))
    return Dag(n=3, arcs=arcs, k=k, source=s, sink=t)


def gen_bellman_fixture() -> Dag:
    """Four-node graph where a dominated partial path extends to a
    non-dominated full path, breaking Bellman's principle.

    Nodes s, a, b, t; arcs s->a (1), a->b (2), s->b (1), b->t (3).
    """
    s, a, b, t = 0, 1, 2, 3
    arcs = (Arc(s, a, 1), Arc(a, b, 2), Arc(s, b, 1), Arc(b, t, 3))
    return Dag(n=4, arcs=arcs, k=3, source=s, sink=t)


def gen_detour_fixture() -> Dag:
    """Acyclic graph whose longer detour path is also non-dominated.

    Front is {(1,3), (1,1,3,3)}: the short path (3,1) and the detour
    (3,3,1,1) are mutually incomparable. Built by splitting the revisited
    node of the cyclic original into an early and a late copy.
    """
    s, a1, c, b, a2, t = range(6)
    arcs = (
        Arc(s, a1, 3), Arc(s, c, 3),
        Arc(a1, b, 3), Arc(c, b, 3),
        Arc(b, a2, 1), Arc(b, t, 3),
        Arc(a1, t, 1), Arc(a2, t, 1),
    )
    return Dag(n=6, arcs=arcs, k=3, source=s, sink=t)
