"""Lexicographically maximal frequency vector over all s-t paths.

Two independent routes: a direct DP over the topological order, and a
reduction to a longest-path computation with per-level digit-block
weights. Both must return the same value vector; the witness paths may
differ on ties.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoPathError
from .graph import Dag, topological_order
from .labeling import Variant, solve
from .ordinal import freq_vector, sorted_from_freq


def lexmax_dp(g: Dag) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Keep the lex-greatest frequency vector of any s-v path per node.

    Sound because the lexicographic order is invariant under adding a
    common increment to both sides, so a lex-maximal prefix extends to a
    lex-maximal path. Ties keep the first-found path in topological order.
    """
    best: list[tuple[int, ...] | None] = [None] * g.n
    came_from: list[int | None] = [None] * g.n
    best[g.source] = (0,) * g.k
    adj = g.adjacency
    for v in topological_order(g):
        bv = best[v]
        if bv is None:
            continue
        for w, level in adj[v]:
            i = level - 1
            cand = bv[:i] + (bv[i] + 1,) + bv[i + 1:]
            if best[w] is None or cand > best[w]:
                best[w] = cand
                came_from[w] = v
    if best[g.sink] is None:
        raise NoPathError("sink not reachable from source", dag=g)
    return best[g.sink], _walk_back(g, came_from)


@dataclass(frozen=True)
class DigitWeights:
    """Integer arc weights with one decimal digit block per level.

    ``digits[c-1]`` is the number of decimal digits of the count of
    level-c arcs (0 when the level is unused), which makes each block
    wide enough that no path's count at a worse level can carry into a
    better level's block. ``weights[c-1]`` is the exact integer weight of
    a level-c arc after scaling all weights by ``scale``.
    """
    digits: tuple[int, ...]
    weights: tuple[int, ...]
    scale: int


def digit_weights(g: Dag) -> DigitWeights:
    counts = [0] * g.k
    for a in g.arcs:
        counts[a.level - 1] += 1
    digits = tuple(len(str(c)) if c > 0 else 0 for c in counts)
    total = sum(digits)
    weights = tuple(10 ** (total - sum(digits[:c])) for c in range(g.k))
    return DigitWeights(digits=digits, weights=weights,
                        scale=10 ** (1 + total))


def lexmax_longest_path(g: Dag) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Longest path under digit-block weights; value vector matches
    lexmax_dp exactly (all arithmetic is integer)."""
    dw = digit_weights(g)
    dist: list[int | None] = [None] * g.n
    came_from: list[int | None] = [None] * g.n
    dist[g.source] = 0
    adj = g.adjacency
    for v in topological_order(g):
        dv = dist[v]
        if dv is None:
            continue
        for w, level in adj[v]:
            cand = dv + dw.weights[level - 1]
            if dist[w] is None or cand > dist[w]:
                dist[w] = cand
                came_from[w] = v
    if dist[g.sink] is None:
        raise NoPathError("sink not reachable from source", dag=g)
    path = _walk_back(g, came_from)
    levels = [g.arc_levels[(u, v)] for u, v in zip(path, path[1:])]
    return freq_vector(levels, g.k), path


def certify_nondominated(g: Dag, s_vec) -> bool:
    """True iff the sorted form of ``s_vec`` is in the solver's front."""
    return sorted_from_freq(s_vec) in solve(g, Variant.MOD2).front


def _walk_back(g: Dag, came_from) -> tuple[int, ...]:
    path = [g.sink]
    while path[-1] != g.source:
        path.append(came_from[path[-1]])
    return tuple(reversed(path))
