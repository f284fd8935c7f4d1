"""Brute-force ground truth by exhaustive s-t path enumeration.

The front filter uses the same one-sided dominance rule as the labeling
solver's sink update, so solver-vs-oracle comparisons are exact set
equality, including retention of mutually dominating vector pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError
from .graph import Dag
from .ordinal import dominates, freq_vector, sort_vector


@dataclass(frozen=True)
class PathRecord:
    nodes: tuple[int, ...]
    vector: tuple[int, ...]
    sorted: tuple[int, ...]
    freq: tuple[int, ...]


DEFAULT_CAP = 10 ** 6


def enumerate_paths(g: Dag, cap: int = DEFAULT_CAP) -> list[PathRecord]:
    """Every s-t path exactly once, DFS order (paths are simple by
    acyclicity). Raises CapExceededError once more than ``cap`` paths
    are found."""
    adj = g.adjacency
    records: list[PathRecord] = []
    if g.source == g.sink:
        empty = (0,) * g.k
        return [PathRecord((g.source,), (), (), empty)]
    # Stack of per-node arc cursors; nodes/levels mirror the current path.
    nodes = [g.source]
    levels: list[int] = []
    cursors = [0]
    while cursors:
        v = nodes[-1]
        i = cursors[-1]
        if i >= len(adj[v]):
            nodes.pop()
            cursors.pop()
            if levels:
                levels.pop()
            continue
        cursors[-1] += 1
        w, level = adj[v][i]
        if w == g.sink:
            if len(records) >= cap:
                raise CapExceededError(f"more than {cap} s-t paths",
                                       count=len(records))
            vec = tuple(levels) + (level,)
            records.append(PathRecord(tuple(nodes) + (w,), vec,
                                      sort_vector(vec), freq_vector(vec, g.k)))
        else:
            nodes.append(w)
            levels.append(level)
            cursors.append(0)
    return records


def one_sided_front(vectors) -> set[tuple[int, ...]]:
    """Minimal sorted vectors under one-sided dominance.

    v is dropped iff some distinct u dominates it without being dominated
    back; mutually dominating pairs both survive, matching the solver.
    """
    pool = {tuple(v) for v in vectors}
    return {
        v for v in pool
        if not any(u != v and dominates(u, v) and not dominates(v, u)
                   for u in pool)
    }


def oracle_front(g: Dag, cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    """Ground-truth set of ordinally non-dominated s-t path vectors."""
    return one_sided_front(r.sorted for r in enumerate_paths(g, cap))


def count_efficient_paths(g: Dag, cap: int = DEFAULT_CAP) -> int:
    """Number of s-t paths whose sorted vector is in the front; paths
    sharing a non-dominated vector all count."""
    records = enumerate_paths(g, cap)
    front = one_sided_front(r.sorted for r in records)
    return sum(1 for r in records if r.sorted in front)
