"""DAG representation, validation, topological order, and instance file I/O.

Nodes are dense 0-based indices; instance files use 1-based ids. A ``Dag``
is immutable after construction and may represent an invalid graph (loops,
cycles, bad levels) so that ``validate`` can report on it; solvers refuse
graphs whose validation report is not ok.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import CycleError, NoPathError, ParseError


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    level: int


@dataclass(frozen=True)
class Dag:
    n: int
    arcs: tuple[Arc, ...]
    k: int
    source: int
    sink: int

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-node tuple of (head, level) pairs, in arc insertion order."""
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for a in self.arcs:
            out[a.tail].append((a.head, a.level))
        return tuple(tuple(lst) for lst in out)

    @cached_property
    def arc_levels(self) -> dict[tuple[int, int], int]:
        return {(a.tail, a.head): a.level for a in self.arcs}

    @property
    def m(self) -> int:
        return len(self.arcs)


def make_dag(n: int, arcs: Iterable[tuple[int, int, int]], k: int,
             source: int = 0, sink: int | None = None) -> Dag:
    """Convenience constructor from (tail, head, level) triples."""
    if sink is None:
        sink = n - 1
    return Dag(n=n, arcs=tuple(Arc(*t) for t in arcs), k=k,
               source=source, sink=sink)


@dataclass(frozen=True)
class ValidationReport:
    is_acyclic: bool
    loops: tuple[Arc, ...]
    parallel_arcs: tuple[tuple[int, int], ...]
    bad_levels: tuple[Arc, ...]
    bad_endpoints: tuple[Arc, ...]
    sink_reachable: bool

    @property
    def ok(self) -> bool:
        return (self.is_acyclic and not self.loops and not self.parallel_arcs
                and not self.bad_levels and not self.bad_endpoints
                and self.sink_reachable)

    def issues(self) -> list[str]:
        out = []
        if not self.is_acyclic:
            out.append("graph contains a directed cycle")
        if self.loops:
            out.append(f"loop arcs: {[(a.tail, a.head) for a in self.loops]}")
        if self.parallel_arcs:
            out.append(f"parallel arcs: {list(self.parallel_arcs)}")
        if self.bad_levels:
            out.append(f"levels outside [1, K]: "
                       f"{[(a.tail, a.head, a.level) for a in self.bad_levels]}")
        if self.bad_endpoints:
            out.append(f"arcs with out-of-range endpoints: "
                       f"{[(a.tail, a.head) for a in self.bad_endpoints]}")
        if not self.sink_reachable:
            out.append("sink not reachable from source")
        return out


def validate(g: Dag) -> ValidationReport:
    """Report every structural violation; never raises."""
    loops = tuple(a for a in g.arcs if a.tail == a.head)
    bad_endpoints = tuple(a for a in g.arcs
                          if not (0 <= a.tail < g.n and 0 <= a.head < g.n))
    bad_levels = tuple(a for a in g.arcs if not 1 <= a.level <= g.k)
    seen: set[tuple[int, int]] = set()
    parallel = []
    for a in g.arcs:
        key = (a.tail, a.head)
        if key in seen:
            parallel.append(key)
        seen.add(key)

    if bad_endpoints:
        acyclic = False
        reachable = False
    else:
        try:
            topological_order(g)
            acyclic = True
        except CycleError:
            acyclic = False
        reachable = g.sink in _forward_reachable(g)

    return ValidationReport(is_acyclic=acyclic, loops=loops,
                            parallel_arcs=tuple(parallel),
                            bad_levels=bad_levels,
                            bad_endpoints=bad_endpoints,
                            sink_reachable=reachable)


def topological_order(g: Dag) -> list[int]:
    """Kahn's algorithm; deterministic (FIFO, sources in index order)."""
    indeg = [0] * g.n
    for a in g.arcs:
        indeg[a.head] += 1
    queue = [v for v in range(g.n) if indeg[v] == 0]
    order = []
    i = 0
    adj = g.adjacency
    while i < len(queue):
        v = queue[i]
        i += 1
        order.append(v)
        for w, _level in adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(order) != g.n:
        raise CycleError("graph contains a directed cycle")
    return order


def _forward_reachable(g: Dag) -> set[int]:
    adj = g.adjacency
    seen = {g.source}
    stack = [g.source]
    while stack:
        v = stack.pop()
        for w, _level in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _backward_reachable(g: Dag) -> set[int]:
    rev: list[list[int]] = [[] for _ in range(g.n)]
    for a in g.arcs:
        rev[a.head].append(a.tail)
    seen = {g.sink}
    stack = [g.sink]
    while stack:
        v = stack.pop()
        for u in rev[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def prune_unreachable(g: Dag) -> tuple[Dag, dict[int, int]]:
    """Subgraph induced by nodes on at least one source-sink path.

    Returns the re-densified graph and the old-id -> new-id mapping.
    """
    keep = _forward_reachable(g) & _backward_reachable(g)
    if g.sink not in _forward_reachable(g):
        raise NoPathError("sink not reachable from source", dag=g)
    mapping = {old: new for new, old in enumerate(sorted(keep))}
    arcs = tuple(Arc(mapping[a.tail], mapping[a.head], a.level)
                 for a in g.arcs if a.tail in keep and a.head in keep)
    pruned = Dag(n=len(keep), arcs=arcs, k=g.k,
                 source=mapping[g.source], sink=mapping[g.sink])
    return pruned, mapping


def write_instance(g: Dag) -> str:
    """Line-oriented text format: header `n m K s t`, then `u v c` arcs (1-based)."""
    lines = [f"{g.n} {g.m} {g.k} {g.source + 1} {g.sink + 1}"]
    for a in sorted(g.arcs, key=lambda a: (a.tail, a.head)):
        lines.append(f"{a.tail + 1} {a.head + 1} {a.level}")
    return "\n".join(lines) + "\n"


def read_instance(text: str) -> Dag:
    """Parse the instance format; raises ParseError with a line number."""
    rows = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((line_no, line))
    if not rows:
        raise ParseError("empty instance", line_no=1)

    line_no, header = rows[0]
    parts = header.split()
    if len(parts) != 5:
        raise ParseError("header must be `n m K s t`", line_no=line_no)
    try:
        n, m, k, s, t = (int(p) for p in parts)
    except ValueError:
        raise ParseError("non-integer header field", line_no=line_no) from None
    if n < 1 or k < 1:
        raise ParseError("n and K must be positive", line_no=line_no)
    if not (1 <= s <= n and 1 <= t <= n):
        raise ParseError("source/sink id out of range", line_no=line_no)
    if len(rows) - 1 != m:
        raise ParseError(f"expected {m} arc lines, found {len(rows) - 1}",
                         line_no=line_no)

    arcs = []
    for line_no, line in rows[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError("arc line must be `u v c`", line_no=line_no)
        try:
            u, v, c = (int(p) for p in parts)
        except ValueError:
            raise ParseError("non-integer arc field", line_no=line_no) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"node id out of range: {u} {v}", line_no=line_no)
        if not 1 <= c <= k:
            raise ParseError(f"level {c} outside [1, {k}]", line_no=line_no)
        arcs.append(Arc(u - 1, v - 1, c))

    return Dag(n=n, arcs=tuple(arcs), k=k, source=s - 1, sink=t - 1)
