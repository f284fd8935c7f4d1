"""Ordinal vector algebra.

Vectors of qualitative levels (1 best, K worst) are plain tuples of ints.
A *sorted* vector is non-decreasing; a *frequency* vector is a length-K
tuple of per-level counts, bijective with the sorted vector. Dominance
between paths of unequal length compares the worse suffix of the longer
vector against the shorter one (or the better prefix of the longer one,
depending on which side is longer).
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence


def sort_vector(v: Sequence[int]) -> tuple[int, ...]:
    """Non-decreasing rearrangement of ``v``."""
    return tuple(sorted(v))


def sort_forw(v: Sequence[int], m: int) -> tuple[int, ...]:
    """The ``m`` best (smallest) levels of ``v``, sorted."""
    if m < 0 or m > len(v):
        raise ValueError(f"m={m} out of range for vector of length {len(v)}")
    return tuple(sorted(v)[:m])


def sort_backw(v: Sequence[int], m: int) -> tuple[int, ...]:
    """The ``m`` worst (largest) levels of ``v``, sorted."""
    if m < 0 or m > len(v):
        raise ValueError(f"m={m} out of range for vector of length {len(v)}")
    n = len(v)
    return tuple(sorted(v)[n - m:])


def leq_componentwise(x: Sequence[int], y: Sequence[int]) -> bool:
    """Componentwise x[i] <= y[i]; requires equal lengths."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return all(a <= b for a, b in zip(x, y))


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """Ordinal dominance of sorted vector ``a`` over sorted vector ``b``.

    With m = len(a), n = len(b): equal lengths compare componentwise;
    a longer ``a`` pits its worst n entries against ``b``; a shorter
    ``a`` is compared against the best m entries of ``b``. Both inputs
    must already be sorted, so suffix/prefix slicing suffices.
    """
    m, n = len(a), len(b)
    if m == n:
        return all(x <= y for x, y in zip(a, b))
    if m > n:
        return all(x <= y for x, y in zip(a[m - n:], b))
    return all(x <= y for x, y in zip(a, b[:m]))


def strictly_dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """Dominance plus distinct sorted vectors.

    Not asymmetric: (1) and (1,1) strictly dominate each other, which is
    exactly the preorder's failure of antisymmetry.
    """
    return tuple(a) != tuple(b) and dominates(a, b)


def nondominated_filter(vs: Iterable[Sequence[int]]) -> set[tuple[int, ...]]:
    """Keep vectors not strictly dominated by any other vector in ``vs``.

    Implements the efficiency definition literally: a mutually strictly
    dominating pair such as (1) and (1,1) eliminates both members. The
    labeling solver and the oracle use the one-sided retained-pair rule
    instead (see ordpaths.oracle.one_sided_front).
    """
    pool = {tuple(v) for v in vs}
    return {
        v for v in pool
        if not any(u != v and dominates(u, v) for u in pool)
    }


def freq_vector(v: Sequence[int], k: int) -> tuple[int, ...]:
    """Per-level counts of ``v`` over levels 1..k."""
    counts = [0] * k
    for level in v:
        if not 1 <= level <= k:
            raise ValueError(f"level {level} outside [1, {k}]")
        counts[level - 1] += 1
    return tuple(counts)


def sorted_from_freq(counts: Sequence[int]) -> tuple[int, ...]:
    """Inverse of freq_vector: level c repeated counts[c-1] times, ascending."""
    out = []
    for idx, c in enumerate(counts):
        out.extend([idx + 1] * c)
    return tuple(out)


def lex_ge(s1: Sequence[int], s2: Sequence[int]) -> bool:
    """s1 >=_lex s2: equal, or greater at the first differing count."""
    if len(s1) != len(s2):
        raise ValueError(f"length mismatch: {len(s1)} vs {len(s2)}")
    # Python tuple comparison is exactly this lexicographic rule.
    return tuple(s1) >= tuple(s2)


def label_bound(n: int, k: int) -> int:
    """Upper bound on distinct path vectors from the source to any node.

    Closed form n*C(k+n-1, n)/k - 1 of the sum over path lengths
    1..n-1 of C(k+i-1, i); exact integer arithmetic throughout.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    total = n * math.comb(k + n - 1, n)
    assert total % k == 0
    return total // k - 1


def cum_from_freq(counts: Sequence[int]) -> tuple[int, ...]:
    """Cumulative counts: entry c-1 is the number of levels <= c."""
    out = []
    acc = 0
    for c in counts:
        acc += c
        out.append(acc)
    return tuple(out)


def dominates_cum(ca: Sequence[int], cb: Sequence[int]) -> bool:
    """Ordinal dominance computed on cumulative frequency vectors in O(K).

    Equivalent to ``dominates`` on the corresponding sorted vectors: a
    sorted x is componentwise <= a same-length sorted y iff x has at
    least as many entries <= c as y, for every level c. Suffix/prefix
    truncation of a sorted vector clips the cumulative counts.
    """
    m, n = ca[-1], cb[-1]
    if m == n:
        return all(x >= y for x, y in zip(ca, cb))
    if m > n:
        d = m - n
        return all(x - d >= y or y == 0 for x, y in zip(ca, cb))
    return all(x >= (y if y < m else m) for x, y in zip(ca, cb))
