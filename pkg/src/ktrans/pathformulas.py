"""Closed-form structure of K(k,n), the k-transitive closure of a directed path.

All results here are exact: arc sets come from the arc-length
characterization (an arc (i, j) exists iff j - i is 1 modulo k-1), degree
sequences from the block decomposition n = 2 + l(k-1) + m, and densities
are Fractions, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digraph import Arc, OrientedDigraph

Rational = Fraction


@dataclass(frozen=True)
class PathParams:
    """Unique decomposition n = 2 + l(k-1) + m with 0 <= m < k-1 (n >= 2)."""

    k: int
    n: int
    l: int
    m: int


def _require_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")


def decompose(k: int, n: int) -> PathParams:
    """Split n >= 2 as 2 + l(k-1) + m; governs all block structure below."""
    _require_k(k)
    if n < 2:
        raise ValueError(f"decomposition needs n >= 2, got {n}")
    l, m = divmod(n - 2, k - 1)
    return PathParams(k=k, n=n, l=l, m=m)


def path_closure_arcs(k: int, n: int) -> frozenset[Arc]:
    """Arc set of K(k,n), 0-based: all (i, j) with j - i = 1 + l(k-1), l >= 0."""
    _require_k(k)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return frozenset(
        (i, j) for i in range(n) for j in range(i + 1, n, k - 1)
    )


def path_closure_graph(k: int, n: int) -> OrientedDigraph:
    """K(k,n) as a graph value."""
    return OrientedDigraph(n, path_closure_arcs(k, n))


def indegree_sequence(k: int, n: int) -> tuple[int, ...]:
    """Indegrees of K(k,n): (0, 1 x(k-1), ..., l x(k-1), (l+1) x(m+1))."""
    _require_k(k)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return (0,)
    p = decompose(k, n)
    seq = [0]
    for j in range(1, p.l + 1):
        seq.extend([j] * (k - 1))
    seq.extend([p.l + 1] * (p.m + 1))
    return tuple(seq)


def outdegree_sequence(k: int, n: int) -> tuple[int, ...]:
    """Outdegrees of K(k,n): the indegree sequence reversed."""
    return tuple(reversed(indegree_sequence(k, n)))


def total_degree_sequence(k: int, n: int) -> tuple[int, ...]:
    """Underlying-graph degrees of K(k,n).

    Regular case m=0: constant l+1.  Otherwise the block
    (l+1, (l+2) x m, (l+1) x (k-m-2)) of length k-1 repeats, truncated to n;
    truncation realizes the short last block without modular edge cases.
    """
    _require_k(k)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return (0,)
    p = decompose(k, n)
    if p.m == 0:
        return (p.l + 1,) * n
    a, b = p.l + 1, p.l + 2
    block = [a] + [b] * p.m + [a] * (k - p.m - 2)
    reps = -(-n // len(block))
    return tuple((block * reps)[:n])


def degree_counts(k: int, n: int) -> tuple[int, int]:
    """(vertices of degree l+1, vertices of degree l+2) in the underlying graph."""
    p = decompose(k, n)
    count_high = p.m * (p.l + 1)
    count_low = p.l * (k - p.m - 1) + 2
    return count_low, count_high


def edge_count(k: int, n: int) -> int:
    """Number of arcs of K(k,n) (= edges of the underlying graph)."""
    _require_k(k)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 0
    p = decompose(k, n)
    twice = p.m * (p.l + 1) * (p.l + 2) + (2 + p.l * (k - p.m - 1)) * (p.l + 1)
    return twice // 2


def density(k: int, n: int) -> Rational:
    """Edge density of the underlying graph of K(k,n): 2E / (n(n-1)), exact."""
    _require_k(k)
    if n < 2:
        raise ValueError(f"density needs n >= 2, got {n}")
    return Fraction(2 * edge_count(k, n), n * (n - 1))


def density_limit(k: int) -> Rational:
    """Limit of the density of K(k,n) as n grows: 1/(k-1), for k >= 3."""
    if k < 3:
        raise ValueError(f"density limit 1/(k-1) applies for k >= 3, got {k}")
    return Fraction(1, k - 1)


def is_regular(k: int, n: int) -> bool:
    """True iff the underlying graph of K(k,n) is regular (n = 1 or m = 0)."""
    _require_k(k)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return n == 1 or decompose(k, n).m == 0


def is_oriented_irregular(k: int, n: int) -> bool:
    """True iff all (indegree, outdegree) pairs of K(k,n) are pairwise distinct."""
    pairs = tuple(zip(indegree_sequence(k, n), outdegree_sequence(k, n)))
    return len(set(pairs)) == len(pairs)
