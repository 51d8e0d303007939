"""Oriented digraphs: immutable arc-set representation with degree bookkeeping.

An oriented digraph has no loops and contains at most one of (u, v), (v, u)
for any vertex pair.  Vertices are the integers 0..n-1; all human-facing
rendering (CLI, file formats) shifts to 1-based labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Arc = tuple[int, int]


class ArcConflictError(ValueError):
    """An arc would violate an oriented-digraph invariant.

    ``kind`` is one of ``"loop"``, ``"reverse-exists"``, ``"duplicate"``.
    """

    def __init__(self, kind: str, arc: Arc):
        self.kind = kind
        self.arc = arc
        super().__init__(f"arc {arc}: {kind}")


class OrientedDigraph:
    """Loop-free digraph with at most one orientation per vertex pair.

    Instances are immutable once constructed; derive new graphs with
    :func:`add_arc` or :func:`induced_subgraph`.  Arc membership is O(1)
    and both out- and in-neighbors are precomputed (sorted) for walking
    in either direction.
    """

    __slots__ = ("n", "arcs", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[Arc] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        arc_set = frozenset((int(u), int(v)) for u, v in arcs)
        out: dict[int, list[int]] = {v: [] for v in range(n)}
        inn: dict[int, list[int]] = {v: [] for v in range(n)}
        for u, v in sorted(arc_set):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ArcConflictError("loop", (u, v))
            if (v, u) in arc_set:
                raise ArcConflictError("reverse-exists", (u, v))
            out[u].append(v)
            inn[v].append(u)
        self.n = n
        self.arcs = arc_set
        self._out = {v: tuple(ns) for v, ns in out.items()}
        self._in = {v: tuple(sorted(ns)) for v, ns in inn.items()}

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        """Successors of v in ascending order."""
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        """Predecessors of v in ascending order."""
        return self._in[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrientedDigraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"OrientedDigraph(n={self.n}, arcs={sorted(self.arcs)})"


@dataclass(frozen=True)
class DegreeProfile:
    """In/out/pair/total degree sequences of a digraph, indexed by vertex."""

    indeg: tuple[int, ...]
    outdeg: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    total: tuple[int, ...]


def make_path(n: int) -> OrientedDigraph:
    """Directed path on n vertices: arcs (i, i+1) for 0 <= i < n-1."""
    if n < 0:
        raise ValueError(f"path needs n >= 0, got {n}")
    return OrientedDigraph(n, ((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> OrientedDigraph:
    """Cyclically oriented cycle on n vertices; requires n >= 3."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3 to stay loop-free and oriented, got {n}")
    return OrientedDigraph(n, ((i, (i + 1) % n) for i in range(n)))


def add_arc(g: OrientedDigraph, u: int, v: int) -> OrientedDigraph:
    """Return a new graph with arc (u, v) added.

    Raises ArcConflictError("loop" | "reverse-exists" | "duplicate") when the
    arc would break an invariant; duplicates get their own kind so idempotent
    callers can ignore them.
    """
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"arc ({u}, {v}) out of range for n={g.n}")
    if u == v:
        raise ArcConflictError("loop", (u, v))
    if (v, u) in g.arcs:
        raise ArcConflictError("reverse-exists", (u, v))
    if (u, v) in g.arcs:
        raise ArcConflictError("duplicate", (u, v))
    return OrientedDigraph(g.n, g.arcs | {(u, v)})


def degree_profile(g: OrientedDigraph) -> DegreeProfile:
    """Exact indegree/outdegree/pair/total sequences of g."""
    indeg = tuple(len(g.in_neighbors(v)) for v in range(g.n))
    outdeg = tuple(len(g.out_neighbors(v)) for v in range(g.n))
    return DegreeProfile(
        indeg=indeg,
        outdeg=outdeg,
        pairs=tuple(zip(indeg, outdeg)),
        total=tuple(i + o for i, o in zip(indeg, outdeg)),
    )


def induced_subgraph(g: OrientedDigraph, keep: Sequence[int]) -> OrientedDigraph:
    """Subgraph induced by `keep`, reindexed by position in `keep`."""
    index: dict[int, int] = {}
    for pos, v in enumerate(keep):
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        if v in index:
            raise ValueError(f"duplicate vertex {v} in induced subgraph selection")
        index[v] = pos
    arcs = (
        (index[u], index[v])
        for u, v in g.arcs
        if u in index and v in index
    )
    return OrientedDigraph(len(keep), arcs)
