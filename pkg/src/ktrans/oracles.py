"""Brute-force verifiers: the ground truth the fast paths are tested against.

`check_k_transitive` tests the shortcut condition by walk enumeration;
`exhaustive_minimal_closure` decides closure existence by enumerating every
oriented supergraph (n <= 5 only).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from .digraph import Arc, OrientedDigraph


@dataclass(frozen=True)
class ViolationReport:
    """A directed k-arc walk whose endpoints lack the shortcut arc."""

    kind: str  # "missing-shortcut"
    path: tuple[int, ...]


def _k_step_reach(n: int, out: dict[int, frozenset[int] | set[int] | tuple[int, ...]], k: int, start: int) -> set[int]:
    """Endpoints of walks of exactly k arcs starting at `start`."""
    cur = {start}
    for _ in range(k):
        nxt: set[int] = set()
        for y in cur:
            nxt.update(out[y])
        cur = nxt
        if not cur:
            break
    return cur


def _shortcut_gap_exists(n: int, arcs: frozenset[Arc] | set[Arc], out, k: int) -> bool:
    """True iff some open k-walk (v0 != vk) lacks its shortcut arc."""
    for x in range(n):
        for z in _k_step_reach(n, out, k, x):
            if z != x and (x, z) not in arcs:
                return True
    return False


def has_closed_walk(g: OrientedDigraph, k: int) -> bool:
    """True iff g contains a directed walk of exactly k arcs from a vertex to itself."""
    out = {v: g.out_neighbors(v) for v in range(g.n)}
    return any(x in _k_step_reach(g.n, out, k, x) for x in range(g.n))


def check_k_transitive(g: OrientedDigraph, k: int) -> ViolationReport | None:
    """First open k-arc walk (lexicographic) missing its shortcut, or None.

    Walks may revisit vertices.  A walk returning to its start needs no
    shortcut here (no loop arc could exist); closed walks matter for closure
    existence, not for this check.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    out = {v: g.out_neighbors(v) for v in range(g.n)}
    if not _shortcut_gap_exists(g.n, g.arcs, out, k):
        return None

    def first_violation(walk: list[int]) -> tuple[int, ...] | None:
        if len(walk) == k + 1:
            if walk[0] != walk[-1] and (walk[0], walk[-1]) not in g.arcs:
                return tuple(walk)
            return None
        for w in out[walk[-1]]:
            walk.append(w)
            found = first_violation(walk)
            if found is not None:
                return found
            walk.pop()
        return None

    for v0 in range(g.n):
        found = first_violation([v0])
        if found is not None:
            return ViolationReport("missing-shortcut", found)
    raise AssertionError("reach check found a gap but walk enumeration did not")


def _closure_eligible(n: int, arcs: set[Arc], k: int) -> bool:
    """Can `arcs` be a k-transitive closure? No closed k-walk, no shortcut gap."""
    out: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in arcs:
        out[u].add(v)
    for x in range(n):
        reach = _k_step_reach(n, out, k, x)
        if x in reach:
            return False
        for z in reach:
            if (x, z) not in arcs:
                return False
    return True


def all_oriented_digraphs(n: int) -> Iterator[OrientedDigraph]:
    """Every oriented digraph on n labeled vertices (3 states per vertex pair)."""
    pairs = list(combinations(range(n), 2))
    for states in product((0, 1, 2), repeat=len(pairs)):
        arcs = set()
        for (x, y), s in zip(pairs, states):
            if s == 1:
                arcs.add((x, y))
            elif s == 2:
                arcs.add((y, x))
        yield OrientedDigraph(n, arcs)


def exhaustive_minimal_closure(g: OrientedDigraph, k: int) -> OrientedDigraph | None:
    """Minimal k-transitive oriented supergraph of g by full enumeration, or None.

    Restricted to n <= 5 (3 states per unarced pair, so up to 3^10
    candidates).  Also audits uniqueness: the intersection of all candidate
    closures must itself be a candidate closure, otherwise no unique minimum
    exists and this raises.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if g.n > 5:
        raise ValueError(f"exhaustive closure enumeration is limited to n <= 5, got n={g.n}")
    free = [
        (x, y)
        for x, y in combinations(range(g.n), 2)
        if (x, y) not in g.arcs and (y, x) not in g.arcs
    ]
    eligible: list[frozenset[Arc]] = []
    for states in product((0, 1, 2), repeat=len(free)):
        arcs = set(g.arcs)
        for (x, y), s in zip(free, states):
            if s == 1:
                arcs.add((x, y))
            elif s == 2:
                arcs.add((y, x))
        if _closure_eligible(g.n, arcs, k):
            eligible.append(frozenset(arcs))
    if not eligible:
        return None
    common = frozenset.intersection(*eligible)
    if common not in set(eligible):
        raise AssertionError(
            f"no unique minimal {k}-transitive supergraph: intersection of "
            f"{len(eligible)} candidates is not itself a candidate"
        )
    return OrientedDigraph(g.n, common)
