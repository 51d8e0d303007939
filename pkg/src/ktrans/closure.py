"""k-transitive closure by forced-arc saturation, with replayable certificates.

Every directed walk of exactly k arcs forces a shortcut arc from its first
to its last vertex.  Saturating those demands either reaches a fixpoint
(the unique minimal closure) or forces an arc that cannot exist in an
oriented graph - a loop, or the reverse of an arc already present - which
proves no closure exists.  Each forced arc carries the walk that demanded
it, so both outcomes can be replayed and audited independently.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .digraph import Arc, OrientedDigraph
from .oracles import check_k_transitive, has_closed_walk


@dataclass(frozen=True)
class DerivationWitness:
    """A k-arc walk (path[0], ..., path[k]) that forces arc `target`."""

    target: Arc
    path: tuple[int, ...]


@dataclass(frozen=True)
class ClosureExists:
    closure: OrientedDigraph
    added: tuple[tuple[Arc, DerivationWitness], ...]


@dataclass(frozen=True)
class ClosureNotExists:
    """Forced-arc chain ending in a demand no oriented graph can satisfy."""

    certificate: tuple[tuple[Arc, DerivationWitness], ...]
    conflict_kind: str  # "loop" | "reverse-conflict"
    conflict: DerivationWitness


ClosureResult = ClosureExists | ClosureNotExists


class ClosureCapError(RuntimeError):
    """Added-arc cap exceeded; a correct run cannot hit it."""


def _min_walks_into(inn: dict[int, set[int]], u: int, depth: int) -> list[dict[int, tuple[int, ...]]]:
    """layers[j][x] = lexicographically least walk (x, ..., u) of j arcs."""
    layers = [{u: (u,)}]
    for _ in range(depth):
        best: dict[int, tuple[int, ...]] = {}
        for y, walk in layers[-1].items():
            for x in inn[y]:
                cur = best.get(x)
                if cur is None or walk < cur:
                    best[x] = walk
        layers.append({x: (x,) + walk for x, walk in best.items()})
    return layers


def _min_walks_from(out: dict[int, set[int]], v: int, depth: int) -> list[dict[int, tuple[int, ...]]]:
    """layers[j][x] = lexicographically least walk (v, ..., x) of j arcs."""
    layers = [{v: (v,)}]
    for _ in range(depth):
        best: dict[int, tuple[int, ...]] = {}
        for y, walk in layers[-1].items():
            for x in out[y]:
                cur = best.get(x)
                if cur is None or walk < cur:
                    best[x] = walk
        layers.append({x: walk + (x,) for x, walk in best.items()})
    return layers


def k_closure(g: OrientedDigraph, k: int, *, max_added: int | None = None) -> ClosureResult:
    """Compute the k-transitive closure of g, or certify that none exists.

    Arcs are processed FIFO starting from the input arcs in sorted order.
    Processing arc (u, v) demands a shortcut for every k-arc walk through it,
    enumerated by backward steps i = 0..k-1 from u and then lexicographic
    walk order, so reruns produce identical witnesses and certificates.
    A demanded arc that is a loop or reverses an existing arc is impossible
    in an oriented graph: the forced chain so far plus that demand is
    returned as the nonexistence certificate.

    `max_added` caps the number of added arcs (default n*n, unreachable by
    a correct run); exceeding it raises ClosureCapError.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    cap = g.n * g.n if max_added is None else max_added
    out: dict[int, set[int]] = {x: set(g.out_neighbors(x)) for x in range(g.n)}
    inn: dict[int, set[int]] = {x: set(g.in_neighbors(x)) for x in range(g.n)}
    arcs: set[Arc] = set(g.arcs)
    queue: deque[Arc] = deque(sorted(arcs))
    added: list[tuple[Arc, DerivationWitness]] = []

    while queue:
        u, v = queue.popleft()
        back = _min_walks_into(inn, u, k - 1)
        fwd = _min_walks_from(out, v, k - 1)
        for i in range(k):
            prefixes = back[i]
            suffixes = fwd[k - 1 - i]
            if not prefixes or not suffixes:
                continue
            for b in sorted(prefixes, key=prefixes.__getitem__):
                for f in sorted(suffixes, key=suffixes.__getitem__):
                    if b == f:
                        witness = DerivationWitness((b, f), prefixes[b] + suffixes[f])
                        return ClosureNotExists(tuple(added), "loop", witness)
                    if b in out[f]:
                        witness = DerivationWitness((b, f), prefixes[b] + suffixes[f])
                        return ClosureNotExists(tuple(added), "reverse-conflict", witness)
                    if f in out[b]:
                        continue
                    witness = DerivationWitness((b, f), prefixes[b] + suffixes[f])
                    arcs.add((b, f))
                    out[b].add(f)
                    inn[f].add(b)
                    added.append(((b, f), witness))
                    queue.append((b, f))
                    if len(added) > cap:
                        raise ClosureCapError(
                            f"added more than {cap} arcs; this signals an internal error"
                        )
    return ClosureExists(OrientedDigraph(g.n, arcs), tuple(added))


def _witness_failure(derived: set[Arc], k: int, arc: Arc, wit: DerivationWitness) -> str | None:
    if wit.target != arc:
        return f"witness target {wit.target} does not match arc {arc}"
    if len(wit.path) != k + 1:
        return f"witness path {wit.path} does not have {k} arcs"
    if (wit.path[0], wit.path[-1]) != arc:
        return f"witness path endpoints do not span arc {arc}"
    for a, b in zip(wit.path, wit.path[1:]):
        if (a, b) not in derived:
            return f"witness step ({a}, {b}) is not an input or earlier-derived arc"
    u, v = arc
    if u == v:
        return f"derived arc {arc} is a loop"
    if (v, u) in derived:
        return f"derived arc {arc} reverses an existing arc"
    if arc in derived:
        return f"derived arc {arc} already present"
    return None


def replay_failure(g: OrientedDigraph, k: int, result: ClosureResult) -> str | None:
    """Description of the first invalid step of `result` against (g, k), or None."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    derived = set(g.arcs)
    chain = result.added if isinstance(result, ClosureExists) else result.certificate
    for idx, (arc, wit) in enumerate(chain):
        failure = _witness_failure(derived, k, arc, wit)
        if failure:
            return f"step {idx}: {failure}"
        derived.add(arc)

    if isinstance(result, ClosureExists):
        if not g.arcs <= result.closure.arcs:
            return "closure drops input arcs"
        if derived != set(result.closure.arcs):
            return "closure arcs differ from input plus derived arcs"
        if has_closed_walk(result.closure, k):
            return f"closure contains a closed {k}-arc walk, so it cannot exist"
        violation = check_k_transitive(result.closure, k)
        if violation is not None:
            return f"closure is not {k}-transitive: walk {violation.path} lacks its shortcut"
        return None

    wit = result.conflict
    if len(wit.path) != k + 1:
        return f"conflict path {wit.path} does not have {k} arcs"
    if wit.target != (wit.path[0], wit.path[-1]):
        return f"conflict target {wit.target} does not match its path endpoints"
    for a, b in zip(wit.path, wit.path[1:]):
        if (a, b) not in derived:
            return f"conflict step ({a}, {b}) is not an input or derived arc"
    u, v = wit.target
    if result.conflict_kind == "loop":
        if u != v:
            return f"conflict kind is loop but forced arc {wit.target} is not a loop"
    elif result.conflict_kind == "reverse-conflict":
        if (v, u) not in derived:
            return f"conflict kind is reverse-conflict but {(v, u)} is not present"
    else:
        return f"unknown conflict kind {result.conflict_kind!r}"
    return None


def replay_certificate(g: OrientedDigraph, k: int, result: ClosureResult) -> bool:
    """Independently audit a ClosureResult by replaying its derivation chain."""
    return replay_failure(g, k, result) is None
