"""Parsers and renderers for the 1-based edge-list, JSON, and DOT graph formats.

Edge-list format: one arc per line as ``u v`` (1-based ids), ``#`` starts a
comment line, blank lines are ignored.  An optional header line ``n <count>``
fixes the vertex count; without it the count is the largest vertex mentioned.

JSON format: ``{"n": <int>, "arcs": [[u, v], ...]}`` with 1-based ids.
Extra keys are ignored on input, so annotated output still round-trips.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .digraph import Arc, OrientedDigraph


class ParseError(ValueError):
    """Malformed graph input; `where` locates the offending line or entry."""

    def __init__(self, msg: str, where: str | None = None):
        self.where = where
        super().__init__(f"{where}: {msg}" if where else msg)


def _check_new_arc(u: int, v: int, seen: set[Arc], n: int | None, where: str) -> None:
    if u < 1 or v < 1:
        raise ParseError(f"vertex ids are 1-based, got ({u}, {v})", where)
    if n is not None and (u > n or v > n):
        raise ParseError(f"vertex id exceeds declared n={n} in arc ({u}, {v})", where)
    if u == v:
        raise ParseError(f"loop ({u}, {v}) not allowed", where)
    if (u, v) in seen:
        raise ParseError(f"duplicate arc ({u}, {v})", where)
    if (v, u) in seen:
        raise ParseError(f"arc ({u}, {v}) reverses already-seen ({v}, {u})", where)


def parse_edge_list(text: str) -> OrientedDigraph:
    """Parse the edge-list format, rejecting loops/reverses/duplicates."""
    n: int | None = None
    seen: set[Arc] = set()
    max_vertex = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        where = f"line {line_no}"
        tokens = line.split()
        if tokens[0] == "n":
            if seen or n is not None:
                raise ParseError("header 'n <count>' must be the first content line", where)
            if len(tokens) != 2:
                raise ParseError(f"malformed header {line!r}", where)
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad vertex count {tokens[1]!r}", where) from None
            if n < 0:
                raise ParseError(f"vertex count must be >= 0, got {n}", where)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", where)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer vertex id in {line!r}", where) from None
        _check_new_arc(u, v, seen, n, where)
        seen.add((u, v))
        max_vertex = max(max_vertex, u, v)
    count = n if n is not None else max_vertex
    return OrientedDigraph(count, ((u - 1, v - 1) for u, v in seen))


def render_edge_list(g: OrientedDigraph, comments: Sequence[str] = ()) -> str:
    """Render g in the edge-list format (header always included)."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {g.n}")
    lines.extend(f"{u + 1} {v + 1}" for u, v in sorted(g.arcs))
    return "\n".join(lines) + "\n"


def parse_json_graph(text: str) -> OrientedDigraph:
    """Parse the JSON graph format, rejecting loops/reverses/duplicates."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON value must be an object")
    if "n" not in obj or "arcs" not in obj:
        raise ParseError("JSON graph needs 'n' and 'arcs' keys")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError(f"'n' must be a non-negative integer, got {n!r}")
    if not isinstance(obj["arcs"], list):
        raise ParseError("'arcs' must be a list of [u, v] pairs")
    seen: set[Arc] = set()
    for idx, pair in enumerate(obj["arcs"]):
        where = f"arcs[{idx}]"
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
        ):
            raise ParseError(f"expected [u, v] integer pair, got {pair!r}", where)
        u, v = pair
        _check_new_arc(u, v, seen, n, where)
        seen.add((u, v))
    return OrientedDigraph(n, ((u - 1, v - 1) for u, v in seen))


def render_json_graph(g: OrientedDigraph, extra: dict | None = None) -> str:
    obj: dict = {"n": g.n, "arcs": [[u + 1, v + 1] for u, v in sorted(g.arcs)]}
    if extra:
        obj.update(extra)
    return json.dumps(obj) + "\n"


_PALETTE = ("red", "blue", "darkgreen", "orange", "purple", "brown", "cadetblue", "magenta")


def render_dot(
    g: OrientedDigraph,
    plain_arcs: Iterable[Arc] | None = None,
    comments: Sequence[str] = (),
) -> str:
    """Render g as a DOT digraph.

    Arcs in `plain_arcs` (default: all) are drawn unstyled; the rest get a
    color per arc length v-u, so the length classes of a path closure are
    visually separable.
    """
    plain = g.arcs if plain_arcs is None else frozenset(plain_arcs)
    lengths = sorted({v - u for u, v in g.arcs if (u, v) not in plain})
    color = {d: _PALETTE[i % len(_PALETTE)] for i, d in enumerate(lengths)}
    lines = [f"// {c}" for c in comments]
    lines += ["digraph K {", "  rankdir=LR;", "  node [shape=circle];"]
    lines.extend(f"  {v + 1};" for v in range(g.n))
    for u, v in sorted(g.arcs):
        if (u, v) in plain:
            lines.append(f"  {u + 1} -> {v + 1};")
        else:
            lines.append(f"  {u + 1} -> {v + 1} [color={color[v - u]}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
