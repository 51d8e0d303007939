"""ktrans command line: closures, certificates, degree tables, density tables.

Exit codes: 0 ok, 1 verification failed, 2 parse/argument error,
3 closure does not exist, 4 internal cap exceeded, 5 self-check mismatch.
Stdout carries data only; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .closure import ClosureCapError, ClosureNotExists, ClosureResult, DerivationWitness, k_closure
from .digraph import Arc, OrientedDigraph, degree_profile
from .formats import ParseError, parse_edge_list, parse_json_graph, render_dot, render_edge_list, render_json_graph
from . import pathformulas as pf
from .oracles import check_k_transitive


def _approx(x) -> str:
    return f"{float(x):.10g}"


def _read_graph(path: str) -> OrientedDigraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(str(e)) from None
    if text.lstrip().startswith("{"):
        return parse_json_graph(text)
    return parse_edge_list(text)


def _witness_line(arc: Arc, wit: DerivationWitness) -> str:
    path = " ".join(str(p + 1) for p in wit.path)
    return f"force {arc[0] + 1} {arc[1] + 1} via {path}"


def _emit_graph(
    g: OrientedDigraph,
    fmt: str,
    notes: list[str],
    plain_arcs: frozenset[Arc] | None = None,
    extra_json: dict | None = None,
    witness_lines: list[str] | None = None,
) -> None:
    witness_lines = witness_lines or []
    if fmt == "edgelist":
        comments = notes + witness_lines
        sys.stdout.write(render_edge_list(g, comments=comments))
    elif fmt == "json":
        extra = dict(extra_json or {})
        sys.stdout.write(render_json_graph(g, extra=extra))
    elif fmt == "dot":
        sys.stdout.write(render_dot(g, plain_arcs=plain_arcs, comments=notes + witness_lines))
    else:
        for note in notes:
            print(note)
        print("arcs:")
        for u, v in sorted(g.arcs):
            print(f"  {u + 1} -> {v + 1}")
        for line in witness_lines:
            print(line)


def cmd_path_closure(args: argparse.Namespace) -> int:
    k, n = args.k, args.n
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    g = pf.path_closure_graph(k, n)
    notes = [f"K({k},{n}): {k}-transitive closure of the directed path on {n} vertices"]
    extra: dict = {"k": k}
    if n >= 2:
        p = pf.decompose(k, n)
        dens = pf.density(k, n)
        notes.append(
            f"l={p.l} m={p.m} arcs={pf.edge_count(k, n)} density={dens} (~{_approx(dens)})"
        )
        extra.update({"l": p.l, "m": p.m, "arc_count": pf.edge_count(k, n), "density": str(dens)})
    else:
        notes.append("single vertex: no arcs, density undefined")
    path_arcs = frozenset((i, i + 1) for i in range(n - 1))
    _emit_graph(g, args.format, notes, plain_arcs=path_arcs, extra_json=extra)
    return 0


def _print_certificate(k: int, result: ClosureNotExists) -> None:
    print(f"# no {k}-transitive closure exists; forced-arc chain follows")
    for arc, wit in result.certificate:
        print(_witness_line(arc, wit))
    kind = "loop" if result.conflict_kind == "loop" else "reverse"
    u, v = result.conflict.target
    path = " ".join(str(p + 1) for p in result.conflict.path)
    print(f"conflict {kind} {u + 1} {v + 1} via {path}")


def cmd_closure(args: argparse.Namespace) -> int:
    if args.k > args.max_k:
        raise ValueError(f"k={args.k} exceeds --max-k={args.max_k}")
    g = _read_graph(args.input)
    result: ClosureResult = k_closure(g, args.k, max_added=args.max_added)
    if isinstance(result, ClosureNotExists):
        _print_certificate(args.k, result)
        return 3
    closure = result.closure
    notes = [
        f"{args.k}-transitive closure: {len(closure.arcs)} arcs "
        f"({len(result.added)} added to {len(g.arcs)} input arcs)"
    ]
    witness_lines = [_witness_line(arc, wit) for arc, wit in result.added] if args.witnesses else []
    extra: dict = {
        "k": args.k,
        "added": [[a[0] + 1, a[1] + 1] for a, _ in result.added],
    }
    if args.witnesses:
        extra["witnesses"] = [
            {"arc": [a[0] + 1, a[1] + 1], "path": [p + 1 for p in w.path]}
            for a, w in result.added
        ]
    _emit_graph(
        closure,
        args.format,
        notes,
        plain_arcs=g.arcs,
        extra_json=extra,
        witness_lines=witness_lines,
    )
    return 0


def _degree_rows(k: int, n: int) -> dict[str, tuple]:
    return {
        "indegree": pf.indegree_sequence(k, n),
        "outdegree": pf.outdegree_sequence(k, n),
        "pairs": tuple(zip(pf.indegree_sequence(k, n), pf.outdegree_sequence(k, n))),
        "total": pf.total_degree_sequence(k, n),
    }


def cmd_degrees(args: argparse.Namespace) -> int:
    k, n = args.k, args.n
    rows = _degree_rows(k, n)
    if n >= 2:
        p = pf.decompose(k, n)
        print(f"K({k},{n}): l={p.l} m={p.m}")
    else:
        print(f"K({k},{n}): single vertex")
    for name in ("indegree", "outdegree"):
        print(f"{name + ':':<11}" + " ".join(str(d) for d in rows[name]))
    print(f"{'pairs:':<11}" + " ".join(f"({i},{o})" for i, o in rows["pairs"]))
    print(f"{'total:':<11}" + " ".join(str(d) for d in rows["total"]))
    if pf.is_regular(k, n):
        degree = rows["total"][0] if n else 0
        print(f"regular: yes (degree {degree})")
    else:
        low, high = sorted(set(rows["total"]))
        print(f"regular: no (degrees {low} and {high})")
    print(f"oriented-irregular: {'yes' if pf.is_oriented_irregular(k, n) else 'no'}")
    if args.check:
        profile = degree_profile(pf.path_closure_graph(k, n))
        recomputed = {
            "indegree": profile.indeg,
            "outdegree": profile.outdeg,
            "pairs": profile.pairs,
            "total": profile.total,
        }
        for name, row in rows.items():
            if recomputed[name] != row:
                print(
                    f"self-check mismatch for {name}: formula {row} vs graph {recomputed[name]}",
                    file=sys.stderr,
                )
                return 5
        print("self-check: ok", file=sys.stderr)
    return 0


def cmd_density(args: argparse.Namespace) -> int:
    k, n_max = args.k, args.n_max
    if n_max < 2:
        raise ValueError(f"--n-max must be >= 2, got {n_max}")
    limit = pf.density_limit(k) if k >= 3 else 1
    print(f"# density of K({k},n) for n = 2..{n_max}; limit {limit}")
    print(f"{'n':<6}{'density':<16}{'~decimal':<16}~|density-limit|")
    for n in range(2, n_max + 1):
        d = pf.density(k, n)
        print(f"{n:<6}{str(d):<16}{_approx(d):<16}{_approx(abs(d - limit))}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    violation = check_k_transitive(g, args.k)
    if violation is None:
        print("ok")
        return 0
    walk = " ".join(str(p + 1) for p in violation.path)
    print(f"violation: walk {walk} has no shortcut arc")
    return 1


def _add_k(p: argparse.ArgumentParser) -> None:
    p.add_argument("-k", type=int, required=True, help="shortcut walk length (k >= 2)")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=("edgelist", "json", "dot", "table"),
        default="table",
        help="output format (default: table)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ktrans",
        description="k-transitive closures of oriented digraphs, with certificates "
        "and exact closed forms for directed paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("path-closure", help="emit K(k,n), the closure of the directed path")
    _add_k(p)
    p.add_argument("-n", type=int, required=True, help="number of path vertices")
    _add_format(p)
    p.set_defaults(func=cmd_path_closure)

    p = sub.add_parser("closure", help="compute the closure of a graph file, or a certificate")
    _add_k(p)
    p.add_argument("--input", required=True, help="edge-list or JSON graph file")
    _add_format(p)
    p.add_argument("--witnesses", action="store_true", help="include per-arc derivation walks")
    p.add_argument("--max-added", type=int, default=None, help="added-arc cap (default n*n)")
    p.add_argument("--max-k", type=int, default=16, help="largest accepted k (default 16)")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("degrees", help="degree sequences and regularity verdicts of K(k,n)")
    _add_k(p)
    p.add_argument("-n", type=int, required=True, help="number of path vertices")
    p.add_argument("--check", action="store_true", help="recompute from the built graph")
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("density", help="exact density table of K(k,n) for n = 2..n-max")
    _add_k(p)
    p.add_argument("-n", "--n-max", dest="n_max", type=int, required=True, help="largest n")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("verify", help="check a graph file for k-transitivity")
    _add_k(p)
    p.add_argument("--input", required=True, help="edge-list or JSON graph file")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ClosureCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
