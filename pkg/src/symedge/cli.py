"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 internal cross-check
failure, 3 work-budget exceeded.  With a fixed seed every command's output
is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .errors import BudgetExceededError, CrossCheckError, ParseError
from .facets import facet_system, facet_value
from .geometry import (
    DEFAULT_BUDGET,
    dissection_spot_check,
    ehrhart_hstar_oracle,
    is_unimodular,
    simplex_for_tree,
    visibility_volume,
)
from .graphio import load_graph
from .graphs import Basis, default_basis, default_ribbon, validate_basis
from .harness import batch_to_csv, run_conjecture_batch
from .jaeger import (
    enumerate_all_jaeger,
    enumerate_jaeger_trees,
    interior_of_bipartite,
    interior_polynomial,
    shelling_report,
    sort_face_by_face,
    sort_quadratic,
)
from .polynomials import gamma_transform, hstar_from_histogram


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        raise ParseError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="symedge", description=__doc__)
    parser.add_argument("--seed", type=int, default=0, help="seed for all randomized choices")
    parser.add_argument("--ribbon", choices=["default", "file"], default="default",
                        help="take the ribbon from the input file or use the canonical one")
    parser.add_argument("--basis", default=None, metavar="V,E",
                        help="override the base vertex and base edge id")
    parser.add_argument("--format", choices=["json", "plain", "csv"], default="json")
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="work estimate cap for the lattice oracle")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        if name != "conjectures":
            p.add_argument("input", help="graph file (edge list or JSON), or - for stdin")
        return p

    add("facets", "enumerate the facet orientations")
    p = add("jaeger", "enumerate Jaeger trees")
    p.add_argument("--facet", type=int, default=None, help="restrict to one facet id")
    p.add_argument("--order", choices=["f", "quad", "none"], default="none")
    p.add_argument("--histogram", action="store_true", help="emit only the tail histogram")
    p = add("hstar", "h*-vector through the tree pipeline")
    p.add_argument("--verify", action="store_true", help="cross-check against the lattice oracle")
    add("gamma", "gamma vector of the h*-polynomial")
    p = add("interior", "interior polynomial (bipartite input, or one facet)")
    p.add_argument("--facet", type=int, default=None)
    p = add("volume", "normalized volume")
    p.add_argument("--method", choices=["jaeger", "lattice", "visibility"], default="jaeger")
    p.add_argument("--all", action="store_true", help="compare all three methods")
    p = add("shelling", "ordered attachment report")
    p.add_argument("--order", choices=["f", "quad"], default="f")
    p.add_argument("--geometric", action="store_true", help="verify attachments geometrically")
    p = add("verify", "run the full cross-check battery")
    p.add_argument("--trials", type=int, default=60, help="spot-check sample count")
    p = sub.add_parser("conjectures", help="random bipartite batch, CSV per graph")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--min-vertices", type=int, default=6)
    p.add_argument("--max-vertices", type=int, default=9)
    p.add_argument("--edge-prob", type=float, default=0.5)
    return parser


def _load(args):
    if args.input == "-":
        from .graphio import parse_graph

        g, ribbon, basis = parse_graph(sys.stdin.read())
    else:
        g, ribbon, basis = load_graph(args.input)
    if args.ribbon == "file":
        if ribbon is None:
            raise ParseError("--ribbon file requires a JSON input with a ribbon")
    else:
        ribbon = default_ribbon(g)
    if args.basis is not None:
        try:
            v, e = (int(x) for x in args.basis.split(","))
        except ValueError:
            raise ParseError(f"--basis expects V,E integers, got {args.basis!r}") from None
        basis = Basis(v, e)
        validate_basis(g, basis)
    elif basis is None:
        basis = default_basis(g, ribbon)
    return g, ribbon, basis


def _value_str(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def _emit(payload, fmt: str, rows_key: Optional[str] = None) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    elif fmt == "plain":
        _emit_plain(payload, "")
    else:  # csv of the row list
        import csv as _csv
        import io as _io

        rows = payload[rows_key] if rows_key else payload
        if not isinstance(rows, list):
            raise ParseError("csv format applies to tabular commands only")
        buf = _io.StringIO()
        if rows and isinstance(rows[0], dict):
            writer = _csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v
                                 for k, v in row.items()})
        print(buf.getvalue(), end="")


def _emit_plain(value, prefix: str) -> None:
    if isinstance(value, dict):
        for k in sorted(value):
            _emit_plain(value[k], f"{prefix}{k}." if prefix else f"{k}.")
    elif isinstance(value, list) and value and isinstance(value[0], dict):
        for i, item in enumerate(value):
            _emit_plain(item, f"{prefix}{i}.")
    else:
        print(f"{prefix.rstrip('.')}: {json.dumps(value)}")


def _facet_rows(g, facets, weight):
    return [
        {
            "id": f.index,
            "layering": list(f.layering),
            "directed_edges": [list(arc) for arc in f.arcs],
            "hidden_edges": list(f.hidden_edges),
            "f_value": _value_str(facet_value(f, weight)),
        }
        for f in facets
    ]


def _tree_rows(trees):
    return [
        {
            "facet": t.facet.index,
            "edges": [list(arc) for arc in t.directed_edges],
            "tail_edges": sorted(t.tail_edges),
        }
        for t in trees
    ]


def cmd_facets(args) -> int:
    g, _, basis = _load(args)
    facets, weight = facet_system(g, basis.vertex, args.seed)
    _emit({"facets": _facet_rows(g, facets, weight)}, args.format, "facets")
    return 0


def cmd_jaeger(args) -> int:
    g, ribbon, basis = _load(args)
    facets, weight = facet_system(g, basis.vertex, args.seed)
    if args.facet is not None:
        facets = [f for f in facets if f.index == args.facet]
        if not facets:
            raise ParseError(f"no facet with id {args.facet}")
    trees, hist = enumerate_all_jaeger(g, ribbon, basis, args.seed, facets=facets)
    if args.order == "f":
        trees = sort_face_by_face(trees, weight, ribbon, basis)
    elif args.order == "quad":
        trees = sort_quadratic(trees, ribbon, basis)
    payload = {"histogram": list(hist)}
    if not args.histogram:
        payload["trees"] = _tree_rows(trees)
    _emit(payload, args.format, "trees" if not args.histogram else None)
    return 0


def _pipeline(g, ribbon, basis, seed):
    facets, weight = facet_system(g, basis.vertex, seed)
    trees, hist = enumerate_all_jaeger(g, ribbon, basis, seed, facets=facets)
    hstar = hstar_from_histogram(hist)
    return facets, weight, trees, hist, hstar


def cmd_hstar(args) -> int:
    g, ribbon, basis = _load(args)
    facets, _, trees, hist, hstar = _pipeline(g, ribbon, basis, args.seed)
    per_facet = [0] * len(facets)
    for t in trees:
        per_facet[t.facet.index - 1] += 1
    payload = {
        "h_star": hstar.to_list(),
        "gamma": gamma_transform(hstar).to_list(),
        "volume": hstar(1),
        "facet_count": len(facets),
        "jaeger_per_facet": per_facet,
    }
    if args.verify:
        oracle = ehrhart_hstar_oracle(g, facets=facets, budget=args.budget)
        payload["lattice_h_star"] = oracle.to_list()
        payload["verified"] = oracle == hstar
        _emit(payload, args.format)
        if not payload["verified"]:
            raise CrossCheckError(
                f"pipeline {hstar.to_list()} != lattice oracle {oracle.to_list()}"
            )
        return 0
    _emit(payload, args.format)
    return 0


def cmd_gamma(args) -> int:
    g, ribbon, basis = _load(args)
    _, _, _, _, hstar = _pipeline(g, ribbon, basis, args.seed)
    _emit({"gamma": gamma_transform(hstar).to_list()}, args.format)
    return 0


def cmd_interior(args) -> int:
    g, ribbon, basis = _load(args)
    if args.facet is not None:
        facets, _ = facet_system(g, basis.vertex, args.seed)
        match = [f for f in facets if f.index == args.facet]
        if not match:
            raise ParseError(f"no facet with id {args.facet}")
        poly = interior_polynomial(match[0], ribbon, basis)
        _emit({"facet": args.facet, "interior": poly.to_list()}, args.format)
        return 0
    if g.bipartition() is None:
        raise ParseError("interior polynomial of a graph needs a bipartite input; "
                         "use --facet for a single facet")
    poly = interior_of_bipartite(g, ribbon, basis)
    _emit({"interior": poly.to_list()}, args.format)
    return 0


def cmd_volume(args) -> int:
    g, ribbon, basis = _load(args)

    def by_jaeger():
        _, hist = enumerate_all_jaeger(g, ribbon, basis, args.seed)
        return sum(hist)

    def by_lattice():
        return ehrhart_hstar_oracle(g, budget=args.budget, base=basis.vertex)(1)

    def by_visibility():
        if g.m == g.n - 1:  # tree input: fall back to the tree pipeline
            return by_jaeger()
        return visibility_volume(g, ribbon, basis)

    methods = {"jaeger": by_jaeger, "lattice": by_lattice, "visibility": by_visibility}
    if args.all:
        values = {name: fn() for name, fn in methods.items()}
        _emit({"volume": values["jaeger"], "methods": values}, args.format)
        if len(set(values.values())) != 1:
            raise CrossCheckError(f"volume methods disagree: {values}")
        return 0
    _emit({"volume": methods[args.method]()}, args.format)
    return 0


def cmd_shelling(args) -> int:
    g, ribbon, basis = _load(args)
    facets, weight, trees, hist, _ = _pipeline(g, ribbon, basis, args.seed)
    if args.order == "f":
        ordered = sort_face_by_face(trees, weight, ribbon, basis)
    else:
        ordered = sort_quadratic(trees, ribbon, basis)
    report = shelling_report(
        ordered, args.order, ribbon, basis, weight=weight,
        geometric=args.geometric, seed=args.seed,
    )
    if tuple(report["histogram"]) != hist:
        raise CrossCheckError(
            f"shelling histogram {report['histogram']} != tail histogram {list(hist)}"
        )
    _emit(report, args.format, "rows")
    return 0


def cmd_verify(args) -> int:
    g, ribbon, basis = _load(args)
    facets, _, trees, hist, hstar = _pipeline(g, ribbon, basis, args.seed)
    result = {"h_star": hstar.to_list(), "volume": hstar(1)}
    failures = []

    oracle = ehrhart_hstar_oracle(g, facets=facets, budget=args.budget)
    result["lattice_h_star"] = oracle.to_list()
    if oracle != hstar:
        failures.append("lattice oracle disagrees with the tree pipeline")

    simplices = [simplex_for_tree(t.facet, t.edges) for t in trees]
    result["unimodular"] = all(is_unimodular(s) for s in simplices)
    if not result["unimodular"]:
        failures.append("a tree simplex is not unimodular")

    try:
        result["dissection"] = dissection_spot_check(g, simplices, args.trials, args.seed)
    except CrossCheckError as exc:
        failures.append(str(exc))

    if g.bipartition() is not None and g.m > g.n - 1:
        vis = visibility_volume(g, ribbon, basis)
        result["visibility_volume"] = vis
        if vis != hstar(1):
            failures.append("visibility volume disagrees with the tree count")

    result["failures"] = failures
    _emit(result, args.format)
    if failures:
        raise CrossCheckError("; ".join(failures))
    return 0


def cmd_conjectures(args) -> int:
    records, summary = run_conjecture_batch(
        args.count, args.min_vertices, args.max_vertices, args.edge_prob, args.seed
    )
    if args.format == "json":
        payload = {
            "summary": summary,
            "records": [
                {
                    "graph_id": r.graph_id,
                    "n": r.n,
                    "m": r.m,
                    "gamma": list(r.gamma),
                    "interior": list(r.interior),
                    "degrees_match": r.degrees_match,
                    "standard_minimal": r.standard_minimal,
                    "gamma_collision_consistent": r.collision_consistent,
                }
                for r in records
            ],
        }
        _emit(payload, "json")
    else:
        print(batch_to_csv(records, summary), end="")
    return 0


_COMMANDS = {
    "facets": cmd_facets,
    "jaeger": cmd_jaeger,
    "hstar": cmd_hstar,
    "gamma": cmd_gamma,
    "interior": cmd_interior,
    "volume": cmd_volume,
    "shelling": cmd_shelling,
    "verify": cmd_verify,
    "conjectures": cmd_conjectures,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CrossCheckError as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
