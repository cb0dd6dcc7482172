"""Command line interface.

Exit codes: 0 success, 1 verification found violations, 2 invalid input,
3 internal invariant failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import graph as gr
from .bench import BenchConfig, rows_to_csv, rows_to_json, run_bench
from .colouring import ColouringMismatch, colouring_from_dict, colouring_to_dict, exact_chi, verify
from .divisible import find_divisible, find_divisible_via_regular
from .errors import InvariantError, ParseError
from .pipeline import DEFAULT_DIVISIBLE_BUDGET, colour_graph

EXIT_OK, EXIT_VIOLATIONS, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _common(parser, suppress):
    dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--k", type=int, default=dflt(None), help="modulus k (>= 1)")
    parser.add_argument("--seed", type=int, default=dflt(None), help="seed for random generators")
    parser.add_argument("--budget", type=int, default=dflt(DEFAULT_DIVISIBLE_BUDGET),
                        help="node budget for exact searches")
    parser.add_argument("--format", choices=["edgelist", "dimacs"], default=dflt("edgelist"),
                        help="graph text format")
    parser.add_argument("--output", "-o", default=dflt(None), help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modk", description="Mod-k edge colourings of simple graphs.")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        _common(p, suppress=True)
        return p

    p = add("gen", "generate a graph from a family spec, e.g. star:3 or gnp:20,0.3")
    p.add_argument("spec")

    for name, help_ in [("colour", "colour a graph and print colouring JSON with a certificate"),
                        ("exact", "exact mod-k chromatic index of a small graph"),
                        ("divisible", "search for a non-empty k-divisible subgraph")]:
        p = add(name, help_)
        p.add_argument("graph", nargs="?", default="-", help="graph file, or - for stdin")
        p.add_argument("--gen", metavar="SPEC", help="use a generated graph instead of a file")
        if name == "colour":
            p.add_argument("--a", type=int, default=None, help="override the star-cover trade-off parameter")
        if name == "exact":
            p.add_argument("--max-colours", type=int, default=12)
        if name == "divisible":
            p.add_argument("--via-regular", action="store_true",
                           help="go through a prime-divisible subgraph and vertex splitting")

    p = add("verify", "check a colouring JSON against a graph")
    p.add_argument("graph")
    p.add_argument("colouring")

    p = add("bench", "run the pipeline over a grid and write CSV/JSON reports")
    p.add_argument("--config", help="JSON file with families, sizes, k, seeds, p, budget, jobs")
    p.add_argument("--csv", help="also write the CSV report to this path")
    return parser


def _read_text(source):
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from None


def _load_graph(args):
    if getattr(args, "gen", None):
        return gr.generate(args.gen, args.seed)
    return gr.parse_graph(_read_text(args.graph), args.format)


def _need_k(args, low=1):
    if args.k is None or args.k < low:
        raise InputError(f"--k is required and must be >= {low}")
    return args.k


def _emit(args, text):
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj):
    return json.dumps(obj, indent=2) + "\n"


def run(args) -> int:
    cmd = args.command
    if cmd == "gen":
        _emit(args, gr.serialize(gr.generate(args.spec, args.seed), args.format))
        return EXIT_OK

    if cmd == "colour":
        g = _load_graph(args)
        k = _need_k(args)
        colouring, cert = colour_graph(g, k, args.budget, args.a)
        _emit(args, _dump(colouring_to_dict(g, colouring, k, args.seed, cert.to_dict())))
        return EXIT_OK

    if cmd == "verify":
        g = gr.parse_graph(_read_text(args.graph), args.format)
        try:
            data = json.loads(_read_text(args.colouring))
        except json.JSONDecodeError as exc:
            raise InputError(f"colouring is not valid JSON: {exc}") from None
        k = args.k if args.k is not None else data.get("k")
        if not isinstance(k, int) or k < 1:
            raise InputError("k missing from both --k and the colouring")
        bad = verify(g, colouring_from_dict(g, data), k)
        report = {"k": k, "valid": not bad,
                  "violations": [{"colour": v.colour, "vertex": g.labels[v.vertex],
                                  "degree_in_class": v.degree_in_class} for v in bad]}
        _emit(args, _dump(report))
        return EXIT_OK if not bad else EXIT_VIOLATIONS

    if cmd == "exact":
        g = _load_graph(args)
        k = _need_k(args)
        res = exact_chi(g, k, args.max_colours, args.budget)
        out = {"k": k, "status": res.status.value, "value": res.value, "nodes": res.nodes}
        if res.witness is not None:
            out["witness"] = colouring_to_dict(g, res.witness, k)
        _emit(args, _dump(out))
        return EXIT_OK

    if cmd == "divisible":
        g = _load_graph(args)
        k = _need_k(args, 2 if args.via_regular else 1)
        fn = find_divisible_via_regular if args.via_regular else find_divisible
        out = fn(g, k, args.budget)
        _emit(args, _dump({"k": k, **out.to_dict(g)}))
        return EXIT_OK

    if cmd == "bench":
        cfg = BenchConfig()
        if args.config:
            try:
                cfg = BenchConfig.from_dict(json.loads(_read_text(args.config)))
            except (json.JSONDecodeError, TypeError) as exc:
                raise InputError(f"bad bench config: {exc}") from None
        rows = run_bench(cfg)
        if args.csv:
            Path(args.csv).write_text(rows_to_csv(rows))
        _emit(args, rows_to_json(rows, cfg))
        failed = [r for r in rows if r["violations"]]
        if failed:
            raise InvariantError(f"{len(failed)} bench instance(s) failed verification")
        return EXIT_OK
    raise InputError(f"unknown command {cmd}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except InvariantError as exc:
        print(f"modk: internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InputError, ParseError, ColouringMismatch, ValueError) as exc:
        print(f"modk: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
