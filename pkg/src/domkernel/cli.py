"""Command line front end.

Subcommands:

  solve      exact minimum for a domination variant on one graph
  kernelize  apply the double-domination reduction to a fixpoint
  regions    decompose a plane graph around a dominating set, check bounds
  gadget     budget-preserving constructions between variants
  gen        write a generated instance (edge list, embedding when known)
  bench      run the benchmark suites over a corpus

Exit codes: 0 success, 2 a checked bound or equivalence failed,
3 infrastructure error (unreadable input, bad format, bad arguments).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .domination import Variant, solve_minimum
from .errors import DomKernelError
from .gadgets import build_gadget, verify_equivalence
from .generators import FAMILIES, GeneratorSpec, generate
from .graph import format_edge_list, parse_edge_list
from .harness import (
    OraclePolicy,
    default_corpus,
    load_corpus,
    normalize_report,
    report_json,
    run_suites,
    write_csv,
)
from .plane import build_plane_graph, parse_embedding, format_embedding
from .regions import REGIMES, check_region_bounds, region_decomposition, to_dot

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_INFRA = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str):
    """Returns (graph, plane-or-None); embeddings are detected by r-lines."""
    text = _read_text(path)
    has_rotation = any(ln.lstrip().startswith("r ") for ln in text.splitlines())
    if has_rotation:
        pg = parse_embedding(text)
        return pg.graph, pg
    return parse_edge_list(text), None


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# -- solve ------------------------------------------------------------------------


def cmd_solve(args) -> int:
    g, _ = _load_graph(args.graphfile)
    variant = Variant.from_label(args.variant)
    res = solve_minimum(g, variant, mode=args.mode)
    print(json.dumps(res.as_dict(), indent=2, sort_keys=True))
    return EXIT_OK


# -- kernelize --------------------------------------------------------------------


def cmd_kernelize(args) -> int:
    from .kernelize import kernelize_double_domination

    g, _ = _load_graph(args.graphfile)
    reduced, trace = kernelize_double_domination(g)
    sys.stdout.write(format_edge_list(reduced))
    if args.trace:
        _, id_map = reduced.compact()
        payload = trace.as_dict()
        payload["id_map"] = {str(old): new for old, new in sorted(id_map.items())}
        with open(args.trace, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return EXIT_OK


# -- regions ----------------------------------------------------------------------


def cmd_regions(args) -> int:
    pg = parse_embedding(_read_text(args.embeddingfile))
    regime = args.regime
    if args.dset == "auto":
        variant = {
            "reduced-double": Variant.ktuple(2),
            "liars": Variant.liars(),
            "ktuple3": Variant.ktuple(3),
        }[regime]
        res = solve_minimum(pg.graph, variant)
        if not res.feasible:
            print(f"error: {variant.label} domination is infeasible here", file=sys.stderr)
            return EXIT_INFRA
        dset = set(res.vertices)
    else:
        dset = {int(tok) for tok in args.dset.split(",") if tok.strip()}
    decomp = region_decomposition(pg, dset)
    report = check_region_bounds(decomp, regime)
    payload = {
        "dset": sorted(dset),
        "regime": regime,
        "regions": [
            {
                "u": r.endpoints[0],
                "v": r.endpoints[1],
                "boundary": sorted(r.boundary_vertices),
                "interior": sorted(r.interior_vertices),
                "paths": [list(r.path_a), list(r.path_b)],
                "degenerate": r.degenerate,
            }
            for r in decomp.regions
        ],
        "counts": {
            "regions": len(decomp.regions),
            "dset": len(dset),
            "vertices": pg.graph.live_count,
            "covered": len(decomp.covered),
        },
        "bounds_report": report.as_dict(),
    }
    print(json.dumps(payload, indent=2, sort_keys=True))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(decomp))
    return EXIT_OK if report.ok else EXIT_VIOLATION


# -- gadget -----------------------------------------------------------------------


def cmd_gadget(args) -> int:
    g, pg = _load_graph(args.graphfile)
    source = pg if (pg is not None and args.kind == "planar-liars") else g
    inst = build_gadget(source, args.kind, args.param)
    sys.stdout.write(format_edge_list(inst.graph))
    meta = inst.as_dict()
    code = EXIT_OK
    if args.verify is not None:
        if inst.graph.live_count > args.verify:
            meta["verify"] = {"ran": False, "reason": "gadget larger than verify cap"}
        else:
            verdict = verify_equivalence(g, inst)
            meta["verify"] = {"ran": True, **verdict}
            if not (verdict["equivalent"] and verdict["offset_matches"]):
                code = EXIT_VIOLATION
            print(f"verify: equivalent={verdict['equivalent']} "
                  f"offset_matches={verdict['offset_matches']}", file=sys.stderr)
    if args.meta:
        with open(args.meta, "w", encoding="utf-8") as fh:
            json.dump(meta, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return code


# -- gen --------------------------------------------------------------------------

_FAMILY_PARAM_FLAGS = {
    "cycle": ("n",),
    "path": ("n",),
    "grid": ("rows", "cols"),
    "wheel": ("rim",),
    "complete": ("n",),
    "stacked": ("n",),
    "trigger": ("t", "hub_edge"),
    "trigger_chain": ("count", "t_max"),
    "random": ("n", "density"),
}


def cmd_gen(args) -> int:
    wanted = _FAMILY_PARAM_FLAGS[args.family]
    params = {}
    for key in wanted:
        val = getattr(args, key)
        if val is None and key != "hub_edge":
            print(f"error: --{key.replace('_', '-')} is required for family "
                  f"{args.family!r}", file=sys.stderr)
            return EXIT_INFRA
        if key == "hub_edge":
            params[key] = bool(val)
        else:
            params[key] = int(val)
    inst = generate(GeneratorSpec(args.family, params, args.seed))
    if inst.plane is not None and not args.edges_only:
        text = format_embedding(inst.plane)
    else:
        text = format_edge_list(inst.graph)
    _write_output(text, args.out)
    return EXIT_OK


# -- bench ------------------------------------------------------------------------


def cmd_bench(args) -> int:
    corpus = load_corpus(args.corpus) if args.corpus else default_corpus()
    suites = ["kernel", "region", "gadget"] if args.suite == "all" else [args.suite]
    policy = OraclePolicy.from_env()
    report = run_suites(suites, corpus, policy, dot_dir=args.dot)
    text = report_json(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.csv:
        write_csv(report, args.csv)
        if not args.no_figures:
            from .plots import render_report_figures

            for p in render_report_figures(report, args.csv):
                print(f"figure: {p}", file=sys.stderr)
    summary = {name: s["summary"] for name, s in report["suites"].items()}
    print(f"suites: {json.dumps(summary, sort_keys=True)}", file=sys.stderr)
    return EXIT_OK if report["ok"] else EXIT_VIOLATION


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domkernel",
        description="Kernelization and verification toolkit for domination "
                    "variants on planar graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact minimum domination variant")
    p.add_argument("graphfile", help="edge-list or embedding file, - for stdin")
    p.add_argument("--variant", default="ktuple:2",
                   help="dom, ktuple:K, or liars (default ktuple:2)")
    p.add_argument("--mode", default="bnb", choices=("brute", "bnb"))
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("kernelize", help="reduce for double domination")
    p.add_argument("graphfile")
    p.add_argument("--trace", metavar="OUT.json", help="write step trace")
    p.set_defaults(fn=cmd_kernelize)

    p = sub.add_parser("regions", help="region decomposition and bound checks")
    p.add_argument("embeddingfile", help="graph file with rotation lines")
    p.add_argument("--dset", required=True,
                   help="comma separated vertex ids, or 'auto' for an optimum")
    p.add_argument("--regime", default="reduced-double", choices=REGIMES)
    p.add_argument("--dot", metavar="OUT.dot", help="write region multigraph")
    p.set_defaults(fn=cmd_regions)

    p = sub.add_parser("gadget", help="budget-preserving construction")
    p.add_argument("graphfile")
    p.add_argument("--kind", required=True,
                   help="ktuple:K, liars, or planar-liars")
    p.add_argument("--param", type=int, default=0,
                   help="source budget p (default 0)")
    p.add_argument("--meta", metavar="OUT.json", help="write construction metadata")
    p.add_argument("--verify", type=int, metavar="N",
                   help="check budget equivalence when the result has <= N vertices")
    p.set_defaults(fn=cmd_gadget)

    p = sub.add_parser("gen", help="write a generated instance")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--rim", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--hub-edge", dest="hub_edge", action="store_true")
    p.add_argument("--count", type=int)
    p.add_argument("--t-max", dest="t_max", type=int)
    p.add_argument("--density", type=int, help="edge density in permille (random family)")
    p.add_argument("--edges-only", action="store_true",
                   help="suppress rotation lines even when an embedding exists")
    p.add_argument("-o", "--out", help="output path (default stdout)")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("bench", help="run benchmark suites")
    p.add_argument("--suite", default="all",
                   choices=("kernel", "gadget", "region", "all"))
    p.add_argument("--corpus", metavar="SPEC.json",
                   help="corpus file; omitted sections fall back to defaults")
    p.add_argument("--out", metavar="REPORT.json", help="report path (default stdout)")
    p.add_argument("--csv", metavar="OUT.csv", help="flat per-record table")
    p.add_argument("--dot", metavar="DIR", help="write region DOT files here")
    p.add_argument("--no-figures", action="store_true",
                   help="skip PNG rendering next to the CSV")
    p.set_defaults(fn=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DomKernelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFRA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFRA
    except json.JSONDecodeError as exc:
        print(f"error: bad JSON corpus: {exc}", file=sys.stderr)
        return EXIT_INFRA
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFRA


if __name__ == "__main__":
    sys.exit(main())
