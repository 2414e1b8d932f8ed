"""Command-line front end: ``raagtc {tc,genfunc,cliques,catalog,verify}``.

Exit codes: 0 success, 1 domain error (bad r, capacity, catalog range),
2 input parse error, 3 a lemma check failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import TextIO

from .cliques import enumerate_maximal_cliques, max_clique_size
from .genfunc import CATALOG_KEYS, CatalogError, RationalGF, catalog_genfunc, generating_polynomial
from .graph import FORMATS, CapacityError, Graph, GraphError, ParseError, infer_format, members, parse_graph
from .solver import SolverError, solve, z_sequence
from .words import exhaustive_sweep, verify_lemmas

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def default_threads() -> int:
    env = os.environ.get("RAAG_TC_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="raagtc", description="Sequential topological complexity of right-angled Artin groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p, required=True):
        p.add_argument("--graph", required=required, help="graph file, or - for stdin")
        p.add_argument("--input-format", choices=FORMATS, help="override the format inferred from the file extension")

    def output_args(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text")

    tc = sub.add_parser("tc", help="compute TC_r = z_r of the RAAG")
    graph_args(tc)
    output_args(tc)
    group = tc.add_mutually_exclusive_group(required=True)
    group.add_argument("--r", type=int)
    group.add_argument("--r-max", type=int, help="report z_2..z_{r-max}")
    tc.add_argument("--method", choices=("auto", "exact", "oracle", "recurrence"), default="auto")
    tc.add_argument("--force-exact", action="store_true", help="exact search beyond n; lifts the oracle size guard")
    tc.add_argument("--threads", type=int, default=None)

    gf = sub.add_parser("genfunc", help="TC-generating function P(x)/(1-x)^2 of the RAAG")
    graph_args(gf)
    output_args(gf, ("text", "json", "latex"))

    cl = sub.add_parser("cliques", help="maximal cliques and the clique number")
    graph_args(cl)
    output_args(cl)

    cat = sub.add_parser("catalog", help="closed-form generating functions of known spaces")
    cat.add_argument("--space", required=True, choices=CATALOG_KEYS)
    cat.add_argument("--param", type=int, help="rank, dimension or genus for parametrised entries")
    graph_args(cat, required=False)
    output_args(cat, ("text", "json", "latex"))

    ver = sub.add_parser("verify", help="check the projection lemmas on random words")
    graph_args(ver)
    output_args(ver)
    ver.add_argument("--samples", type=int, default=1000)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--max-len", type=int, default=12)
    ver.add_argument("--exhaustive", type=int, metavar="LEN", help="also sweep all words up to LEN letters (small graphs)")
    return parser


def load_graph(path: str, fmt: str | None, stdin: TextIO) -> Graph:
    if path == "-":
        text = stdin.read()
        fmt = fmt or "edge-list"
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc.strerror}") from None
        fmt = fmt or infer_format(path)
    return parse_graph(text, fmt)


def _emit_gf(f: RationalGF, fmt: str, out: TextIO, label: str = "F") -> None:
    if fmt == "json":
        out.write(json.dumps(f.to_json()) + "\n")
    elif fmt == "latex":
        out.write(f.to_latex() + "\n")
    else:
        out.write(f"P(x) = {f.numerator}\n")
        out.write(f"{label}(x) = {f}\n")


def _cmd_tc(args, g: Graph, out: TextIO) -> int:
    threads = args.threads if args.threads is not None else default_threads()
    if args.r is not None:
        res = solve(g, args.r, args.method, force_exact=args.force_exact, threads=threads)
        if args.format == "json":
            out.write(json.dumps(res.to_json(g)) + "\n")
        else:
            witness = " | ".join("{" + ",".join(g.labels[v] for v in members(c)) + "}" for c in res.witness)
            out.write(f"TC_{res.r} = {res.value} ({res.method})\nwitness: {witness}\n")
        return EXIT_OK
    if args.method not in ("auto", "exact"):
        raise UsageError("--r-max supports --method auto or exact")
    seq = z_sequence(g, args.r_max, force_exact=args.force_exact or args.method == "exact")
    if args.format == "json":
        out.write(json.dumps({"sequence": [res.to_json(g) for res in seq]}) + "\n")
    else:
        for res in seq:
            out.write(f"TC_{res.r} = {res.value} ({res.method})\n")
    return EXIT_OK


def _cmd_genfunc(args, g: Graph, out: TextIO) -> int:
    _emit_gf(RationalGF(generating_polynomial(g), 2), args.format, out)
    return EXIT_OK


def _cmd_cliques(args, g: Graph, out: TextIO) -> int:
    cliques = enumerate_maximal_cliques(g)
    named = [[g.labels[v] for v in members(c)] for c in cliques]
    c = max_clique_size(g)
    if args.format == "json":
        out.write(json.dumps({"c": c, "cliques": named}) + "\n")
    else:
        for clique in named:
            out.write(" ".join(clique) + "\n")
        out.write(f"c = {c}\n")
    return EXIT_OK


def _cmd_catalog(args, g: Graph | None, out: TextIO) -> int:
    f = catalog_genfunc(args.space, args.param, graph=g)
    _emit_gf(f, args.format, out)
    return EXIT_OK


def _cmd_verify(args, g: Graph, out: TextIO) -> int:
    report = verify_lemmas(g, args.samples, args.seed, args.max_len)
    sweep = exhaustive_sweep(g, args.exhaustive) if args.exhaustive is not None else None
    ok = report.ok and (sweep is None or sweep.ok)
    if args.format == "json":
        body = {"random": report.to_json()}
        if sweep is not None:
            body["exhaustive"] = sweep.to_json()
        body["ok"] = ok
        out.write(json.dumps(body) + "\n")
    else:
        out.write(f"random samples: {report.samples} (seed {report.seed})\n")
        out.writelines(line + "\n" for line in report.lines())
        if sweep is not None:
            out.write(f"exhaustive sweep: {sweep.samples} words\n")
            out.writelines(line + "\n" for line in sweep.lines())
    return EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {
    "tc": _cmd_tc,
    "genfunc": _cmd_genfunc,
    "cliques": _cmd_cliques,
    "catalog": _cmd_catalog,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        g = None
        if args.graph is not None:
            g = load_graph(args.graph, args.input_format, stdin)
        return COMMANDS[args.command](args, g, stdout)
    except ParseError as exc:
        stderr.write(f"raagtc: parse error: {exc}\n")
        return EXIT_PARSE
    except (SolverError, CatalogError, CapacityError, UsageError) as exc:
        stderr.write(f"raagtc: {exc}\n")
        return EXIT_DOMAIN
    except GraphError as exc:
        stderr.write(f"raagtc: invalid graph: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
