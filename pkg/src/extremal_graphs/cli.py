"""Command-line front end.

Exit status: 0 success, 1 a verification found a counterexample, 2 usage or
parse error, 3 I/O error.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from .families import (
    FqSpec,
    GdSpec,
    build_fq,
    build_gamma,
    build_gd,
    build_omega,
    parse_family_key,
    parse_fq_spec,
    parse_gd_spec,
)
from .graph import Graph, GraphError, encode_graph6, format_edgelist, parse_edgelist, read_graph6_lines
from .invariants import invariant_report
from .recognize import classify, predicted_depth
from .verify import verify_classification, verify_sequences

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extremal-graphs",
        description="Free vertices, diameter and connectivity of simple graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin (default)")
        p.add_argument("--graph6", metavar="STRING", help="inline graph6 string instead of a file")
        p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist",
                       help="input file format (default: edgelist)")
        p.add_argument("--output", choices=("text", "record"), default="text")

    add_input(sub.add_parser("analyze", help="print the invariant report"))
    add_input(sub.add_parser("classify", help="print the classification and predicted depth"))

    gen = sub.add_parser("generate", help="write a family member")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    gamma = gen_sub.add_parser("gamma")
    gamma.add_argument("--d", type=int, required=True)
    gamma.add_argument("--f", type=int, required=True)
    omega = gen_sub.add_parser("omega")
    omega.add_argument("--q", type=int, required=True)
    omega.add_argument("--s", type=int, required=True)
    omega.add_argument("--t", type=int, required=True)
    gd = gen_sub.add_parser("gd")
    gd.add_argument("spec", nargs="?", help='one-line form, e.g. "d=7; hv=2; H1=1,1; H23=2,1"')
    gd.add_argument("--d", type=int)
    gd.add_argument("--hv", type=int, default=0)
    gd.add_argument("--hw", type=int, default=0)
    gd.add_argument("--H", action="append", default=[], metavar="KEY=SIZES",
                    help="clique family, e.g. --H 1=1,1 --H 23=2,1 (repeatable)")
    fq = gen_sub.add_parser("fq")
    fq.add_argument("spec", nargs="?", help='one-line form, e.g. "q=3; parts=1,1,2"')
    fq.add_argument("--q", type=int)
    fq.add_argument("--parts", type=_int_list)
    for p in (gamma, omega, gd, fq):
        p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
        p.add_argument("-o", "--out", help="output file (default stdout)")

    ver = sub.add_parser("verify", help="exhaustive classification check for n = min-n..max-n")
    ver.add_argument("--max-n", type=int, required=True)
    ver.add_argument("--min-n", type=int, default=3)
    ver.add_argument("--jobs", type=_positive, default=1)
    ver.add_argument("--allow-n8", action="store_true", help="permit n = 8 (2^28 edge masks)")
    ver.add_argument("--output", choices=("text", "record"), default="text")
    ver.add_argument("--violations", metavar="PATH", help="write offending graphs as graph6 lines")
    ver.add_argument("--progress", action="store_true", help="report work units on stderr")

    seq = sub.add_parser("sequences", help="realized vs predicted invariant tuples")
    seq.add_argument("--n", type=int, required=True)
    seq.add_argument("--jobs", type=_positive, default=1)
    seq.add_argument("--allow-n8", action="store_true")
    seq.add_argument("--output", choices=("text", "record"), default="text")
    return parser


def _read_graphs(args) -> list[Graph]:
    if args.graph6 is not None:
        return read_graph6_lines(args.graph6)
    if args.input == "-":
        data = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            data = fh.read()
    if args.format == "graph6":
        graphs = read_graph6_lines(data)
        if not graphs:
            raise UsageError("no graphs in input")
        return graphs
    return [parse_edgelist(data)]


def _emit_blocks(blocks: list[str], out: TextIO, record: bool) -> None:
    out.write(("\n" if record else "\n\n").join(b.rstrip("\n") for b in blocks) + "\n")


def _cmd_analyze(args, out: TextIO) -> int:
    blocks = []
    for g in _read_graphs(args):
        r = invariant_report(g)
        blocks.append(r.to_json() if args.output == "record" else r.to_text())
    _emit_blocks(blocks, out, args.output == "record")
    return EXIT_OK


def _cmd_classify(args, out: TextIO) -> int:
    blocks = []
    for g in _read_graphs(args):
        c = classify(g)
        depth = predicted_depth(c, g.n)
        if args.output == "record":
            blocks.append(json.dumps({"classification": c.to_record(), "predicted_depth": depth},
                                     separators=(",", ":")))
        else:
            blocks.append(f"{c.to_text()}\npredicted_depth: {'absent' if depth is None else depth}")
    _emit_blocks(blocks, out, args.output == "record")
    return EXIT_OK


def _gd_from_args(args) -> GdSpec:
    if args.spec is not None:
        return parse_gd_spec(args.spec)
    if args.d is None:
        raise UsageError("generate gd needs a spec string or --d")
    singles, pairs = {}, {}
    for item in args.H:
        key, _, value = item.partition("=")
        kind, idx = parse_family_key("H" + key.strip().lstrip("H"))
        (singles if kind == "single" else pairs)[idx] = _int_list(value)
    return GdSpec.from_families(args.d, args.hv, args.hw, singles, pairs)


def _fq_from_args(args) -> FqSpec:
    if args.spec is not None:
        return parse_fq_spec(args.spec)
    if args.q is None or args.parts is None:
        raise UsageError("generate fq needs a spec string or --q and --parts")
    return FqSpec(args.q, tuple(args.parts))


def _cmd_generate(args, out: TextIO) -> int:
    if args.family == "gamma":
        g = build_gamma(args.d, args.f)
    elif args.family == "omega":
        g = build_omega(args.q, args.s, args.t)
    elif args.family == "gd":
        g = build_gd(_gd_from_args(args))
    else:
        g = build_fq(_fq_from_args(args))
    text = encode_graph6(g).decode("ascii") + "\n" if args.format == "graph6" else format_edgelist(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _cmd_verify(args, out: TextIO, err: TextIO) -> int:
    cap = 8 if args.allow_n8 else 7
    if args.max_n > cap:
        raise UsageError(f"--max-n must be <= {cap}" + ("" if args.allow_n8 else " (use --allow-n8 for 8)"))
    if not 2 <= args.min_n <= args.max_n:
        raise UsageError("need 2 <= --min-n <= --max-n")
    failed = False
    offenders = []
    blocks = []
    for n in range(args.min_n, args.max_n + 1):
        progress = None
        if args.progress:
            def progress(done, total, n=n):
                err.write(f"n={n}: {done}/{total} work units\n")
        s = verify_classification(n, jobs=args.jobs, allow_n8=args.allow_n8, progress=progress)
        failed |= not s.ok
        for kind, graphs in s.violations().items():
            offenders += [f"{g6} {kind} n={n}" for g6 in graphs]
        blocks.append(s.to_json() if args.output == "record" else s.to_text())
    _emit_blocks(blocks, out, args.output == "record")
    if args.violations:
        with open(args.violations, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("".join(line.split()[0] + "\n" for line in offenders))
    for line in offenders:
        err.write(f"violation: {line}\n")
    return EXIT_FAIL if failed else EXIT_OK


def _cmd_sequences(args, out: TextIO) -> int:
    cap = 8 if args.allow_n8 else 7
    if not 3 <= args.n <= cap:
        raise UsageError(f"--n must lie in 3..{cap}")
    check = verify_sequences(args.n, jobs=args.jobs, allow_n8=args.allow_n8)
    if args.output == "record":
        out.write(json.dumps(check.to_record(), separators=(",", ":")) + "\n")
    else:
        out.write(check.to_text())
    return EXIT_OK if check.agree else EXIT_FAIL


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.command == "analyze":
            return _cmd_analyze(args, out)
        if args.command == "classify":
            return _cmd_classify(args, out)
        if args.command == "generate":
            return _cmd_generate(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out, err)
        return _cmd_sequences(args, out)
    except (UsageError, GraphError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
