"""Command-line front end.

    optbwt build   -i reads.fa --format fasta --order input --rewrite opt -o out.bwt
    optbwt optimize out.bwt --sap out.sap -o opt.bwt
    optbwt stats   out.bwt
    optbwt invert  out.bwt -o strings.txt
    optbwt compare -i reads.txt
    optbwt gen     --num 100 --minlen 50 --maxlen 50 --seed 1 -o reads.txt
"""

from __future__ import annotations

import argparse
import os
import sys

from .collection import FORMATS, CollectionError, parse, reorder, to_fasta, to_lines
from .optimizer import count_runs, optimize, sap_heuristic
from .oracle import InvalidBWT, compare, generate, invert_bwt
from .sap import SapArray, build_sap
from .suffix_engine import build_suffix_array, extract_bwt, format_rle


class CliError(Exception):
    pass


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}") from None


def _write(path: str | None, data: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
        return
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}") from None


def _check_outputs(args, *names: str) -> None:
    src = getattr(args, "input", None)
    paths = [getattr(args, n, None) for n in names]
    paths = [p for p in paths if p not in (None, "-")]
    if src not in (None, "-"):
        for p in paths:
            if os.path.abspath(p) == os.path.abspath(src):
                raise CliError(f"{p}: output path equals the input path")
    if len({os.path.abspath(p) for p in paths}) != len(paths):
        raise CliError("output paths must be distinct")


def _load_collection(args):
    data = _read(args.input)
    try:
        return parse(data, args.format)
    except CollectionError as exc:
        raise CliError(f"{args.input}: {exc}") from None


def _load_sap(path: str, n: int) -> SapArray:
    try:
        sap = SapArray.from_str(_read(path))
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from None
    if len(sap) != n:
        raise CliError(f"{path}: SAP length {len(sap)} does not match BWT length {n}")
    return sap


def cmd_build(args) -> None:
    _check_outputs(args, "output", "sap", "rle")
    coll = reorder(_load_collection(args), args.order)
    sa = build_suffix_array(coll)
    bwt = extract_bwt(coll, sa)
    sap = None
    if args.rewrite != "none" or args.sap:
        sap = build_sap(coll, sa)
    if args.sap:
        _write(args.sap, sap.to_bytes())
    if args.rewrite == "opt":
        bwt = optimize(bwt, sap)
    elif args.rewrite == "sap":
        bwt = sap_heuristic(bwt, sap)
    if args.rle:
        _write(args.rle, format_rle(bwt))
    _write(args.output, bwt)


def cmd_optimize(args) -> None:
    _check_outputs(args, "output")
    bwt = _read(args.bwt)
    sap = _load_sap(args.sap, len(bwt))
    rewrite = sap_heuristic if args.rewrite == "sap" else optimize
    _write(args.output, rewrite(bwt, sap))


def cmd_stats(args) -> None:
    bwt = _read(args.bwt)
    if not bwt:
        raise CliError(f"{args.bwt}: empty BWT")
    s = count_runs(bwt)
    sys.stdout.write(f"n\t{s.n}\nr\t{s.r}\nn/r\t{float(s.mean_run):.6f}\n")


def cmd_invert(args) -> None:
    _check_outputs(args, "output")
    try:
        coll = invert_bwt(_read(args.bwt))
    except InvalidBWT as exc:
        raise CliError(f"{args.bwt}: {exc}") from None
    _write(args.output, to_fasta(coll) if args.format == "fasta" else to_lines(coll))


def cmd_compare(args) -> None:
    _check_outputs(args, "report")
    report = compare(_load_collection(args))
    text = report.format_kv() if args.kv else report.format_table()
    _write(args.report, text.encode())


def cmd_gen(args) -> None:
    try:
        coll = generate(args.num, (args.minlen, args.maxlen), args.alphabet, args.seed)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    _write(args.output, to_fasta(coll) if args.format == "fasta" else to_lines(coll))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="optbwt", description="Run-minimal multidollar BWT of string collections.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument("-i", "--input", required=True, help="input file, '-' for stdin")
        sp.add_argument("--format", choices=FORMATS, default="lines")

    b = sub.add_parser("build", help="build the BWT of a collection")
    add_input(b)
    b.add_argument("--order", choices=("input", "lex", "colex"), default="input")
    b.add_argument("--rewrite", choices=("none", "sap", "opt"), default="none")
    b.add_argument("-o", "--output", help="BWT output (default stdout)")
    b.add_argument("--sap", metavar="PATH", help="write the SAP-array of the constructed BWT")
    b.add_argument("--rle", metavar="PATH", help="write the run-length encoded BWT")
    b.set_defaults(func=cmd_build)

    o = sub.add_parser("optimize", help="rewrite an existing BWT using its SAP-array")
    o.add_argument("bwt")
    o.add_argument("--sap", metavar="PATH", required=True)
    o.add_argument("--rewrite", choices=("sap", "opt"), default="opt")
    o.add_argument("-o", "--output")
    o.set_defaults(func=cmd_optimize)

    s = sub.add_parser("stats", help="print n, r and n/r of a BWT file")
    s.add_argument("bwt")
    s.set_defaults(func=cmd_stats)

    v = sub.add_parser("invert", help="recover the strings from a BWT file")
    v.add_argument("bwt")
    v.add_argument("--format", choices=("lines", "fasta"), default="lines")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_invert)

    c = sub.add_parser("compare", help="run counts of the five BWT variants")
    add_input(c)
    c.add_argument("--kv", action="store_true", help="key=value lines instead of a table")
    c.add_argument("--report", metavar="PATH")
    c.set_defaults(func=cmd_compare)

    g = sub.add_parser("gen", help="write a random collection")
    g.add_argument("--num", type=int, default=10)
    g.add_argument("--minlen", type=int, default=50)
    g.add_argument("--maxlen", type=int, default=50)
    g.add_argument("--alphabet", default="ACGT")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--format", choices=("lines", "fasta"), default="lines")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (CliError, ValueError) as exc:
        print(f"optbwt {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
