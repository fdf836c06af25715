"""Command-line interface.

    permschemes scheme find --basis B [--max-depth D] [--classic] [--out F.json] [--dot F.dot]
    permschemes scheme eval (--scheme F.json | --basis B) --n N
    permschemes count brute --basis B --n N [--allow-large]
    permschemes verify --basis B --n N
    permschemes triage --basis B [--sb-max K] [--simple-cap M]

Exit status: 0 success, 1 verify mismatch, 2 bad input, 3 no scheme found
(frontier printed), 4 size guardrail hit.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ContractError, InvalidInputError, ResourceError
from .oracle import DEFAULT_CAP, brute_sequence, compare
from .perm import parse_basis, perm_text
from .scheme import DEFAULT_MAX_DEPTH, Frontier, build_scheme, eval_sequence, export, import_scheme, scheme_depth
from .triage import DEFAULT_SB_MAX, DEFAULT_SIMPLE_CAP, triage

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_FRONTIER = 3
EXIT_RESOURCE = 4


def _basis(text: str):
    try:
        return parse_basis(text)
    except InvalidInputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permschemes",
        description="Enumeration schemes for finitely based permutation classes.")
    sub = parser.add_subparsers(dest="command", required=True)

    scheme = sub.add_parser("scheme", help="find or evaluate an enumeration scheme")
    scheme_sub = scheme.add_subparsers(dest="action", required=True)

    find = scheme_sub.add_parser("find", help="search for a scheme")
    find.add_argument("--basis", type=_basis, required=True)
    find.add_argument("--max-depth", type=_positive, default=DEFAULT_MAX_DEPTH)
    find.add_argument("--classic", action="store_true", help="use the J-set reducibility test")
    find.add_argument("--out", type=Path, help="write scheme JSON here instead of stdout")
    find.add_argument("--dot", type=Path, help="also write a Graphviz rendering")

    ev = scheme_sub.add_parser("eval", help="print s_0..s_N")
    source = ev.add_mutually_exclusive_group(required=True)
    source.add_argument("--scheme", type=Path)
    source.add_argument("--basis", type=_basis)
    ev.add_argument("--n", type=_natural, required=True)

    count = sub.add_parser("count", help="brute-force counts")
    count_sub = count.add_subparsers(dest="action", required=True)
    brute = count_sub.add_parser("brute", help="walk the avoidance tree")
    brute.add_argument("--basis", type=_basis, required=True)
    brute.add_argument("--n", type=_natural, required=True)
    brute.add_argument("--allow-large", action="store_true",
                       help=f"lift the n <= {DEFAULT_CAP} guardrail")

    verify = sub.add_parser("verify", help="build a scheme and compare with brute force")
    verify.add_argument("--basis", type=_basis, required=True)
    verify.add_argument("--n", type=_natural, required=True)

    tri = sub.add_parser("triage", help="test the rival enumeration methods")
    tri.add_argument("--basis", type=_basis, required=True)
    tri.add_argument("--sb-max", type=_positive, default=DEFAULT_SB_MAX)
    tri.add_argument("--simple-cap", type=_natural, default=DEFAULT_SIMPLE_CAP)
    return parser


def _print_sequence(seq, out) -> None:
    for n, value in enumerate(seq):
        print(f"{n}: {value}", file=out)


def _print_frontier(frontier: Frontier, out) -> int:
    print(f"no scheme found for Av({frontier.basis}) at max depth {frontier.max_depth}", file=out)
    print("irreducible permutations:", file=out)
    for p in frontier.perms:
        print(perm_text(p), file=out)
    return EXIT_FRONTIER


def _scheme_find(args, out) -> int:
    result = build_scheme(args.basis, args.max_depth, classic=args.classic)
    if isinstance(result, Frontier):
        return _print_frontier(result, out)
    data = export(result, "json")
    if args.out:
        args.out.write_bytes(data)
        print(f"depth: {scheme_depth(result)}", file=out)
        print(f"nodes: {len(result.nodes)}", file=out)
        print(f"wrote {args.out}", file=out)
    else:
        out.write(data.decode())
    if args.dot:
        args.dot.write_bytes(export(result, "dot"))
    return EXIT_OK


def _scheme_eval(args, out) -> int:
    if args.scheme:
        s = import_scheme(args.scheme.read_bytes())
    else:
        s = build_scheme(args.basis)
        if isinstance(s, Frontier):
            return _print_frontier(s, out)
    _print_sequence(eval_sequence(s, args.n), out)
    return EXIT_OK


def _verify(args, out) -> int:
    s = build_scheme(args.basis)
    if isinstance(s, Frontier):
        return _print_frontier(s, out)
    report = compare(args.basis, args.n, s)
    print("n: brute scheme", file=out)
    for line in report.lines():
        print(line, file=out)
    print("PASS" if report.passed else "FAIL", file=out)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        if args.command == "scheme" and args.action == "find":
            return _scheme_find(args, out)
        if args.command == "scheme" and args.action == "eval":
            return _scheme_eval(args, out)
        if args.command == "count":
            cap = None if args.allow_large else DEFAULT_CAP
            _print_sequence(brute_sequence(args.basis, args.n, cap), out)
            return EXIT_OK
        if args.command == "verify":
            return _verify(args, out)
        if args.command == "triage":
            verdict = triage(args.basis, args.sb_max, args.simple_cap)
            print(verdict.table(), file=out)
            print(verdict.dumps(), file=out)
            return EXIT_OK
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InvalidInputError, ContractError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    parser.error("unknown command")
    return EXIT_INPUT


def main() -> None:
    sys.exit(run())
