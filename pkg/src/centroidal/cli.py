"""Command-line interface.

Exit codes: 0 on success, 1 when a pair is not strongly total or a corpus
entry fails its check, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .calculus import eval_term
from .corpus import GUSTAVE_NAMES, all_entries
from .errors import CentroidalError, NotStronglyTotal
from .field import FieldSpec
from .polytext import pair_to_json, parse_pair, poly_to_json
from .synthesis import counterexample_pair, synthesize
from .syntax import parse_term, print_term
from .totality import DEFAULT_CAP, is_total, kernel_basis, kernel_dim, realize_basis_element

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _field(text):
    try:
        return FieldSpec.parse(text)
    except (ValueError, CentroidalError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _yes(flag):
    if flag is None:
        return "n/a"
    return "yes" if flag else "no"


def _emit(args, text, data):
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _infer_arity(text):
    indices = [int(k) for k in re.findall(r"\bx(\d+)\b", text)]
    return max(indices, default=1)


def cmd_eval(args):
    n = args.n or _infer_arity(args.term)
    t = parse_term(args.term, n, args.field)
    pp = eval_term(t, n, args.field)
    _emit(args, str(pp), pair_to_json(pp))
    return EXIT_OK


def _report_lines(pp, report):
    lines = [
        f"pair: {pp}",
        f"strongly total: {_yes(report.strongly_total)}",
        f"total: {_yes(report.semantically_total)}",
        f"defect: {report.defect}",
    ]
    if report.witness is not None:
        lines.append("witness: (" + ", ".join(str(a) for a in report.witness) + ")")
    return "\n".join(lines)


def cmd_check(args):
    pp = parse_pair(args.pair, args.n, args.field)
    report = is_total(pp, args.field, cap=args.cap)
    _emit(args, _report_lines(pp, report), report.to_json())
    return EXIT_OK if report.strongly_total else EXIT_FAIL


def cmd_synth(args):
    pp = parse_pair(args.pair, args.n, args.field)
    try:
        result = synthesize(pp, args.field)
    except NotStronglyTotal as exc:
        if args.format == "json":
            print(json.dumps({"error": "NotStronglyTotal", "defect": poly_to_json(exc.defect)}))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = "\n".join(
        [
            print_term(result.term),
            f"verified: {str(result.verified).lower()}",
            f"nodes: {result.nodes}",
            f"basis elements: {result.basis_count}",
        ]
    )
    _emit(args, text, result.to_json())
    return EXIT_OK


def cmd_basis(args):
    elements = kernel_basis(args.pairs, args.degree)
    rows, data = [], []
    for b in elements:
        poly = realize_basis_element(b, args.pairs, args.field)
        rows.append(f"I={list(b.I)} J={list(b.J)}  {poly}")
        data.append({"I": list(b.I), "J": list(b.J), "poly": poly_to_json(poly)})
    count = kernel_dim(args.pairs, args.degree)
    rows.append(f"count = {count}")
    _emit(args, "\n".join(rows), {"elements": data, "count": count})
    return EXIT_OK


def cmd_counterexample(args):
    pp = counterexample_pair(args.p)
    report = is_total(pp, pp.field, cap=args.cap)
    _emit(args, _report_lines(pp, report), {"pair": pair_to_json(pp), "report": report.to_json()})
    return EXIT_OK


def cmd_corpus(args):
    entries = all_entries()
    if args.name:
        entries = [e for e in entries if e.name == args.name]
        if not entries:
            names = ", ".join(e.name for e in all_entries())
            print(f"error: unknown corpus entry {args.name!r}; known: {names}", file=sys.stderr)
            return EXIT_USAGE
    rows, data = [], []
    failed = False
    for e in entries:
        value = e.evaluate()
        ok = value == e.expected
        failed |= not ok
        names = GUSTAVE_NAMES if e.n == 3 else None
        rows.append(f"{e.name}: {'ok' if ok else 'MISMATCH'}  {print_term(e.term)}")
        rows.append(f"    = {value.format(names)}")
        if not ok:
            rows.append(f"    expected {e.expected.format(names)}")
        if e.note:
            rows.append(f"    # {e.note}")
        data.append(
            {
                "name": e.name,
                "ok": ok,
                "term": print_term(e.term),
                "value": pair_to_json(value),
                "note": e.note,
            }
        )
    _emit(args, "\n".join(rows), data)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", dest="n", type=int, default=None, help="arity (number of argument pairs)")
    common.add_argument("--field", type=_field, default=FieldSpec(), help="q or gf:<prime> (default q)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max points for exhaustive checks")

    parser = argparse.ArgumentParser(
        prog="centroidal",
        description="Centroidal calculus for boolean polynomial pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a term to its polynomial pair")
    p.add_argument("term")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", parents=[common], help="decide (strong) totality of a pair")
    p.add_argument("pair", help='e.g. "(X1, X2)"')
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("synth", parents=[common], help="synthesize a term for a strongly total pair")
    p.add_argument("pair")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("basis", parents=[common], help="list the kernel basis in degree <= d")
    p.add_argument("pairs", type=int)
    p.add_argument("degree", type=int)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("counterexample", parents=[common], help="total but not strongly total pair over GF(p)")
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("corpus", parents=[common], help="self-check the worked examples")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except CentroidalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
