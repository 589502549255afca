"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dual_graph, form, invariants, tiling
from .sequence import SequenceError, parse_sigma


class UsageError(Exception):
    pass


def _word(text: str):
    try:
        return parse_sigma(text)
    except SequenceError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror or exc}") from None


def _report_text(r: invariants.InvariantReport) -> str:
    lines = [
        f"word        {r.word}",
        f"n           {r.n}",
        f"N           {r.N}",
        f"rho         {r.rho}",
        f"sigma_n     {r.sigma_n}",
        f"class       {r.surface_class}",
        f"det         {r.det}",
        f"index       {'-' if r.index is None else r.index}",
        f"delta       {'-' if r.delta is None else r.delta}",
        f"branch_dets {r.branch_dets}",
        f"poly        {r.poly}",
    ]
    for name, ok in r.checks.items():
        lines.append(f"check {name}: {'ok' if ok else 'FAILED'}")
    return "\n".join(lines) + "\n"


def run_analyze(args) -> int:
    report = invariants.verify_main_theorem(_word(args.sigma))
    if args.format == "json":
        text = json.dumps(report.to_dict(), indent=2) + "\n"
    elif args.format == "csv":
        text = ",".join(invariants.ATLAS_COLUMNS) + "\n"
        text += ",".join(str(x) for x in report.atlas_row()) + "\n"
    else:
        text = _report_text(report)
    _emit(text, args.output)
    return 0 if report.ok else 1


def run_verify(args) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    summary = invariants.verify_all(args.max_n)
    if args.format == "json":
        text = json.dumps({
            "max_n": args.max_n,
            "words": summary.checked,
            "reductions": summary.reductions,
            "failures": [list(f) for f in summary.failures],
        }, indent=2) + "\n"
    else:
        lines = [f"{word}: {check}" for word, check in summary.failures]
        lines.append(f"{summary.reductions} reduction variants checked")
        lines.append(f"{summary.checked} words checked, {len(summary.failures)} failures")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0 if summary.ok else 1


def run_atlas(args) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    _emit(invariants.atlas(args.max_n, args.format), args.output)
    return 0


def run_matrix(args) -> int:
    M = form.build_form(_word(args.sigma))
    writer = {"json": form.to_json, "csv": form.to_csv, "latex": form.to_latex}[args.format]
    text = writer(M, args.sign)
    _emit(text if text.endswith("\n") else text + "\n", args.output)
    return 0


def run_graph(args) -> int:
    g = dual_graph.build_dual_graph(_word(args.sigma))
    if args.dot or args.format == "dot":
        text = dual_graph.to_dot(g)
    else:
        text = g.to_json() + "\n"
    _emit(text, args.output)
    return 0


def _parse_marks(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--A expects comma-separated integers, got {text!r}") from None


def run_poly(args) -> int:
    if args.sigma is not None:
        if args.A is not None or args.N is not None:
            raise UsageError("give either a word or --A/--N, not both")
        try:
            A = tiling.mark_set(_word(args.sigma))
        except tiling.TilingError as exc:
            raise UsageError(str(exc)) from None
    else:
        if args.N is None:
            raise UsageError("poly needs a word or --N (with optional --A)")
        try:
            A = tiling.MarkSet.of(args.N, _parse_marks(args.A or ""))
            P = tiling.poly(A)
        except tiling.TilingError as exc:
            raise UsageError(str(exc)) from None
    P = tiling.poly(A)
    text = P.to_json(A) if args.format == "json" else P.text()
    _emit(text + "\n", args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsslattice",
        description="Intersection forms, dual graphs and tiling polynomials of cyclic block words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = sub.add_parser("analyze", help="all invariants of one word")
    p.add_argument("sigma", help='word such as "s3 r2 s1"')
    p.add_argument("--format", choices=("json", "text", "csv"), default="json")
    common(p)
    p.set_defaults(func=run_analyze)

    p = sub.add_parser("verify", help="check every identity on all words up to --max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    common(p)
    p.set_defaults(func=run_verify)

    p = sub.add_parser("atlas", help="table of invariants for all words up to --max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    common(p)
    p.set_defaults(func=run_atlas)

    p = sub.add_parser("matrix", help="the intersection form of a word")
    p.add_argument("sigma")
    p.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    p.add_argument("--sign", choices=("form", "surface"), default="form",
                   help="form: positive convention; surface: negated")
    common(p)
    p.set_defaults(func=run_matrix)

    p = sub.add_parser("graph", help="the weighted dual graph of a word")
    p.add_argument("sigma")
    p.add_argument("--dot", action="store_true", help="same as --format dot")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    common(p)
    p.set_defaults(func=run_graph)

    p = sub.add_parser("poly", help="the tiling polynomial of a word or of a mark set")
    p.add_argument("sigma", nargs="?")
    p.add_argument("--A", help="comma-separated marks, e.g. 0,1")
    p.add_argument("--N", type=int, help="number of variables")
    p.add_argument("--format", choices=("text", "json"), default="text")
    common(p)
    p.set_defaults(func=run_poly)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
