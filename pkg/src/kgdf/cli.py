"""Command-line entry point ``kgdf``.

Exit codes: 0 success, 1 verification failure or internal inconsistency,
2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from .corpus import CorpusEntry, load_corpus
from .diagram import GaussCodeError
from .gdf import CollapseError, build_A_jones, build_A_kl, gdf_document, load_gdf, pair
from .poly import _frac_pair
from .skein import (NonRealJonesError, dubrovnik_D, dubrovnik_DK, homfly, jones_from_dk,
                    jones_from_homfly, p_table)
from .state_model import StateLabel, format_trace
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _corpus(path: Optional[str], knot: Optional[str] = None) -> List[CorpusEntry]:
    try:
        entries = load_corpus(path)
    except (OSError, GaussCodeError, ValueError) as exc:
        raise InputError(str(exc)) from None
    if knot is not None:
        entries = [e for e in entries if e.name == knot]
        if not entries:
            raise InputError(f"no knot named {knot!r}")
    if not entries:
        raise InputError("input contains no diagrams")
    return entries


def _scalar_json(x):
    return _frac_pair(x)


def _invariants_record(e: CorpusEntry, max_order: int) -> dict:
    G = e.diagram
    dk, h = dubrovnik_DK(G), homfly(G)
    j_dk, j_h = jones_from_dk(G), jones_from_homfly(G)
    if j_dk != j_h:
        raise NonRealJonesError(f"{e.name}: Jones routes disagree ({j_dk} vs {j_h})")
    p = p_table(G, max_order)
    return {
        "name": e.name,
        "code": e.code,
        "D": str(dubrovnik_D(G)),
        "DK": str(dk),
        "DK_terms": dk.to_json(),
        "HOMFLY": str(h),
        "Jones_from_DK": str(j_dk),
        "Jones_from_HOMFLY": str(j_h),
        "p": [{"k": k, "l": l, "value": _scalar_json(v)} for (k, l), v in sorted(p.items())],
    }


def cmd_invariants(args) -> int:
    if args.max_order < 0:
        raise InputError("--max-order must be nonnegative")
    records = [_invariants_record(e, args.max_order) for e in _corpus(args.input, args.knot)]
    if args.format == "json":
        print(json.dumps(records, indent=1, sort_keys=True))
        return EXIT_OK
    for r in records:
        print(f"knot {r['name']}: {r['code']}")
        for key in ("D", "DK", "HOMFLY", "Jones_from_DK", "Jones_from_HOMFLY"):
            print(f"  {key} = {r[key]}")
        for t in r["p"]:
            n, d = t["value"]
            print(f"  p[{t['k']},{t['l']}] = {n if d == 1 else f'{n}/{d}'}")
    return EXIT_OK


def cmd_gdf(args) -> int:
    if args.model is not None:
        if args.order is None:
            raise InputError("--model needs --order")
        name = f"A{args.order}_{args.model}"
        try:
            F = build_A_jones(args.model, args.order)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        if args.k is None or args.l is None:
            raise InputError("give --k and --l, or --model and --order")
        name = f"A{args.k},{args.l}"
        try:
            F = build_A_kl(args.k, args.l)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    try:
        doc = gdf_document(name, F, strict=args.strict)
    except CollapseError as exc:
        print(f"collapse failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = json.dumps(doc, indent=1, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    n_signed, n_unsigned = len(doc["gdf"]["terms"]), len(doc["collapsed"]["terms"])
    print(f"{name}: {n_signed} signed terms, {n_unsigned} collapsed terms",
          file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


def cmd_pair(args) -> int:
    try:
        F = load_gdf(json.loads(Path(args.gdf).read_text()))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read GDF: {exc}") from None
    for e in _corpus(args.input, args.knot):
        v = pair(F, e.diagram)
        print(f"{e.name} {v}")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.suite, _corpus(args.input, args.knot), workers=args.workers)
    for line in report.lines():
        print(line)
    print(f"# {report.summary()}")
    return EXIT_OK if report.ok else EXIT_FAIL


def parse_state(text: str, n: int) -> List[StateLabel]:
    parts = [p for p in text.split(",")] if text.strip() else []
    try:
        labels = [StateLabel.parse(p) for p in parts]
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if len(labels) != n:
        raise InputError(f"state lists {len(labels)} labels for {n} arrows")
    return labels


def cmd_state_trace(args) -> int:
    e = _corpus(args.input, args.knot)[0]
    G = e.diagram
    ids = sorted(G.sign_of)
    sigma = dict(zip(ids, parse_state(args.state, len(ids))))
    print(format_trace(G, sigma))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kgdf", description="Gauss diagram formulas for Kauffman/HOMFLY-PT coefficients")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_input(p, required=False):
        p.add_argument("--input", required=required,
                       help="corpus file with 'name: code' lines (default: bundled corpus)")
        p.add_argument("--knot", help="only use the entry with this name")

    p = sub.add_parser("invariants", help="DK, HOMFLY-PT, Jones and the p_{k,l} table")
    add_input(p)
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("gdf", help="build a universal Gauss diagram formula")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--model", choices=("homfly", "kauffman"))
    p.add_argument("--order", type=int)
    p.add_argument("--out")
    p.add_argument("--strict", action="store_true",
                   help="fail unless every diagram class collapses to one unsigned term")
    p.set_defaults(func=cmd_gdf)

    p = sub.add_parser("pair", help="pair a GDF file with each input diagram")
    p.add_argument("--gdf", required=True)
    add_input(p)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    add_input(p)
    p.add_argument("--workers", type=int, default=None,
                   help="process pool size (default: CPU count)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("state-trace", help="trace one state of the Kauffman state model")
    add_input(p)
    p.add_argument("--state", required=True, help="comma-separated labels phi|0|inf, by arrow id")
    p.set_defaults(func=cmd_state_trace)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NonRealJonesError, ArithmeticError) as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
