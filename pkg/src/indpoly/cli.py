"""Command-line interface.

Exit status: 0 success, 1 unrepresentable request, 2 malformed input,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .classify import ScanSummary, TreeRecord, analyze_tree, default_jobs, scan_order, summarize
from .construct import ConstructionError, Unrepresentable, tree_of_degree, tree_on_n_vertices
from .polynomial import render
from .tree import TreeError, format_tree, independence_polynomial, parse_tree
from .verify import run_checks

EXIT_OK = 0
EXIT_UNREPRESENTABLE = 1
EXIT_BAD_INPUT = 2
EXIT_INTERNAL = 3


def _read_tree(path: str):
    try:
        text = Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise TreeError(f"cannot read {path}: {exc}") from None
    return parse_tree(text)


def cmd_poly(args) -> int:
    print(render(independence_polynomial(_read_tree(args.file))))
    return EXIT_OK


def cmd_orbits(args) -> int:
    rec = analyze_tree(_read_tree(args.file))
    if not rec.symmetric:
        print("not symmetric: no admissible roots")
        return EXIT_OK
    if not rec.admissible_orbits:
        print("symmetric, no admissible roots")
        return EXIT_OK
    for o in rec.admissible_orbits:
        c = o.certificate
        print(
            f"rep {o.rep} size {o.size} d {c.d} A = {render(c.A, 'y')} "
            f"B = {render(c.B, 'y')} bridge_ready {str(o.bridge_ready).lower()}"
        )
    return EXIT_OK


def _write_json(path: str, obj) -> None:
    Path(path).write_text(json.dumps(obj, indent=1) + "\n", encoding="utf-8")


def cmd_scan(args) -> int:
    keep = "all" if args.all_records else "symmetric"
    summary, records = scan_order(args.n, jobs=args.jobs, engine=args.engine, keep=keep)
    print(summary.row())
    if args.records:
        records = sorted(records, key=lambda r: r.code)
        _write_json(args.records, {"summary": summary.to_json(), "records": [r.to_json() for r in records]})
    return EXIT_OK


def cmd_construct(args) -> int:
    res = tree_on_n_vertices(args.vertices) if args.vertices is not None else tree_of_degree(args.degree)
    poly = independence_polynomial(res.tree)
    text = format_tree(res.tree)
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    print(f"# recipe {json.dumps(res.recipe, sort_keys=True)}", file=sys.stderr)
    print(f"# P(x) = {render(poly)}", file=sys.stderr)
    return EXIT_OK


def build_catalogue(max_n: int, jobs: int = 1, min_n: int = 1) -> dict:
    entries, summaries = [], []
    for n in range(min_n, max_n + 1):
        summary, records = scan_order(n, jobs=jobs)
        entries.extend(r.to_json() for r in sorted(records, key=lambda r: r.code))
        summaries.append(summary.to_json())
    return {
        "header": {"artifact": "indpoly", "version": __version__, "min_n": min_n, "max_n": max_n},
        "entries": entries,
        "summary": summaries,
    }


def catalogue_consistent(cat: dict) -> bool:
    """Re-derive the summary block (except total counts) from the entries."""
    by_n: dict[int, list[TreeRecord]] = {}
    for obj in cat["entries"]:
        rec = TreeRecord.from_json(obj)
        by_n.setdefault(rec.n, []).append(rec)
    for obj in cat["summary"]:
        s = ScanSummary.from_json(obj)
        if summarize(s.n, s.total_trees, by_n.get(s.n, [])) != s:
            return False
    return True


def cmd_catalogue(args) -> int:
    cat = build_catalogue(args.max_n, jobs=args.jobs)
    if not catalogue_consistent(cat):
        raise AssertionError("catalogue summary does not match its entries")
    _write_json(args.out, cat)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_checks(args.max_n)
    for r in results:
        print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="indpoly", description="Independence polynomials of trees.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("poly", help="print the independence polynomial of a tree file")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("orbits", help="print admissible root orbits of a tree file")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_orbits)

    sp = sub.add_parser("scan", help="classify every tree of one order")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--records", metavar="OUT.json")
    sp.add_argument("--all-records", action="store_true", help="record every tree, not only symmetric ones")
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("--engine", choices=("auto", "fast", "exact"), default="auto")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("construct", help="build a witness tree")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--vertices", type=int)
    g.add_argument("--degree", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("catalogue", help="write the JSON catalogue of symmetric trees")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--jobs", type=int, default=None)
    sp.set_defaults(func=cmd_catalogue)

    sp = sub.add_parser("verify-paper", help="run the reproduction checks")
    sp.add_argument("--max-n", type=int, default=16)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if getattr(args, "jobs", None) is None and hasattr(args, "jobs"):
        args.jobs = default_jobs()
    try:
        return args.func(args)
    except Unrepresentable as exc:
        print(f"unrepresentable: {exc}", file=sys.stderr)
        return EXIT_UNREPRESENTABLE
    except TreeError as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (AssertionError, ConstructionError) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
