"""Command line front end: ``posetcat invariant|homotopic|suite``.

Exit codes: 0 computed value, 1 input error, 2 budget exceeded,
3 property failures in a suite run.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import catalog
from .budget import DEFAULT_BUDGET
from .covers import (BUDGET, homotopic_distance, liftcat_op, ls_category,
                     ls_category_space, secat_op, topological_complexity)
from .errors import BudgetExceeded, NotPathConnected, PosetcatError
from .homotopy import is_homotopic
from .maps import ContinuousMap
from .space import FiniteSpace
from .verify import CertificateError, verify_fence, verify_result
from .whitehead import liftcat_wg

SCHEMA_VERSION = 1
EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_FAIL = 0, 1, 2, 3


class _InputProblem(Exception):
    pass


def _read_json(ref: str):
    try:
        return json.loads(Path(ref).read_text())
    except OSError as e:
        raise _InputProblem(f"cannot read {ref}: {e}") from e
    except json.JSONDecodeError as e:
        raise _InputProblem(f"malformed JSON in {ref}: {e}") from e


def load_space(ref: str) -> FiniteSpace:
    if ref.startswith("catalog:"):
        return catalog.space(ref[len("catalog:"):])
    return FiniteSpace.from_json(_read_json(ref))


def load_map(ref: str) -> ContinuousMap:
    if ref.startswith("catalog:"):
        return catalog.map_(ref[len("catalog:"):])
    return ContinuousMap.from_json(_read_json(ref))


def _budget(n):
    if n is None:
        return DEFAULT_BUDGET
    return replace(DEFAULT_BUDGET, map_cap=n, open_cap=n, cover_node_cap=n)


def _emit(doc, args):
    doc = {"schema_version": SCHEMA_VERSION, **doc}
    print(json.dumps(doc, indent=None if args.compact else 2, sort_keys=True))


def _need(items, k, what):
    if len(items or ()) != k:
        raise _InputProblem(f"{what}")
    return items


def cmd_invariant(args) -> int:
    budget = _budget(args.budget)
    kind, maps = args.kind, args.map or []
    if kind == "cat":
        if args.space and not maps:
            res = ls_category_space(load_space(args.space), args.pointed, budget)
        elif maps and not args.space:
            res = ls_category(load_map(_need(maps, 1, "cat takes one --map")[0]),
                              args.pointed, budget)
        else:
            raise _InputProblem("cat takes either --space or one --map")
    elif kind == "tc":
        if not args.space:
            raise _InputProblem("tc needs --space")
        res = topological_complexity(load_space(args.space), args.pointed, budget)
    elif kind == "secat":
        res = secat_op(load_map(_need(maps, 1, "secat takes one --map")[0]), args.pointed, budget)
    elif kind == "liftcat":
        f, iota = (load_map(m) for m in _need(maps, 2, "liftcat takes --map f --map iota"))
        solver = liftcat_wg if args.wg else liftcat_op
        res = solver(f, iota, args.pointed, budget)
    else:
        f, g = (load_map(m) for m in _need(maps, 2, "dist takes --map f --map g"))
        res = homotopic_distance(f, g, args.pointed, budget)
    doc = res.to_json()
    if res.status != BUDGET and not args.quiet:
        try:
            doc["verified"] = verify_result(json.loads(json.dumps(doc)))
        except CertificateError as e:
            doc["verified"] = False
            doc["verification_error"] = str(e)
    if args.quiet:
        doc.pop("certificate", None)
    _emit(doc, args)
    return EXIT_BUDGET if res.status == BUDGET else EXIT_OK


def cmd_homotopic(args) -> int:
    f, g = (load_map(m) for m in _need(args.map, 2, "homotopic takes --map f --map g"))
    v = is_homotopic(f, g, args.pointed, budget=_budget(args.budget))
    doc = v.to_json()
    if v.homotopic and not args.quiet:
        try:
            doc["verified"] = verify_fence(f.to_json(), g.to_json(), doc["fence"], args.pointed)
        except CertificateError as e:
            doc["verified"], doc["verification_error"] = False, str(e)
    if args.quiet:
        doc.pop("fence", None)
    _emit(doc, args)
    return EXIT_BUDGET if v.homotopic is None else EXIT_OK


def cmd_suite(args) -> int:
    from .harness.suite import SuiteConfig, run_suite
    try:
        config = SuiteConfig.from_json(_read_json(args.config))
    except (ValueError, TypeError, KeyError) as e:
        raise _InputProblem(f"bad suite config: {e}") from e
    report = run_suite(config)
    doc = report.to_json()
    if args.out:
        Path(args.out).write_text(json.dumps(doc, indent=2, sort_keys=True))
    print(report.table(), file=sys.stderr if not args.table else sys.stdout)
    if not args.table:
        _emit({k: v for k, v in doc.items() if k != "schema_version"}, args)
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="posetcat",
                                description="Category invariants of finite spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--pointed", action="store_true", help="pointed flavour")
        sp.add_argument("--budget", type=int, help="cap on every exhaustive search")
        sp.add_argument("--quiet", action="store_true", help="omit certificates")
        sp.add_argument("--compact", action="store_true", help="single-line JSON")

    inv = sub.add_parser("invariant", help="compute cat, tc, secat, liftcat or dist")
    inv.add_argument("kind", choices=["cat", "tc", "secat", "liftcat", "dist"])
    inv.add_argument("--space", help="catalog:NAME or a JSON file")
    inv.add_argument("--map", action="append", help="catalog:NAME or a JSON file (repeatable)")
    inv.add_argument("--wg", action="store_true", help="Whitehead-style liftcat")
    common(inv)
    inv.set_defaults(func=cmd_invariant)

    hom = sub.add_parser("homotopic", help="decide f ~ g and print a fence")
    hom.add_argument("--map", action="append", required=True)
    common(hom)
    hom.set_defaults(func=cmd_homotopic)

    su = sub.add_parser("suite", help="run the property suite from a JSON config")
    su.add_argument("config")
    su.add_argument("--out", help="write the JSON report here")
    su.add_argument("--table", action="store_true", help="print only the table")
    su.add_argument("--compact", action="store_true")
    su.set_defaults(func=cmd_suite)

    cat_ = sub.add_parser("catalog", help="list built-in spaces and maps")
    cat_.set_defaults(func=lambda a: print("spaces: " + ", ".join(catalog.space_names())
                                           + "\nmaps: " + ", ".join(catalog.map_names()))
                      or EXIT_OK)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (_InputProblem, NotPathConnected, PosetcatError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
