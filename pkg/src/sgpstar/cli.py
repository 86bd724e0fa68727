"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
cap.  Data goes to stdout as JSON (sorted keys) or DOT; diagnostics go to
stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import ideal as I
from . import star as St
from . import topology as T
from . import verify as V
from .enumeration import enumerate_stars
from .errors import InputError, ResourceCap, SgpError
from .expr import eval_text
from .semigroup import make_semigroup

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _gens(text: str):
    try:
        return make_semigroup([int(x) for x in text.split(",") if x.strip()])
    except ValueError as exc:
        if isinstance(exc, SgpError):
            raise
        raise InputError(f"bad generator list {text!r}") from None


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def cmd_info(args) -> int:
    S = _gens(args.gens)
    out = S.to_json()
    out["conductor"] = S.conductor
    out["poset"] = len(I.standard_poset(S))
    out["stars"] = len(enumerate_stars(S))
    _emit(out)
    return EXIT_OK


def cmd_ideal(args) -> int:
    S = _gens(args.gens)
    _emit(eval_text(S, args.expr).to_json())
    return EXIT_OK


def cmd_star(args) -> int:
    S = _gens(args.gens)
    ops = enumerate_stars(S)
    if args.action == "enum":
        _emit([op.to_json() for op in ops])
    else:
        labels = [op.label or f"#{k}" for k, op in enumerate(ops)]
        sys.stdout.write(T.hasse_dot(labels, St.down_sets(ops)))
    return EXIT_OK


def cmd_topology(args) -> int:
    S = _gens(args.gens)
    space = T.build_space(S)
    if args.dot:
        sys.stdout.write(T.to_dot(space))
        return EXIT_OK
    rep = T.is_spectral(space)
    out = rep.to_json()
    out["closure_eq_downset"] = T.closure_equals_downset(space)
    _emit(out)
    failed = [k for k in ("t0", "spectral", "closure_eq_downset") if not out[k]]
    for k in failed:
        print(f"check failed: {k}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_verify(args) -> int:
    S = _gens(args.gens)
    results = V.run(S, args.suite)
    out = {name: [c.to_json() for c in checks] for name, checks in results.items()}
    _emit({"gens": list(S.generators), "suites": out})
    failed = [c.statement for checks in results.values() for c in checks if not c.passed]
    for name in failed:
        print(f"failed: {name}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sgpstar",
                                 description="Star operations on numerical semigroups.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="semigroup summary")
    p.add_argument("--gens", required=True, help="comma-separated generators, e.g. 3,5,7")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("ideal", help="evaluate an ideal expression")
    p.add_argument("--gens", required=True)
    p.add_argument("--expr", required=True, help='e.g. "(v {4})"')
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("star", help="enumerate star operations")
    p.add_argument("action", choices=["enum", "lattice"])
    p.add_argument("--gens", required=True)
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("topology", help="check the Zariski topology")
    p.add_argument("--gens", required=True)
    p.add_argument("--dot", action="store_true", help="print the specialization order as DOT")
    p.set_defaults(func=cmd_topology)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--gens", required=True)
    p.add_argument("--suite", default="all", choices=[*V.SUITES, "all"])
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceCap as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CAP
    except SgpError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
