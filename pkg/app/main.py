"""
Main module for ideallab.

Command-line entry point connecting the classification engine, the family
scans, the theorem verifiers and the certified constructions. Results are
written to stdout; logs go to stderr only.
"""

import argparse
import json
import sys
from typing import List, Optional

import pandas as pd
from loguru import logger

from app.classify import SearchBounds, classify_report, family_ideals, scan_family
from app.classify.table import FAMILIES, to_csv, to_json
from app.config import settings, validate_config
from app.errors import IdealLabError, ParseError, PreconditionError
from app.ideals.ideal import parse_ideal
from app.rings.parsing import parse_element, parse_ring
from app.theorems import (
    MUTATIONS,
    ConstructionReport,
    Scope,
    construct_PM,
    construct_xM,
    parse_theorem_ids,
    verify_theorems,
)
from app.theorems.ids import FAMILIES as SCOPE_FAMILIES
from app.utils.helpers import parse_range

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def configure_logging(level: str) -> None:
    """Replace loguru's default sink with a single stderr sink."""
    logger.remove()
    logger.add(
        sys.stderr,
        level=level.upper(),
        format="{time:HH:mm:ss} | {level: <8} | {name}:{function} - {message}",
    )


def _bounds(args) -> Optional[SearchBounds]:
    if args.degree is None:
        return None
    return SearchBounds(args.degree, settings.MONLOC_MAX_TERMS)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_classify(args) -> int:
    ring = parse_ring(args.ring)
    ideal = parse_ideal(ring, args.ideal)
    bounds = _bounds(args)
    if args.format == "csv":
        _emit(to_csv(scan_family([ideal], bounds)))
        return EXIT_OK
    report = classify_report(ideal, bounds)
    _emit(report.to_text() if args.format == "text" else report.model_dump_json(indent=2))
    return EXIT_OK


def cmd_scan(args) -> int:
    n_range = parse_range(args.n_range) if args.n_range else None
    prime = None
    if args.prime is not None:
        if not args.prime.isdigit():
            raise ParseError("expected a prime number", token=args.prime)
        prime = int(args.prime)
    ideals = family_ideals(args.family, n_range, args.left, args.right, args.degree, prime)
    table = scan_family(ideals, _bounds(args))
    if args.format == "json":
        _emit(to_json(table))
    elif args.format == "text":
        _emit(table.to_string(index=False))
    else:
        _emit(to_csv(table))
    return EXIT_OK


def cmd_verify(args) -> int:
    theorems = parse_theorem_ids(args.theorem)
    families = [f.strip() for f in args.family.split(",")] if args.family else None
    scope = Scope.from_settings(args.max_n, families)
    reports = verify_theorems(theorems, scope, args.mutate)

    if args.format == "text":
        _emit("\n".join(r.to_text() for r in reports))
    elif args.format == "csv":
        rows = [
            {
                "theorem": r.theorem,
                "scope": r.scope,
                "instances_checked": r.instances_checked,
                "violations": len(r.violations),
            }
            for r in reports
        ]
        _emit(pd.DataFrame(rows).to_csv(index=False, lineterminator="\n"))
    else:
        _emit(json.dumps([r.to_json_dict(args.timings) for r in reports], indent=2))

    failed = [r.theorem for r in reports if not r.ok]
    if failed:
        logger.warning(f"violations found for {', '.join(failed)}")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_construct(args) -> int:
    ring = parse_ring(args.ring)
    if args.kind == "xm":
        if args.elem is None:
            raise ParseError("construct --kind xm needs --elem")
        built = construct_xM(ring, parse_element(ring, args.elem))
    else:
        if args.prime is None:
            raise ParseError("construct --kind pm needs --prime")
        built = construct_PM(ring, parse_ideal(ring, args.prime))
    report = ConstructionReport.from_construction(built)
    _emit(report.to_text() if args.format == "text" else report.model_dump_json(indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, help="worker threads (overrides IDEALLAB_THREADS)")
    common.add_argument("--log-level", help="loguru level for stderr (default: IDEALLAB_LOG_LEVEL)")
    common.add_argument("--format", choices=["json", "csv", "text"], help="output format")
    common.add_argument("--degree", type=int, help="degree bound of the kxy search")

    parser = argparse.ArgumentParser(
        prog="ideallab",
        description="Decide 1-absorbing primary and related properties of ideals, and verify theorems about them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    classify = sub.add_parser("classify", parents=[common], help="classify one ideal")
    classify.add_argument("--ring", required=True, help="ring spec, e.g. Z, Z/12, Z/4xZ/9, Zloc:5, kxy")
    classify.add_argument("--ideal", required=True, help="ideal literal, e.g. (12), x^2,x*y, p^3")
    classify.set_defaults(handler=cmd_classify, default_format="json")

    scan = sub.add_parser("scan", parents=[common], help="classify every ideal of a family")
    scan.add_argument("--family", required=True, choices=FAMILIES)
    scan.add_argument("--n-range", help="inclusive range lo..hi of n (zmod) or moduli (int)")
    scan.add_argument("--left", type=int, help="first factor n of Z/n x Z/m")
    scan.add_argument("--right", type=int, help="second factor m of Z/n x Z/m")
    scan.add_argument("--prime", help="prime of Zloc:p for the intloc family (default 5)")
    scan.set_defaults(handler=cmd_scan, default_format="csv")

    verify = sub.add_parser("verify", parents=[common], help="run theorem verifiers")
    verify.add_argument("--theorem", default="all", help="comma separated theorem ids, or all")
    verify.add_argument("--max-n", type=int, help="bound for Z/n and the moduli of Z")
    verify.add_argument("--family", help=f"comma separated subset of {','.join(SCOPE_FAMILIES)}")
    verify.add_argument("--mutate", choices=MUTATIONS, help="replace the chain with a false claim")
    verify.add_argument("--timings", action="store_true", help="include elapsed seconds")
    verify.set_defaults(handler=cmd_verify, default_format="json")

    construct = sub.add_parser("construct", parents=[common], help="build a certified ideal")
    construct.add_argument("--kind", required=True, choices=["xm", "pm"])
    construct.add_argument("--ring", required=True)
    construct.add_argument("--elem", help="prime element x for the xM construction")
    construct.add_argument("--prime", help="prime ideal P for the PM construction, e.g. x,y")
    construct.set_defaults(handler=cmd_construct, default_format="json")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run the command and return its exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level or settings.LOG_LEVEL)
    if args.threads is not None:
        settings.THREADS = args.threads
    if args.format is None:
        args.format = args.default_format
    if not validate_config():
        return EXIT_USAGE

    try:
        return args.handler(args)
    except PreconditionError as e:
        logger.error(f"precondition failed ({e.reason}): {e}")
        print(f"error: {e} [{e.reason}]", file=sys.stderr)
        return EXIT_USAGE
    except (IdealLabError, ValueError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
