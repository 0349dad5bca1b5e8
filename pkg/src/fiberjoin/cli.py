"""Command line interface.

Every subcommand reads one JSON document from a file path (or ``-``
for stdin) and writes a JSON document to stdout; ``survey`` can write
csv instead.  Exit codes: 0 on success, 1 for an invalid input
document, 2 when a valid join hits degenerate data for the requested
computation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import admissible as adm
from . import einstein
from .classify import (
    emit,
    invariant_report,
    parse_factor,
    parse_spec,
    serialize_polynomial,
    serialize_rational,
    spec_report,
    survey,
)
from .exactalg import SingularMatrixError
from .model import BaseProduct, FiberJoinSpec, SpecError


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); keep 2 for data errors
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="fiberjoin",
        description="Exact invariants and canonical-metric verdicts for fiber joins.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("invariants", "topological invariants of one join"),
        ("classify", "invariants plus every applicable metric verdict"),
        ("csc", "constant scalar curvature solve on the regular ray"),
        ("extremal", "extremal profile polynomial on the regular ray"),
        ("se", "Sasaki-Einstein obstruction and existence check"),
        ("survey", "enumerate and classify a family of joins"),
    ]:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument(
            "document",
            help="path of the JSON input document, or - for stdin",
        )
        cmd.add_argument(
            "--format",
            choices=["json", "csv"] if name == "survey" else ["json"],
            default="json",
        )
    return parser


def _read_document(path: str) -> dict:
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    return json.loads(text)


def _run_csc(spec: FiberJoinSpec) -> dict:
    result = adm.solve_csc(adm.admissible_data(spec))
    return {
        "verdict": result.verdict,
        "s": serialize_rational(result.s) if result.s is not None else None,
        "certificate": (
            serialize_polynomial(result.certificate)
            if result.certificate is not None
            else None
        ),
    }


def _run_extremal(spec: FiberJoinSpec) -> dict:
    profile = adm.extremal_profile(adm.admissible_data(spec))
    return {
        "profile": serialize_polynomial(profile.profile),
        "source": serialize_polynomial(profile.source),
        "char_product": serialize_polynomial(profile.char_product),
        "positive": profile.positive,
    }


def _run_se(spec: FiberJoinSpec) -> dict:
    verdict = einstein.se_check(spec)
    return {
        "possible": verdict.possible,
        "reason": verdict.reason,
        "count": verdict.count,
    }


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        document = _read_document(args.document)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read document: {exc}", file=sys.stderr)
        return 1

    if args.command == "survey":
        try:
            factors = [parse_factor(f) for f in document["base"]]
            split = tuple(int(x) for x in document["split"])
            if len(split) != 2 or split[0] < 0 or split[1] < 0:
                raise ValueError("split must be a pair of nonnegative integers")
            max_entry = int(document["max_entry"])
            cap = int(document.get("cap", 200_000))
        except (KeyError, TypeError, ValueError, SpecError) as exc:
            print(f"error: invalid survey request: {exc}", file=sys.stderr)
            return 1
        try:
            report = survey(BaseProduct(tuple(factors)), split, max_entry, cap)
        except SpecError as exc:  # includes the enumeration cap
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(emit(report, args.format))
        return 0

    try:
        spec = parse_spec(document)
    except SpecError as exc:
        print(f"error: invalid join document: {exc}", file=sys.stderr)
        return 1

    try:
        if args.command == "invariants":
            output = invariant_report(spec).as_dict()
        elif args.command == "classify":
            output = spec_report(spec)
        elif args.command == "csc":
            output = _run_csc(spec)
        elif args.command == "extremal":
            output = _run_extremal(spec)
        else:
            output = _run_se(spec)
    except (SpecError, SingularMatrixError) as exc:
        print(f"error: degenerate data: {exc}", file=sys.stderr)
        return 2

    print(emit(output, args.format))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
