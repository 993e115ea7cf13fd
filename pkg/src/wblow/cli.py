"""Command line front end.

Three subcommands cover the library surface: `center` prints the
canonical invariant and weighted center of an ideal at a point,
`principalize` runs iterated weighted blowups until the weighted
transform is trivial at every studied rational point, and `resolve`
does the same with strict transforms of a hypersurface.

Input comes either from flags (--vars, --gens, --point) or from a JSON
file with fields variables, generators, point and max_steps.  Exit
codes: 0 on success, 2 on input errors, 3 when the step budget ran out
before the run finished.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .arith import ParseError, VariableMismatchError, parse_polynomial
from .canonical import ProfileSizeError, canonical_center
from .center import TriangularizationError, format_rational
from .driver import RunConfig, embedded_resolve, principalize
from .ideals import LocalIdeal


class InputError(Exception):
    pass


def format_invariant(invariant) -> str:
    return "(" + ", ".join(format_rational(d) for d in invariant) + ")"


def _parse_point(text_or_list, dim: int) -> Tuple[Fraction, ...]:
    if isinstance(text_or_list, str):
        parts = [p.strip() for p in text_or_list.split(",")]
    else:
        parts = list(text_or_list)
    try:
        point = tuple(Fraction(str(p)) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad point: {exc}") from exc
    if len(point) != dim:
        raise InputError(
            f"point has {len(point)} coordinates, the ring has {dim}"
        )
    return point


def _load_problem(args) -> Tuple[LocalIdeal, Optional[Tuple[Fraction, ...]], int]:
    if args.input:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InputError(f"{args.input} is not valid JSON: {exc}") from exc
        mode = data.get("mode")
        if mode is not None and mode != args.command:
            raise InputError(
                f"input file is for mode {mode!r}, not {args.command!r}"
            )
        variables = data.get("variables")
        generators = data.get("generators")
        raw_point = data.get("point")
        max_steps = data.get("max_steps", args.max_steps)
    else:
        variables = args.vars.split(",") if args.vars else None
        generators = args.gens
        raw_point = args.point
        max_steps = args.max_steps

    if not variables:
        raise InputError("no variables given (use --vars or an input file)")
    variables = tuple(v.strip() for v in variables)
    if not generators:
        raise InputError("no generators given (use --gens or an input file)")
    try:
        polys = [parse_polynomial(g, variables) for g in generators]
    except (ParseError, VariableMismatchError) as exc:
        raise InputError(str(exc)) from exc
    ideal = LocalIdeal(variables, polys)
    point = None
    if raw_point is not None:
        point = _parse_point(raw_point, len(variables))
    if not isinstance(max_steps, int) or max_steps < 0:
        raise InputError("max_steps must be a non negative integer")
    return ideal, point, max_steps


def _write_json(path: Optional[str], payload: dict) -> None:
    if not path:
        return
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def _cmd_center(args) -> int:
    ideal, point, _ = _load_problem(args)
    if point is not None:
        ideal = LocalIdeal(
            ideal.variables, [g.translate(point) for g in ideal.generators]
        )
    result = canonical_center(ideal)
    print("invariant:", format_invariant(result.invariant))
    if result.center is None:
        print("center: none")
        payload_center = None
    else:
        print("center:", repr(result.center))
        payload_center = [
            [str(p), format_rational(d)] for p, d in result.center.parameters()
        ]
    _write_json(
        args.json,
        {
            "variables": list(ideal.variables),
            "generators": [str(g) for g in ideal.generators],
            "invariant": [format_rational(d) for d in result.invariant],
            "center": payload_center,
        },
    )
    return 0


def _trace(tree) -> None:
    for node_id in tree.order:
        n = tree.nodes[node_id]
        where = f" [chart {n.chart_variable}]" if n.chart_variable else ""
        point = "(" + ", ".join(format_rational(c) for c in n.point) + ")"
        print(
            f"{n.id}{where} at {point}: "
            f"invariant {format_invariant(n.invariant)} -> {n.status}"
        )


def _cmd_tree(args, runner) -> int:
    ideal, point, max_steps = _load_problem(args)
    config = RunConfig(max_steps=max_steps)
    tree = runner(ideal, point, config)
    if args.trace:
        _trace(tree)
    print("status:", tree.status)
    print("blowups:", tree.steps)
    print("studied points:", len(tree.order))
    _write_json(args.json, tree.report())
    return 3 if tree.status == "exhausted" else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wblow",
        description="canonical weighted centers and principalization over Q",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("center", "print the canonical invariant and weighted center"),
        ("principalize", "blow up until the weighted transform is trivial"),
        ("resolve", "blow up until the strict transform is smooth"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", help="JSON problem description")
        p.add_argument("--vars", help="comma separated variable names")
        p.add_argument(
            "--gens",
            action="append",
            help="generator polynomial, repeat for several",
        )
        p.add_argument("--point", help="comma separated rational coordinates")
        p.add_argument("--max-steps", type=int, default=64)
        p.add_argument("--json", help="write a JSON report to this file")
        p.add_argument(
            "--trace", action="store_true", help="print one line per node"
        )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "center":
            return _cmd_center(args)
        if args.command == "principalize":
            return _cmd_tree(args, principalize)
        return _cmd_tree(args, embedded_resolve)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TriangularizationError, ProfileSizeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
