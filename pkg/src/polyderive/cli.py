"""Command-line front end: check, derive, analyze, generate, verify, plot.

Reports go to stdout as JSON; human-readable summaries go to stderr. Exit
codes: 0 success (or all suites passing), 1 analysis or property failure,
2 usage or parse error. POLYDERIVE_SEED provides the default seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .generators import GenConfig, GenerationBudgetError
from .oracle import float_cross_validate
from .polygon import NonGenericPolygonError
from .regularity import IrregularPolygonError
from .reports import (
    PolygonFormatError,
    analyze_report,
    check_report,
    derive_report,
    plot_lines,
    polygon_from_json,
    polygon_to_json,
)
from .scalars import parse_rational
from .suites import SUITES, run_suite

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _load_payload(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except FileNotFoundError:
        raise PolygonFormatError(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise PolygonFormatError(
            f"{path} is not valid JSON: {exc.msg} at line {exc.lineno} column {exc.colno}"
        )
    if not isinstance(payload, dict):
        raise PolygonFormatError(f"{path} must hold a JSON object")
    return payload


def _emit(document: dict | str, out: str | None = None) -> None:
    text = document if isinstance(document, str) else json.dumps(document, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _summary(message: str) -> None:
    print(message, file=sys.stderr)


def _default_seed() -> int:
    try:
        return int(os.environ.get("POLYDERIVE_SEED", "0"))
    except ValueError:
        return 0


def _cmd_check(args: argparse.Namespace) -> int:
    polygon = polygon_from_json(_load_payload(args.file))
    report = check_report(polygon, source=args.file)
    if args.float_check:
        validation = float_cross_validate(report)
        report["oracle_results"] = {
            "ok": validation.ok,
            "checks": validation.checks,
            "mismatches": [
                {"field": m.field, "detail": m.detail} for m in validation.mismatches
            ],
        }
    _emit(report)
    if report["genericity"]["ok"]:
        verdict = report["verdict"]
        _summary(
            f"{args.file}: n={report['input_summary']['n']} "
            f"{'regular' if verdict['regular'] else 'not regular'} ({verdict['parity']})"
        )
    else:
        info = report["genericity"]
        _summary(f"{args.file}: not generic at edge {info['index']} ({info['kind']})")
    return EXIT_OK


def _cmd_derive(args: argparse.Namespace) -> int:
    polygon = polygon_from_json(_load_payload(args.file))
    alpha = parse_rational(args.alpha) if args.alpha is not None else None
    if alpha is not None and alpha == 0:
        raise ValueError("--alpha must be nonzero")
    report = derive_report(
        polygon, alpha=alpha, negative_root=args.negative_root, source=args.file
    )
    if args.float_check:
        validation = float_cross_validate(report)
        report["oracle_results"] = {
            "ok": validation.ok,
            "checks": validation.checks,
            "mismatches": [
                {"field": m.field, "detail": m.detail} for m in validation.mismatches
            ],
        }
    _emit(report)
    block = report["derived_analysis"]
    notes = [f"planar={block['planarity']['planar']}"]
    if block.get("strongly_regular") is not None:
        notes.append(f"strongly_regular={block['strongly_regular']}")
    if block.get("type_matches_input") is not None:
        notes.append(f"type_matches_input={block['type_matches_input']}")
    _summary(f"{args.file}: derived polygon built, " + ", ".join(notes))
    return EXIT_OK


def _cmd_analyze(args: argparse.Namespace) -> int:
    polygon = polygon_from_json(_load_payload(args.file))
    report = analyze_report(polygon, source=args.file)
    if args.float_check:
        validation = float_cross_validate(report)
        report["oracle_results"] = {
            "ok": validation.ok,
            "checks": validation.checks,
            "mismatches": [
                {"field": m.field, "detail": m.detail} for m in validation.mismatches
            ],
        }
    _emit(report)
    _summary(
        f"{args.file}: planar={report['planarity']['planar']}, "
        f"generic={report['genericity']['ok']}"
    )
    return EXIT_OK


def _cmd_generate(args: argparse.Namespace) -> int:
    from .generators import (
        alternating_sign_hexagon,
        random_generic_polygon,
        random_regular_pentagon,
        regular_hexagon_via_lift,
    )
    from .reports import vec3_to_json
    from .scalars import format_scalar

    cfg = GenConfig(seed=args.seed, coordinate_bound=args.bound)
    fixture: dict = {
        "kind": args.kind,
        "seed": cfg.seed,
        "coordinate_bound": cfg.coordinate_bound,
    }
    if args.kind == "quad":
        fixture.update(polygon_to_json(random_generic_polygon(4, cfg)))
    elif args.kind == "pentagon":
        fixture.update(polygon_to_json(random_regular_pentagon(cfg)))
    elif args.kind == "hexagon-lift":
        polygon, system = regular_hexagon_via_lift(cfg)
        fixture.update(polygon_to_json(polygon))
        fixture["support_system"] = {
            "parity": system.parity,
            "alpha": format_scalar(system.alpha),
            "vectors": [vec3_to_json(vector) for vector in system.vectors],
        }
    elif args.kind == "alt-sign":
        fixture.update(polygon_to_json(alternating_sign_hexagon(cfg)))
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown kind {args.kind!r}")
    _emit(fixture, args.out)
    destination = args.out if args.out else "stdout"
    _summary(f"generated {args.kind} fixture (seed {cfg.seed}) -> {destination}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(name, args.samples, args.seed) for name in names]
    passed = all(result.passed for result in results)
    _emit({"command": "verify", "passed": passed, "suites": [r.to_json() for r in results]})
    for result in results:
        _summary(
            f"suite {result.suite}: {result.samples - result.failures}/{result.samples} ok"
        )
    return EXIT_OK if passed else EXIT_FAILURE


def _cmd_plot(args: argparse.Namespace) -> int:
    text = plot_lines(_load_payload(args.file))
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyderive",
        description=(
            "Exact-arithmetic analysis of closed space polygons: decide whether a "
            "support system exists, build it, and analyze the derived polygon."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="genericity, determinants, regularity verdict")
    check.add_argument("file", help="polygon JSON file")
    check.add_argument("--float-check", action="store_true", help="attach the float re-run")
    check.set_defaults(func=_cmd_check)

    derive = sub.add_parser("derive", help="build the support system and derived polygon")
    derive.add_argument("file", help="polygon JSON file")
    derive.add_argument("--alpha", help="rational scale factor (required for even n)")
    derive.add_argument(
        "--negative-root",
        action="store_true",
        help="odd n: use the negative square root instead of the canonical one",
    )
    derive.add_argument("--float-check", action="store_true", help="attach the float re-run")
    derive.set_defaults(func=_cmd_derive)

    analyze = sub.add_parser("analyze", help="planarity, area vector, hexagon structure")
    analyze.add_argument("file", help="polygon JSON file")
    analyze.add_argument("--float-check", action="store_true", help="attach the float re-run")
    analyze.set_defaults(func=_cmd_analyze)

    generate = sub.add_parser("generate", help="emit a seeded fixture")
    generate.add_argument(
        "--kind",
        required=True,
        choices=("quad", "pentagon", "hexagon-lift", "alt-sign"),
    )
    generate.add_argument("--seed", type=int, default=_default_seed())
    generate.add_argument("--bound", type=int, default=9, help="coordinate bound")
    generate.add_argument("--out", help="write to a file instead of stdout")
    generate.set_defaults(func=_cmd_generate)

    verify = sub.add_parser("verify", help="run randomized verification suites")
    verify.add_argument(
        "--suite", required=True, choices=tuple(SUITES) + ("all",)
    )
    verify.add_argument("--samples", type=int, default=100)
    verify.add_argument("--seed", type=int, default=_default_seed())
    verify.set_defaults(func=_cmd_verify)

    plot = sub.add_parser("plot", help="emit float plot data for a polygon or report")
    plot.add_argument("file", help="polygon or report JSON file")
    plot.add_argument("--out", help="write to a file instead of stdout")
    plot.set_defaults(func=_cmd_plot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PolygonFormatError as exc:
        _summary(f"error: {exc}")
        return EXIT_USAGE
    except (
        NonGenericPolygonError,
        IrregularPolygonError,
        GenerationBudgetError,
        ValueError,
        ZeroDivisionError,
    ) as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        _summary(f"error: {exc}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
