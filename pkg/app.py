#!/usr/bin/env python3
"""
simdraw command-line front end.

Commands:
- draw     build the scaled dual and vertex positions for a .rsub file
- gen      write a random subdivision
- render   turn a .draw file into SVG
- derive   dump the labeled primal graph of a subdivision
- verify   check a .draw file against its .rsub source
- plan     dump the face plan used by the construction
- corpus   draw and verify a generated corpus, write a CSV report

Exit codes: 0 ok, 1 invalid input, 2 verification failed, 3 construction failed.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import List, Optional

sys.path.insert(0, str(Path(__file__).parent))

from generator import generate
from models import RenderOptions, VerificationReport
from report import corpus_report, save_report, summarize
from simdraw.checks import CheckRegistry, create_default_registry
from simdraw.engine import run
from simdraw.errors import ConstructionError, GeometryPreconditionError, InputError
from simdraw.stgraph import build_face_plan, build_red
from simdraw.subdivision import augment_boundary, derive_primal, serialize
from simdraw.types import StepSnapshot
from simdraw.verify import verify
from storage import (
    graph_to_dict,
    load_config,
    load_drawing,
    load_rsub,
    plan_to_dict,
    save_drawing,
    save_json,
    save_rsub,
)
from svg_export import render_snapshot, render_svg, save_svg

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2
EXIT_CONSTRUCTION = 3


def _print_report(report: VerificationReport, registry: CheckRegistry) -> None:
    about = registry.descriptions()
    print("=" * 50)
    print("Verification")
    print("=" * 50)
    for name, ok in report.checks.items():
        print(f"  {'✅' if ok else '❌'} {name}: {about.get(name, '')}")
    for v in report.violations:
        print(f"  - [{v.check}] {v.message}")
    print("\nPASSED" if report.passed else f"\nFAILED ({len(report.violations)} violation(s))")


def _registry(skip: List[str]) -> CheckRegistry:
    registry = create_default_registry()
    for name in skip:
        try:
            registry.disable(name)
        except KeyError as exc:
            raise InputError(exc.args[0]) from exc
    return registry


def _render_options(args) -> RenderOptions:
    render = args.render
    if getattr(args, "precision", None) is not None:
        render = replace(render, precision=args.precision)
    if getattr(args, "gates", False):
        render = replace(render, gates=True)
    if getattr(args, "wedges", False):
        render = replace(render, wedges=True)
    if getattr(args, "no_labels", False):
        render = replace(render, labels=False)
    return render


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_draw(args) -> int:
    sub = load_rsub(args.input)
    logger.info(f"Parsed {args.input}: {len(sub)} rects")
    config = replace(args.draw, check_steps=True) if args.check_steps else args.draw

    on_step = None
    if args.steps:
        frames = Path(args.steps)
        options = replace(_render_options(args), gates=True)

        def on_step(snap: StepSnapshot) -> None:
            save_svg(render_snapshot(snap, options), frames / f"step_{snap.step:03d}.svg")

    drawing = run(sub, config, on_step=on_step)
    save_drawing(drawing, args.output)

    if args.no_verify:
        return EXIT_OK
    registry = create_default_registry()
    report = verify(sub, drawing, registry)
    if not report.passed:
        _print_report(report, registry)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_gen(args) -> int:
    sub = generate(args.n, seed=args.seed, pinwheel_p=args.pinwheel)
    if args.output:
        save_rsub(sub, args.output)
    else:
        sys.stdout.write(serialize(sub))
    return EXIT_OK


def cmd_render(args) -> int:
    drawing = load_drawing(args.input)
    save_svg(render_svg(drawing, _render_options(args)), args.output)
    return EXIT_OK


def cmd_derive(args) -> int:
    sub = load_rsub(args.input)
    graph = derive_primal(augment_boundary(sub) if args.augment else sub)
    text = save_json(graph_to_dict(graph), args.output)
    if not args.output:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    sub = load_rsub(args.input)
    drawing = load_drawing(args.drawing)
    registry = _registry(args.skip)
    report = verify(sub, drawing, registry)
    _print_report(report, registry)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_plan(args) -> int:
    sub = load_rsub(args.input)
    plan = build_face_plan(build_red(derive_primal(augment_boundary(sub, args.draw.pole_thickness))))
    text = save_json(plan_to_dict(plan), args.output)
    if not args.output:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_corpus(args) -> int:
    df = corpus_report(
        args.count,
        seed=args.seed,
        min_rects=args.min_rects,
        max_rects=args.max_rects,
        pinwheel_p=args.pinwheel,
        config=args.draw,
    )
    save_report(df, args.output)
    print(summarize(df))
    return EXIT_OK if bool(df["passed"].all()) else EXIT_VERIFY


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _probability(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"expected a probability in [0, 1], got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simdraw",
        description="Straight-line simultaneous drawings of a planar graph and its rectangular dual",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    parser.add_argument("--config", help="Config file (default: data/config.json)")
    sub = parser.add_subparsers(dest="command", required=True)

    def render_flags(p):
        p.add_argument("--precision", type=_positive, help="Decimal places in SVG coordinates")
        p.add_argument("--no-labels", action="store_true", help="Omit vertex labels")

    p = sub.add_parser("draw", help="Construct a drawing")
    p.add_argument("input", help=".rsub file")
    p.add_argument("output", help=".draw file to write")
    p.add_argument("--no-verify", action="store_true", help="Skip the verifier")
    p.add_argument("--steps", metavar="DIR", help="Write one SVG per induction step into DIR")
    p.add_argument("--check-steps", action="store_true", help="Check the layout after every step")
    render_flags(p)
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("gen", help="Generate a random subdivision")
    p.add_argument("n", type=_positive, help="Number of rects")
    p.add_argument("-o", "--output", help=".rsub file (default: stdout)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pinwheel", type=_probability, default=0.0, help="Pinwheel substitution probability")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", help="Render a drawing as SVG")
    p.add_argument("input", help=".draw file")
    p.add_argument("output", help=".svg file to write")
    p.add_argument("--wedges", action="store_true", help="Shade the visibility wedges")
    render_flags(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("derive", help="Dump the labeled primal graph")
    p.add_argument("input", help=".rsub file")
    p.add_argument("-o", "--output", help="JSON file (default: stdout)")
    p.add_argument("--augment", action="store_true", help="Add the pole frame first")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("verify", help="Verify a drawing against its source")
    p.add_argument("input", help=".rsub file")
    p.add_argument("drawing", help=".draw file")
    p.add_argument("--skip", action="append", default=[], metavar="NAME", help="Disable a check by name")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plan", help="Dump the face plan")
    p.add_argument("input", help=".rsub file")
    p.add_argument("-o", "--output", help="JSON file (default: stdout)")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("corpus", help="Draw and verify a generated corpus")
    p.add_argument("count", type=_positive, help="Number of instances")
    p.add_argument("output", help="CSV report to write")
    p.add_argument("--seed", type=int, default=0, help="First seed")
    p.add_argument("--min-rects", type=_positive, default=5)
    p.add_argument("--max-rects", type=_positive, default=60)
    p.add_argument("--pinwheel", type=_probability, default=0.3)
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    args.draw, args.render = load_config(args.config)

    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ConstructionError, GeometryPreconditionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    except Exception as exc:
        logger.exception("Unexpected failure in %s", args.command)
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_CONSTRUCTION


if __name__ == "__main__":
    sys.exit(main())
