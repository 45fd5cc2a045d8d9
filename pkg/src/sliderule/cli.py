"""Command line front door: render rules to SVG, run analyses, serve
the HTTP API.

Reports go to stdout, diagnostics to stderr.  Exit codes: 0 ok, 2 input
or validation error, 3 analysis domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis
from .errors import DomainError, SlideRuleError
from .jsonio import dumps
from .render import RuleLayout, render_svg
from .scales import ScaleSpec

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_ANALYSIS = 3

ANALYZE_KINDS = ("accuracy", "alignment", "triangle", "coincidence")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sliderule",
        description="Scale construction and analysis for slide rule style instruments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_render = sub.add_parser("render", help="render a rule layout to SVG")
    p_render.add_argument("--layout", required=True, help="RuleLayout JSON file")
    p_render.add_argument("--out", required=True, help="output SVG path")

    p_analyze = sub.add_parser("analyze", help="run a scale analysis, report JSON on stdout")
    p_analyze.add_argument("--kind", required=True, choices=ANALYZE_KINDS)
    p_analyze.add_argument("--scale", help="ScaleSpec JSON file")
    p_analyze.add_argument("--scale2", help="second ScaleSpec JSON file (alignment)")
    p_analyze.add_argument("--h", type=float, default=0.5,
                           help="minimum legible mark separation in mm (default 0.5)")
    p_analyze.add_argument("--separation-factor", type=float, default=1.01,
                           help="neighbour factor for legibility (default 1.01)")
    p_analyze.add_argument("--a", type=float, help="given triangle leg (triangle)")
    p_analyze.add_argument("--x-lo", type=float, help="explicit readable range low end (triangle)")
    p_analyze.add_argument("--x-hi", type=float, help="explicit readable range high end (triangle)")
    p_analyze.add_argument("--xc", type=float, help="C scale value (coincidence)")
    p_analyze.add_argument("--xr", type=float, help="reciprocal scale value (coincidence)")
    p_analyze.add_argument("--table", action="store_true",
                           help="emit the reference coincidence pairs")
    p_analyze.add_argument("--max-rational", type=int, default=10,
                           help="numerator/denominator bound for 'easy rational' ratios")

    p_serve = sub.add_parser("serve", help="start the JSON HTTP service")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")

    return parser


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise _InputError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


class _InputError(Exception):
    pass


def _load_scale(path: str | None, flag: str) -> ScaleSpec:
    if not path:
        raise _InputError(f"this analysis needs {flag}")
    data = _load_json(path)
    try:
        return ScaleSpec.from_json(data)
    except (ValueError, TypeError, KeyError) as exc:
        raise _InputError(f"{path}: {exc}") from exc


def cmd_render(args: argparse.Namespace) -> int:
    data = _load_json(args.layout)
    try:
        layout = RuleLayout.from_json(data)
    except (ValueError, TypeError, KeyError) as exc:
        raise _InputError(f"{args.layout}: {exc}") from exc
    svg = render_svg(layout)
    try:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(svg)
    except OSError as exc:
        raise _InputError(f"{args.out}: {exc.strerror or exc}") from exc
    print(f"wrote {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    report = run_analysis(args)
    print(dumps(report))
    return EXIT_OK


def run_analysis(args: argparse.Namespace) -> dict | list:
    """Dispatch one analysis and return its JSON-ready report."""
    kind = args.kind
    if kind == "accuracy":
        scale = _load_scale(args.scale, "--scale")
        params = analysis.AccuracyParams(h=args.h, separation_factor=args.separation_factor)
        return analysis.resolvable_bound(scale, params).to_json()
    if kind == "alignment":
        scale1 = _load_scale(args.scale, "--scale")
        scale2 = _load_scale(args.scale2, "--scale2")
        return analysis.alignment(scale1, scale2, max_rational=args.max_rational).to_json()
    if kind == "triangle":
        if args.a is None:
            raise _InputError("triangle analysis needs --a")
        if args.x_lo is not None and args.x_hi is not None:
            lo, hi = args.x_lo, args.x_hi
        else:
            scale = _load_scale(args.scale, "--scale (or --x-lo/--x-hi)")
            params = analysis.AccuracyParams(h=args.h, separation_factor=args.separation_factor)
            bound = analysis.resolvable_bound(scale, params)
            if not bound.feasible or bound.resolvable_x_bound is None:
                raise DomainError(
                    f"scale {scale.name} has no readable values at h={args.h} mm"
                )
            lo = max(bound.resolvable_x_bound, scale.x_min)
            hi = scale.x_max
        return analysis.triangle_range(args.a, lo, hi).to_json()
    if kind == "coincidence":
        if args.table:
            return [
                analysis.coincidence_from_C(xc).to_json()
                for xc in analysis.COINCIDENCE_TABLE_XC
            ]
        if args.xc is not None:
            return analysis.coincidence_from_C(args.xc).to_json()
        if args.xr is not None:
            return analysis.coincidence_from_R(args.xr).to_json()
        raise _InputError("coincidence analysis needs --xc, --xr or --table")
    raise _InputError(f"unknown analysis kind {kind!r}")


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "render":
            return cmd_render(args)
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "serve":
            return cmd_serve(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SlideRuleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS
    parser.error(f"unknown command {args.command!r}")
    return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
