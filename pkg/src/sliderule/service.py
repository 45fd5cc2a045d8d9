"""Stateless JSON-over-HTTP facade for the explorer UI.

Every handler is a pure request to response function over the shared
immutable registry; responses reuse the CLI's canonical JSON encoder so
the two front doors stay byte-identical.  Error payloads follow one
shape: {code, message, detail} with code in {domain_error, range_error,
incompatible_scales, bad_request}.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import analysis
from .errors import SlideRuleError
from .jsonio import dumps
from .registry import default_registry
from .render import PX_PER_MM, RuleLayout, SlideState, read_hairline, render_svg
from .scales import ScaleSpec


class _BadRequest(Exception):
    pass


def _json_response(payload, status: int = 200) -> Response:
    return Response(content=dumps(payload) + "\n", status_code=status, media_type="application/json")


def _error(status: int, code: str, message: str, detail: str = "") -> Response:
    return _json_response({"code": code, "message": message, "detail": detail}, status)


async def _body(request: Request) -> dict:
    try:
        data = json.loads(await request.body())
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise _BadRequest(f"body is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise _BadRequest("body must be a JSON object")
    return data


def _scale_from(data: dict, key: str) -> ScaleSpec:
    raw = data.get(key)
    if not isinstance(raw, dict):
        raise _BadRequest(f"missing or invalid scale spec {key!r}")
    try:
        return ScaleSpec.from_json(raw)
    except (ValueError, TypeError, KeyError) as exc:
        raise _BadRequest(f"{key}: {exc}") from exc


def create_app() -> FastAPI:
    app = FastAPI(title="sliderule", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    registry = default_registry()

    @app.exception_handler(_BadRequest)
    async def bad_request_handler(_, exc: _BadRequest):
        return _error(400, "bad_request", str(exc))

    @app.exception_handler(SlideRuleError)
    async def engine_error_handler(_, exc: SlideRuleError):
        return _error(422, exc.code, str(exc))

    @app.get("/registry")
    async def get_registry():
        return _json_response([entry.to_json() for entry in registry.values()])

    @app.post("/rule")
    async def post_rule(request: Request):
        data = await _body(request)
        try:
            layout = RuleLayout.from_json(data)
        except (ValueError, TypeError, KeyError) as exc:
            raise _BadRequest(str(exc)) from exc
        return _json_response(
            {
                "length_mm": layout.length_mm,
                "row_height_mm": layout.row_height_mm,
                "margins_mm": layout.margins_mm,
                "px_per_mm": PX_PER_MM,
                "tick_sets": [ticks.to_json() for _, ticks in layout.rows()],
                "svg": render_svg(layout),
            }
        )

    @app.post("/read")
    async def post_read(request: Request):
        data = await _body(request)
        raw_layout = data.get("layout")
        if not isinstance(raw_layout, dict):
            raise _BadRequest("missing layout")
        try:
            layout = RuleLayout.from_json(raw_layout)
            state = SlideState(
                slide_offset_mm=float(data.get("slide_offset_mm", 0.0)),
                hairline_mm=float(data["hairline_mm"]),
            )
        except KeyError as exc:
            raise _BadRequest(f"missing field {exc}") from exc
        except (ValueError, TypeError) as exc:
            raise _BadRequest(str(exc)) from exc
        return _json_response([r.to_json() for r in read_hairline(layout, state)])

    @app.post("/analyze/accuracy")
    async def post_accuracy(request: Request):
        data = await _body(request)
        scale = _scale_from(data, "scale")
        params = _accuracy_params(data)
        return _json_response(analysis.resolvable_bound(scale, params).to_json())

    @app.post("/analyze/alignment")
    async def post_alignment(request: Request):
        data = await _body(request)
        scale1 = _scale_from(data, "scale1")
        scale2 = _scale_from(data, "scale2")
        max_rational = int(data.get("max_rational", analysis.DEFAULT_MAX_RATIONAL))
        return _json_response(
            analysis.alignment(scale1, scale2, max_rational=max_rational).to_json()
        )

    @app.post("/analyze/triangle")
    async def post_triangle(request: Request):
        data = await _body(request)
        if "a" not in data:
            raise _BadRequest("triangle analysis needs 'a'")
        a = float(data["a"])
        if "x_lo" in data and "x_hi" in data:
            lo, hi = float(data["x_lo"]), float(data["x_hi"])
        else:
            scale = _scale_from(data, "scale")
            params = _accuracy_params(data)
            bound = analysis.resolvable_bound(scale, params)
            if not bound.feasible or bound.resolvable_x_bound is None:
                raise _BadRequest(f"scale {scale.name} has no readable values at h={params.h} mm")
            lo = max(bound.resolvable_x_bound, scale.x_min)
            hi = scale.x_max
        return _json_response(analysis.triangle_range(a, lo, hi).to_json())

    @app.post("/analyze/coincidence")
    async def post_coincidence(request: Request):
        data = await _body(request)
        if data.get("table"):
            pairs = [
                analysis.coincidence_from_C(xc).to_json()
                for xc in analysis.COINCIDENCE_TABLE_XC
            ]
            return _json_response(pairs)
        if "x_C" in data:
            return _json_response(analysis.coincidence_from_C(float(data["x_C"])).to_json())
        if "x_R" in data:
            return _json_response(analysis.coincidence_from_R(float(data["x_R"])).to_json())
        raise _BadRequest("coincidence analysis needs x_C, x_R or table")

    return app


def _accuracy_params(data: dict) -> analysis.AccuracyParams:
    try:
        return analysis.AccuracyParams(
            h=float(data.get("h", 0.5)),
            separation_factor=float(data.get("separation_factor", 1.01)),
        )
    except (TypeError, ValueError) as exc:
        raise _BadRequest(str(exc)) from exc


app = create_app()
