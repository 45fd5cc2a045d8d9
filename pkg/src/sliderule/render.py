"""Assembled rules: body and slide scale stacks, SVG output, and the
hairline read-out used by the simulator.

Geometry convention: 4 SVG user units per mm, tick x = (margin + pos) *
4.  Right-to-left scales mirror their positions (L - pos) at draw time
only; positions and read-outs always work in origin-mark coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import RangeError
from .scales import ScaleSpec
from .tickgen import TickPolicy, TickSet, generate_ticks

PX_PER_MM = 4.0

_TICK_HEIGHT_FRACTION = {0: 0.65, 1: 0.45, 2: 0.28}


@dataclass(frozen=True)
class SlideState:
    """Slide displacement and hairline position, both in mm.  The offset
    may be negative; the hairline stays on the body."""

    slide_offset_mm: float = 0.0
    hairline_mm: float | None = None


@dataclass
class RuleLayout:
    """Scale rows of one rule: fixed body above and below a sliding strip."""

    length_mm: float
    body_top: list[tuple[ScaleSpec, TickSet]] = field(default_factory=list)
    slide: list[tuple[ScaleSpec, TickSet]] = field(default_factory=list)
    body_bottom: list[tuple[ScaleSpec, TickSet]] = field(default_factory=list)
    row_height_mm: float = 8.0
    margins_mm: float = 10.0

    def __post_init__(self) -> None:
        rows = self.rows()
        if not rows:
            raise ValueError("layout needs at least one scale")
        for scale, _ in rows:
            if abs(scale.length_mm - self.length_mm) > 1e-9 * self.length_mm:
                raise ValueError(
                    f"scale {scale.name} has length {scale.length_mm:g} mm, "
                    f"layout expects {self.length_mm:g} mm"
                )
        if self.row_height_mm <= 0 or self.margins_mm < 0:
            raise ValueError("row height must be positive and margins nonnegative")

    def rows(self) -> list[tuple[ScaleSpec, TickSet]]:
        return [*self.body_top, *self.slide, *self.body_bottom]

    @classmethod
    def from_specs(
        cls,
        body_top: list[ScaleSpec] | None = None,
        slide: list[ScaleSpec] | None = None,
        body_bottom: list[ScaleSpec] | None = None,
        policy: TickPolicy | None = None,
        row_height_mm: float = 8.0,
        margins_mm: float = 10.0,
    ) -> "RuleLayout":
        policy = policy or TickPolicy()

        def ticked(specs: list[ScaleSpec] | None) -> list[tuple[ScaleSpec, TickSet]]:
            return [(s, generate_ticks(s, policy)) for s in (specs or [])]

        groups = (ticked(body_top), ticked(slide), ticked(body_bottom))
        lengths = [s.length_mm for group in groups for s, _ in group]
        if not lengths:
            raise ValueError("layout needs at least one scale")
        return cls(
            length_mm=lengths[0],
            body_top=groups[0],
            slide=groups[1],
            body_bottom=groups[2],
            row_height_mm=row_height_mm,
            margins_mm=margins_mm,
        )

    @classmethod
    def from_json(cls, data: dict) -> "RuleLayout":
        if not isinstance(data, dict):
            raise ValueError("layout must be a JSON object")
        specs: dict[str, list[ScaleSpec]] = {}
        for group in ("body_top", "slide", "body_bottom"):
            raw = data.get(group, [])
            if not isinstance(raw, list):
                raise ValueError(f"layout field {group!r} must be a list of scale specs")
            specs[group] = [ScaleSpec.from_json(item) for item in raw]
        if not any(specs.values()):
            raise ValueError("layout contains no scales")
        policy = TickPolicy.from_json(data.get("tick_policy", {}) or {})
        return cls.from_specs(
            body_top=specs["body_top"],
            slide=specs["slide"],
            body_bottom=specs["body_bottom"],
            policy=policy,
            row_height_mm=float(data.get("row_height_mm", 8.0)),
            margins_mm=float(data.get("margins_mm", 10.0)),
        )

    def to_json(self) -> dict:
        return {
            "length_mm": self.length_mm,
            "row_height_mm": self.row_height_mm,
            "margins_mm": self.margins_mm,
            "body_top": [s.to_json() for s, _ in self.body_top],
            "slide": [s.to_json() for s, _ in self.slide],
            "body_bottom": [s.to_json() for s, _ in self.body_bottom],
        }


@dataclass(frozen=True)
class ReadOut:
    scale: str
    value: float | None
    in_range: bool

    def to_json(self) -> dict:
        data: dict = {"scale": self.scale, "in_range": self.in_range}
        if self.value is not None:
            data["value"] = self.value
        return data


def read_hairline(layout: RuleLayout, state: SlideState) -> list[ReadOut]:
    """Value under the hairline on every scale, slide offset applied.

    Scales whose geometry cannot be read at the hairline (distance off
    the strip, or a value beyond the displayed range) are flagged with
    in_range False rather than raising.
    """
    if state.hairline_mm is None:
        raise ValueError("read_hairline needs a hairline position")
    _check_hairline(layout, state.hairline_mm)
    readouts = []
    for scale, _, on_slide in _rows_with_placement(layout):
        d = state.hairline_mm - (state.slide_offset_mm if on_slide else 0.0)
        if scale.orientation == "rtl":
            d = layout.length_mm - d
        try:
            value = scale.value_at(d)
        except RangeError:
            readouts.append(ReadOut(scale.name, None, False))
            continue
        if not math.isfinite(value):
            readouts.append(ReadOut(scale.name, None, False))
            continue
        readouts.append(ReadOut(scale.name, value, scale.in_range(value)))
    return readouts


def _check_hairline(layout: RuleLayout, hairline_mm: float) -> None:
    if hairline_mm < 0 or hairline_mm > layout.length_mm:
        raise RangeError(
            f"hairline at {hairline_mm:g} mm is off the body [0, {layout.length_mm:g}]"
        )


def _rows_with_placement(layout: RuleLayout):
    for scale, ticks in layout.body_top:
        yield scale, ticks, False
    for scale, ticks in layout.slide:
        yield scale, ticks, True
    for scale, ticks in layout.body_bottom:
        yield scale, ticks, False


# -- SVG -----------------------------------------------------------------------


def _fmt(v: float) -> str:
    text = f"{v:.6f}"
    return text.rstrip("0").rstrip(".") if "." in text else text


def render_svg(layout: RuleLayout, state: SlideState | None = None) -> str:
    """Deterministic SVG 1.1 document for a layout, one band per scale."""
    margin = layout.margins_mm
    row_h = layout.row_height_mm
    n_rows = len(layout.rows())
    width_mm = layout.length_mm + 2 * margin
    height_mm = n_rows * row_h + 2 * margin
    w_px, h_px = width_mm * PX_PER_MM, height_mm * PX_PER_MM

    out: list[str] = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(w_px)}" height="{_fmt(h_px)}" '
        f'viewBox="0 0 {_fmt(w_px)} {_fmt(h_px)}">'
    )
    out.append(
        "<style>"
        "line.tick{stroke:#222;stroke-width:1}"
        "line.base{stroke:#222;stroke-width:1.5}"
        "line.hairline{stroke:#c22;stroke-width:1.5}"
        "text{font-family:Helvetica,Arial,sans-serif;fill:#111}"
        "rect.slide{fill:#f6f2e8;stroke:#999;stroke-width:1}"
        "rect.body{fill:#fdfdfb;stroke:#777;stroke-width:1}"
        "</style>"
    )
    out.append(
        f'<rect class="body" x="{_fmt(margin * PX_PER_MM / 2)}" y="{_fmt(margin * PX_PER_MM / 2)}" '
        f'width="{_fmt(w_px - margin * PX_PER_MM)}" height="{_fmt(h_px - margin * PX_PER_MM)}"/>'
    )

    slide_offset = state.slide_offset_mm if state else 0.0
    row_index = 0
    for scale, ticks in layout.body_top:
        out.append(_scale_band(layout, scale, ticks, row_index))
        row_index += 1
    if layout.slide:
        slide_y = (margin + row_index * row_h) * PX_PER_MM
        slide_h = len(layout.slide) * row_h * PX_PER_MM
        out.append(
            f'<g class="slide-group" transform="translate({_fmt(slide_offset * PX_PER_MM)} 0)">'
        )
        out.append(
            f'<rect class="slide" x="{_fmt(margin * PX_PER_MM / 2)}" y="{_fmt(slide_y)}" '
            f'width="{_fmt(w_px - margin * PX_PER_MM)}" height="{_fmt(slide_h)}"/>'
        )
        for scale, ticks in layout.slide:
            out.append(_scale_band(layout, scale, ticks, row_index))
            row_index += 1
        out.append("</g>")
    for scale, ticks in layout.body_bottom:
        out.append(_scale_band(layout, scale, ticks, row_index))
        row_index += 1

    if state is not None and state.hairline_mm is not None:
        _check_hairline(layout, state.hairline_mm)
        x = (margin + state.hairline_mm) * PX_PER_MM
        out.append(
            f'<line class="hairline" x1="{_fmt(x)}" y1="{_fmt(margin * PX_PER_MM * 0.6)}" '
            f'x2="{_fmt(x)}" y2="{_fmt(h_px - margin * PX_PER_MM * 0.6)}"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _scale_band(layout: RuleLayout, scale: ScaleSpec, ticks: TickSet, row_index: int) -> str:
    margin = layout.margins_mm
    row_h = layout.row_height_mm
    top = (margin + row_index * row_h) * PX_PER_MM
    bottom = top + row_h * PX_PER_MM
    labels_above = row_index % 2 == 0
    baseline = bottom if labels_above else top
    font_px = 2.5 * PX_PER_MM

    parts = [f'<g class="scale" data-scale="{scale.name}">']
    parts.append(
        f'<line class="base" x1="{_fmt(margin * PX_PER_MM)}" y1="{_fmt(baseline)}" '
        f'x2="{_fmt((margin + layout.length_mm) * PX_PER_MM)}" y2="{_fmt(baseline)}"/>'
    )
    name_x = margin * PX_PER_MM * 0.55
    name_y = top + 0.5 * row_h * PX_PER_MM
    parts.append(
        f'<text x="{_fmt(name_x)}" y="{_fmt(name_y)}" font-size="{_fmt(font_px)}" '
        f'text-anchor="middle">{scale.name}</text>'
    )
    for tick in ticks.ticks:
        pos = tick.pos_mm
        if scale.orientation == "rtl":
            pos = layout.length_mm - pos
        x = (margin + pos) * PX_PER_MM
        h = _TICK_HEIGHT_FRACTION.get(tick.level, 0.28) * row_h * PX_PER_MM
        y2 = baseline - h if labels_above else baseline + h
        parts.append(
            f'<line class="tick" x1="{_fmt(x)}" y1="{_fmt(baseline)}" '
            f'x2="{_fmt(x)}" y2="{_fmt(y2)}"/>'
        )
        if tick.label is not None:
            label_y = baseline - h - 0.2 * font_px if labels_above else baseline + h + font_px
            parts.append(
                f'<text x="{_fmt(x)}" y="{_fmt(label_y)}" font-size="{_fmt(font_px)}" '
                f'text-anchor="middle">{tick.label}</text>'
            )
    parts.append("</g>")
    return "\n".join(parts)
