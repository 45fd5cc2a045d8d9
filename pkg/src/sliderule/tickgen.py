"""Tick and label generation for arbitrary scales.

Recursive decimal subdivision: the value range is split into decade
chunks where a decade occupies meaningful physical width, each chunk
picks the finest {1,2,5}*10^k major step whose labels still fit, and
every segment between neighbouring marks is then subdivided by nested
finer steps as long as all created gaps stay above the policy minimum.
Tick positions are always taken from ScaleSpec.position, never
recomputed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .functions import PowerFunction
from .scales import ScaleSpec

# Drop/demote priority: higher survives a collision.
_PRI_ENDPOINT = 5
_PRI_SPECIAL = 4
_PRI_BOUNDARY = 3
_PRI_MAJOR = 2

_MAX_STEP_DESCENT = 60


@dataclass(frozen=True)
class Tick:
    """One mark: value None only for the infinity mark of reciprocal scales."""

    value: float | None
    pos_mm: float
    level: int
    label: str | None = None

    def to_json(self) -> dict:
        data: dict = {"value": self.value, "pos_mm": self.pos_mm, "level": self.level}
        if self.label is not None:
            data["label"] = self.label
        return data


@dataclass(frozen=True)
class TickPolicy:
    min_gap_mm: float = 0.7
    min_label_gap_mm: float = 6.0
    max_levels: int = 3
    special_values: tuple[float, ...] = ()
    label_font_mm: float = 2.5

    def __post_init__(self) -> None:
        if self.min_gap_mm <= 0 or self.min_label_gap_mm <= 0:
            raise ValueError("tick policy gaps must be positive")
        if not self.min_gap_mm < self.min_label_gap_mm:
            raise ValueError(
                f"min_gap_mm ({self.min_gap_mm}) must stay below "
                f"min_label_gap_mm ({self.min_label_gap_mm})"
            )
        if self.max_levels < 1:
            raise ValueError("max_levels must be at least 1")

    @classmethod
    def from_json(cls, data: dict) -> "TickPolicy":
        return cls(
            min_gap_mm=float(data.get("min_gap_mm", 0.7)),
            min_label_gap_mm=float(data.get("min_label_gap_mm", 6.0)),
            max_levels=int(data.get("max_levels", 3)),
            special_values=tuple(float(v) for v in data.get("special_values", ())),
            label_font_mm=float(data.get("label_font_mm", 2.5)),
        )


@dataclass
class TickSet:
    scale_name: str
    ticks: list[Tick]
    warnings: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "scale_name": self.scale_name,
            "warnings": list(self.warnings),
            "ticks": [t.to_json() for t in self.ticks],
        }


def densest_gap(tickset: TickSet) -> tuple[tuple[float | None, float | None], float]:
    """Adjacent tick pair with the smallest positional gap."""
    ticks = tickset.ticks
    if len(ticks) < 2:
        raise ValueError(f"tick set for {tickset.scale_name} has fewer than 2 ticks")
    best = None
    for a, b in zip(ticks, ticks[1:]):
        gap = b.pos_mm - a.pos_mm
        if best is None or gap < best[1]:
            best = ((a.value, b.value), gap)
    return best


# -- step ladder ---------------------------------------------------------------
#
# Steps are (mantissa, exponent) pairs with mantissa in {1, 2, 5}, value
# mantissa * 10**exponent.  next_nested yields the coarsest finer step
# that divides the current one evenly (1 -> 0.5 -> 0.1 -> 0.05 ...).


def _step_value(step: tuple[int, int]) -> float:
    return step[0] * 10.0 ** step[1]


def _next_nested(step: tuple[int, int]) -> tuple[int, int]:
    mantissa, exp = step
    if mantissa == 1:
        return (5, exp - 1)
    return (1, exp)


def _coarsest_with_interior(lo: float, hi: float, eps: float) -> tuple[int, int] | None:
    exp = math.floor(math.log10(hi - lo)) + 1
    step = (1, exp)
    for _ in range(_MAX_STEP_DESCENT):
        if _multiples_in(lo, hi, step, eps):
            return step
        mantissa, exp = step
        step = {1: (5, exp - 1), 5: (2, exp), 2: (1, exp)}[mantissa]
    return None


def _multiples_in(lo: float, hi: float, step: tuple[int, int], eps: float) -> list[float]:
    s = _step_value(step)
    k0 = math.ceil((lo + eps) / s)
    k1 = math.floor((hi - eps) / s)
    return [k * s for k in range(k0, k1 + 1)]


# -- generator -----------------------------------------------------------------


class _Mark:
    __slots__ = ("value", "pos", "level", "priority", "labeled")

    def __init__(self, value: float | None, pos: float, level: int, priority: int, labeled: bool):
        self.value = value
        self.pos = pos
        self.level = level
        self.priority = priority
        self.labeled = labeled


def generate_ticks(scale: ScaleSpec, policy: TickPolicy | None = None) -> TickSet:
    """Legibility-respecting ticks and labels for one scale."""
    policy = policy or TickPolicy()
    warnings: list[str] = []
    span = scale.x_max - scale.x_min
    eps = 1e-9 * span

    marks: list[_Mark] = []

    def add(value: float | None, level: int, priority: int, labeled: bool) -> None:
        pos = 0.0 if value is None else scale.position(value)
        marks.append(_Mark(value, pos, level, priority, labeled))

    add(scale.x_min, 0, _PRI_ENDPOINT, True)
    add(scale.x_max, 0, _PRI_ENDPOINT, True)
    for v in policy.special_values:
        if scale.in_range(v):
            add(v, 0, _PRI_SPECIAL, True)
        else:
            warnings.append(f"special value {v:g} outside range, skipped")

    boundaries = _decade_boundaries(scale, 3.0 * policy.min_label_gap_mm)
    for b in boundaries:
        add(b, 0, _PRI_BOUNDARY, True)

    chunks = _chunk_edges(scale, boundaries)
    segment_parents: dict[tuple[float, float], tuple[int, int] | None] = {}
    for lo, hi in chunks:
        step, majors = _chunk_majors(scale, policy, lo, hi, eps)
        for v in majors:
            add(v, 0, _PRI_MAJOR, True)
        anchor_vals = sorted({lo, hi, *majors, *(v for v in policy.special_values if lo < v < hi)})
        for a, b in zip(anchor_vals, anchor_vals[1:]):
            segment_parents[(a, b)] = step

    marks = _dedupe(marks, eps, 1e-9 * scale.length_mm)

    # Subdivide every segment between neighbouring anchors.
    for (lo, hi), parent in sorted(segment_parents.items()):
        _subdivide(scale, policy, lo, hi, parent, 1, eps, marks)

    marks.sort(key=lambda m: m.pos)
    marks = _min_gap_sweep(marks, policy.min_gap_mm)
    _demote_label_collisions(marks, policy)
    reciprocal_like = isinstance(scale.function, PowerFunction) and scale.function.alpha < 0
    if reciprocal_like and scale.origin_offset == 0.0:
        marks = _with_infinity_mark(marks, policy)
    _assign_level1_labels(marks, policy)

    if sum(1 for m in marks if m.value is not None) <= 2:
        warnings.append("range too compressed for subdivision, endpoints only")

    ticks = _finalize(marks)
    return TickSet(scale_name=scale.name, ticks=ticks, warnings=warnings)


def _decade_boundaries(scale: ScaleSpec, min_width_mm: float) -> list[float]:
    """Powers of ten inside the range whose own decade is wide enough to
    deserve an independent subdivision step."""
    if scale.x_max <= 0:
        return []
    k_hi = math.ceil(math.log10(scale.x_max))
    out = []
    for k in range(k_hi - 18, k_hi + 1):
        b = 10.0**k
        if not (scale.x_min < b < scale.x_max):
            continue
        lo_clip = max(b / 10.0, scale.x_min)
        width = abs(scale.position(b) - scale.position(lo_clip))
        if width >= min_width_mm:
            out.append(b)
    return out


def _chunk_edges(scale: ScaleSpec, boundaries: list[float]) -> list[tuple[float, float]]:
    edges = [scale.x_min, *boundaries, scale.x_max]
    return list(zip(edges, edges[1:]))


def _chunk_majors(
    scale: ScaleSpec, policy: TickPolicy, lo: float, hi: float, eps: float
) -> tuple[tuple[int, int] | None, list[float]]:
    """Finest ladder step whose interior multiples keep label distance."""
    exp = math.floor(math.log10(hi - lo)) + 1
    step: tuple[int, int] | None = (1, exp)
    best: tuple[tuple[int, int], list[float]] | None = None
    for _ in range(_MAX_STEP_DESCENT):
        mantissa, e = step
        vals = _multiples_in(lo, hi, step, eps)
        if vals:
            if _labels_fit(scale, policy, vals):
                best = (step, vals)
            else:
                break
        step = {1: (5, e - 1), 5: (2, e), 2: (1, e)}[mantissa]
    if best is None:
        return None, []
    return best


def _labels_fit(scale: ScaleSpec, policy: TickPolicy, values: list[float]) -> bool:
    positions = [scale.position(v) for v in values]
    for (va, pa), (vb, pb) in zip(zip(values, positions), zip(values[1:], positions[1:])):
        if abs(pb - pa) < _label_gap_required(policy, va, vb):
            return False
    return True


def _label_gap_required(policy: TickPolicy, va: float | None, vb: float | None) -> float:
    return max(
        policy.min_label_gap_mm,
        0.5 * (_est_label_width(policy, va) + _est_label_width(policy, vb)),
    )


def _est_label_width(policy: TickPolicy, value: float | None) -> float:
    text = "inf" if value is None else f"{value:g}"
    return 0.6 * policy.label_font_mm * len(text)


def _subdivide(
    scale: ScaleSpec,
    policy: TickPolicy,
    lo: float,
    hi: float,
    parent: tuple[int, int] | None,
    depth: int,
    eps: float,
    marks: list[_Mark],
) -> None:
    if depth > policy.max_levels - 1:
        return
    step = _next_nested(parent) if parent else _coarsest_with_interior(lo, hi, eps)
    if step is None:
        return
    vals: list[float] = []
    for _ in range(_MAX_STEP_DESCENT):
        vals = _multiples_in(lo, hi, step, eps)
        if vals:
            break
        step = _next_nested(step)
    if not vals:
        return
    # A level is admitted in a segment only when every gap it creates
    # stays above the minimum; otherwise the whole segment stays coarse.
    pts = [lo, *vals, hi]
    positions = [scale.position(p) for p in pts]
    gaps = [abs(b - a) for a, b in zip(positions, positions[1:])]
    if min(gaps) < policy.min_gap_mm:
        return
    level = min(depth, 2)
    for v in vals:
        marks.append(_Mark(v, scale.position(v), level, _PRI_MAJOR - depth, False))
    for a, b in zip(pts, pts[1:]):
        _subdivide(scale, policy, a, b, step, depth + 1, eps, marks)


def _dedupe(marks: list[_Mark], eps_value: float, eps_pos: float) -> list[_Mark]:
    marks.sort(key=lambda m: (m.pos, -m.priority))
    out: list[_Mark] = []
    for m in marks:
        if out:
            prev = out[-1]
            same_value = (
                m.value is not None
                and prev.value is not None
                and abs(m.value - prev.value) <= eps_value
            )
            if same_value or abs(m.pos - prev.pos) <= eps_pos:
                continue  # keep the earlier (higher priority) mark
        out.append(m)
    return out


def _min_gap_sweep(marks: list[_Mark], min_gap: float) -> list[_Mark]:
    """Drop lower-priority marks until no pair sits closer than min_gap."""
    kept: list[_Mark] = []
    for m in marks:
        survives = True
        while kept and m.pos - kept[-1].pos < min_gap:
            if kept[-1].priority >= m.priority:
                survives = False
                break
            kept.pop()
        if survives:
            kept.append(m)
    return kept


def _demote_label_collisions(marks: list[_Mark], policy: TickPolicy) -> None:
    """Level-0 marks always carry labels, so colliding labels demote the
    weaker mark to level 1 instead of printing overlapping text."""
    kept: list[_Mark] = []
    for m in marks:
        if not m.labeled:
            continue
        while kept:
            prev = kept[-1]
            if m.pos - prev.pos >= _label_gap_required(policy, prev.value, m.value):
                break
            if prev.priority < m.priority:
                prev.labeled = False
                prev.level = max(prev.level, 1)
                kept.pop()
            else:
                m.labeled = False
                m.level = max(m.level, 1)
                break
        if m.labeled:
            kept.append(m)


def _with_infinity_mark(marks: list[_Mark], policy: TickPolicy) -> list[_Mark]:
    """Reciprocal scales with a zero origin offset start at x = infinity."""
    inf_mark = _Mark(None, 0.0, 0, _PRI_BOUNDARY, True)
    if marks and marks[0].pos < policy.min_gap_mm:
        return marks
    first_labeled = next((m for m in marks if m.labeled), None)
    if first_labeled and first_labeled.pos < _label_gap_required(policy, None, first_labeled.value):
        inf_mark.labeled = False
        inf_mark.level = 1
    return [inf_mark, *marks]


def _assign_level1_labels(marks: list[_Mark], policy: TickPolicy) -> None:
    """Greedy fill: label medium ticks wherever label gaps allow.

    Demoted anchors (decade marks, majors) get first claim so a freed
    slot goes back to the structurally important value.
    """
    fixed = [m.pos for m in marks if m.labeled]
    candidates = sorted(
        (m for m in marks if not m.labeled and m.level == 1),
        key=lambda m: (-m.priority, m.pos),
    )
    for m in candidates:
        prev_label = max((p for p in fixed if p < m.pos), default=None)
        next_label = min((p for p in fixed if p > m.pos), default=None)
        req = _label_gap_required(policy, m.value, m.value)
        if prev_label is not None and m.pos - prev_label < req:
            continue
        if next_label is not None and next_label - m.pos < req:
            continue
        m.labeled = True
        fixed.append(m.pos)
        fixed.sort()


def _finalize(marks: list[_Mark]) -> list[Tick]:
    ticks: list[Tick] = []
    for i, m in enumerate(marks):
        label = None
        if m.labeled:
            if m.value is None:
                label = "∞"
            else:
                prev_v = marks[i - 1].value if i > 0 else None
                next_v = marks[i + 1].value if i + 1 < len(marks) else None
                label = _label_text(m.value, prev_v, next_v)
        ticks.append(Tick(value=m.value, pos_mm=m.pos, level=m.level, label=label))
    return ticks


def _label_text(value: float, prev_v: float | None, next_v: float | None) -> str:
    """Fewest digits that still distinguish the value from its neighbours."""
    gap = math.inf
    for nb in (prev_v, next_v):
        if nb is not None:
            gap = min(gap, abs(value - nb))
    budget = 0.25 * gap if math.isfinite(gap) else 0.0
    for digits in range(0, 13):
        rounded = round(value, digits)
        if abs(value - rounded) <= budget:
            text = f"{rounded:.{digits}f}"
            if "." in text:
                text = text.rstrip("0").rstrip(".")
            return text
    return f"{value:.12g}"
