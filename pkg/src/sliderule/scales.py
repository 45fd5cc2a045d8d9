"""Concrete scales: a distance function bound to physical geometry.

A ScaleSpec fixes the rule length L, the unit u (mm per f-unit), a zoom
factor c, and the displayed value range.  Values are placed at

    position(x) = u * c * (f(x) - f0)

measured in mm from the origin mark.  f0 is the origin offset: zero for
functions whose f naturally reaches zero (extended downward when the
range dips below that point, so positions never go negative), and the
low f-value of the range for functions without a natural zero.  The far
end of the range always lands at L, which pins u, c, L and the range to
each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import cached_property

from .errors import RangeError
from .functions import ScaleFunction, function_from_json, function_to_json

# Relative tolerance for "lands on the rule" style geometry checks.
GEOMETRY_RTOL = 1e-9


@dataclass(frozen=True)
class ScaleSpec:
    """One scale of a slide rule: function plus placement geometry."""

    name: str
    function: ScaleFunction
    length_mm: float
    unit: float
    x_min: float
    x_max: float
    zoom: float = 1.0
    units_label: str = ""
    orientation: str = "ltr"

    def __post_init__(self) -> None:
        if self.length_mm <= 0:
            raise ValueError(f"scale {self.name}: length_mm must be positive")
        if self.unit <= 0:
            raise ValueError(f"scale {self.name}: unit must be positive")
        if self.zoom <= 0:
            raise ValueError(f"scale {self.name}: zoom must be positive")
        if not self.x_min < self.x_max:
            raise ValueError(
                f"scale {self.name}: x_min must be < x_max (got {self.x_min}, {self.x_max})"
            )
        if self.orientation not in ("ltr", "rtl"):
            raise ValueError(f"scale {self.name}: orientation must be 'ltr' or 'rtl'")
        self.function.check_domain(self.x_min)
        self.function.check_domain(self.x_max)
        far = self.scale_factor * (self._f_far - self.origin_offset)
        if abs(far - self.length_mm) > GEOMETRY_RTOL * self.length_mm:
            raise ValueError(
                f"scale {self.name}: far end of range lands at {far:.6g} mm, "
                f"not at length {self.length_mm:.6g} mm "
                "(unit, zoom, length and range are inconsistent)"
            )

    @property
    def scale_factor(self) -> float:
        """Effective mm per f-unit: unit times zoom."""
        return self.unit * self.zoom

    @cached_property
    def _f_lo(self) -> float:
        return min(self.function.value(self.x_min), self.function.value(self.x_max))

    @cached_property
    def _f_far(self) -> float:
        return max(self.function.value(self.x_min), self.function.value(self.x_max))

    @cached_property
    def origin_offset(self) -> float:
        """f-value whose position is zero (f0 above)."""
        if self.function.has_natural_zero:
            return min(0.0, self._f_lo)
        return self._f_lo

    @property
    def near_value(self) -> float:
        """Range end closest to the origin mark."""
        return self.x_min if self.function.increasing else self.x_max

    @property
    def far_value(self) -> float:
        """Range end at distance L."""
        return self.x_max if self.function.increasing else self.x_min

    def position(self, x: float) -> float:
        """Distance in mm from the origin mark at which x is drawn."""
        tol = GEOMETRY_RTOL * (self.x_max - self.x_min)
        if x < self.x_min - tol or x > self.x_max + tol:
            raise RangeError(
                f"scale {self.name}: x={x:g} outside displayed range "
                f"[{self.x_min:g}, {self.x_max:g}]"
            )
        return self.scale_factor * (self.function.value(x) - self.origin_offset)

    def value_at(self, d: float) -> float:
        """Value whose mark sits at distance d (the hairline read-out).

        d must lie on the rule; the result may fall outside the displayed
        range (on a reciprocal scale the band next to the origin reads
        values beyond x_max, up to infinity at d = 0).
        """
        tol = GEOMETRY_RTOL * self.length_mm
        if d < -tol or d > self.length_mm + tol:
            raise RangeError(
                f"scale {self.name}: distance {d:g} mm outside rule [0, {self.length_mm:g}]"
            )
        return self.function.inverse(d / self.scale_factor + self.origin_offset)

    def separation(self, x: float, factor: float) -> float:
        """Physical distance in mm between the marks for x and factor*x.

        Evaluated through the function domain rather than the displayed
        range, so the neighbour of a range endpoint is still measurable.
        """
        return self.scale_factor * abs(self.function.value(factor * x) - self.function.value(x))

    def in_range(self, x: float) -> bool:
        tol = GEOMETRY_RTOL * (self.x_max - self.x_min)
        return self.x_min - tol <= x <= self.x_max + tol

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_range(
        cls,
        name: str,
        function: ScaleFunction,
        length_mm: float,
        x_min: float,
        x_max: float,
        zoom: float = 1.0,
        units_label: str = "",
        orientation: str = "ltr",
    ) -> "ScaleSpec":
        """Derive the unit so the far end of [x_min, x_max] lands at L."""
        f_vals = (function.value(x_min), function.value(x_max))
        f_lo, f_far = min(f_vals), max(f_vals)
        f0 = min(0.0, f_lo) if function.has_natural_zero else f_lo
        span = f_far - f0
        if span <= 0:
            raise ValueError(f"scale {name}: degenerate f-span for range [{x_min}, {x_max}]")
        unit = length_mm / (zoom * span)
        return cls(name, function, length_mm, unit, x_min, x_max, zoom, units_label, orientation)

    @classmethod
    def from_unit(
        cls,
        name: str,
        function: ScaleFunction,
        length_mm: float,
        unit: float,
        x_near: float,
        zoom: float = 1.0,
        units_label: str = "",
        orientation: str = "ltr",
    ) -> "ScaleSpec":
        """Derive the far range end from the unit: the value at distance L."""
        f_near = function.value(x_near)
        f0 = min(0.0, f_near) if function.has_natural_zero else f_near
        x_far = function.inverse(length_mm / (unit * zoom) + f0)
        if not math.isfinite(x_far):
            raise ValueError(f"scale {name}: unit {unit} puts the far end beyond the function domain")
        lo, hi = (x_near, x_far) if x_near < x_far else (x_far, x_near)
        return cls(name, function, length_mm, unit, lo, hi, zoom, units_label, orientation)

    # -- JSON -----------------------------------------------------------------

    def to_json(self) -> dict:
        data = function_to_json(self.function)
        return {
            "name": self.name,
            "kind": data["kind"],
            "params": data["params"],
            "length_mm": self.length_mm,
            "unit": self.unit,
            "zoom": self.zoom,
            "x_min": self.x_min,
            "x_max": self.x_max,
            "units_label": self.units_label,
            "orientation": self.orientation,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ScaleSpec":
        """Build a scale from its JSON form.

        Exactly one of ``unit`` or the full x-range pins the geometry:
        with no unit, both bounds are required and the unit is derived;
        with a unit, the missing bound (or the function's natural origin
        value) supplies the near end and the far end is derived.  If
        everything is given it must be self-consistent.
        """
        if not isinstance(data, dict):
            raise ValueError(f"scale spec must be a JSON object, got {type(data).__name__}")
        for key in ("name", "kind", "length_mm"):
            if key not in data:
                raise ValueError(f"scale spec missing required field {key!r}")
        function = function_from_json(data)
        name = str(data["name"])
        length_mm = float(data["length_mm"])
        zoom = float(data.get("zoom", 1.0))
        units_label = str(data.get("units_label", ""))
        orientation = str(data.get("orientation", "ltr"))
        has_min = data.get("x_min") is not None
        has_max = data.get("x_max") is not None
        if "unit" not in data or data["unit"] is None:
            if not (has_min and has_max):
                raise ValueError(f"scale {name}: without a unit both x_min and x_max are required")
            return cls.from_range(
                name, function, length_mm,
                float(data["x_min"]), float(data["x_max"]),
                zoom, units_label, orientation,
            )
        unit = float(data["unit"])
        if has_min and has_max:
            return cls(
                name, function, length_mm, unit,
                float(data["x_min"]), float(data["x_max"]),
                zoom, units_label, orientation,
            )
        if has_min or has_max:
            near = float(data["x_min"] if has_min else data["x_max"])
        elif function.origin_value is not None:
            near = function.origin_value
        else:
            raise ValueError(
                f"scale {name}: function kind {function.kind!r} has no natural origin value, "
                "give x_min or x_max alongside the unit"
            )
        return cls.from_unit(name, function, length_mm, unit, near, zoom, units_label, orientation)

    def renamed(self, name: str) -> "ScaleSpec":
        return replace(self, name=name)


def zoom_related(scale_a: ScaleSpec, scale_b: ScaleSpec) -> float | None:
    """Ratio k with position_b(x) = k * position_a(x) for all shared x.

    Two scales are zoomed images of each other exactly when they share
    the same distance function (kind and parameters) and origin offset;
    then k is the ratio of their effective scale factors.  Returns None
    when the scales are not proportional.
    """
    if scale_a.function != scale_b.function:
        return None
    f0_a, f0_b = scale_a.origin_offset, scale_b.origin_offset
    tol = 1e-12 * max(1.0, abs(f0_a), abs(f0_b))
    if abs(f0_a - f0_b) > tol:
        return None
    return scale_b.scale_factor / scale_a.scale_factor
