"""Distance functions: the strictly monotone f behind every scale.

A value x is drawn on a scale at distance u * c * f(x) from the origin
mark.  This module defines the supported function kinds (logarithmic,
power, horizon, log-log, equidistant), their domains, closed-form
inverses, and a bisection fallback for inverting any monotone function.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import ClassVar

from .errors import DomainError

_INF = math.inf

EARTH_RADIUS_KM = 6371.0
ENV_EARTH_RADIUS_KM = "SLIDERULE_R_KM"


def default_earth_radius_km() -> float:
    """Mean Earth radius in km, overridable via SLIDERULE_R_KM."""
    raw = os.environ.get(ENV_EARTH_RADIUS_KM)
    if not raw:
        return EARTH_RADIUS_KM
    try:
        radius = float(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_EARTH_RADIUS_KM}={raw!r} is not a number") from exc
    if radius <= 0:
        raise ValueError(f"{ENV_EARTH_RADIUS_KM} must be positive, got {radius}")
    return radius


@dataclass(frozen=True)
class ScaleFunction:
    """Base class for the distance function of a scale.

    Subclasses implement a strictly monotone ``_value`` on their domain
    plus a closed-form ``inverse``.  ``has_natural_zero`` is True when
    f attains (or approaches) zero inside the closure of its domain, in
    which case position zero corresponds to that point rather than to
    the low end of the displayed range.
    """

    kind: ClassVar[str] = "abstract"
    has_natural_zero: ClassVar[bool] = True

    # (lo, hi), with lo_open marking whether the lower bound is excluded.
    @property
    def domain(self) -> tuple[float, float]:
        raise NotImplementedError

    @property
    def domain_lo_open(self) -> bool:
        return False

    @property
    def increasing(self) -> bool:
        return True

    @property
    def origin_value(self) -> float | None:
        """The x with f(x) = 0, or None when no finite such x exists."""
        return None

    def params(self) -> dict:
        return {}

    def _value(self, x: float) -> float:
        raise NotImplementedError

    def inverse(self, d: float) -> float:
        raise NotImplementedError

    def check_domain(self, x: float) -> None:
        lo, hi = self.domain
        if x < lo or (self.domain_lo_open and x <= lo):
            bound = f"> {lo}" if self.domain_lo_open else f">= {lo}"
            raise DomainError(f"x={x} outside {self.describe()} domain (requires x {bound})")
        if x > hi:
            raise DomainError(f"x={x} outside {self.describe()} domain (requires x <= {hi})")

    def value(self, x: float) -> float:
        self.check_domain(x)
        return self._value(x)

    def describe(self) -> str:
        return self.kind


@dataclass(frozen=True)
class LogFunction(ScaleFunction):
    """f(x) = log_base(x).  The traditional C and D scales use base 10."""

    base: float = 10.0
    kind: ClassVar[str] = "log"

    def __post_init__(self) -> None:
        if self.base <= 0 or self.base == 1.0:
            raise ValueError(f"log base must be positive and != 1, got {self.base}")

    @property
    def domain(self) -> tuple[float, float]:
        return (0.0, _INF)

    @property
    def domain_lo_open(self) -> bool:
        return True

    @property
    def increasing(self) -> bool:
        return self.base > 1.0

    @property
    def origin_value(self) -> float | None:
        return 1.0

    def params(self) -> dict:
        return {"base": self.base}

    def _value(self, x: float) -> float:
        return math.log(x) / math.log(self.base)

    def inverse(self, d: float) -> float:
        return self.base**d

    def describe(self) -> str:
        return f"log(base={self.base:g})"


@dataclass(frozen=True)
class PowerFunction(ScaleFunction):
    """f(x) = x**alpha.  alpha=2 is the quadratic scale, alpha=-1 the
    reciprocal, alpha=1 a plain ruler."""

    alpha: float
    kind: ClassVar[str] = "power"

    def __post_init__(self) -> None:
        if self.alpha == 0:
            raise ValueError("power exponent alpha must be nonzero")

    @property
    def domain(self) -> tuple[float, float]:
        return (0.0, _INF)

    @property
    def domain_lo_open(self) -> bool:
        # x = 0 is a pole for negative exponents.
        return self.alpha < 0

    @property
    def increasing(self) -> bool:
        return self.alpha > 0

    @property
    def origin_value(self) -> float | None:
        return 0.0 if self.alpha > 0 else None

    def params(self) -> dict:
        return {"alpha": self.alpha}

    def _value(self, x: float) -> float:
        return x**self.alpha

    def inverse(self, d: float) -> float:
        if d == 0.0:
            return 0.0 if self.alpha > 0 else _INF
        if d < 0:
            raise DomainError(f"distance value {d} not reachable by {self.describe()}")
        return d ** (1.0 / self.alpha)

    def describe(self) -> str:
        return f"power(alpha={self.alpha:g})"


@dataclass(frozen=True)
class EquidistantFunction(ScaleFunction):
    """f(x) = x, an ordinary ruler (the L scale and its relatives)."""

    kind: ClassVar[str] = "equidistant"

    @property
    def domain(self) -> tuple[float, float]:
        return (-_INF, _INF)

    @property
    def origin_value(self) -> float | None:
        return 0.0

    def _value(self, x: float) -> float:
        return x

    def inverse(self, d: float) -> float:
        return d


@dataclass(frozen=True)
class HorizonFunction(ScaleFunction):
    """Along-surface distance to the horizon seen from height x above a
    sphere of radius R: f(x) = R * arccos(R / (R + x)).

    Evaluated as R * atan2(sqrt(x * (2R + x)), R), which is identical
    algebraically but keeps full precision for x much smaller than R,
    where the arccos form loses about half the significant digits.
    Increasing, bounded above by R * pi / 2.
    """

    radius: float
    kind: ClassVar[str] = "horizon"

    def __post_init__(self) -> None:
        if self.radius <= 0:
            raise ValueError(f"horizon radius must be positive, got {self.radius}")

    @property
    def domain(self) -> tuple[float, float]:
        return (0.0, _INF)

    @property
    def origin_value(self) -> float | None:
        return 0.0

    def params(self) -> dict:
        return {"R": self.radius}

    def _value(self, x: float) -> float:
        r = self.radius
        return r * math.atan2(math.sqrt(x * (2.0 * r + x)), r)

    def inverse(self, d: float) -> float:
        r = self.radius
        theta = d / r
        if theta < 0:
            raise DomainError(f"distance value {d} not reachable by {self.describe()}")
        if theta >= math.pi / 2.0:
            return _INF
        # 1/cos(t) - 1 == 2 sin^2(t/2) / cos(t), stable near t = 0
        s = math.sin(theta / 2.0)
        return r * 2.0 * s * s / math.cos(theta)

    def sight_distance(self, observer_height: float, target_height: float) -> float:
        """Surface distance at which an observer at one height first sees
        an object of the other height over the horizon."""
        return self.value(observer_height) + self.value(target_height)

    def describe(self) -> str:
        return f"horizon(R={self.radius:g})"


@dataclass(frozen=True)
class LogLogFunction(ScaleFunction):
    """f(x) = log_base(log_base(x)), defined where log_base(x) > 0.

    With base e this is the traditional LL3 geometry: a hairline at x on
    a C scale of equal length reads e**x here.
    """

    base: float = 10.0
    kind: ClassVar[str] = "loglog"
    has_natural_zero: ClassVar[bool] = False

    def __post_init__(self) -> None:
        if self.base <= 1.0:
            raise ValueError(f"loglog base must be > 1, got {self.base}")

    @property
    def domain(self) -> tuple[float, float]:
        return (1.0, _INF)

    @property
    def domain_lo_open(self) -> bool:
        return True

    def params(self) -> dict:
        return {"base": self.base}

    def _value(self, x: float) -> float:
        lb = math.log(self.base)
        return math.log(math.log(x) / lb) / lb

    def inverse(self, d: float) -> float:
        return self.base ** (self.base**d)

    def describe(self) -> str:
        return f"loglog(base={self.base:g})"


FUNCTION_KINDS = {
    "log": LogFunction,
    "power": PowerFunction,
    "equidistant": EquidistantFunction,
    "horizon": HorizonFunction,
    "loglog": LogLogFunction,
}


def function_from_json(data: dict) -> ScaleFunction:
    """Build a ScaleFunction from its JSON form: {kind, params:{...}}."""
    kind = data.get("kind")
    if kind not in FUNCTION_KINDS:
        known = ", ".join(sorted(FUNCTION_KINDS))
        raise ValueError(f"unknown scale function kind {kind!r} (expected one of: {known})")
    params = data.get("params") or {}
    if kind == "log":
        return LogFunction(base=float(params.get("base", 10.0)))
    if kind == "power":
        if "alpha" not in params:
            raise ValueError("power function requires params.alpha")
        return PowerFunction(alpha=float(params["alpha"]))
    if kind == "horizon":
        # R defaults to the Earth radius in km (env-overridable); heights
        # on such a scale are then in km too.
        radius = float(params["R"]) if "R" in params else default_earth_radius_km()
        return HorizonFunction(radius=radius)
    if kind == "loglog":
        return LogLogFunction(base=float(params.get("base", 10.0)))
    return EquidistantFunction()


def function_to_json(fn: ScaleFunction) -> dict:
    return {"kind": fn.kind, "params": fn.params()}


def invert_monotone(
    fn,
    target: float,
    lo: float,
    hi: float,
    rel_tol: float = 1e-12,
    max_iter: int = 200,
) -> float:
    """Invert a strictly monotone callable by bisection on [lo, hi].

    Fallback for function kinds without a closed-form inverse; the
    bracket must contain the preimage of ``target``.
    """
    f_lo = fn(lo)
    f_hi = fn(hi)
    increasing = f_hi > f_lo
    low, high = (f_lo, f_hi) if increasing else (f_hi, f_lo)
    if not low <= target <= high:
        raise ValueError(f"target {target} outside bracket [{low}, {high}]")
    a, b = lo, hi
    for _ in range(max_iter):
        mid = 0.5 * (a + b)
        if mid == a or mid == b:
            break
        f_mid = fn(mid)
        below = f_mid < target if increasing else f_mid > target
        if below:
            a = mid
        else:
            b = mid
        if abs(b - a) <= rel_tol * max(abs(a), abs(b), 1e-300):
            break
    return 0.5 * (a + b)
