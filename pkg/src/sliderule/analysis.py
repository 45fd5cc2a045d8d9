"""Design mathematics for scales: legibility bounds, alignment of
same-exponent scales, right-triangle solvability ranges, and the C/R
coincidence map.

Legibility works from one criterion: the marks for x and factor*x
(factor 1.01 for two readable decimal digits) must sit at least h mm
apart.  For homogeneous power functions this inverts in closed form;
for other monotone functions a numeric search on the separation is
used.  Double-log scales are rejected here, only the raw per-point
check applies to them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, IncompatibleScalesError, RangeError
from .functions import EquidistantFunction, LogLogFunction, PowerFunction
from .scales import ScaleSpec

DEFAULT_SEPARATION_FACTOR = 1.01
DEFAULT_MAX_RATIONAL = 10
RATIONAL_RTOL = 1e-6

# Reference C-scale inputs for the coincidence table mode.
COINCIDENCE_TABLE_XC = (1.496, 4.000, 4.976, 10.000)

_GRID_POINTS = 512


@dataclass(frozen=True)
class AccuracyParams:
    """Legibility parameters: minimum mark separation h in mm and the
    neighbour factor that defines 'one more readable digit'."""

    h: float
    separation_factor: float = DEFAULT_SEPARATION_FACTOR

    def __post_init__(self) -> None:
        if self.h < 0:
            raise ValueError(f"h must be nonnegative, got {self.h}")
        if self.separation_factor <= 1.0:
            raise ValueError(f"separation factor must exceed 1, got {self.separation_factor}")


@dataclass(frozen=True)
class AccuracyReport:
    """Which end of a scale limits legibility and where the limit sits."""

    feasible: bool
    binding_end: str
    required_u: float
    resolvable_x_bound: float | None

    def to_json(self) -> dict:
        return {
            "feasible": self.feasible,
            "binding_end": self.binding_end,
            # no finite unit resolves a range that touches a zero-separation point
            "required_u": self.required_u if math.isfinite(self.required_u) else None,
            "resolvable_x_bound": self.resolvable_x_bound,
        }


@dataclass(frozen=True)
class AlignmentReport:
    """Relation between two power scales of equal length.

    Values x on the first scale and T*x on the second share a position.
    ``equivalent`` flags ratios close to an easy rational times a power
    of ten, where the second scale adds nothing new.
    """

    T: float
    aligned_pair_rule: str
    equivalent: bool
    rational_witness: tuple[int, int, int] | None
    scale1_name: str = ""
    scale2_name: str = ""
    x1_range: tuple[float, float] = (0.0, 0.0)
    x2_range: tuple[float, float] = (0.0, 0.0)

    def to_json(self) -> dict:
        witness = None
        if self.rational_witness is not None:
            p, q, exp10 = self.rational_witness
            witness = {"p": p, "q": q, "exp10": exp10}
        return {
            "T": self.T,
            "aligned_pair_rule": self.aligned_pair_rule,
            "equivalent": self.equivalent,
            "rational_witness": witness,
        }


@dataclass(frozen=True)
class TriangleReport:
    """Solvable right triangles with one leg fixed, on a single scale.

    With leg a given and every readable value confined to [x_lo, x_hi],
    the other leg b and the hypotenuse both stay readable exactly when
    b/a lies in [tau1, tau2]; the angle opposite b then lies between
    arctan(tau1) and arctan(tau2).
    """

    a: float
    tau1: float
    tau2: float
    angle_low: float
    angle_high: float
    b_interval: tuple[float, float] | None
    c_interval: tuple[float, float] | None
    feasible: bool

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "tau1": self.tau1,
            "tau2": self.tau2,
            "angle_low": self.angle_low,
            "angle_high": self.angle_high,
            "b_interval": list(self.b_interval) if self.b_interval else None,
            "c_interval": list(self.c_interval) if self.c_interval else None,
            "feasible": self.feasible,
        }


@dataclass(frozen=True)
class CoincidencePair:
    """Values visible at one hairline on a C scale over a unit-matched
    reciprocal scale whose 1 sits above C's 10."""

    x_c: float
    x_r: float

    def to_json(self) -> dict:
        return {"x_C": self.x_c, "x_R": self.x_r}


# -- accuracy ------------------------------------------------------------------


def required_unit(alpha: float, params: AccuracyParams, binding_x: float) -> float:
    """Minimal unit for which x and factor*x stay h apart at binding_x.

    binding_x is the smallest readable value for alpha > 0, the largest
    for alpha < 0 (separation shrinks toward that end).
    """
    if alpha == 0:
        raise DomainError("invalid exponent: alpha must be nonzero")
    if binding_x <= 0:
        raise DomainError(f"binding_x must be positive, got {binding_x}")
    if params.h == 0:
        return 0.0
    spread = abs(params.separation_factor**alpha - 1.0) * binding_x**alpha
    return params.h / spread


def check_accuracy(scale: ScaleSpec, params: AccuracyParams, x: float) -> bool:
    """Whether the marks for x and factor*x are at least h apart.

    Works for every scale kind; both points must lie in the function
    domain (they may leave the displayed range).
    """
    return scale.separation(x, params.separation_factor) >= params.h


def resolvable_bound(scale: ScaleSpec, params: AccuracyParams) -> AccuracyReport:
    """Smallest (growing separation) or largest (shrinking separation)
    value whose factor-neighbour stays h away on this scale.

    Power and equidistant scales invert the criterion in closed form via
    the function inverse; log and horizon scales fall back to a numeric
    search on the separation.  The reported bound is not clamped to the
    displayed range; feasible says whether any displayed value resolves.
    """
    fn = scale.function
    if isinstance(fn, LogLogFunction):
        raise DomainError(
            "resolvable bound is undefined for double-log scales; use check_accuracy per point"
        )
    factor = params.separation_factor
    if isinstance(fn, (PowerFunction, EquidistantFunction)):
        alpha = fn.alpha if isinstance(fn, PowerFunction) else 1.0
        binding_end = "x_min" if alpha > 0 else "x_max"
        binding_x = scale.x_min if alpha > 0 else scale.x_max
        req_u = _required_unit_at(scale, params, binding_x)
        if params.h == 0:
            return AccuracyReport(True, binding_end, 0.0, binding_x)
        spread = abs(factor**alpha - 1.0) * scale.scale_factor
        bound = fn.inverse(params.h / spread)
        if alpha > 0:
            feasible = bound <= scale.x_max * (1 + 1e-12)
        else:
            feasible = bound >= scale.x_min * (1 - 1e-12)
        return AccuracyReport(feasible, binding_end, req_u, bound)
    return _resolvable_bound_numeric(scale, params)


def _required_unit_at(scale: ScaleSpec, params: AccuracyParams, x: float) -> float:
    """Minimal unit (at this scale's zoom) resolving the point x."""
    if params.h == 0:
        return 0.0
    spread = abs(
        scale.function.value(params.separation_factor * x) - scale.function.value(x)
    )
    if spread == 0:
        return math.inf
    return params.h / (scale.zoom * spread)


def _resolvable_bound_numeric(scale: ScaleSpec, params: AccuracyParams) -> AccuracyReport:
    h = params.h
    factor = params.separation_factor
    sep_lo = scale.separation(scale.x_min, factor)
    sep_hi = scale.separation(scale.x_max, factor)
    # near-constant separation (log scales): treat as a tie, bind the low end
    if abs(sep_lo - sep_hi) <= 1e-9 * max(sep_lo, sep_hi):
        binding_end = "x_min"
    else:
        binding_end = "x_min" if sep_lo < sep_hi else "x_max"
    binding_x = scale.x_min if binding_end == "x_min" else scale.x_max
    req_u = _required_unit_at(scale, params, binding_x)
    if h == 0:
        return AccuracyReport(True, binding_end, 0.0, binding_x)
    xs = _grid(scale.x_min, scale.x_max)
    seps = [scale.separation(x, factor) for x in xs]
    if all(s >= h for s in seps):
        return AccuracyReport(True, binding_end, req_u, binding_x)
    if not any(s >= h for s in seps):
        return AccuracyReport(False, binding_end, req_u, None)
    # Crossing nearest the weaker end: scan from that end, bisect the bracket.
    order = range(len(xs)) if binding_end == "x_min" else range(len(xs) - 1, -1, -1)
    idx = next(i for i in order if seps[i] >= h)
    prev = idx - 1 if binding_end == "x_min" else idx + 1
    lo, hi = sorted((xs[idx], xs[prev]))
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        passes = scale.separation(mid, factor) >= h
        toward_min = binding_end == "x_min"
        if passes == toward_min:
            hi = mid
        else:
            lo = mid
        if hi - lo <= 1e-14 * max(abs(lo), abs(hi), 1e-300):
            break
    return AccuracyReport(True, binding_end, req_u, 0.5 * (lo + hi))


def _grid(lo: float, hi: float, n: int = _GRID_POINTS) -> list[float]:
    if lo > 0:
        ratio = hi / lo
        return [lo * ratio ** (i / (n - 1)) for i in range(n)]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


# -- alignment -----------------------------------------------------------------


def easy_rational(
    value: float,
    max_int: int = DEFAULT_MAX_RATIONAL,
    rtol: float = RATIONAL_RTOL,
) -> tuple[int, int, int] | None:
    """Detect value ~= 10**k * p/q with small integers p, q.

    The mantissa in [1, 10) is approximated by its best fraction with
    denominator at most max_int (continued-fraction best approximation);
    a witness (p, q, k) is returned when the numerator also stays within
    max_int and the match is within rtol relatively.
    """
    if value <= 0 or not math.isfinite(value):
        return None
    exp10 = math.floor(math.log10(value))
    mantissa = value / 10.0**exp10
    if mantissa < 1.0:  # log10 rounding at decade boundaries
        mantissa *= 10.0
        exp10 -= 1
    frac = Fraction(mantissa).limit_denominator(max_int)
    p, q = frac.numerator, frac.denominator
    if p < 1 or p > max_int:
        return None
    if abs(mantissa - p / q) > rtol * mantissa:
        return None
    return (p, q, exp10)


def alignment(
    scale1: ScaleSpec,
    scale2: ScaleSpec,
    max_rational: int = DEFAULT_MAX_RATIONAL,
    rtol: float = RATIONAL_RTOL,
) -> AlignmentReport:
    """Ratio T relating two power scales of equal length: values x1 and
    T*x1 share a position, with T the ratio of the range maxima."""
    fn1, fn2 = scale1.function, scale2.function
    if not isinstance(fn1, PowerFunction) or not isinstance(fn2, PowerFunction):
        raise IncompatibleScalesError(
            f"alignment requires power scales, got {fn1.kind} and {fn2.kind} "
            "(model an equidistant scale as power with alpha=1)"
        )
    if fn1.alpha != fn2.alpha:
        raise IncompatibleScalesError(
            f"alignment requires equal exponents, got alpha={fn1.alpha:g} and alpha={fn2.alpha:g}"
        )
    if abs(scale1.length_mm - scale2.length_mm) > 1e-9 * scale1.length_mm:
        raise IncompatibleScalesError(
            f"alignment requires equal lengths, got {scale1.length_mm:g} and {scale2.length_mm:g} mm"
        )
    alpha = fn1.alpha
    ratio = scale2.x_max / scale1.x_max
    # The unit relation u1 = u2 * T**alpha must hold, otherwise the two
    # ranges are not zoomed images of each other and no single T exists.
    sf1, sf2 = scale1.scale_factor, scale2.scale_factor
    if abs(sf1 - sf2 * ratio**alpha) > 1e-9 * sf1:
        raise IncompatibleScalesError(
            f"scales {scale1.name} and {scale2.name} are not proportional: "
            f"unit relation u1 = u2 * T**alpha fails for T = {ratio:g}"
        )
    witness = easy_rational(ratio, max_rational, rtol)
    return AlignmentReport(
        T=ratio,
        aligned_pair_rule=f"x2 = {ratio:.12g} * x1",
        equivalent=witness is not None,
        rational_witness=witness,
        scale1_name=scale1.name,
        scale2_name=scale2.name,
        x1_range=(scale1.x_min, scale1.x_max),
        x2_range=(scale2.x_min, scale2.x_max),
    )


def aligned_value(report: AlignmentReport, x1: float) -> float:
    """Value on the second scale directly above x1 on the first."""
    lo1, hi1 = report.x1_range
    if not lo1 <= x1 <= hi1:
        raise RangeError(f"x1={x1:g} outside {report.scale1_name} range [{lo1:g}, {hi1:g}]")
    x2 = report.T * x1
    lo2, hi2 = report.x2_range
    tol = 1e-9 * (hi2 - lo2)
    if not lo2 - tol <= x2 <= hi2 + tol:
        raise RangeError(
            f"aligned value {x2:g} outside {report.scale2_name} range [{lo2:g}, {hi2:g}]"
        )
    return x2


# -- triangles -----------------------------------------------------------------


def triangle_range(a: float, x_lo: float, x_hi: float, degrees: bool = True) -> TriangleReport:
    """Leg-ratio window for right triangles solvable on one quadratic
    scale whose readable values span [x_lo, x_hi].

    tau1 keeps the other leg readable (b >= x_lo), tau2 keeps the
    hypotenuse readable (sqrt(a^2 + b^2) <= x_hi).  When tau1 >= tau2 no
    triangle with this leg fits; that is reported, not raised.
    """
    if not x_lo < x_hi:
        raise ValueError(f"need x_lo < x_hi, got [{x_lo}, {x_hi}]")
    if x_lo <= 0:
        raise ValueError(f"triangle analysis needs positive values, got x_lo={x_lo}")
    if not x_lo <= a <= x_hi:
        raise RangeError(f"leg a={a:g} is not itself readable on [{x_lo:g}, {x_hi:g}]")
    tau1 = x_lo / a
    ratio_sq = (x_hi / a) ** 2 - 1.0
    tau2 = math.sqrt(ratio_sq) if ratio_sq > 0 else 0.0
    convert = math.degrees if degrees else (lambda r: r)
    angle_low = convert(math.atan(tau1))
    angle_high = convert(math.atan(tau2))
    feasible = tau1 < tau2
    b_interval = (a * tau1, a * tau2) if feasible else None
    c_interval = (
        (a * math.sqrt(1.0 + tau1**2), a * math.sqrt(1.0 + tau2**2)) if feasible else None
    )
    return TriangleReport(
        a=a,
        tau1=tau1,
        tau2=tau2,
        angle_low=angle_low,
        angle_high=angle_high,
        b_interval=b_interval,
        c_interval=c_interval,
        feasible=feasible,
    )


# -- C/R coincidence -----------------------------------------------------------


def coincidence_from_C(x_c: float) -> CoincidencePair:
    """Reciprocal-scale value under the hairline when the C scale reads
    x_c: x_R = 1 / log10(x_C), i.e. the base-x_C logarithm of 10."""
    if x_c <= 1.0:
        raise DomainError(f"x_C must exceed 1, got {x_c:g}")
    return CoincidencePair(x_c=x_c, x_r=1.0 / math.log10(x_c))


def coincidence_from_R(x_r: float) -> CoincidencePair:
    """C-scale value above a reciprocal-scale reading: x_C = 10**(1/x_R)."""
    if x_r <= 0.0:
        raise DomainError(f"x_R must be positive, got {x_r:g}")
    return CoincidencePair(x_c=10.0 ** (1.0 / x_r), x_r=x_r)
