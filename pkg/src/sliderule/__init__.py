"""Scale construction engine for slide-rule style analog instruments."""

from .analysis import (
    AccuracyParams,
    AccuracyReport,
    AlignmentReport,
    CoincidencePair,
    TriangleReport,
    aligned_value,
    alignment,
    check_accuracy,
    coincidence_from_C,
    coincidence_from_R,
    required_unit,
    resolvable_bound,
    triangle_range,
)
from .errors import DomainError, IncompatibleScalesError, RangeError, SlideRuleError
from .functions import (
    EquidistantFunction,
    HorizonFunction,
    LogFunction,
    LogLogFunction,
    PowerFunction,
    ScaleFunction,
    invert_monotone,
)
from .registry import RegistryEntry, build_registry, default_registry
from .render import PX_PER_MM, ReadOut, RuleLayout, SlideState, read_hairline, render_svg
from .scales import ScaleSpec, zoom_related
from .tickgen import Tick, TickPolicy, TickSet, densest_gap, generate_ticks

__version__ = "0.1.0"

__all__ = [
    "AccuracyParams",
    "AccuracyReport",
    "AlignmentReport",
    "CoincidencePair",
    "TriangleReport",
    "aligned_value",
    "alignment",
    "check_accuracy",
    "coincidence_from_C",
    "coincidence_from_R",
    "required_unit",
    "resolvable_bound",
    "triangle_range",
    "DomainError",
    "IncompatibleScalesError",
    "RangeError",
    "SlideRuleError",
    "EquidistantFunction",
    "HorizonFunction",
    "LogFunction",
    "LogLogFunction",
    "PowerFunction",
    "ScaleFunction",
    "invert_monotone",
    "RegistryEntry",
    "build_registry",
    "default_registry",
    "PX_PER_MM",
    "ReadOut",
    "RuleLayout",
    "SlideState",
    "read_hairline",
    "render_svg",
    "ScaleSpec",
    "zoom_related",
    "Tick",
    "TickPolicy",
    "TickSet",
    "densest_gap",
    "generate_ticks",
]
