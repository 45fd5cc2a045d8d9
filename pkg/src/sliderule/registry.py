"""Registry of traditional and new scale families.

Letters follow slide rule convention: C/D are the base logarithmic
scales, B and K their half and third zoomed companions, L the plain
ruler, LL3 the double-log scale.  Q (quadratic), R (reciprocal) and the
G family (horizon distance) are the newer additions; G3 and G6 are
equidistant companions that read the horizon length for a height set on
G1 or G4.  Ranges are conventional defaults, not constants: callers may
build any of these functions with their own ranges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .functions import (
    EARTH_RADIUS_KM,
    ENV_EARTH_RADIUS_KM,
    EquidistantFunction,
    HorizonFunction,
    LogFunction,
    LogLogFunction,
    PowerFunction,
    ScaleFunction,
    default_earth_radius_km,
)
from .scales import ScaleSpec

EARTH_RADIUS_MI = 3959.0

KM_PER_MI = 1.609344
FT_PER_MI = 5280.0
M_PER_KM = 1000.0

__all__ = [
    "EARTH_RADIUS_KM",
    "EARTH_RADIUS_MI",
    "ENV_EARTH_RADIUS_KM",
    "FT_PER_MI",
    "KM_PER_MI",
    "M_PER_KM",
    "RegistryEntry",
    "build_registry",
    "default_registry",
]


@dataclass(frozen=True)
class RegistryEntry:
    """One named scale family with its conventional default range."""

    name: str
    function: ScaleFunction
    x_min: float
    x_max: float
    zoom: float = 1.0
    units_label: str = ""
    description: str = ""

    def build(self, length_mm: float) -> ScaleSpec:
        return ScaleSpec.from_range(
            self.name, self.function, length_mm,
            self.x_min, self.x_max, self.zoom, self.units_label,
        )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "kind": self.function.kind,
            "params": self.function.params(),
            "zoom": self.zoom,
            "x_min": self.x_min,
            "x_max": self.x_max,
            "units_label": self.units_label,
            "description": self.description,
        }


def build_registry(earth_radius_km: float = EARTH_RADIUS_KM) -> dict[str, RegistryEntry]:
    """All builtin scales, keyed by letter, in stable display order."""
    log10 = LogFunction(base=10.0)
    radius_m = earth_radius_km * M_PER_KM
    radius_ft = earth_radius_km / KM_PER_MI * FT_PER_MI
    horizon_m = HorizonFunction(radius=radius_m)
    horizon_ft = HorizonFunction(radius=radius_ft)
    # Companion ranges so the same hairline reads height on G1/G4 and
    # horizon length on G3/G6.
    g1_top_ft = 330.0
    g4_top_m = 100.0
    g3_top_mi = horizon_ft.value(g1_top_ft) / FT_PER_MI
    g6_top_km = horizon_m.value(g4_top_m) / M_PER_KM

    entries = [
        RegistryEntry("C", log10, 1.0, 10.0, description="base scale, f(x) = log x (slide)"),
        RegistryEntry("D", log10, 1.0, 10.0, description="base scale, f(x) = log x (body)"),
        RegistryEntry("B", log10, 1.0, 100.0, zoom=0.5,
                      description="squares companion, f(x) = log(x)/2; reads x^2 against C"),
        RegistryEntry("K", log10, 1.0, 1000.0, zoom=1.0 / 3.0,
                      description="cubes companion, f(x) = log(x)/3; reads x^3 against C"),
        RegistryEntry("L", EquidistantFunction(), 0.0, 1.0,
                      description="equidistant mantissa scale, f(x) = x; reads log x against C"),
        RegistryEntry("LL3", LogLogFunction(base=math.e), math.e, math.e**10,
                      description="double-log scale, f(x) = ln ln x; reads e^x against C"),
        RegistryEntry("Q1", PowerFunction(alpha=2.0), 0.0, 7.0,
                      description="quadratic scale for small numbers, f(x) = x^2"),
        RegistryEntry("Q2", PowerFunction(alpha=2.0), 0.0, 50.0,
                      description="quadratic scale for large numbers, f(x) = x^2"),
        RegistryEntry("R1", PowerFunction(alpha=-1.0), 1.0, 100.0,
                      description="reciprocal scale, f(x) = 1/x; origin mark reads infinity"),
        RegistryEntry("R2", PowerFunction(alpha=-1.0), 0.7746, 77.46,
                      description="reciprocal scale shifted by an awkward ratio "
                                  "(about 10*sqrt(60)/100) so it does not duplicate R1"),
        RegistryEntry("G1", horizon_ft, 0.0, g1_top_ft, units_label="ft",
                      description="horizon distance vs height (feet, mast heights)"),
        RegistryEntry("G2", horizon_ft, 0.0, 100.0 * g1_top_ft, units_label="ft",
                      description="horizon distance vs height (feet, flight altitudes)"),
        RegistryEntry("G3", EquidistantFunction(), 0.0, g3_top_mi, units_label="mi",
                      description="equidistant companion to G1: horizon length in miles"),
        RegistryEntry("G4", horizon_m, 0.0, g4_top_m, units_label="m",
                      description="horizon distance vs height (meters, mast heights)"),
        RegistryEntry("G5", horizon_m, 0.0, 100.0 * g4_top_m, units_label="m",
                      description="horizon distance vs height (meters, flight altitudes)"),
        RegistryEntry("G6", EquidistantFunction(), 0.0, g6_top_km, units_label="km",
                      description="equidistant companion to G4: horizon length in km"),
    ]
    return {entry.name: entry for entry in entries}


def default_registry() -> dict[str, RegistryEntry]:
    """Builtin registry honoring the SLIDERULE_R_KM Earth radius override."""
    return build_registry(earth_radius_km=default_earth_radius_km())
