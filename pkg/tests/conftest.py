from __future__ import annotations

import pytest

from sliderule import PowerFunction, ScaleSpec, default_registry

RULE_LENGTH = 250.0


@pytest.fixture(scope="session")
def registry():
    return default_registry()


@pytest.fixture()
def quad_scale() -> ScaleSpec:
    """The worked quadratic design study: L=250 mm, values up to 100."""
    return ScaleSpec.from_range("Q", PowerFunction(2.0), RULE_LENGTH, 0.0, 100.0)


@pytest.fixture()
def reciprocal_unit_scale() -> ScaleSpec:
    """Reciprocal scale with an effective unit of 1 length unit, so the
    figure distances 0.1, 0.2, 0.5, 1.67 read off directly."""
    return ScaleSpec.from_range("R", PowerFunction(-1.0), 1.0 / 0.6, 0.6, 10.0)
