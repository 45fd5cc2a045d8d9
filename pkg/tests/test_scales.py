from __future__ import annotations

import math
import random

import pytest

from sliderule import (
    EquidistantFunction,
    HorizonFunction,
    LogFunction,
    PowerFunction,
    RangeError,
    ScaleSpec,
    zoom_related,
)

L = 250.0


def test_reciprocal_figure_distances(reciprocal_unit_scale):
    # with an effective unit of 1, the marks sit at 1/x units
    s = reciprocal_unit_scale
    assert s.position(10.0) == pytest.approx(0.1, rel=1e-12)
    assert s.position(5.0) == pytest.approx(0.2, rel=1e-12)
    assert s.position(2.0) == pytest.approx(0.5, rel=1e-12)
    assert s.position(0.6) == pytest.approx(1.0 / 0.6, rel=1e-12)


def test_quadratic_far_end(quad_scale):
    assert quad_scale.unit == pytest.approx(0.025, rel=1e-15)
    assert quad_scale.position(100.0) == pytest.approx(250.0, rel=1e-12)


def test_origin_value_sits_at_zero():
    c = ScaleSpec.from_range("C", LogFunction(10.0), L, 1.0, 10.0)
    assert c.position(1.0) == 0.0


def test_position_rejects_out_of_range(quad_scale):
    with pytest.raises(RangeError):
        quad_scale.position(100.5)
    with pytest.raises(RangeError):
        quad_scale.position(-1.0)


def test_value_at_inverts_reciprocal(reciprocal_unit_scale):
    assert reciprocal_unit_scale.value_at(0.5) == pytest.approx(2.0, rel=1e-12)


def test_value_at_zero_gives_origin_value():
    c = ScaleSpec.from_range("C", LogFunction(10.0), L, 1.0, 10.0)
    assert c.value_at(0.0) == pytest.approx(1.0, rel=1e-12)
    # a reciprocal origin reads infinity, flagged downstream
    r = ScaleSpec.from_range("R", PowerFunction(-1.0), L, 1.0, 100.0)
    assert r.value_at(0.0) == math.inf


def test_value_at_rejects_off_rule(quad_scale):
    with pytest.raises(RangeError):
        quad_scale.value_at(-1.0)
    with pytest.raises(RangeError):
        quad_scale.value_at(251.0)


def _registry_like_scales():
    return [
        ScaleSpec.from_range("C", LogFunction(10.0), L, 1.0, 10.0),
        ScaleSpec.from_range("B", LogFunction(10.0), L, 1.0, 100.0, zoom=0.5),
        ScaleSpec.from_range("Q", PowerFunction(2.0), L, 0.0, 100.0),
        ScaleSpec.from_range("R", PowerFunction(-1.0), L, 1.0, 100.0),
        ScaleSpec.from_range("L", EquidistantFunction(), L, 0.0, 1.0),
        ScaleSpec.from_range("G", HorizonFunction(6371.0), L, 0.0, 0.1),
    ]


def test_round_trip_property():
    rng = random.Random(2024)
    for scale in _registry_like_scales():
        for _ in range(1000):
            x = rng.uniform(scale.x_min, scale.x_max)
            back = scale.value_at(scale.position(x))
            assert back == pytest.approx(x, rel=1e-9, abs=1e-12), scale.name


def test_placement_stays_on_rule():
    rng = random.Random(7)
    for scale in _registry_like_scales():
        tol = 1e-9 * scale.length_mm
        for _ in range(500):
            x = rng.uniform(scale.x_min, scale.x_max)
            pos = scale.position(x)
            assert -tol <= pos <= scale.length_mm + tol


def test_monotone_placement():
    rng = random.Random(11)
    for scale in _registry_like_scales():
        xs = sorted(rng.uniform(scale.x_min, scale.x_max) for _ in range(100))
        positions = [scale.position(x) for x in xs]
        deltas = [b - a for a, b in zip(positions, positions[1:])]
        if scale.function.increasing:
            assert all(d > 0 for d in deltas), scale.name
        else:
            # display order reverses on a decreasing function
            assert all(d < 0 for d in deltas), scale.name


def test_zoom_scales_positions_linearly():
    rng = random.Random(3)
    base = ScaleSpec("C", LogFunction(10.0), L, unit=L, x_min=1.0, x_max=10.0)
    for k in (0.5, 2.0, 1.0 / 3.0):
        zoomed = ScaleSpec("Cz", LogFunction(10.0), L * k, unit=L, x_min=1.0, x_max=10.0, zoom=k)
        for _ in range(200):
            x = rng.uniform(1.0, 10.0)
            assert zoomed.position(x) == pytest.approx(k * base.position(x), rel=1e-12)


def test_zoom_related_pairs():
    c = ScaleSpec.from_range("C", LogFunction(10.0), L, 1.0, 10.0)
    b = ScaleSpec.from_range("B", LogFunction(10.0), L, 1.0, 100.0, zoom=0.5)
    k = ScaleSpec.from_range("K", LogFunction(10.0), L, 1.0, 1000.0, zoom=1.0 / 3.0)
    assert zoom_related(c, b) == pytest.approx(0.5, rel=1e-12)
    assert zoom_related(c, k) == pytest.approx(1.0 / 3.0, rel=1e-12)
    assert zoom_related(c, c) == 1.0
    q = ScaleSpec.from_range("Q", PowerFunction(2.0), L, 0.0, 100.0)
    assert zoom_related(c, q) is None


def test_squares_and_cubes_companions():
    c = ScaleSpec.from_range("C", LogFunction(10.0), L, 1.0, 10.0)
    b = ScaleSpec.from_range("B", LogFunction(10.0), L, 1.0, 100.0, zoom=0.5)
    k = ScaleSpec.from_range("K", LogFunction(10.0), L, 1.0, 1000.0, zoom=1.0 / 3.0)
    rng = random.Random(13)
    for _ in range(500):
        x = rng.uniform(1.0, 10.0)
        assert abs(b.position(x * x) - c.position(x)) <= 1e-9 * L
        assert abs(k.position(x**3) - c.position(x)) <= 1e-9 * L


def test_horizon_scale_additivity():
    g = HorizonFunction(6371.0)
    scale = ScaleSpec.from_range("G4", g, L, 0.0, 0.1)
    h, t = 0.02, 0.05
    assert g.sight_distance(h, t) == scale.function.value(h) + scale.function.value(t)


def test_near_and_far_range_ends():
    c = ScaleSpec.from_range("C", LogFunction(10.0), L, 1.0, 10.0)
    assert (c.near_value, c.far_value) == (1.0, 10.0)
    r = ScaleSpec.from_range("R", PowerFunction(-1.0), L, 1.0, 100.0)
    assert (r.near_value, r.far_value) == (100.0, 1.0)
    assert r.position(r.far_value) == pytest.approx(L, rel=1e-12)


def test_geometry_consistency_enforced():
    with pytest.raises(ValueError, match="inconsistent"):
        ScaleSpec("C", LogFunction(10.0), L, unit=100.0, x_min=1.0, x_max=10.0)


def test_from_unit_derives_far_end():
    q = ScaleSpec.from_unit("Q", PowerFunction(2.0), L, unit=0.025, x_near=0.0)
    assert q.x_max == pytest.approx(100.0, rel=1e-12)
    # decreasing scale: the near (origin side) end is x_max, the derived
    # far end is the value whose mark lands at L
    r = ScaleSpec.from_unit("R", PowerFunction(-1.0), L, unit=L, x_near=100.0)
    assert r.x_min == pytest.approx(1.0, rel=1e-12)
    assert r.x_max == 100.0
    assert r.position(r.x_min) == pytest.approx(L, rel=1e-12)


def test_validation_errors():
    with pytest.raises(ValueError, match="x_min"):
        ScaleSpec.from_range("C", LogFunction(10.0), L, 10.0, 1.0)
    with pytest.raises(ValueError, match="orientation"):
        ScaleSpec.from_range("C", LogFunction(10.0), L, 1.0, 10.0, orientation="up")
    with pytest.raises(ValueError):
        ScaleSpec.from_range("C", LogFunction(10.0), -5.0, 1.0, 10.0)


def test_json_round_trip():
    scales = _registry_like_scales()
    for scale in scales:
        again = ScaleSpec.from_json(scale.to_json())
        assert again == scale


def test_json_unit_only_with_natural_origin():
    spec = {"name": "Q", "kind": "power", "params": {"alpha": 2}, "length_mm": L, "unit": 0.025}
    scale = ScaleSpec.from_json(spec)
    assert scale.x_min == 0.0
    assert scale.x_max == pytest.approx(100.0, rel=1e-12)


def test_json_requires_geometry_pin():
    with pytest.raises(ValueError, match="x_min and x_max"):
        ScaleSpec.from_json({"name": "Q", "kind": "power", "params": {"alpha": 2}, "length_mm": L})
    with pytest.raises(ValueError, match="natural origin"):
        ScaleSpec.from_json(
            {"name": "LL", "kind": "loglog", "params": {"base": 10}, "length_mm": L, "unit": 10.0}
        )


def test_json_inconsistent_over_determined():
    spec = {
        "name": "Q", "kind": "power", "params": {"alpha": 2},
        "length_mm": L, "unit": 0.05, "x_min": 0.0, "x_max": 100.0,
    }
    with pytest.raises(ValueError, match="inconsistent"):
        ScaleSpec.from_json(spec)


def test_log_range_below_one_keeps_positions_positive():
    # ranges crossing the natural zero shift the origin so nothing goes negative
    c = ScaleSpec.from_range("C", LogFunction(10.0), L, 0.5, 10.0)
    assert c.position(0.5) == pytest.approx(0.0, abs=1e-9)
    assert c.position(10.0) == pytest.approx(L, rel=1e-12)
