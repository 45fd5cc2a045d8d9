from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient

from sliderule.service import create_app

QUAD_SPEC = {
    "name": "Q",
    "kind": "power",
    "params": {"alpha": 2},
    "length_mm": 250,
    "x_min": 31.54,
    "x_max": 100,
}

CR_LAYOUT = {
    "body_top": [
        {"name": "C", "kind": "log", "params": {"base": 10}, "length_mm": 250, "x_min": 1, "x_max": 10},
        {"name": "R", "kind": "power", "params": {"alpha": -1}, "length_mm": 250, "x_min": 1, "x_max": 100},
    ]
}


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_registry_contents(client):
    response = client.get("/registry")
    assert response.status_code == 200
    names = [entry["name"] for entry in response.json()]
    assert "C" in names
    assert "Q1" in names and "R1" in names
    assert {"G1", "G2", "G3", "G4", "G5", "G6"} <= set(names)


def test_registry_idempotent_and_ordered(client):
    first = client.get("/registry").content
    second = client.get("/registry").content
    assert first == second


def test_rule_smoke(client):
    response = client.post("/rule", json=CR_LAYOUT)
    assert response.status_code == 200
    body = response.json()
    assert body["svg"].startswith("<?xml")
    assert len(body["tick_sets"]) == 2
    assert body["px_per_mm"] == 4.0


def test_rule_malformed_body(client):
    response = client.post("/rule", content=b"{oops")
    assert response.status_code == 400
    assert response.json()["code"] == "bad_request"


def test_rule_reciprocal_ratio(client):
    layout = {
        "body_top": [
            {"name": "R", "kind": "power", "params": {"alpha": -1}, "length_mm": 250,
             "x_min": 0.6, "x_max": 10}
        ]
    }
    body = client.post("/rule", json=layout).json()
    ticks = {t["value"]: t["pos_mm"] for t in body["tick_sets"][0]["ticks"] if t["value"]}
    assert ticks[5.0] / ticks[10.0] == pytest.approx(2.0, rel=1e-9)
    assert ticks[2.0] / ticks[10.0] == pytest.approx(5.0, rel=1e-9)


def test_read_squares_stack(client):
    layout = {
        "body_top": [
            {"name": "C", "kind": "log", "params": {"base": 10}, "length_mm": 250, "x_min": 1, "x_max": 10},
            {"name": "B", "kind": "log", "params": {"base": 10}, "length_mm": 250,
             "x_min": 1, "x_max": 100, "zoom": 0.5},
        ]
    }
    hairline = 250.0 * 0.47712125471966244  # position of 3 on C
    response = client.post("/read", json={"layout": layout, "hairline_mm": hairline})
    values = {r["scale"]: r.get("value") for r in response.json()}
    assert values["C"] == pytest.approx(3.0, rel=1e-9)
    assert values["B"] == pytest.approx(9.0, rel=1e-9)


def test_read_at_zero_reads_origins(client):
    response = client.post("/read", json={"layout": CR_LAYOUT, "hairline_mm": 0.0})
    readouts = {r["scale"]: r for r in response.json()}
    assert readouts["C"]["value"] == pytest.approx(1.0)
    assert "value" not in readouts["R"]  # infinity at the origin mark
    assert readouts["R"]["in_range"] is False


def test_read_coincidence_at_ten(client):
    response = client.post("/read", json={"layout": CR_LAYOUT, "hairline_mm": 250.0})
    values = {r["scale"]: r.get("value") for r in response.json()}
    assert values["C"] == pytest.approx(10.0, rel=1e-9)
    assert values["R"] == pytest.approx(1.0, rel=1e-9)


def test_read_missing_fields(client):
    assert client.post("/read", json={"layout": CR_LAYOUT}).status_code == 400
    assert client.post("/read", json={"hairline_mm": 0}).status_code == 400


def test_analyze_accuracy(client):
    response = client.post("/analyze/accuracy", json={"scale": QUAD_SPEC, "h": 0.5})
    assert response.status_code == 200
    report = response.json()
    assert report["resolvable_x_bound"] == pytest.approx(31.54, abs=0.02)


def test_analyze_triangle(client):
    response = client.post("/analyze/triangle", json={"scale": QUAD_SPEC, "a": 32, "h": 0.5})
    assert response.status_code == 200
    report = response.json()
    assert report["tau2"] == pytest.approx(2.961, abs=2e-3)
    assert report["angle_high"] == pytest.approx(71.34, abs=0.02)


def test_analyze_alignment(client):
    q1 = dict(QUAD_SPEC, name="Q1", x_min=0, x_max=7)
    q2 = dict(QUAD_SPEC, name="Q2", x_min=0, x_max=50)
    response = client.post("/analyze/alignment", json={"scale1": q1, "scale2": q2})
    assert response.status_code == 200
    assert response.json()["T"] == pytest.approx(50.0 / 7.0, rel=1e-12)


def test_analyze_alignment_incompatible(client):
    q = dict(QUAD_SPEC, name="Q", x_min=0, x_max=10)
    r = {"name": "R", "kind": "power", "params": {"alpha": -1}, "length_mm": 250, "x_min": 1, "x_max": 10}
    response = client.post("/analyze/alignment", json={"scale1": q, "scale2": r})
    assert response.status_code == 422
    assert response.json()["code"] == "incompatible_scales"


def test_analyze_coincidence(client):
    response = client.post("/analyze/coincidence", json={"x_C": 4.0})
    assert response.json()["x_R"] == pytest.approx(1.661, abs=5e-4)
    response = client.post("/analyze/coincidence", json={"x_R": 1.0})
    assert response.json()["x_C"] == pytest.approx(10.0, rel=1e-12)


def test_analyze_coincidence_excluded_base(client):
    response = client.post("/analyze/coincidence", json={"x_C": 1.0})
    assert response.status_code == 422
    assert response.json()["code"] == "domain_error"


def test_analyze_bad_scale(client):
    response = client.post("/analyze/accuracy", json={"scale": {"name": "X"}, "h": 0.5})
    assert response.status_code == 400
    assert response.json()["code"] == "bad_request"


def test_statelessness_under_permutation(client):
    requests = [
        ("POST", "/analyze/coincidence", {"x_C": 4.0}),
        ("POST", "/analyze/accuracy", {"scale": QUAD_SPEC, "h": 0.5}),
        ("POST", "/read", {"layout": CR_LAYOUT, "hairline_mm": 125.0}),
        ("GET", "/registry", None),
    ]
    baseline = {}
    for method, url, body in requests:
        response = client.get(url) if method == "GET" else client.post(url, json=body)
        baseline[url] = response.content
    for method, url, body in reversed(requests):
        response = client.get(url) if method == "GET" else client.post(url, json=body)
        assert response.content == baseline[url]
