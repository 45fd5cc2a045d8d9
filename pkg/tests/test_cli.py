from __future__ import annotations

import json
import pathlib
import xml.etree.ElementTree as ET

import pytest

from sliderule import RuleLayout
from sliderule.cli import main

SVG_NS = "{http://www.w3.org/2000/svg}"

QUAD_SPEC = {
    "name": "Q",
    "kind": "power",
    "params": {"alpha": 2},
    "length_mm": 250,
    "x_min": 31.54,
    "x_max": 100,
    "zoom": 1,
    "units_label": "",
    "orientation": "ltr",
}

LAYOUT = {
    "length_mm": 250,
    "body_top": [
        {"name": "D", "kind": "log", "params": {"base": 10}, "length_mm": 250, "x_min": 1, "x_max": 10}
    ],
    "slide": [
        {"name": "C", "kind": "log", "params": {"base": 10}, "length_mm": 250, "x_min": 1, "x_max": 10}
    ],
    "body_bottom": [
        {"name": "R", "kind": "power", "params": {"alpha": -1}, "length_mm": 250, "x_min": 0.6, "x_max": 10}
    ],
}


def write_json(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_render_shipped_sample_layout(tmp_path):
    sample = str(pathlib.Path(__file__).resolve().parent.parent / "samples" / "classic.json")
    out = tmp_path / "classic.svg"
    assert main(["render", "--layout", sample, "--out", str(out)]) == 0
    root = ET.fromstring(out.read_text())
    bands = [el for el in root.iter(f"{SVG_NS}g") if el.get("class") == "scale"]
    assert len(bands) == 5
    layout = RuleLayout.from_json(json.loads(pathlib.Path(sample).read_text()))
    ticks = [el for el in root.iter(f"{SVG_NS}line") if el.get("class") == "tick"]
    assert len(ticks) == sum(len(ts.ticks) for _, ts in layout.rows())


def test_render_writes_svg(tmp_path, capsys):
    layout_file = write_json(tmp_path, "layout.json", LAYOUT)
    out = tmp_path / "rule.svg"
    assert main(["render", "--layout", layout_file, "--out", str(out)]) == 0
    root = ET.fromstring(out.read_text())
    bands = [el for el in root.iter(f"{SVG_NS}g") if el.get("class") == "scale"]
    assert len(bands) == 3


def test_render_reciprocal_tick_ratios(tmp_path):
    layout_file = write_json(tmp_path, "layout.json", {"body_top": [LAYOUT["body_bottom"][0]]})
    out = tmp_path / "fig.svg"
    assert main(["render", "--layout", layout_file, "--out", str(out)]) == 0
    root = ET.fromstring(out.read_text())
    xs = {
        round(float(el.get("x1")), 4)
        for el in root.iter(f"{SVG_NS}line")
        if el.get("class") == "tick"
    }
    margin = 40.0  # 10 mm at 4 px/mm
    unit = 150.0 * 4.0  # scale factor in px: L / (1/0.6 - 0) * px_per_mm
    # marks for 10, 5, 2, 1 drawn at 0.1, 0.2, 0.5, 1.0 of the unit
    for fraction in (0.1, 0.2, 0.5, 1.0):
        assert round(margin + fraction * unit, 4) in xs


def test_render_missing_file_exit_2(tmp_path, capsys):
    assert main(["render", "--layout", str(tmp_path / "absent.json"), "--out", "x.svg"]) == 2
    assert "absent.json" in capsys.readouterr().err


def test_render_empty_layout_exit_2(tmp_path, capsys):
    path = tmp_path / "empty.json"
    path.write_text("")
    assert main(["render", "--layout", str(path), "--out", str(tmp_path / "x.svg")]) == 2
    err = capsys.readouterr().err
    assert "empty.json:1:1" in err  # line anchored


def test_render_no_scales_exit_2(tmp_path, capsys):
    layout_file = write_json(tmp_path, "layout.json", {"body_top": []})
    assert main(["render", "--layout", layout_file, "--out", str(tmp_path / "x.svg")]) == 2
    assert "no scales" in capsys.readouterr().err


def test_analyze_accuracy_worked_example(tmp_path, capsys):
    scale_file = write_json(tmp_path, "q.json", QUAD_SPEC)
    assert main(["analyze", "--kind", "accuracy", "--scale", scale_file, "--h", "0.5"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["required_u"] == pytest.approx(0.025, abs=1e-4)
    assert report["resolvable_x_bound"] == pytest.approx(31.54, abs=0.02)
    assert report["feasible"] is True
    assert report["binding_end"] == "x_min"


def test_analyze_triangle_worked_example(tmp_path, capsys):
    scale_file = write_json(tmp_path, "q.json", QUAD_SPEC)
    assert main(["analyze", "--kind", "triangle", "--scale", scale_file, "--a", "40"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["tau1"] == pytest.approx(0.7886, abs=5e-4)
    assert report["angle_low"] == pytest.approx(38.26, abs=0.02)
    assert report["tau2"] == pytest.approx(2.291, abs=2e-3)
    assert report["angle_high"] == pytest.approx(66.42, abs=0.02)
    assert report["b_interval"][1] == pytest.approx(91.64, abs=0.02)


def test_analyze_triangle_explicit_interval(capsys):
    assert main(["analyze", "--kind", "triangle", "--a", "32", "--x-lo", "31.544", "--x-hi", "100"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["tau2"] == pytest.approx(2.961, abs=2e-3)
    assert report["angle_high"] == pytest.approx(71.34, abs=0.02)


def test_analyze_coincidence_table(capsys):
    assert main(["analyze", "--kind", "coincidence", "--table"]) == 0
    pairs = json.loads(capsys.readouterr().out)
    expected = {1.496: 5.714, 4.0: 1.661, 4.976: 1.436, 10.0: 1.0}
    assert len(pairs) == 4
    for pair in pairs:
        assert pair["x_R"] == pytest.approx(expected[pair["x_C"]], abs=0.005)


def test_analyze_coincidence_single(capsys):
    assert main(["analyze", "--kind", "coincidence", "--xc", "4"]) == 0
    pair = json.loads(capsys.readouterr().out)
    assert pair["x_R"] == pytest.approx(1.661, abs=5e-4)


def test_analyze_coincidence_domain_error_exit_3(capsys):
    assert main(["analyze", "--kind", "coincidence", "--xc", "1"]) == 3
    assert "x_C must exceed 1" in capsys.readouterr().err


def test_analyze_alignment(tmp_path, capsys):
    q1 = dict(QUAD_SPEC, name="Q1", x_min=0, x_max=7)
    q2 = dict(QUAD_SPEC, name="Q2", x_min=0, x_max=50)
    f1 = write_json(tmp_path, "q1.json", q1)
    f2 = write_json(tmp_path, "q2.json", q2)
    assert main(["analyze", "--kind", "alignment", "--scale", f1, "--scale2", f2]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["T"] == pytest.approx(50.0 / 7.0, rel=1e-12)
    assert report["equivalent"] is False
    assert report["rational_witness"] is None


def test_analyze_alignment_incompatible_exit_3(tmp_path, capsys):
    q = dict(QUAD_SPEC, name="Q", x_min=0, x_max=10)
    r = {"name": "R", "kind": "power", "params": {"alpha": -1}, "length_mm": 250,
         "x_min": 1, "x_max": 10}
    f1 = write_json(tmp_path, "q.json", q)
    f2 = write_json(tmp_path, "r.json", r)
    assert main(["analyze", "--kind", "alignment", "--scale", f1, "--scale2", f2]) == 3
    assert "exponent" in capsys.readouterr().err


def test_analyze_missing_inputs_exit_2(capsys):
    assert main(["analyze", "--kind", "accuracy"]) == 2
    assert main(["analyze", "--kind", "coincidence"]) == 2
    assert main(["analyze", "--kind", "triangle", "--a", "40"]) == 2


def test_analyze_bad_scale_json_exit_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"name": "X"')
    assert main(["analyze", "--kind", "accuracy", "--scale", str(path)]) == 2
    assert "broken.json:1" in capsys.readouterr().err
