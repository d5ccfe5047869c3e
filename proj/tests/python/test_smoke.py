import json
import os
import subprocess

import pytest

import rcyclo


def test_tcr_small_window():
    r = rcyclo.tcr(lo=-3, hi=3)
    assert r["schema"] == "rcyclo/1"
    m = rcyclo.markers(r)
    assert m[0] == ["Z_2"] and m[-1] == ["Z_2"]
    assert all(m[n] == [] for n in (-3, -2, 1, 2, 3))
    assert "res=id tr=*2" in r["mackey_pi0"]["description"]
    assert r["mackey_pi0"]["axioms_hold"]


def test_tcr_minus_tower_at_zero():
    m = rcyclo.markers(rcyclo.tcr_minus(-4, 4))
    assert m[0] == ["Z_2"]
    assert m[-4] == ["Z_2"]
    assert m[1] == ["Z/2"]


def test_perfect_field():
    r = rcyclo.tcr_perfect(3, 2, 4)
    assert r["kind"] == "perfect_report"
    assert json.dumps(r).count("Z_3") >= 2


def test_chart_and_page():
    svg = rcyclo.chart("tss", 4, (-6, 0), (0, 4), format="svg")
    assert svg.startswith("<?xml") and "<circle" in svg
    text = rcyclo.chart("hfpss", 3, (-4, 0), (0, 4))
    assert "d3" in text
    assert rcyclo.page("hfpss", 4, (-4, 0), (0, 4))["kind"] == "page"
    with pytest.raises(ValueError):
        rcyclo.chart("hfpss", 4, (0, 0), (0, 0), format="png")


def test_window_error():
    with pytest.raises(ValueError):
        rcyclo.gfp(-4, 20, 16)


@pytest.mark.skipif("RCYCLO_BIN" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes(tmp_path):
    exe = os.environ["RCYCLO_BIN"]
    out = tmp_path / "p.json"
    ok = subprocess.run([exe, "tcr-perfect", "--p=2", "--n=1", "--prec=4", f"--out={out}"])
    assert ok.returncode == 0
    assert json.loads(out.read_text())["schema"] == "rcyclo/1"
    assert subprocess.run([exe, "tcr", "--p=two"], capture_output=True).returncode == 64
