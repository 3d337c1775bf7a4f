import json
import subprocess
import sys

import pytest

from ctregion.channels import GbcParams, Load
from ctregion.cli import run
from ctregion.mapping import TimePair
from ctregion.output import read_boundary_csv
from ctregion.regions import gbc_region_member

GBC = ["--channel", "gbc", "--h1", "4", "--h2", "1", "--p", "9", "--tau", "10,10"]
GMAC = ["--channel", "gmac", "--p1", "1", "--p2", "1", "--tau", "1,1"]


def test_region_outputs(tmp_path):
    svg = tmp_path / "broadcast.svg"
    assert run(["region", *GBC, "--samples", "64", "--out-dir", str(tmp_path), "--svg", str(svg)]) == 0
    meta = json.loads((tmp_path / "region.json").read_text())
    assert meta["spec"] == 1
    assert meta["p1c"] == pytest.approx(1.0, abs=1e-9)
    assert meta["curves"]["boundary"]["d_C"] == pytest.approx([8.61353116146786101] * 2, abs=1e-9)
    assert svg.read_text().startswith("<svg")


def test_boundary_csv_round_trip(tmp_path):
    assert run(["region", *GBC, "--samples", "64", "--out-dir", str(tmp_path)]) == 0
    rows = read_boundary_csv(tmp_path / "boundary.csv")
    segs = [r[0] for r in rows]
    assert segs[:2] == ["vray", "vray"] and segs[-2:] == ["hray", "hray"]
    prm, load = GbcParams(4, 1, 9), Load(10, 10)
    d_c = rows[segs.index("diag")][1]
    for seg, d1, d2 in rows:
        # '%.12g' rounding sits well inside this nudge
        assert gbc_region_member(prm, load, TimePair(d1 * (1 + 1e-9), d2 * (1 + 1e-9)))
        if seg == "diag" and d1 > d_c:
            continue  # far end of the diagonal ray lies inside the region
        assert not gbc_region_member(prm, load, TimePair(d1 * (1 - 1e-6), d2 * (1 - 1e-6)))


def test_minimize_table_tie(tmp_path):
    assert run(["minimize", *GMAC, "--w", "0.5", "--out-dir", str(tmp_path)]) == 0
    out = json.loads((tmp_path / "minimizer.json").read_text())["minimizer"]
    assert out["d"] == pytest.approx([2.83007499855768764, 2.0], abs=1e-9)
    assert "tie" in out["branch"]


def test_config_file_and_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"channel": "gmac", "p1": 1, "p2": 1, "tau": [1, 1], "w": 0.3}))
    assert run(["minimize", "--config", str(cfg), "--w", "0.7", "--out-dir", str(tmp_path)]) == 0
    out = json.loads((tmp_path / "minimizer.json").read_text())
    assert out["w"] == 0.7 and "d_E" in out["minimizer"]["branch"]


def test_block_power_csv(tmp_path):
    args = ["block-power", "--channel", "gmac", "--p1", "5", "--p2", "10", "--tau", "3,2",
            "--grid", "16", "--out-dir", str(tmp_path), "--svg", str(tmp_path / "block.svg")]
    assert run(args) == 0
    lines = (tmp_path / "block_power.csv").read_text().splitlines()
    assert lines[0] == "c,d1,d2,p_first,p_second,fraction"
    assert len(lines) == 32


def test_gic_weak_writes_both_bounds(tmp_path):
    args = ["region", "--channel", "gic", "--p1", "10", "--p2", "15", "--a", "0.64", "--b", "0.36",
            "--tau", "1,1", "--samples", "32", "--out-dir", str(tmp_path)]
    assert run(args) == 0
    assert (tmp_path / "boundary_inner.csv").exists() and (tmp_path / "boundary_outer.csv").exists()


def test_verify_passes(tmp_path):
    assert run(["verify", *GMAC, "--grid", "30", "--out-dir", str(tmp_path)]) == 0
    rep = json.loads((tmp_path / "grid_report.json").read_text())
    chk = rep["checks"]["boundary"]
    assert chk["far_disagreements"] == [] and chk["subregion_convexity_witnesses"] == 0


@pytest.mark.parametrize("argv", [
    ["region", "--channel", "gmac", "--p1", "1", "--tau", "1,1"],
    ["region", "--channel", "gmac", "--p1", "-1", "--p2", "1", "--tau", "1,1"],
    ["region", *GMAC, "--samples", "1"],
    ["minimize", *GMAC],
    ["minimize", *GMAC, "--w", "2"],
    ["region", "--channel", "gic", "--p1", "1", "--p2", "1", "--a", "2", "--b", "0.5", "--tau", "1,1"],
    ["region", "--channel", "gic", "--p1", "1", "--p2", "1", "--a", "1.5", "--b", "0.5", "--tau", "1,1"],
    ["block-power", "--channel", "gic", "--p1", "1", "--p2", "1", "--a", "2", "--b", "2", "--tau", "1,1"],
    ["frobnicate"],
    ["region", "--channel", "gmac", "--p1", "1", "--p2", "1", "--tau", "1"],
])
def test_usage_errors(tmp_path, argv):
    assert run([*argv, "--out-dir", str(tmp_path)] if argv != ["frobnicate"] else argv) == 2


def test_io_error_exit_code(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert run(["region", *GMAC, "--out-dir", str(blocker / "sub")]) == 3


def test_console_script_entry(tmp_path):
    res = subprocess.run([sys.executable, "-m", "ctregion.cli", "region", *GMAC, "--out-dir", str(tmp_path)],
                         capture_output=True, text=True)
    assert res.returncode == 0, res.stderr
