import json

import numpy as np
import pytest

from foveasim import read_png, write_pfm, write_png
from foveasim.cli import main


def run(args):
    return main(args)


def write_budget(path, width=16, height=16, full=70.0, target=35.0, wac=30.0):
    path.write_text(json.dumps({"width": width, "height": height,
                                "full_bw": full, "target_bw": target,
                                "wac_bw": wac}))


def test_evaluate_perfect_prediction(tmp_path, capsys):
    d = np.random.default_rng(0).uniform(1, 50, (8, 8))
    write_pfm(tmp_path / "a.pfm", d)
    assert run(["evaluate", "--pred", str(tmp_path / "a.pfm"),
                "--gt", str(tmp_path / "a.pfm")]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[1] == "a.pfm,0.000000,0.000000,0.000000,0.000000,1.000000,1.000000,1.000000"


def test_bandwidth_identity_byte_identical(tmp_path):
    img = np.round(np.random.default_rng(1).uniform(size=(8, 8, 3)) * 255) / 255
    src = tmp_path / "in.png"
    dst = tmp_path / "out.png"
    write_png(src, img)
    assert run(["bandwidth", "--in", str(src), "--from", "70", "--to", "70",
                "--out", str(dst)]) == 0
    assert np.array_equal(read_png(dst), read_png(src))


def test_bandwidth_meta_sidecar(tmp_path):
    src = tmp_path / "in.png"
    write_png(src, np.zeros((10, 10)))
    meta = tmp_path / "meta.json"
    assert run(["bandwidth", "--in", str(src), "--from", "70", "--to", "33",
                "--out", str(tmp_path / "o.png"), "--meta", str(meta)]) == 0
    data = json.loads(meta.read_text())
    assert data["realized_bw_x"] == pytest.approx(35.0)


def test_plan_matches_fixture(tmp_path, capsys):
    mask = np.zeros((4, 4))
    mask[1, 1] = 9
    mask[2, 3] = 7
    write_pfm(tmp_path / "m.pfm", mask)
    assert run(["plan", "--mask", str(tmp_path / "m.pfm"),
                "--n", "2", "--window", "2x2"]) == 0
    plan = json.loads(capsys.readouterr().out)
    assert plan == [
        {"order": 1, "origin": [0, 0], "peak": [1, 1], "peak_value": 9.0,
         "window": [2, 2]},
        {"order": 2, "origin": [1, 2], "peak": [2, 3], "peak_value": 7.0,
         "window": [2, 2]},
    ]


def test_composite_and_attention_roundtrip(tmp_path):
    rng = np.random.default_rng(2)
    wac = rng.uniform(size=(8, 8, 3))
    write_png(tmp_path / "wac.png", wac)
    write_png(tmp_path / "full.png", rng.uniform(size=(8, 8, 3)))
    assert run(["attention", "--in", str(tmp_path / "wac.png"),
                "--out", str(tmp_path / "att.pfm")]) == 0
    write_pfm(tmp_path / "zero.pfm", np.zeros((8, 8)))
    assert run(["composite", "--wac", str(tmp_path / "wac.png"),
                "--focused", str(tmp_path / "full.png"),
                "--mask", str(tmp_path / "zero.pfm"),
                "--out", str(tmp_path / "out.png")]) == 0
    assert np.array_equal(read_png(tmp_path / "out.png"),
                          read_png(tmp_path / "wac.png"))


def test_simulate_subcommand(tmp_path):
    rng = np.random.default_rng(3)
    write_png(tmp_path / "wac.png", rng.uniform(size=(16, 16, 3)))
    write_png(tmp_path / "full.png", rng.uniform(size=(16, 16, 3)))
    write_pfm(tmp_path / "att.pfm", rng.uniform(size=(16, 16)))
    write_budget(tmp_path / "budget.json")
    assert run(["simulate", "--wac", str(tmp_path / "wac.png"),
                "--full", str(tmp_path / "full.png"),
                "--mask", str(tmp_path / "att.pfm"),
                "--budget", str(tmp_path / "budget.json"),
                "--window", "4x4",
                "--plan-out", str(tmp_path / "plan.json"),
                "--out", str(tmp_path / "sim.png")]) == 0
    assert (tmp_path / "sim.png").exists()
    plan = json.loads((tmp_path / "plan.json").read_text())
    assert len(plan) == 16 * 16 * 325 // 4900 // 16  # floor(budget/area)


def test_oracle_subcommand_with_config(tmp_path):
    rng = np.random.default_rng(4)
    for sub in ("wac_depth", "full_depth", "gt"):
        (tmp_path / sub).mkdir()
    gt = rng.uniform(5, 50, (16, 16))
    wac = np.clip(gt * 1.1, 1, 79)
    write_pfm(tmp_path / "gt" / "s.pfm", gt)
    write_pfm(tmp_path / "full_depth" / "s.pfm", gt)
    write_pfm(tmp_path / "wac_depth" / "s.pfm", wac)
    cfg = {"root": str(tmp_path), "wac_depth": "wac_depth",
           "full_depth": "full_depth", "gt": "gt", "width": 16, "height": 16,
           "full_bw": 70.0, "target_bw": 35.0, "wac_bw": 30.0,
           "output": str(tmp_path / "out.csv")}
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg))
    assert run(["oracle", "--config", str(cfg_path), "--mode", "true"]) == 0
    text = (tmp_path / "out.csv").read_text()
    assert text.splitlines()[0].startswith("image,abs_rel")
    assert (tmp_path / "effective_config.json").exists()


def test_missing_file_exit_3(tmp_path, capsys):
    assert run(["evaluate", "--pred", str(tmp_path / "no.pfm"),
                "--gt", str(tmp_path / "no.pfm")]) == 3
    err = json.loads(capsys.readouterr().err)
    assert err["code"] == 3


def test_validation_error_exit_4(tmp_path, capsys):
    src = tmp_path / "in.png"
    write_png(src, np.zeros((4, 4)))
    assert run(["bandwidth", "--in", str(src), "--from", "35", "--to", "70",
                "--out", str(tmp_path / "o.png")]) == 4
    err = json.loads(capsys.readouterr().err)
    assert err["code"] == 4


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["plan", "--nonsense"])
    assert exc.value.code == 2
