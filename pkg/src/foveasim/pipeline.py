"""End-to-end pipelines and deterministic CSV reporting.

The comparison pipeline mirrors the evaluation-table layout: one row per
resolution configuration (full / target / wide-angle / foveated), seven
metric columns, means over a scene set.  All numeric output is printed
with 6 fixed decimals so files diff cleanly across platforms.
"""

import io
import json
import os

import numpy as np

from .attention import edge_attention
from .camera import CameraModel, make_budget
from .compositing import BlendConfig, oracle_substitute
from .imageio import read_pfm
from .metrics import METRIC_COLUMNS, DepthMetrics, evaluate
from .mirror import simulate_frame
from .oracle import run_photometric_oracle, run_true_oracle
from .planner import plan_from_budget, plan_to_mask
from .resample import simulate_bandwidth
from .synthetic import make_scene_set, pseudo_depth_predictor


def format_float(x):
    return f"{x:.6f}"


def metrics_csv(rows, label_header="label"):
    """Render (label, DepthMetrics) pairs as CSV text with a header line."""
    buf = io.StringIO()
    buf.write(label_header + "," + ",".join(METRIC_COLUMNS) + "\n")
    for label, m in rows:
        buf.write(label + "," + ",".join(format_float(v) for v in m.as_tuple()) + "\n")
    return buf.getvalue()


def mean_metrics(metrics_list):
    arr = np.array([m.as_tuple() for m in metrics_list])
    return DepthMetrics(*[float(v) for v in arr.mean(axis=0)])


def run_comparison_pipeline(scenes, budget, window, blend_cfg=BlendConfig(),
                            predictor_seed=0):
    """Full structural run over a scene set.

    Per scene: degrade color to WAC bandwidth, build edge attention, plan
    fovea within the budget, composite a foveated frame, then evaluate
    depth for four configurations.  Depth predictions come from a
    deterministic bandwidth-dependent stand-in, with the full-bandwidth
    prediction equal to ground truth, so the foveated row inherits
    ground-truth content inside fovea windows.

    Returns (rows, per_scene) where rows are table-shaped mean metrics.
    """
    full_bw, target_bw, wac_bw = budget.full_bw, budget.target_bw, budget.wac_bw
    labels = [
        f"Full Resolution ({_fmt_bw(full_bw)} pixels/mm)",
        f"Target Resolution ({_fmt_bw(target_bw)} pixels/mm)",
        f"Wide Angle Camera ({_fmt_bw(wac_bw)} pixels/mm)",
        "Foveated",
    ]
    per_scene = {label: [] for label in labels}
    for i, (color, gt) in enumerate(scenes):
        wac_img = simulate_bandwidth(color, full_bw, wac_bw)
        attn = edge_attention(wac_img)
        plan = plan_from_budget(attn, budget, window)
        simulate_frame(wac_img, color, plan, blend_cfg)  # foveated color frame

        seed = predictor_seed + i
        depths = {
            labels[0]: pseudo_depth_predictor(gt, full_bw, full_bw, seed),
            labels[1]: pseudo_depth_predictor(gt, target_bw, full_bw, seed),
            labels[2]: pseudo_depth_predictor(gt, wac_bw, full_bw, seed),
        }
        cover = plan_to_mask(plan, gt.shape)
        depths[labels[3]] = oracle_substitute(
            depths[labels[2]], depths[labels[0]], cover)
        for label in labels:
            per_scene[label].append(evaluate(depths[label], gt))
    rows = [(label, mean_metrics(per_scene[label])) for label in labels]
    return rows, per_scene


def _fmt_bw(bw):
    return f"{bw:g}"


def run_oracle_dataset(config, mode):
    """Config-driven oracle run over a directory of depth maps.

    The JSON config names wac_depth/full_depth/gt directories (PFM files
    matched by name), the camera and bandwidth parameters, and the output
    CSV path.  Returns the CSV text; reruns are byte-identical.
    """
    root = config.get("root", ".")
    dirs = {k: os.path.join(root, config[k])
            for k in ("wac_depth", "full_depth", "gt")}
    cam = CameraModel(
        width=int(config["width"]), height=int(config["height"]),
        focal_length=float(config.get("focal_length", 6.0)),
        pixel_pitch_inverse=float(config["full_bw"]))
    budget = make_budget(cam, float(config["target_bw"]), float(config["wac_bw"]))

    names = sorted(f for f in os.listdir(dirs["wac_depth"]) if f.endswith(".pfm"))
    run = run_photometric_oracle if mode == "photometric" else run_true_oracle
    rows = []
    for name in names:
        wac = read_pfm(os.path.join(dirs["wac_depth"], name))
        full = read_pfm(os.path.join(dirs["full_depth"], name))
        gt = read_pfm(os.path.join(dirs["gt"], name))
        m, _ = run(wac, full, gt, budget)
        rows.append((name, m))
    if rows:
        rows.append(("mean", mean_metrics([m for _, m in rows])))
    return metrics_csv(rows, label_header="image")


def load_config(path):
    with open(path) as f:
        return json.load(f)
