"""Command-line entry point.

Subcommands: bandwidth, attention, plan, composite, evaluate, oracle,
simulate.  Exit codes: 0 success, 2 usage, 3 I/O, 4 validation.  Failures
print one machine-readable JSON line on stderr.  All outputs are
deterministic: sorted JSON keys, fixed 6-decimal numbers.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import pipeline
from .attention import edge_attention, error_attention, top_n_binarize
from .camera import CameraModel, make_budget
from .compositing import BlendConfig, composite
from .errors import FoveaSimError
from .imageio import read_image, write_image, write_png
from .metrics import evaluate, median_scale
from .mirror import simulate_frame
from .planner import greedy_plan, plan_from_budget
from .resample import realized_bandwidth, simulate_bandwidth

EXIT_USAGE = 2
EXIT_IO = 3
EXIT_VALIDATION = 4


def _parse_window(text):
    try:
        h, w = text.lower().split("x")
        return int(h), int(w)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected HxW, got {text!r}")


def _dump_json(obj, path=None):
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if path:
        with open(path, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _load_budget_json(path):
    with open(path) as f:
        cfg = json.load(f)
    cam = CameraModel(
        width=int(cfg["width"]), height=int(cfg["height"]),
        focal_length=float(cfg.get("focal_length", 6.0)),
        pixel_pitch_inverse=float(cfg["full_bw"]))
    return make_budget(cam, float(cfg["target_bw"]), float(cfg["wac_bw"]))


def cmd_bandwidth(args):
    img = read_image(args.input)
    out = simulate_bandwidth(img, args.from_bw, args.to_bw)
    write_image(args.out, out)
    if args.meta:
        ry, rx = realized_bandwidth(img.shape, args.from_bw, args.to_bw)
        _dump_json({"from_bw": args.from_bw, "to_bw": args.to_bw,
                    "realized_bw_x": rx, "realized_bw_y": ry}, args.meta)
    return 0


def cmd_attention(args):
    if args.mode == "edge":
        mask = edge_attention(read_image(args.input))
    else:
        mask = error_attention(read_image(args.pred), read_image(args.ref))
    if args.top_n is not None:
        mask = top_n_binarize(mask, args.top_n)
    write_image(args.out, mask)
    if args.png:
        write_png(args.png, mask / mask.max() if mask.max() > 0 else mask)
    return 0


def cmd_plan(args):
    mask = read_image(args.mask)
    if args.budget:
        plan = plan_from_budget(mask, _load_budget_json(args.budget), args.window)
    else:
        plan = greedy_plan(mask, args.n, args.window, score=args.score)
    _dump_json(plan.to_json_obj(), args.out)
    return 0


def cmd_composite(args):
    cfg = BlendConfig(gamma=args.gamma, feather_radius=args.feather)
    out = composite(read_image(args.wac), read_image(args.focused),
                    read_image(args.mask), cfg)
    write_image(args.out, out)
    return 0


def cmd_evaluate(args):
    pred = read_image(args.pred)
    gt = read_image(args.gt)
    if args.median_scale:
        pred = median_scale(pred, gt, args.min_depth, args.max_depth)
    m = evaluate(pred, gt, args.min_depth, args.max_depth)
    text = pipeline.metrics_csv([(os.path.basename(args.pred), m)],
                                label_header="image")
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_oracle(args):
    config = pipeline.load_config(args.config)
    # config overrides flags; flags override defaults
    mode = config.get("mode", args.mode)
    out_path = config.get("output", args.out)
    text = pipeline.run_oracle_dataset(config, mode)
    if out_path:
        with open(out_path, "w") as f:
            f.write(text)
        effective = dict(config)
        effective["mode"] = mode
        effective["output"] = out_path
        _dump_json(effective, os.path.join(
            os.path.dirname(os.path.abspath(out_path)), "effective_config.json"))
    else:
        sys.stdout.write(text)
    return 0


def cmd_simulate(args):
    wac = read_image(args.wac)
    full = read_image(args.full)
    mask = read_image(args.mask)
    budget = _load_budget_json(args.budget)
    plan = plan_from_budget(mask, budget, args.window)
    cfg = BlendConfig(gamma=args.gamma, feather_radius=args.feather)
    out = simulate_frame(wac, full, plan, cfg)
    write_image(args.out, out)
    if args.plan_out:
        _dump_json(plan.to_json_obj(), args.plan_out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="foveasim",
                                description="Foveated imaging simulation toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bandwidth", help="simulate reduced angular resolution")
    b.add_argument("--in", dest="input", required=True)
    b.add_argument("--from", dest="from_bw", type=float, required=True)
    b.add_argument("--to", dest="to_bw", type=float, required=True)
    b.add_argument("--out", required=True)
    b.add_argument("--meta", help="JSON sidecar with realized bandwidths")
    b.set_defaults(func=cmd_bandwidth)

    a = sub.add_parser("attention", help="compute an attention mask")
    a.add_argument("--mode", choices=["edge", "error"], default="edge")
    a.add_argument("--in", dest="input", help="color image (edge mode)")
    a.add_argument("--pred", help="depth map (error mode)")
    a.add_argument("--ref", help="reference depth map (error mode)")
    a.add_argument("--top-n", type=int, help="binarize to the n largest values")
    a.add_argument("--out", required=True, help="output mask (PFM)")
    a.add_argument("--png", help="also write a PNG visualization")
    a.set_defaults(func=cmd_attention)

    pl = sub.add_parser("plan", help="greedy fovea placement from a mask")
    pl.add_argument("--mask", required=True)
    pl.add_argument("--n", type=int, default=0)
    pl.add_argument("--window", type=_parse_window, required=True)
    pl.add_argument("--budget", help="budget JSON; overrides --n")
    pl.add_argument("--score", choices=["peak", "window_sum"], default="peak")
    pl.add_argument("--out", help="plan JSON path (stdout if omitted)")
    pl.set_defaults(func=cmd_plan)

    c = sub.add_parser("composite", help="blend focused content into a WAC image")
    c.add_argument("--wac", required=True)
    c.add_argument("--focused", required=True)
    c.add_argument("--mask", required=True)
    c.add_argument("--gamma", type=float, default=1.0)
    c.add_argument("--feather", type=int, default=0)
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_composite)

    e = sub.add_parser("evaluate", help="depth metrics for a prediction")
    e.add_argument("--pred", required=True)
    e.add_argument("--gt", required=True)
    e.add_argument("--min-depth", type=float, default=0.001)
    e.add_argument("--max-depth", type=float, default=80.0)
    e.add_argument("--median-scale", action="store_true")
    e.add_argument("--out", help="CSV path (stdout if omitted)")
    e.set_defaults(func=cmd_evaluate)

    o = sub.add_parser("oracle", help="oracle substitution over a dataset")
    o.add_argument("--config", required=True)
    o.add_argument("--mode", choices=["photometric", "true"], default="photometric")
    o.add_argument("--out", help="CSV path (config 'output' wins)")
    o.set_defaults(func=cmd_oracle)

    s = sub.add_parser("simulate", help="render one foveated frame")
    s.add_argument("--wac", required=True)
    s.add_argument("--full", required=True)
    s.add_argument("--mask", required=True)
    s.add_argument("--budget", required=True, help="budget JSON")
    s.add_argument("--window", type=_parse_window, default=(8, 8))
    s.add_argument("--gamma", type=float, default=1.0)
    s.add_argument("--feather", type=int, default=0)
    s.add_argument("--plan-out", help="also write the plan JSON")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_simulate)
    return p


def _fail(code, kind, message):
    sys.stderr.write(json.dumps(
        {"code": code, "error": kind, "message": message}, sort_keys=True) + "\n")
    return code


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "attention" and args.mode == "edge" and not args.input:
        parser.error("--in is required in edge mode")
    if args.command == "attention" and args.mode == "error" and not (args.pred and args.ref):
        parser.error("--pred and --ref are required in error mode")
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        return _fail(EXIT_IO, "io", str(exc))
    except OSError as exc:
        return _fail(EXIT_IO, "io", str(exc))
    except (FoveaSimError, ValueError, KeyError, json.JSONDecodeError) as exc:
        return _fail(EXIT_VALIDATION, type(exc).__name__, str(exc))


if __name__ == "__main__":
    sys.exit(main())
