"""Demo: from attention mask to a discrete, feasible fovea plan.

Builds color-edge attention on a degraded wide-angle view, extracts fovea
greedily within a bandwidth budget, and converts the plan to mirror
voltages.
"""

import json
import os

import numpy as np

from foveasim import (CameraModel, MirrorModel, coverage_score,
                      edge_attention, make_budget, plan_from_budget,
                      plan_to_mask, plan_voltages, simulate_bandwidth,
                      write_png)
from foveasim.synthetic import make_scene

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

rng = np.random.default_rng(1)
color, _ = make_scene(rng, height=128, width=128)

cam = CameraModel(width=128, height=128, focal_length=6.0, pixel_pitch_inverse=70.0)
budget = make_budget(cam, 35.0, 30.0)
wac_img = simulate_bandwidth(color, budget.full_bw, budget.wac_bw)

attn = edge_attention(wac_img)
write_png(os.path.join(OUT, "attention.png"), attn)

plan = plan_from_budget(attn, budget, window=(16, 16))
print(f"budget affords {plan.n} fovea of 16x16 "
      f"({budget.fovea_pixel_budget} px, {budget.fovea_area_fraction:.2%} of the FOV)")
for f in plan.fovea:
    print(f"  #{f.order}: peak {f.peak} value {f.peak_value:.3f} "
          f"window at {f.window_origin}")
print(f"attention covered: {coverage_score(plan, attn):.2f} of {attn.sum():.2f}")

write_png(os.path.join(OUT, "plan_coverage.png"), plan_to_mask(plan, attn.shape))
with open(os.path.join(OUT, "plan.json"), "w") as f:
    json.dump(plan.to_json_obj(), f, indent=2, sort_keys=True)

mirror = MirrorModel(max_angle=20.0, settle_time=30.0)
print("mirror voltages (v_theta, v_phi):")
for v in plan_voltages(plan, cam, mirror):
    print(f"  ({v[0]:+.4f}, {v[1]:+.4f})")
