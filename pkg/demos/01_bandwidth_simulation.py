"""Demo: cameras as angular-sample budgets.

Degrades a synthetic scene to several bandwidths and shows how image
fidelity falls as the angular sampling density drops, plus the budget
arithmetic that converts a bandwidth pair into a fovea pixel allowance.
"""

import os

import numpy as np

from foveasim import CameraModel, fovea_count, make_budget, simulate_bandwidth, write_png
from foveasim.synthetic import make_scene

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

rng = np.random.default_rng(0)
color, _ = make_scene(rng, height=128, width=128)
write_png(os.path.join(OUT, "scene_full.png"), color)

FULL_BW = 70.0
print("bandwidth  mean |err| vs full")
for bw in (70.0, 35.0, 17.0, 8.0):
    degraded = simulate_bandwidth(color, FULL_BW, bw)
    err = np.mean(np.abs(degraded - color))
    write_png(os.path.join(OUT, f"scene_bw{bw:g}.png"), degraded)
    print(f"{bw:8.1f}  {err:.5f}")

print()
cam = CameraModel(width=1242, height=375, focal_length=6.0, pixel_pitch_inverse=FULL_BW)
for target, wac in [(35.0, 30.0), (31.30, 27.0), (8.0, 7.0)]:
    b = make_budget(cam, target, wac)
    n, rem = fovea_count(b, (64, 64))
    print(f"target {target:5.2f} / wac {wac:5.2f} px/mm -> "
          f"fovea area fraction {b.fovea_area_fraction:.4f}, "
          f"{b.fovea_pixel_budget} px budget = {n} fovea of 64x64 (+{rem} px spare)")
