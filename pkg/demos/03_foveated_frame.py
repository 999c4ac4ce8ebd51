"""Demo: render one foveated frame and check its capture schedule.

Simulated telephoto crops of the full-bandwidth image are blended into
the wide-angle view at the planned fovea (with boundary feathering), and
the per-frame event timeline is verified against a frame period.
"""

import os

import numpy as np

from foveasim import (BlendConfig, CameraModel, InfeasibleRateError,
                      MirrorModel, build_schedule, edge_attention,
                      make_budget, plan_from_budget, simulate_bandwidth,
                      simulate_frame, write_png)
from foveasim.synthetic import make_scene

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

rng = np.random.default_rng(2)
color, _ = make_scene(rng, height=128, width=128)

cam = CameraModel(width=128, height=128, focal_length=6.0, pixel_pitch_inverse=70.0)
budget = make_budget(cam, 35.0, 30.0)
wac_img = simulate_bandwidth(color, budget.full_bw, budget.wac_bw)
plan = plan_from_budget(edge_attention(wac_img), budget, window=(16, 16))

frame = simulate_frame(wac_img, color, plan, BlendConfig(feather_radius=2))
write_png(os.path.join(OUT, "wac.png"), wac_img)
write_png(os.path.join(OUT, "foveated_frame.png"), frame)
print(f"rendered foveated frame with {plan.n} fovea -> demos/output/foveated_frame.png")

mirror = MirrorModel(max_angle=20.0, settle_time=30.0)
for period in (400.0, 200.0, 100.0):
    try:
        sched = build_schedule(plan, mirror, wac_exposure=10.0,
                               tele_exposure=8.0, frame_period=period)
        print(f"period {period:5.0f} ms: feasible, "
              f"{len(sched.events)} events, total {sched.total_duration:.0f} ms")
    except InfeasibleRateError as exc:
        print(f"period {period:5.0f} ms: infeasible, "
              f"at most {exc.achievable_count} fovea fit")
