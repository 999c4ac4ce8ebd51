"""Deterministic synthetic scenes for demos and end-to-end checks.

Scenes are piecewise-constant depth layouts (background plane plus a few
rectangles at nearer depths) with a matching color rendering, so depth
discontinuities coincide with color edges.  Everything is driven by a
numpy Generator seeded explicitly; identical seeds give identical scenes.
"""

import numpy as np


def make_scene(rng, height=64, width=64, n_boxes=4):
    """One synthetic scene: (color image (H, W, 3) in [0,1], depth in meters).

    Depth spans roughly 5..60 m; no sentinel pixels (dense ground truth).
    """
    depth = np.full((height, width), float(rng.uniform(40.0, 60.0)))
    color = np.empty((height, width, 3))
    color[:] = rng.uniform(0.2, 0.8, size=3)
    for _ in range(n_boxes):
        h = int(rng.integers(height // 8, height // 2))
        w = int(rng.integers(width // 8, width // 2))
        r0 = int(rng.integers(0, height - h))
        c0 = int(rng.integers(0, width - w))
        depth[r0:r0 + h, c0:c0 + w] = float(rng.uniform(5.0, 35.0))
        color[r0:r0 + h, c0:c0 + w] = rng.uniform(0.0, 1.0, size=3)
    return color, depth


def make_scene_set(seed, count=10, height=64, width=64):
    """A reproducible list of (color, depth) scenes."""
    rng = np.random.default_rng(seed)
    return [make_scene(rng) for _ in range(count)]


def pseudo_depth_predictor(gt_depth, bw, full_bw, seed=0, base_error=0.15):
    """Stand-in for a bandwidth-dependent depth network.

    Returns the ground truth corrupted by a fixed multiplicative error
    field whose amplitude grows as bandwidth drops; at bw == full_bw the
    prediction equals ground truth.  The error field depends only on the
    seed and shape, so predictions at different bandwidths err in the
    same places with different magnitudes.
    """
    gt_depth = np.asarray(gt_depth, dtype=np.float64)
    rng = np.random.default_rng(seed)
    field = rng.uniform(-1.0, 1.0, size=gt_depth.shape)
    amplitude = base_error * (1.0 - bw / full_bw)
    pred = gt_depth * (1.0 + amplitude * field)
    return np.clip(pred, 0.1, 79.0)
