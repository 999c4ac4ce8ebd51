"""Oracle experiments: where would extra resolution have helped depth?

Both oracles pick the top-N worst pixels of an error field, substitute the
full-resolution depth there, and re-evaluate.  The photometric variant
compares two predictors' error maps; the true variant compares the WAC
prediction against (possibly sparse) ground truth, scaling N to the
reference's sample count.
"""

import numpy as np

from .attention import (DEPTH_SENTINEL, error_attention,
                        scale_n_for_sparse_ref, top_n_binarize)
from .compositing import oracle_substitute
from .errors import ShapeError
from .metrics import DEFAULT_MAX_DEPTH, DEFAULT_MIN_DEPTH, evaluate
from .resample import simulate_bandwidth


def _check_same_shape(*imgs):
    base = np.asarray(imgs[0]).shape
    for img in imgs[1:]:
        if np.asarray(img).shape != base:
            raise ShapeError(f"shape mismatch {np.asarray(img).shape} vs {base}")


def photometric_error_field(wac_depth, full_depth, gt):
    """|err_wac - err_full| against gt where gt has data, else |wac - full|.

    With no dense reference the raw disagreement between the two
    predictors stands in for the error-map difference.
    """
    wac_depth = np.asarray(wac_depth, dtype=np.float64)
    full_depth = np.asarray(full_depth, dtype=np.float64)
    gt = np.asarray(gt, dtype=np.float64)
    _check_same_shape(wac_depth, full_depth, gt)
    has_gt = gt != DEPTH_SENTINEL
    err_diff = np.abs(np.abs(wac_depth - gt) - np.abs(full_depth - gt))
    fallback = np.abs(wac_depth - full_depth)
    return np.where(has_gt, err_diff, fallback)


def run_photometric_oracle(wac_depth, full_depth, gt, budget,
                           min_depth=DEFAULT_MIN_DEPTH,
                           max_depth=DEFAULT_MAX_DEPTH):
    """Substitute full-resolution depth at the top-N predictor-error pixels.

    N is the budget's fovea pixel allowance (capped at the image size).
    Returns (metrics of the merged map vs gt, the binary selection mask).
    """
    field = photometric_error_field(wac_depth, full_depth, gt)
    n = min(budget.fovea_pixel_budget, field.size)
    mask = top_n_binarize(field, n)
    merged = oracle_substitute(wac_depth, full_depth, mask)
    return evaluate(merged, gt, min_depth, max_depth), mask


def run_true_oracle(wac_depth, full_depth, gt_sparse, budget,
                    min_depth=DEFAULT_MIN_DEPTH, max_depth=DEFAULT_MAX_DEPTH):
    """Substitute at the top-N' |wac - gt| pixels, N' scaled to gt density."""
    field = error_attention(wac_depth, gt_sparse)
    valid = int(np.count_nonzero(np.asarray(gt_sparse) != DEPTH_SENTINEL))
    n = scale_n_for_sparse_ref(budget.fovea_pixel_budget, valid, field.size)
    n = min(n, field.size)
    mask = top_n_binarize(field, n)
    merged = oracle_substitute(wac_depth, full_depth, mask)
    return evaluate(merged, gt_sparse, min_depth, max_depth), mask


def run_equiangular_baseline(img, budget, depth_fn, gt,
                             min_depth=DEFAULT_MIN_DEPTH,
                             max_depth=DEFAULT_MAX_DEPTH):
    """Uniform-resolution baseline: degrade to target bandwidth, predict,
    evaluate.

    depth_fn maps a color image to a depth map (a subprocess wrapper, a
    lookup of precomputed files, or a synthetic stand-in).
    """
    degraded = simulate_bandwidth(img, budget.full_bw, budget.target_bw)
    depth = depth_fn(degraded)
    return evaluate(depth, gt, min_depth, max_depth)
