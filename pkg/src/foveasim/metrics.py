"""Standard seven-quantity depth evaluation.

abs_rel, sq_rel, rmse, rmse_log plus the three ratio-threshold accuracies
(delta < 1.25, 1.25^2, 1.25^3), computed over valid ground-truth pixels
with predictions clamped to [min_depth, max_depth].  Defaults follow the
common outdoor protocol (0.001 m to 80 m).
"""

from dataclasses import dataclass, fields

import numpy as np

from .attention import DEPTH_SENTINEL
from .errors import DegenerateScaleError, EmptyEvaluationError, ShapeError

DEFAULT_MIN_DEPTH = 0.001
DEFAULT_MAX_DEPTH = 80.0

METRIC_COLUMNS = ("abs_rel", "sq_rel", "rmse", "rmse_log",
                  "delta1", "delta2", "delta3")


@dataclass(frozen=True)
class DepthMetrics:
    abs_rel: float
    sq_rel: float
    rmse: float
    rmse_log: float
    delta1: float
    delta2: float
    delta3: float

    def as_tuple(self):
        return tuple(getattr(self, f.name) for f in fields(self))

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _valid_mask(gt, min_depth, max_depth):
    return (gt != DEPTH_SENTINEL) & (gt >= min_depth) & (gt <= max_depth)


def evaluate(pred, gt, min_depth=DEFAULT_MIN_DEPTH,
             max_depth=DEFAULT_MAX_DEPTH) -> DepthMetrics:
    """Compute the seven-column metric record for one depth map pair.

    Raises EmptyEvaluationError when no ground-truth pixel is valid
    (non-sentinel and inside [min_depth, max_depth]).
    """
    pred = np.asarray(pred, dtype=np.float64)
    gt = np.asarray(gt, dtype=np.float64)
    if pred.shape != gt.shape:
        raise ShapeError(f"shape mismatch {pred.shape} vs {gt.shape}")
    valid = _valid_mask(gt, min_depth, max_depth)
    if not valid.any():
        raise EmptyEvaluationError("no valid ground-truth pixels")
    g = gt[valid]
    p = np.clip(pred[valid], min_depth, max_depth)

    diff = p - g
    thresh = np.maximum(p / g, g / p)
    return DepthMetrics(
        abs_rel=float(np.mean(np.abs(diff) / g)),
        sq_rel=float(np.mean(diff ** 2 / g)),
        rmse=float(np.sqrt(np.mean(diff ** 2))),
        rmse_log=float(np.sqrt(np.mean((np.log(p) - np.log(g)) ** 2))),
        delta1=float(np.mean(thresh < 1.25)),
        delta2=float(np.mean(thresh < 1.25 ** 2)),
        delta3=float(np.mean(thresh < 1.25 ** 3)),
    )


def median_scale(pred, gt, min_depth=DEFAULT_MIN_DEPTH,
                 max_depth=DEFAULT_MAX_DEPTH):
    """Rescale pred by median(gt valid) / median(pred valid).

    Off by default in evaluation; useful for scale-ambiguous predictors.
    """
    pred = np.asarray(pred, dtype=np.float64)
    gt = np.asarray(gt, dtype=np.float64)
    if pred.shape != gt.shape:
        raise ShapeError(f"shape mismatch {pred.shape} vs {gt.shape}")
    valid = _valid_mask(gt, min_depth, max_depth)
    if not valid.any():
        raise EmptyEvaluationError("no valid overlap for median scaling")
    med_pred = np.median(pred[valid])
    if med_pred == 0:
        raise DegenerateScaleError("prediction median is zero")
    return pred * (np.median(gt[valid]) / med_pred)
