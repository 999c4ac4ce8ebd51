"""Greedy extraction of discrete, optically feasible fovea from a mask.

Each iteration takes the global attention maximum, places a fixed-size
window around it (clamped inside the grid), zeroes the mask under the
window, and repeats.  Selected peak values are monotonically
non-increasing, and no unselected location can exceed the last peak.
"""

from dataclasses import dataclass

import numpy as np

from .attention import validate_mask
from .camera import fovea_count
from .errors import InfeasiblePlanError, ShapeError


@dataclass(frozen=True)
class Fovea:
    """One high-resolution capture window.

    `order` is the 1-based capture order; `window_origin` is the top-left
    corner of the (h, w) window, clamped so the window stays in-bounds
    (the peak may then sit off-center).
    """

    peak: tuple
    window_origin: tuple
    window: tuple
    peak_value: float
    order: int


@dataclass(frozen=True)
class FoveaPlan:
    fovea: tuple
    n: int
    window: tuple

    def __len__(self):
        return self.n

    def to_json_obj(self):
        return [
            {
                "order": f.order,
                "peak": list(f.peak),
                "origin": list(f.window_origin),
                "window": list(f.window),
                "peak_value": f.peak_value,
            }
            for f in self.fovea
        ]

    @classmethod
    def from_json_obj(cls, obj):
        fovea = tuple(
            Fovea(
                peak=tuple(item["peak"]),
                window_origin=tuple(item["origin"]),
                window=tuple(item["window"]),
                peak_value=float(item["peak_value"]),
                order=int(item["order"]),
            )
            for item in obj
        )
        window = fovea[0].window if fovea else (0, 0)
        return cls(fovea=fovea, n=len(fovea), window=window)


def greedy_plan(mask, n, window, score="peak") -> FoveaPlan:
    """Plan up to n fovea by iterative peak selection and suppression.

    Stops early once the working mask is all-zero; attention-free regions
    never receive a fovea.  Ties break row-major (smallest flat index).

    score="peak" selects the global maximum each round (the default).
    score="window_sum" instead places the window where the covered
    attention sum is largest; peak monotonicity is not guaranteed there.
    """
    mask = validate_mask(mask)
    h, w = mask.shape
    wh, ww = window
    if wh <= 0 or ww <= 0 or wh > h or ww > w:
        raise InfeasiblePlanError(
            f"window {window} does not fit inside grid {(h, w)}")
    if score not in ("peak", "window_sum"):
        raise ValueError(f"unknown scoring mode {score!r}")
    work = mask.copy()
    fovea = []
    for order in range(1, n + 1):
        if score == "peak":
            flat = int(np.argmax(work))  # first max in row-major order
            peak_value = work.flat[flat]
            if peak_value <= 0:
                break
            pr, pc = divmod(flat, w)
            r0 = min(max(pr - wh // 2, 0), h - wh)
            c0 = min(max(pc - ww // 2, 0), w - ww)
        else:
            sums = _window_sums(work, wh, ww)
            flat = int(np.argmax(sums))
            if sums.flat[flat] <= 0:
                break
            r0, c0 = divmod(flat, sums.shape[1])
            patch = work[r0:r0 + wh, c0:c0 + ww]
            local = int(np.argmax(patch))
            pr, pc = r0 + local // ww, c0 + local % ww
            peak_value = work[pr, pc]
        work[r0:r0 + wh, c0:c0 + ww] = 0.0
        fovea.append(Fovea(
            peak=(pr, pc),
            window_origin=(r0, c0),
            window=(wh, ww),
            peak_value=float(peak_value),
            order=order,
        ))
    return FoveaPlan(fovea=tuple(fovea), n=len(fovea), window=(wh, ww))


def _window_sums(mask, wh, ww):
    """Sum of mask values under every valid window origin."""
    c = np.cumsum(np.cumsum(np.pad(mask, ((1, 0), (1, 0))), axis=0), axis=1)
    return (c[wh:, ww:] - c[:-wh, ww:] - c[wh:, :-ww] + c[:-wh, :-ww])


def plan_from_budget(mask, budget, window) -> FoveaPlan:
    """Greedy plan sized by the bandwidth budget's pixel allowance."""
    n, _ = fovea_count(budget, window)
    return greedy_plan(mask, n, window)


def plan_to_mask(plan: FoveaPlan, grid):
    """Rasterize the plan: binary coverage of the union of fovea windows."""
    h, w = grid
    out = np.zeros((h, w))
    for f in plan.fovea:
        r0, c0 = f.window_origin
        fh, fw = f.window
        if r0 < 0 or c0 < 0 or r0 + fh > h or c0 + fw > w:
            raise ShapeError(f"fovea window {f} outside grid {grid}")
        out[r0:r0 + fh, c0:c0 + fw] = 1.0
    return out


def coverage_score(plan: FoveaPlan, mask) -> float:
    """Total original attention inside the union of plan windows."""
    mask = validate_mask(mask)
    cover = plan_to_mask(plan, mask.shape)
    return float(np.sum(mask * cover))
