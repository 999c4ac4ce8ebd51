"""Blend focused content into a wide-angle image under an attention mask.

Color compositing is per-pixel alpha blending,
out = m * g(focused) + (1 - m) * wac, with optional gamma correction g of
the focused capture.  Depth merging is a hard selection: interpolating
depths across a fovea boundary would invent phantom surfaces.
"""

from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .attention import validate_mask
from .errors import DomainError, ShapeError


@dataclass(frozen=True)
class BlendConfig:
    """Gamma for the focused capture and feather radius for binary masks."""

    gamma: float = 1.0
    feather_radius: int = 0

    def __post_init__(self):
        if self.gamma <= 0:
            raise DomainError("gamma must be positive")
        if self.feather_radius < 0:
            raise DomainError("feather radius must be nonnegative")


def _check_grids(a, b):
    if a.shape[:2] != b.shape[:2]:
        raise ShapeError(f"pixel grids differ: {a.shape[:2]} vs {b.shape[:2]}")


def composite(wac, focused, mask, cfg=BlendConfig()):
    """Alpha-blend `focused` onto `wac` with the mask as blend weight.

    Gamma correction (x ** 1/gamma) applies to the focused image only;
    the wide-angle capture passes through untouched.
    """
    wac = np.asarray(wac, dtype=np.float64)
    focused = np.asarray(focused, dtype=np.float64)
    mask = validate_mask(mask)
    _check_grids(wac, focused)
    _check_grids(wac, mask)
    if np.any(mask > 1):
        raise DomainError("blend mask values must lie in [0, 1]")
    if cfg.gamma != 1.0:
        focused = np.clip(focused, 0.0, 1.0) ** (1.0 / cfg.gamma)
    m = mask if wac.ndim == 2 else mask[:, :, None]
    return m * focused + (1.0 - m) * wac


def feather(mask, radius):
    """Soften a binary mask with a linear ramp across region boundaries.

    The ramp spans 2*radius pixels of Chebyshev distance centered at the
    boundary: a lone selected pixel at radius 1 keeps value 1 and its 8
    neighbors get 0.5.  Radius 0 returns the mask unchanged.
    """
    mask = validate_mask(mask, binary=True)
    if radius < 0:
        raise DomainError("radius must be nonnegative")
    if radius == 0 or mask.all() or not mask.any():
        return mask.copy()
    inside = mask > 0
    # signed Chebyshev depth: boundary-inside pixels at +1, first ring
    # outside at 0, second ring at -1, ...
    d_out = ndimage.distance_transform_cdt(inside, metric="chessboard")
    d_in = ndimage.distance_transform_cdt(~inside, metric="chessboard")
    depth = np.where(inside, d_out, 1 - d_in).astype(np.float64)
    return np.clip((depth + radius) / (2.0 * radius), 0.0, 1.0)


def oracle_substitute(base_depth, replacement_depth, mask):
    """Replace depth with the replacement wherever the binary mask is 1."""
    base = np.asarray(base_depth, dtype=np.float64)
    repl = np.asarray(replacement_depth, dtype=np.float64)
    mask = validate_mask(mask, binary=True)
    _check_grids(base, repl)
    _check_grids(base, mask)
    return np.where(mask > 0, repl, base)
