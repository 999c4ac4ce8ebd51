"""Attention masks over the wide-angle field of view.

A mask is a nonnegative float array on the WAC pixel grid.  Continuous
masks come from proxies (color edges, depth-error fields) or are ingested
from externally computed files; binary masks select an exact pixel budget.
"""

import numpy as np
from scipy import ndimage

from .errors import BudgetError, DomainError, ShapeError

DEPTH_SENTINEL = 0.0  # marks "no ground truth" pixels in depth maps


def validate_mask(mask, binary=False):
    mask = np.asarray(mask, dtype=np.float64)
    if mask.ndim != 2:
        raise ShapeError("attention mask must be 2-D")
    if np.any(mask < 0):
        raise DomainError("attention values must be nonnegative")
    if binary and not np.all((mask == 0) | (mask == 1)):
        raise DomainError("binary mask must contain only 0 and 1")
    return mask


def edge_attention(img):
    """Color-edge attention proxy.

    Sobel gradient magnitude per channel, combined across channels by max,
    normalized so the maximum is 1.  All-zero gradients stay all-zero
    (constant and 1x1 images).
    """
    img = np.asarray(img, dtype=np.float64)
    if img.ndim == 2:
        img = img[:, :, None]
    if img.ndim != 3 or img.shape[2] not in (1, 3):
        raise ShapeError("expected a 1- or 3-channel image")
    h, w = img.shape[:2]
    if h < 2 or w < 2:
        return np.zeros((h, w))
    mag = np.zeros((h, w))
    for c in range(img.shape[2]):
        gx = ndimage.sobel(img[:, :, c], axis=1, mode="reflect")
        gy = ndimage.sobel(img[:, :, c], axis=0, mode="reflect")
        mag = np.maximum(mag, np.hypot(gx, gy))
    peak = mag.max()
    if peak > 0:
        mag /= peak
    return mag


def error_attention(pred, ref):
    """Per-pixel absolute depth difference, zero where ref has no data."""
    pred = np.asarray(pred, dtype=np.float64)
    ref = np.asarray(ref, dtype=np.float64)
    if pred.shape != ref.shape:
        raise ShapeError(f"shape mismatch {pred.shape} vs {ref.shape}")
    err = np.abs(pred - ref)
    err[ref == DEPTH_SENTINEL] = 0.0
    return err


def top_n_binarize(mask, n):
    """Binary mask with ones at the n largest values of `mask`.

    Ties break by row-major pixel order (smaller index wins), so the
    result is deterministic.  The output sums to exactly n.
    """
    mask = validate_mask(mask)
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n > mask.size:
        raise BudgetError(f"n={n} exceeds {mask.size} pixels")
    flat = mask.ravel()
    # stable sort on -value keeps row-major order among equal values
    order = np.argsort(-flat, kind="stable")
    out = np.zeros(mask.size)
    out[order[:n]] = 1.0
    return out.reshape(mask.shape)


def scale_n_for_sparse_ref(n, ref_sample_count, full_pixel_count):
    """Scale a pixel budget to a sparse reference's sample count."""
    if full_pixel_count <= 0:
        raise DomainError("full pixel count must be positive")
    return int(np.floor(n * ref_sample_count / full_pixel_count + 0.5))
