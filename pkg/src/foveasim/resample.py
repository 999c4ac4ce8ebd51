"""Bandwidth simulation by intrinsics-scaled resampling.

Reduced angular resolution over the same field of view is simulated by
downsampling to a smaller pixel grid (scale = to_bw / from_bw) and
upsampling back to the original grid.  Downsampling uses area averaging
(box), upsampling uses bilinear; both are separable weight-matrix products
so constants are preserved exactly and results are deterministic.
"""

import numpy as np

from .errors import DomainError, InvalidBandwidthError

DOWNSAMPLE_KERNELS = ("box", "bilinear")


def _box_weights(n_out, n_in):
    """Area-overlap weight matrix mapping n_in samples onto n_out."""
    w = np.zeros((n_out, n_in))
    scale = n_in / n_out
    for i in range(n_out):
        lo, hi = i * scale, (i + 1) * scale
        j0, j1 = int(np.floor(lo)), int(np.ceil(hi))
        for j in range(j0, min(j1, n_in)):
            w[i, j] = min(hi, j + 1) - max(lo, j)
    w /= w.sum(axis=1, keepdims=True)
    return w


def _bilinear_weights(n_out, n_in):
    """Bilinear weight matrix with half-pixel-centered sampling, edges clamped."""
    w = np.zeros((n_out, n_in))
    scale = n_in / n_out
    for i in range(n_out):
        src = (i + 0.5) * scale - 0.5
        j0 = int(np.floor(src))
        frac = src - j0
        ja = min(max(j0, 0), n_in - 1)
        jb = min(max(j0 + 1, 0), n_in - 1)
        w[i, ja] += 1.0 - frac
        w[i, jb] += frac
    return w


def _apply_separable(img, wy, wx):
    if img.ndim == 2:
        return wy @ img @ wx.T
    return np.einsum("ij,jkc,lk->ilc", wy, img, wx)


def resize(img, out_shape, kernel):
    """Resize to (height, width) with the named kernel ('box' or 'bilinear')."""
    if kernel not in DOWNSAMPLE_KERNELS:
        raise DomainError(f"unknown kernel {kernel!r}")
    h_out, w_out = out_shape
    h_in, w_in = img.shape[:2]
    make = _box_weights if kernel == "box" else _bilinear_weights
    wy = make(h_out, h_in)
    wx = make(w_out, w_in)
    return _apply_separable(np.asarray(img, dtype=np.float64), wy, wx)


def intermediate_shape(shape, from_bw, to_bw):
    """Pixel grid of the reduced-bandwidth intermediate, at least 1x1."""
    h, w = shape[:2]
    scale = to_bw / from_bw
    return max(1, int(round(h * scale))), max(1, int(round(w * scale)))


def realized_bandwidth(shape, from_bw, to_bw):
    """Effective px/mm after rounding the intermediate grid to integers.

    Returns (realized_y, realized_x).
    """
    h, w = shape[:2]
    h2, w2 = intermediate_shape(shape, from_bw, to_bw)
    return from_bw * h2 / h, from_bw * w2 / w


def simulate_bandwidth(img, from_bw, to_bw, down_kernel="box", up_kernel="bilinear"):
    """Simulate capturing `img` at a lower angular resolution.

    Downsamples by to_bw/from_bw then upsamples back to the input grid.
    to_bw == from_bw returns an identical copy (no resampling pass).

    Raises:
        InvalidBandwidthError: to_bw > from_bw (upsampling cannot create
            information).
        DomainError: non-positive bandwidth.
    """
    if from_bw <= 0 or to_bw <= 0:
        raise DomainError("bandwidths must be positive")
    if to_bw > from_bw:
        raise InvalidBandwidthError(
            f"target bandwidth {to_bw} exceeds source bandwidth {from_bw}")
    img = np.asarray(img, dtype=np.float64)
    if to_bw == from_bw:
        return img.copy()
    small_shape = intermediate_shape(img.shape, from_bw, to_bw)
    small = resize(img, small_shape, down_kernel)
    return resize(small, img.shape[:2], up_kernel)
