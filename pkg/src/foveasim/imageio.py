"""File formats: 8-bit PNG for color, PFM for depth and attention maps.

PFM follows the portable-float-map convention: "Pf" (grayscale) or "PF"
(3-channel) header, width/height line, scale line whose sign encodes
endianness (negative = little-endian), rows stored bottom-to-top.
"""

import numpy as np
from PIL import Image as PILImage

from .errors import DomainError


def read_pfm(path):
    """Read a PFM file into a float64 array (H, W) or (H, W, 3)."""
    with open(path, "rb") as f:
        header = f.readline().rstrip()
        if header == b"Pf":
            channels = 1
        elif header == b"PF":
            channels = 3
        else:
            raise DomainError(f"{path}: not a PFM file (header {header!r})")
        dims = f.readline().split()
        width, height = int(dims[0]), int(dims[1])
        scale = float(f.readline().strip())
        dtype = "<f4" if scale < 0 else ">f4"
        data = np.frombuffer(f.read(width * height * channels * 4), dtype=dtype)
    shape = (height, width) if channels == 1 else (height, width, 3)
    img = data.reshape(shape)
    return np.flipud(img).astype(np.float64)


def write_pfm(path, img):
    """Write a 2-D or (H, W, 3) float array as little-endian PFM."""
    img = np.asarray(img, dtype=np.float32)
    if img.ndim == 2:
        header = b"Pf"
    elif img.ndim == 3 and img.shape[2] == 3:
        header = b"PF"
    else:
        raise DomainError(f"cannot write shape {img.shape} as PFM")
    h, w = img.shape[:2]
    with open(path, "wb") as f:
        f.write(header + b"\n")
        f.write(f"{w} {h}\n".encode())
        f.write(b"-1.0\n")
        f.write(np.flipud(img).astype("<f4").tobytes())


def read_png(path):
    """Read an 8-bit PNG into floats in [0, 1]; (H, W) gray or (H, W, 3)."""
    with PILImage.open(path) as im:
        if im.mode not in ("L", "RGB"):
            im = im.convert("RGB")
        arr = np.asarray(im, dtype=np.float64)
    return arr / 255.0


def write_png(path, img):
    """Write floats in [0, 1] as an 8-bit PNG (values clipped, rounded)."""
    img = np.clip(np.asarray(img, dtype=np.float64), 0.0, 1.0)
    arr = np.round(img * 255.0).astype(np.uint8)
    PILImage.fromarray(arr).save(path, format="PNG")


def read_image(path):
    """Dispatch on extension: .pfm or .png."""
    p = str(path).lower()
    if p.endswith(".pfm"):
        return read_pfm(path)
    if p.endswith(".png"):
        return read_png(path)
    raise DomainError(f"unsupported image extension: {path}")


def write_image(path, img):
    p = str(path).lower()
    if p.endswith(".pfm"):
        write_pfm(path, img)
    elif p.endswith(".png"):
        write_png(path, img)
    else:
        raise DomainError(f"unsupported image extension: {path}")
