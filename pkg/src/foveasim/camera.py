"""Camera models and angular-sample (bandwidth) budgets.

A camera is described by its pixel grid plus a linear sampling density in
pixels per millimeter of focal plane (px/mm).  Budgets account for how the
fixed angular-sample total is split between a low-resolution wide-angle
capture and a set of full-resolution fovea.
"""

from dataclasses import dataclass

from .errors import DomainError, InvalidBudgetError


@dataclass(frozen=True)
class CameraModel:
    """Pinhole camera with a px/mm sampling density.

    Attributes:
        width, height: sensor size in pixels.
        focal_length: focal length in millimeters.
        pixel_pitch_inverse: pixels per millimeter on the focal plane;
            this is the camera's linear bandwidth figure.
        principal_point: (cx, cy) in pixels; defaults to the image center.
    """

    width: int
    height: int
    focal_length: float
    pixel_pitch_inverse: float
    principal_point: tuple = None

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise DomainError("camera dimensions must be positive")
        if self.focal_length <= 0:
            raise DomainError("focal length must be positive")
        if self.pixel_pitch_inverse <= 0:
            raise DomainError("pixel pitch inverse must be positive")
        if self.principal_point is None:
            object.__setattr__(
                self, "principal_point",
                ((self.width - 1) / 2.0, (self.height - 1) / 2.0))

    @property
    def angular_sample_count(self):
        return self.width * self.height

    @property
    def focal_length_px(self):
        """Focal length expressed in pixels."""
        return self.focal_length * self.pixel_pitch_inverse


@dataclass(frozen=True)
class BandwidthBudget:
    """Split of a fixed angular-sample total across WAC and fovea.

    px/mm is a linear density, so area accounting squares it: the fovea
    area fraction is (target^2 - wac^2) / full^2 of the full-resolution
    pixel grid.
    """

    full_bw: float
    target_bw: float
    wac_bw: float
    fovea_area_fraction: float
    fovea_pixel_budget: int


def make_budget(full: CameraModel, target_bw: float, wac_bw: float) -> BandwidthBudget:
    """Build the bandwidth budget for a (full, target, wac) px/mm triple.

    Raises InvalidBudgetError unless 0 < wac_bw <= target_bw <= full bandwidth.
    """
    full_bw = full.pixel_pitch_inverse
    if not (0 < wac_bw <= target_bw <= full_bw):
        raise InvalidBudgetError(
            f"need 0 < wac ({wac_bw}) <= target ({target_bw}) <= full ({full_bw})")
    fraction = (target_bw ** 2 - wac_bw ** 2) / full_bw ** 2
    pixel_budget = int(round(fraction * full.angular_sample_count))
    return BandwidthBudget(
        full_bw=full_bw,
        target_bw=target_bw,
        wac_bw=wac_bw,
        fovea_area_fraction=fraction,
        fovea_pixel_budget=pixel_budget,
    )


def fovea_count(budget: BandwidthBudget, fovea_window) -> tuple:
    """Number of fixed-size fovea the pixel budget affords.

    Args:
        fovea_window: (height, width) of one fovea in pixels.

    Returns:
        (count, remainder) where count = floor(budget / window area) and
        remainder is the leftover pixel budget, never allocated.
    """
    h, w = fovea_window
    area = h * w
    if area <= 0:
        raise DomainError("fovea window must have positive area")
    count = budget.fovea_pixel_budget // area
    remainder = budget.fovea_pixel_budget - count * area
    return count, remainder
