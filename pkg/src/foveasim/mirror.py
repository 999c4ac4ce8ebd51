"""Mirror pointing model and per-frame capture scheduling.

A frame is: one wide-angle capture, then for each planned fovea a mirror
move (settle time) followed by a telephoto capture.  Pointing maps pixel
locations to normalized drive voltages through pinhole angles and an
affine voltage-to-angle model (angle = max_angle * voltage per axis).
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .compositing import BlendConfig, composite, feather
from .errors import DomainError, InfeasibleRateError, OutOfRangeError
from .planner import FoveaPlan, plan_to_mask


@dataclass(frozen=True)
class MirrorModel:
    """Two-axis mirror: mechanical half-range per axis plus settle time."""

    max_angle: float          # degrees per axis
    settle_time: float        # ms per move
    voltage_range: tuple = (-1.0, 1.0)

    def __post_init__(self):
        if self.max_angle <= 0:
            raise DomainError("max angle must be positive")
        if self.settle_time < 0:
            raise DomainError("settle time must be nonnegative")


@dataclass(frozen=True)
class ScheduleEvent:
    kind: str                 # wac_capture | mirror_move | tele_capture
    start: float              # ms
    duration: float           # ms
    fovea_index: int = None   # 1-based, None for wac_capture


@dataclass(frozen=True)
class FrameSchedule:
    events: tuple
    frame_period: float

    @property
    def total_duration(self):
        if not self.events:
            return 0.0
        last = self.events[-1]
        return last.start + last.duration

    def to_json_obj(self):
        return {
            "frame_period_ms": self.frame_period,
            "total_duration_ms": self.total_duration,
            "events": [
                {"kind": e.kind, "start_ms": e.start, "duration_ms": e.duration,
                 "fovea_index": e.fovea_index}
                for e in self.events
            ],
        }


def direction_to_voltage(peak, wac, mirror):
    """Map a (row, col) pixel to normalized (v_theta, v_phi) drive voltages.

    theta comes from the column offset, phi from the row offset, both as
    pinhole angles atan(offset / focal_px).  Raises OutOfRangeError when
    the implied angle exceeds the mirror's mechanical range.
    """
    row, col = peak
    cx, cy = wac.principal_point
    f_px = wac.focal_length_px
    theta = math.degrees(math.atan2(col - cx, f_px))
    phi = math.degrees(math.atan2(row - cy, f_px))
    v_theta = theta / mirror.max_angle
    v_phi = phi / mirror.max_angle
    lo, hi = mirror.voltage_range
    if not (lo <= v_theta <= hi and lo <= v_phi <= hi):
        raise OutOfRangeError(
            f"pixel {peak} needs angles ({theta:.2f}, {phi:.2f}) deg, "
            f"beyond +/-{mirror.max_angle} deg")
    return v_theta, v_phi


def voltage_to_direction(voltages, wac, mirror):
    """Inverse of direction_to_voltage; returns float (row, col)."""
    v_theta, v_phi = voltages
    cx, cy = wac.principal_point
    f_px = wac.focal_length_px
    col = cx + f_px * math.tan(math.radians(v_theta * mirror.max_angle))
    row = cy + f_px * math.tan(math.radians(v_phi * mirror.max_angle))
    return row, col


def plan_voltages(plan: FoveaPlan, wac, mirror):
    """Voltage pair per fovea, in capture order."""
    return [direction_to_voltage(f.peak, wac, mirror) for f in plan.fovea]


def build_schedule(plan: FoveaPlan, mirror: MirrorModel, wac_exposure,
                   tele_exposure, frame_period) -> FrameSchedule:
    """Lay out one frame's capture events and check they fit the period.

    Raises InfeasibleRateError (carrying the achievable fovea count) when
    the total exceeds frame_period.
    """
    if min(wac_exposure, tele_exposure, frame_period) < 0:
        raise DomainError("times must be nonnegative")
    per_fovea = mirror.settle_time + tele_exposure
    total = wac_exposure + len(plan) * per_fovea
    if total > frame_period:
        achievable = int((frame_period - wac_exposure) // per_fovea) \
            if per_fovea > 0 else len(plan)
        achievable = max(achievable, 0)
        raise InfeasibleRateError(
            f"{len(plan)} fovea need {total} ms > period {frame_period} ms; "
            f"at most {achievable} fovea fit", achievable)
    events = [ScheduleEvent("wac_capture", 0.0, wac_exposure)]
    t = wac_exposure
    for f in plan.fovea:
        events.append(ScheduleEvent("mirror_move", t, mirror.settle_time, f.order))
        t += mirror.settle_time
        events.append(ScheduleEvent("tele_capture", t, tele_exposure, f.order))
        t += tele_exposure
    return FrameSchedule(events=tuple(events), frame_period=frame_period)


def simulate_frame(wac_img, full_img, plan: FoveaPlan, cfg=BlendConfig()):
    """Render one composite frame: full-resolution fovea over WAC periphery.

    The telephoto captures are simulated as crops of the full-bandwidth
    image at the plan windows; the plan rasterizes to a binary mask that
    is optionally feathered before blending.
    """
    wac_img = np.asarray(wac_img, dtype=np.float64)
    mask = plan_to_mask(plan, wac_img.shape[:2])
    if cfg.feather_radius > 0:
        mask = feather(mask, cfg.feather_radius)
    return composite(wac_img, full_img, mask, cfg)
