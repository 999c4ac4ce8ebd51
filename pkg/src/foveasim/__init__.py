"""Foveated-imaging simulation and planning toolkit.

Models cameras as fixed angular-sample budgets, composites multi-fovea
images from wide-angle and focused content, plans optically feasible
fovea placements from attention masks, and evaluates depth-map quality
under adaptive versus uniform resolution distribution.
"""

from .attention import (DEPTH_SENTINEL, edge_attention, error_attention,
                        scale_n_for_sparse_ref, top_n_binarize)
from .camera import BandwidthBudget, CameraModel, fovea_count, make_budget
from .compositing import BlendConfig, composite, feather, oracle_substitute
from .errors import (BudgetError, DegenerateScaleError, DomainError,
                     EmptyEvaluationError, FoveaSimError,
                     InfeasiblePlanError, InfeasibleRateError,
                     InvalidBandwidthError, InvalidBudgetError,
                     OutOfRangeError, ShapeError)
from .imageio import (read_image, read_pfm, read_png, write_image,
                      write_pfm, write_png)
from .metrics import DepthMetrics, evaluate, median_scale
from .mirror import (FrameSchedule, MirrorModel, ScheduleEvent,
                     build_schedule, direction_to_voltage, plan_voltages,
                     simulate_frame, voltage_to_direction)
from .oracle import (photometric_error_field, run_equiangular_baseline,
                     run_photometric_oracle, run_true_oracle)
from .planner import (Fovea, FoveaPlan, coverage_score, greedy_plan,
                      plan_from_budget, plan_to_mask)
from .resample import realized_bandwidth, resize, simulate_bandwidth

__version__ = "0.1.0"
