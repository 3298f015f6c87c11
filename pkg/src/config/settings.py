"""Default tolerances, sampling ranges and validation settings"""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np


class Settings:
    """Project-wide defaults"""

    # Algebra tolerances
    UNIT_TOLERANCE = 1e-12
    RENORMALIZE_LIMIT = 1e-6
    PURITY_TOLERANCE = 1e-12
    AXIS_TOLERANCE = 1e-12
    SYMMETRY_TOLERANCE = 1e-12

    # Inertial frame gravity (m/s^2)
    DEFAULT_GRAVITY: Tuple[float, float, float] = (0.0, 0.0, -9.81)

    # Random sampling ranges used by the validate command
    Q_RANGE = (-math.pi, math.pi)
    QDOT_RANGE = (-2.0, 2.0)
    QDDOT_RANGE = (-5.0, 5.0)

    # Validation defaults
    DEFAULT_SAMPLES = 10000
    DEFAULT_SEED = 0
    DEFAULT_THRESHOLD_PERCENT = 1e-6
    BASELINE_FLOOR = 1e-9

    # Forward dynamics refuses inertia matrices worse conditioned than this
    CONDITION_LIMIT = 1.0 / math.sqrt(np.finfo(float).eps)

    BUILTIN_ROBOTS = ("twolink", "seven")
    METHODS = ("dqne", "dqgp")
    OUTPUT_FORMATS = ("csv", "table")


@dataclass(frozen=True)
class ValidationSettings:
    samples: int = Settings.DEFAULT_SAMPLES
    seed: int = Settings.DEFAULT_SEED
    threshold_percent: float = Settings.DEFAULT_THRESHOLD_PERCENT
    baseline_floor: float = Settings.BASELINE_FLOOR
    q_range: Tuple[float, float] = Settings.Q_RANGE
    qdot_range: Tuple[float, float] = Settings.QDOT_RANGE
    qddot_range: Tuple[float, float] = Settings.QDDOT_RANGE
