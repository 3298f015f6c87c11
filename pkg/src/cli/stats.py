"""Percentage torque errors against a baseline"""

import logging
from dataclasses import dataclass

import numpy as np

from config.settings import Settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ErrorStats:
    """Per-joint statistics of 100 |tau - tau_ref| / |tau_ref|.

    Samples whose baseline magnitude is below the floor are left out of the
    percentage statistics and counted in ``excluded``.
    """

    mean_percent: np.ndarray
    std_percent: np.ndarray
    max_relative: np.ndarray
    excluded: np.ndarray
    samples: int

    @property
    def n(self) -> int:
        return int(self.mean_percent.shape[0])

    def exceeds(self, threshold_percent: float) -> bool:
        return bool(np.any(self.mean_percent > threshold_percent))


def error_stats(
    values: np.ndarray, baseline: np.ndarray, floor: float = Settings.BASELINE_FLOOR
) -> ErrorStats:
    values = np.atleast_2d(np.asarray(values, dtype=float))
    baseline = np.atleast_2d(np.asarray(baseline, dtype=float))
    if values.shape != baseline.shape:
        raise ValueError(f"shape mismatch {values.shape} vs {baseline.shape}")

    samples, joints = baseline.shape
    mean = np.zeros(joints)
    std = np.zeros(joints)
    worst = np.zeros(joints)
    excluded = np.zeros(joints, dtype=int)
    for j in range(joints):
        kept = np.abs(baseline[:, j]) >= floor
        excluded[j] = int(samples - np.count_nonzero(kept))
        if not np.any(kept):
            continue
        relative = np.abs(values[kept, j] - baseline[kept, j]) / np.abs(baseline[kept, j])
        # numpy reduces with pairwise summation, so the result is order stable
        mean[j] = 100.0 * np.mean(relative)
        std[j] = 100.0 * np.std(relative)
        worst[j] = np.max(relative)

    if np.any(excluded):
        logger.warning("Excluded near-zero baseline samples per joint: %s", excluded.tolist())
    return ErrorStats(mean, std, worst, excluded, samples)
