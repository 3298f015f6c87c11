"""Batch command-line front end"""

from .commands import (
    ENGINES,
    ValidationReport,
    cmd_cost,
    cmd_idyn,
    cmd_validate,
    compute_torques,
    cost_header,
    sample_joint_states,
)
from .oracle import TwoLinkParams, analytical_two_link, two_link_chain
from .output import emit, save_report
from .robots import load_builtin, resolve_robot
from .stats import ErrorStats, error_stats
from .trajectory import Trajectory, load_trajectory, parse_trajectory, trajectory_header

__all__ = [
    "ENGINES",
    "ErrorStats",
    "Trajectory",
    "TwoLinkParams",
    "ValidationReport",
    "analytical_two_link",
    "cmd_cost",
    "cmd_idyn",
    "cmd_validate",
    "compute_torques",
    "cost_header",
    "emit",
    "error_stats",
    "load_builtin",
    "load_trajectory",
    "parse_trajectory",
    "resolve_robot",
    "sample_joint_states",
    "save_report",
    "trajectory_header",
    "two_link_chain",
]
