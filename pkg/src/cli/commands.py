"""The idyn, validate and cost subcommands.

Each command returns its report as text; ``main`` decides where it goes.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np

from chain import SerialChain
from config.settings import Settings, ValidationSettings
from costmodel import classic_baselines, cost_gplc, cost_ne, format_number
from dqne import inverse_dynamics
from gplc import el_inverse_dynamics
from validation.errors import InputError
from validation.validator import InputValidator
from .oracle import TwoLinkParams, analytical_two_link
from .stats import ErrorStats, error_stats
from .trajectory import Trajectory

logger = logging.getLogger(__name__)

Engine = Callable[[SerialChain, np.ndarray, np.ndarray, np.ndarray], Iterable[float]]

ENGINES: Dict[str, Engine] = {
    "dqne": inverse_dynamics,
    "dqgp": el_inverse_dynamics,
}


def _engine(method: str) -> Engine:
    if method not in ENGINES:
        raise InputError(f"unknown method {method!r}; choose from {', '.join(ENGINES)}")
    return ENGINES[method]


def _number(value: float) -> str:
    return repr(float(value))


# idyn


def compute_torques(chain: SerialChain, trajectory: Trajectory, method: str) -> np.ndarray:
    engine = _engine(method)
    if trajectory.n != chain.n:
        raise InputError(
            f"trajectory has {trajectory.n} joints, robot {chain.name} has {chain.n}"
        )
    torques = np.zeros((len(trajectory), chain.n))
    for k, (_, q, qdot, qddot) in enumerate(trajectory.rows()):
        torques[k] = np.asarray(list(engine(chain, q, qdot, qddot)), dtype=float)
    return torques


def cmd_idyn(chain: SerialChain, trajectory: Trajectory, method: str) -> str:
    """One CSV row (t, tau_1..tau_n) per trajectory row; nothing for an empty trajectory"""
    torques = compute_torques(chain, trajectory, method)
    if not len(trajectory):
        return ""
    lines = [",".join(["t"] + [f"tau{j}" for j in range(1, chain.n + 1)])]
    for t, row in zip(trajectory.times, torques):
        lines.append(",".join([_number(t)] + [_number(v) for v in row]))
    return "\n".join(lines) + "\n"


# validate


@dataclass(frozen=True, eq=False)
class ValidationReport:
    robot: str
    n: int
    settings: ValidationSettings
    baseline: str
    results: Dict[str, ErrorStats] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not any(
            stats.exceeds(self.settings.threshold_percent) for stats in self.results.values()
        )

    def worst_mean_percent(self) -> float:
        return max(float(np.max(stats.mean_percent)) for stats in self.results.values())

    def render(self) -> str:
        lines = [
            f"# robot {self.robot}, {self.n} joints, {self.settings.samples} samples, "
            f"seed {self.settings.seed}, baseline {self.baseline}",
            "method,joint,mean_error_percent,std_error_percent,max_relative_error,excluded",
        ]
        for method, stats in self.results.items():
            for j in range(stats.n):
                lines.append(
                    f"{method},{j + 1},{stats.mean_percent[j]:.6e},{stats.std_percent[j]:.6e},"
                    f"{stats.max_relative[j]:.6e},{int(stats.excluded[j])}"
                )
        return "\n".join(lines) + "\n"


def sample_joint_states(
    n: int, settings: ValidationSettings
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Uniform (q, qdot, qddot) samples, each of shape (samples, n)"""
    rng = np.random.default_rng(settings.seed)
    shape = (settings.samples, n)
    q = rng.uniform(*settings.q_range, size=shape)
    qdot = rng.uniform(*settings.qdot_range, size=shape)
    qddot = rng.uniform(*settings.qddot_range, size=shape)
    return q, qdot, qddot


def _evaluate(chain, engine: Engine, q, qdot, qddot) -> np.ndarray:
    torques = np.zeros(q.shape)
    for k in range(q.shape[0]):
        torques[k] = np.asarray(list(engine(chain, q[k], qdot[k], qddot[k])), dtype=float)
    return torques


def cmd_validate(
    chain: SerialChain,
    settings: ValidationSettings = ValidationSettings(),
    oracle: Optional[TwoLinkParams] = None,
) -> ValidationReport:
    """Compare the two formulations on random samples.

    With ``oracle`` both are checked against the closed-form two-link
    torques; otherwise the recursive formulation is the baseline.
    """
    InputValidator.validate_sample_count(settings.samples)
    InputValidator.validate_threshold(settings.threshold_percent)
    if oracle is not None and chain.n != 2:
        raise InputError("the analytical baseline needs a two-joint robot")

    q, qdot, qddot = sample_joint_states(chain.n, settings)
    logger.info("Validating %s on %d samples (seed %d)", chain.name, settings.samples, settings.seed)

    dqne = _evaluate(chain, ENGINES["dqne"], q, qdot, qddot)
    dqgp = _evaluate(chain, ENGINES["dqgp"], q, qdot, qddot)

    if oracle is not None:
        reference = np.array(
            [analytical_two_link(oracle, q[k], qdot[k], qddot[k]) for k in range(q.shape[0])]
        )
        results = {
            "dqne": error_stats(dqne, reference, settings.baseline_floor),
            "dqgp": error_stats(dqgp, reference, settings.baseline_floor),
        }
        baseline = "analytical"
    else:
        results = {"dqgp": error_stats(dqgp, dqne, settings.baseline_floor)}
        baseline = "dqne"

    return ValidationReport(chain.name, chain.n, settings, baseline, results)


# cost

NE_PARTS = ("fkine", "twists", "twist_derivatives", "wrenches", "total")
GP_PARTS = ("jacobians", "jacobian_derivatives", "inertia", "coriolis", "gravity", "total")
CLASSIC_PARTS = ("classic_ne", "classic_el")


def cost_header() -> List[str]:
    columns = ["n"]
    for prefix, parts in (("dqne", NE_PARTS), ("dqgp", GP_PARTS)):
        for part in parts:
            columns += [f"{prefix}_{part}_mults", f"{prefix}_{part}_adds"]
    for part in CLASSIC_PARTS:
        columns += [f"{part}_mults", f"{part}_adds"]
    return columns


def cost_entries(n: int) -> List[Tuple[str, str, object]]:
    """(method, part, OpCost) for one link count"""
    ne = cost_ne(n)
    gp = cost_gplc(n)
    classic = classic_baselines(n)
    entries = [("dqne", part, ne[part]) for part in NE_PARTS]
    entries += [("dqgp", part, gp[part]) for part in GP_PARTS]
    entries += [("classic", part.replace("classic_", ""), classic[part]) for part in CLASSIC_PARTS]
    return entries


def _cost_csv(n_values: Iterable[int]) -> str:
    lines = [",".join(cost_header())]
    for n in n_values:
        fields = [str(n)]
        for _, _, cost in cost_entries(n):
            fields += [format_number(cost.mults), format_number(cost.adds)]
        lines.append(",".join(fields))
    return "\n".join(lines) + "\n"


def _cost_table(n_values: Iterable[int]) -> str:
    blocks = []
    for n in n_values:
        rows = [("method", "part", "mults", "adds")]
        rows += [
            (method, part, format_number(cost.mults), format_number(cost.adds))
            for method, part, cost in cost_entries(n)
        ]
        widths = [max(len(row[c]) for row in rows) for c in range(4)]
        lines = [f"n = {n}"]
        for row in rows:
            lines.append(
                f"{row[0]:<{widths[0]}}  {row[1]:<{widths[1]}}  "
                f"{row[2]:>{widths[2]}}  {row[3]:>{widths[3]}}"
            )
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def cmd_cost(n_values: Iterable[int], output_format: str = "csv") -> str:
    n_values = list(n_values)
    if not n_values or min(n_values) < 1:
        raise InputError("link counts must be positive")
    if output_format not in Settings.OUTPUT_FORMATS:
        raise InputError(
            f"unknown format {output_format!r}; choose from {', '.join(Settings.OUTPUT_FORMATS)}"
        )
    if output_format == "csv":
        return _cost_csv(n_values)
    return _cost_table(n_values)
