"""Joint trajectory files.

Comma-separated, one header row, then one row per sample:

    t,q1..qn,qdot1..qdotn,qddot1..qddotn

Times must be strictly increasing. Errors carry the 1-based file line.
"""

import csv
import io
import logging
import math
import os
from dataclasses import dataclass
from typing import Iterator, List, Tuple

import numpy as np

from validation.errors import SchemaError
from validation.validator import read_text_file

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Trajectory:
    n: int
    times: np.ndarray  # (samples,)
    q: np.ndarray  # (samples, n)
    qdot: np.ndarray
    qddot: np.ndarray

    def __len__(self) -> int:
        return int(self.times.shape[0])

    def rows(self) -> Iterator[Tuple[float, np.ndarray, np.ndarray, np.ndarray]]:
        for k in range(len(self)):
            yield float(self.times[k]), self.q[k], self.qdot[k], self.qddot[k]

    @classmethod
    def empty(cls, n: int) -> "Trajectory":
        return cls(n, np.zeros(0), np.zeros((0, n)), np.zeros((0, n)), np.zeros((0, n)))


def trajectory_header(n: int) -> List[str]:
    return (
        ["t"]
        + [f"q{j}" for j in range(1, n + 1)]
        + [f"qdot{j}" for j in range(1, n + 1)]
        + [f"qddot{j}" for j in range(1, n + 1)]
    )


def _parse_row(fields: List[str], width: int, line: int) -> List[float]:
    if len(fields) != width:
        raise SchemaError(f"expected {width} columns, got {len(fields)}", line=line)
    values = []
    for column, text in enumerate(fields, start=1):
        try:
            value = float(text)
        except ValueError:
            raise SchemaError(
                f"column {column} is not a number: {text.strip()!r}", line=line
            ) from None
        if not math.isfinite(value):
            raise SchemaError(f"column {column} is not finite", line=line)
        values.append(value)
    return values


def parse_trajectory(text: str, n: int) -> Trajectory:
    width = 1 + 3 * n
    header = trajectory_header(n)
    reader = csv.reader(io.StringIO(text))

    rows: List[List[float]] = []
    header_seen = False
    previous_time = -math.inf
    for fields in reader:
        line = reader.line_num
        if not fields or all(not field.strip() for field in fields):
            continue
        if not header_seen:
            header_seen = True
            if len(fields) != width:
                raise SchemaError(
                    f"header has {len(fields)} columns, expected {width} for {n} joints",
                    line=line,
                )
            names = [field.strip() for field in fields]
            if names != header:
                raise SchemaError(
                    f"header must read {','.join(header)}, got {','.join(names)}",
                    line=line,
                )
            continue
        values = _parse_row(fields, width, line)
        if values[0] <= previous_time:
            raise SchemaError("time stamps must be strictly increasing", line=line)
        previous_time = values[0]
        rows.append(values)

    if not rows:
        return Trajectory.empty(n)

    data = np.array(rows, dtype=float)
    return Trajectory(
        n,
        data[:, 0].copy(),
        data[:, 1 : 1 + n].copy(),
        data[:, 1 + n : 1 + 2 * n].copy(),
        data[:, 1 + 2 * n :].copy(),
    )


def load_trajectory(path: str, n: int) -> Trajectory:
    if not os.path.exists(path):
        raise SchemaError(f"trajectory file not found: {path}")
    trajectory = parse_trajectory(read_text_file(path, "trajectory"), n)
    logger.debug("Loaded %d trajectory rows from %s", len(trajectory), path)
    return trajectory
