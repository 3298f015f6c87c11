"""Input validation for chain parameters, joint vectors, CLI arguments and input files"""

import math
import re
from typing import Iterable, Optional, Sequence

import numpy as np

from config.settings import Settings
from .errors import DomainError, InputError, SchemaError


class InputValidator:
    """Validates numbers coming from users, files and the command line"""

    # "7", "1..3" or "1-7"
    N_RANGE_PATTERN = re.compile(r"^\s*([0-9]+)\s*(?:(?:\.\.|-)\s*([0-9]+))?\s*$")

    @staticmethod
    def validate_finite_vector(
        values: Iterable[float], length: Optional[int] = None, name: str = "vector"
    ) -> np.ndarray:
        """Return values as a float array, rejecting non-finite entries and wrong lengths"""
        try:
            array = np.asarray(list(values), dtype=float)
        except (TypeError, ValueError) as e:
            raise InputError(f"{name} must contain real numbers: {e}") from e

        if array.ndim != 1:
            raise InputError(f"{name} must be one-dimensional")
        if length is not None and array.shape[0] != length:
            raise InputError(f"{name} has length {array.shape[0]}, expected {length}")
        if not np.all(np.isfinite(array)):
            raise InputError(f"{name} contains non-finite values")
        return array

    @staticmethod
    def validate_scalar(value: float, name: str = "value") -> float:
        try:
            number = float(value)
        except (TypeError, ValueError) as e:
            raise InputError(f"{name} must be a real number") from e
        if not math.isfinite(number):
            raise InputError(f"{name} must be finite")
        return number

    @staticmethod
    def validate_unit_axis(axis: Sequence[float]) -> np.ndarray:
        vector = InputValidator.validate_finite_vector(axis, 3, "axis")
        if abs(np.linalg.norm(vector) - 1.0) > Settings.AXIS_TOLERANCE:
            raise DomainError(
                f"axis norm is {np.linalg.norm(vector)!r}, expected 1"
            )
        return vector

    @staticmethod
    def validate_mass(mass: float) -> float:
        value = InputValidator.validate_scalar(mass, "mass")
        if value <= 0.0:
            raise DomainError(f"mass must be positive, got {value}")
        return value

    @staticmethod
    def validate_inertia(inertia) -> np.ndarray:
        """Inertia tensors must be 3x3, symmetric and positive definite"""
        try:
            matrix = np.asarray(inertia, dtype=float)
        except (TypeError, ValueError) as e:
            raise InputError("inertia must be a 3x3 matrix of reals") from e

        if matrix.shape != (3, 3):
            raise InputError(f"inertia must be 3x3, got shape {matrix.shape}")
        if not np.all(np.isfinite(matrix)):
            raise InputError("inertia contains non-finite values")
        if np.max(np.abs(matrix - matrix.T)) > Settings.SYMMETRY_TOLERANCE:
            raise DomainError("inertia is not symmetric")
        if np.min(np.linalg.eigvalsh(matrix)) <= 0.0:
            raise DomainError("inertia is not positive definite")
        return matrix

    @staticmethod
    def validate_sample_count(samples: int) -> int:
        if isinstance(samples, bool) or int(samples) != samples or samples < 1:
            raise InputError(f"samples must be a positive integer, got {samples}")
        return int(samples)

    @staticmethod
    def validate_threshold(threshold: float) -> float:
        value = InputValidator.validate_scalar(threshold, "threshold")
        if value < 0.0:
            raise InputError(f"threshold must not be negative, got {value}")
        return value

    @staticmethod
    def parse_n_range(text: str) -> range:
        """Parse "N", "A..B" or "A-B" into an inclusive range of link counts"""
        match = InputValidator.N_RANGE_PATTERN.match(text or "")
        if not match:
            raise InputError(f"invalid n range {text!r}; use N, A..B or A-B")

        start = int(match.group(1))
        stop = int(match.group(2)) if match.group(2) is not None else start
        if start < 1 or stop < start:
            raise InputError(f"invalid n range {text!r}; need 1 <= A <= B")
        return range(start, stop + 1)


def read_text_file(path: str, kind: str) -> str:
    """Whole file as text. Unreadable or non-UTF-8 files raise SchemaError."""
    try:
        with open(path, "rb") as f:
            raw = f.read()
    except OSError as e:
        raise SchemaError(f"cannot read {kind} file {path}: {e.strerror}") from e
    try:
        return raw.decode("utf-8-sig")
    except UnicodeDecodeError as e:
        line = raw[: e.start].count(b"\n") + 1
        raise SchemaError(f"{kind} file is not UTF-8 text", line=line) from e
