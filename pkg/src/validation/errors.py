"""Exception hierarchy shared by the library and the command line"""

from typing import Optional


class DynamicsError(Exception):
    """Base class for all toolkit errors"""


class InvalidPoseError(DynamicsError):
    """A dual quaternion used as a pose is not unit within tolerance"""

    def __init__(self, message: str, defect: Optional[float] = None):
        super().__init__(message)
        self.defect = defect


class DomainError(DynamicsError):
    """An argument lies outside the domain of an operation"""


class InputError(DynamicsError):
    """User-supplied numbers are malformed (wrong length, non-finite)"""


class ConfigurationError(DynamicsError):
    """A chain or joint is missing something an operation needs"""


class NumericalError(DynamicsError):
    """A linear solve cannot be trusted"""

    def __init__(self, message: str, condition: Optional[float] = None):
        super().__init__(message)
        self.condition = condition


class SchemaError(InputError):
    """A robot or trajectory file violates its schema"""

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        link_index: Optional[int] = None,
    ):
        location = []
        if line is not None:
            location.append(f"line {line}")
        if link_index is not None:
            location.append(f"link {link_index}")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(prefix + message)
        self.line = line
        self.link_index = link_index
