from .errors import (
    ConfigurationError,
    DomainError,
    DynamicsError,
    InputError,
    InvalidPoseError,
    NumericalError,
    SchemaError,
)
from .validator import InputValidator

__all__ = [
    "ConfigurationError",
    "DomainError",
    "DynamicsError",
    "InputError",
    "InputValidator",
    "InvalidPoseError",
    "NumericalError",
    "SchemaError",
]
