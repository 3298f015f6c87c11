"""Runtime scalar operation counting

A ``CountingScalar`` wraps a float and reports each multiplication (negation
and division included) and each addition or subtraction to the ``OpCounter``
it was created with. Counters are explicit accumulators; nothing is counted
globally.
"""

import numbers
from typing import Any, Callable

import numpy as np

from dqalg import DualQuaternion, Pose, Quaternion
from .polynomial import OpCost


class OpCounter:
    """Accumulates scalar multiplications and additions"""

    def __init__(self):
        self.mults = 0
        self.adds = 0

    def reset(self) -> None:
        self.mults = 0
        self.adds = 0

    def cost(self) -> OpCost:
        return OpCost(self.mults, self.adds)

    def scalar(self, value: float) -> "CountingScalar":
        return CountingScalar(value, self)

    def __repr__(self) -> str:
        return f"OpCounter(mults={self.mults}, adds={self.adds})"


def _value(other):
    return other.value if isinstance(other, CountingScalar) else other


class CountingScalar:
    __slots__ = ("value", "counter")

    # numpy scalars defer to the reflected operators below
    __array_ufunc__ = None

    def __init__(self, value: float, counter: OpCounter):
        self.value = float(value)
        self.counter = counter

    def _mult(self, result: float) -> "CountingScalar":
        self.counter.mults += 1
        return CountingScalar(result, self.counter)

    def _add(self, result: float) -> "CountingScalar":
        self.counter.adds += 1
        return CountingScalar(result, self.counter)

    def __mul__(self, other):
        if not isinstance(other, (CountingScalar, numbers.Real)):
            return NotImplemented
        return self._mult(self.value * _value(other))

    def __rmul__(self, other):
        if not isinstance(other, numbers.Real):
            return NotImplemented
        return self._mult(float(other) * self.value)

    def __truediv__(self, other):
        if not isinstance(other, (CountingScalar, numbers.Real)):
            return NotImplemented
        return self._mult(self.value / _value(other))

    def __rtruediv__(self, other):
        if not isinstance(other, numbers.Real):
            return NotImplemented
        return self._mult(float(other) / self.value)

    def __add__(self, other):
        if not isinstance(other, (CountingScalar, numbers.Real)):
            return NotImplemented
        return self._add(self.value + _value(other))

    def __radd__(self, other):
        if not isinstance(other, numbers.Real):
            return NotImplemented
        return self._add(float(other) + self.value)

    def __sub__(self, other):
        if not isinstance(other, (CountingScalar, numbers.Real)):
            return NotImplemented
        return self._add(self.value - _value(other))

    def __rsub__(self, other):
        if not isinstance(other, numbers.Real):
            return NotImplemented
        return self._add(float(other) - self.value)

    def __neg__(self):
        return self._mult(-self.value)

    def __pos__(self):
        return self

    # conversions and comparisons are free
    def __float__(self) -> float:
        return self.value

    def __abs__(self) -> float:
        return abs(self.value)

    def __eq__(self, other) -> bool:
        return self.value == _value(other)

    def __lt__(self, other) -> bool:
        return self.value < _value(other)

    def __le__(self, other) -> bool:
        return self.value <= _value(other)

    def __gt__(self, other) -> bool:
        return self.value > _value(other)

    def __ge__(self, other) -> bool:
        return self.value >= _value(other)

    def __hash__(self):
        return hash(self.value)

    def __repr__(self) -> str:
        return f"CountingScalar({self.value!r})"


def instrument(value: Any, counter: OpCounter) -> Any:
    """Replace every real coefficient reachable from value by a CountingScalar.

    Quaternions, dual quaternions, poses, plain numbers, lists, tuples and 1-D
    arrays are instrumented; other objects (chains, matrices) are passed
    through untouched.
    """
    if isinstance(value, CountingScalar):
        return CountingScalar(value.value, counter)
    if isinstance(value, bool):
        return value
    if isinstance(value, numbers.Real):
        return CountingScalar(value, counter)
    if isinstance(value, Quaternion):
        return Quaternion(*(instrument(c, counter) for c in value.coefficients))
    if isinstance(value, Pose):
        return Pose(instrument(value.value, counter))
    if isinstance(value, DualQuaternion):
        return type(value)(
            instrument(value.primary, counter), instrument(value.dual, counter)
        )
    if isinstance(value, np.ndarray) and value.ndim == 1:
        return [CountingScalar(v, counter) for v in value.tolist()]
    if isinstance(value, tuple) and hasattr(value, "_fields"):
        return type(value)(*(instrument(v, counter) for v in value))
    if isinstance(value, (list, tuple)):
        return type(value)(instrument(v, counter) for v in value)
    return value


def count_runtime_ops(func: Callable, *args, counter: OpCounter = None, **kwargs) -> OpCost:
    """Run func on instrumented copies of its arguments and return the tally"""
    counter = counter if counter is not None else OpCounter()
    start = counter.cost()
    instrumented_args = [instrument(arg, counter) for arg in args]
    instrumented_kwargs = {
        key: instrument(value, counter) for key, value in kwargs.items()
    }
    func(*instrumented_args, **instrumented_kwargs)
    finish = counter.cost()
    return OpCost(finish.mults - start.mults, finish.adds - start.adds)
