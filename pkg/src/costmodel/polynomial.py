"""Exact operation costs and cost polynomials over the rationals"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Tuple, Union

from validation.errors import DomainError

Number = Union[int, Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        # only halves and thirds appear in the cost tables
        return Fraction(value).limit_denominator(1000)
    raise TypeError(f"cannot use {type(value).__name__} in an exact cost")


def format_number(value: Fraction) -> str:
    value = _as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class OpCost:
    """Scalar multiplications and additions of one computation"""

    mults: Fraction = Fraction(0)
    adds: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "mults", _as_fraction(self.mults))
        object.__setattr__(self, "adds", _as_fraction(self.adds))

    def __add__(self, other: "OpCost") -> "OpCost":
        return OpCost(self.mults + other.mults, self.adds + other.adds)

    def __mul__(self, factor: Number) -> "OpCost":
        factor = _as_fraction(factor)
        if factor < 0:
            raise DomainError("operation costs scale by non-negative factors only")
        return OpCost(self.mults * factor, self.adds * factor)

    __rmul__ = __mul__

    def as_tuple(self) -> Tuple[Number, Number]:
        def plain(value: Fraction) -> Number:
            return value.numerator if value.denominator == 1 else value

        return plain(self.mults), plain(self.adds)

    def __str__(self) -> str:
        return f"{{{format_number(self.mults)}, {format_number(self.adds)}}}"


class Poly:
    """Univariate polynomial with Fraction coefficients, lowest degree first"""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=(0,)):
        coefficients = [_as_fraction(c) for c in coefficients] or [Fraction(0)]
        while len(coefficients) > 1 and coefficients[-1] == 0:
            coefficients.pop()
        self.coefficients: Tuple[Fraction, ...] = tuple(coefficients)

    @classmethod
    def variable(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def lift(cls, value) -> "Poly":
        if isinstance(value, Poly):
            return value
        return cls((value,))

    @property
    def degree(self) -> int:
        if self.coefficients == (0,):
            return 0
        return len(self.coefficients) - 1

    def __call__(self, x) -> Fraction:
        x = _as_fraction(x)
        total = Fraction(0)
        for c in reversed(self.coefficients):
            total = total * x + c
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            try:
                other = Poly.lift(other)
            except TypeError:
                return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __add__(self, other) -> "Poly":
        if not isinstance(other, (Poly, Rational, float)):
            return NotImplemented
        other = Poly.lift(other)
        size = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (size - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (size - len(other.coefficients))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coefficients)

    def __sub__(self, other) -> "Poly":
        return self + (-Poly.lift(other))

    def __rsub__(self, other) -> "Poly":
        return Poly.lift(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, (Poly, Rational, float)):
            return NotImplemented
        other = Poly.lift(other)
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return Poly(product)

    __rmul__ = __mul__

    def summed(self) -> "Poly":
        """Sum of p(i) for i = 1..n, as a polynomial in n (degree <= 2)"""
        if self.degree > 2:
            raise DomainError("only polynomials up to degree 2 can be summed")
        n = Poly.variable()
        identities = (
            n,
            Fraction(1, 2) * n * (n + 1),
            Fraction(1, 6) * (n * n + n) * (2 * n + 1),
        )
        total = Poly()
        for c, identity in zip(self.coefficients, identities):
            total = total + c * identity
        return total

    def describe(self, variable: str = "n") -> str:
        terms = []
        for power in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            magnitude = format_number(abs(c))
            if power == 0:
                body = magnitude
            else:
                factor = "" if abs(c) == 1 else magnitude
                if factor and "/" in factor:
                    factor = f"({factor})"
                body = factor + variable + (f"^{power}" if power > 1 else "")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Poly({self.describe()})"


@dataclass(frozen=True)
class CostPolynomial:
    """Multiplication and addition counts as polynomials in the link count"""

    mults: Poly = Poly()
    adds: Poly = Poly()

    def __post_init__(self):
        object.__setattr__(self, "mults", Poly.lift(self.mults))
        object.__setattr__(self, "adds", Poly.lift(self.adds))

    @classmethod
    def constant(cls, cost: OpCost) -> "CostPolynomial":
        return cls(Poly((cost.mults,)), Poly((cost.adds,)))

    @classmethod
    def of(cls, mults, adds) -> "CostPolynomial":
        """Coefficient sequences, lowest degree first"""
        return cls(Poly(mults), Poly(adds))

    def __add__(self, other) -> "CostPolynomial":
        if isinstance(other, OpCost):
            other = CostPolynomial.constant(other)
        return CostPolynomial(self.mults + other.mults, self.adds + other.adds)

    __radd__ = __add__

    def __mul__(self, factor) -> "CostPolynomial":
        return CostPolynomial(self.mults * factor, self.adds * factor)

    __rmul__ = __mul__

    def __call__(self, n) -> OpCost:
        return self.evaluate(n)

    def evaluate(self, n) -> OpCost:
        return OpCost(self.mults(n), self.adds(n))

    def summed(self) -> "CostPolynomial":
        return CostPolynomial(self.mults.summed(), self.adds.summed())

    @property
    def degree(self) -> int:
        return max(self.mults.degree, self.adds.degree)

    def describe(self, variable: str = "n") -> str:
        return f"{{{self.mults.describe(variable)}, {self.adds.describe(variable)}}}"
