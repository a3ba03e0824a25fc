"""
Exact truncated power series in one variable x.

A series of order N knows its coefficients c_0..c_N exactly. Products track precision
by valuation, so multiplying by a series divisible by x recovers one order of precision that a
previous division by x lost.
"""
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, List, Union

from stairperm.common.exceptions import (DivisionValuationError, InvalidInputError,
                                         NonIntegralSeriesError, SeriesDomainError)


Coefficient = Union[int, Fraction]
Operand = Union["TruncatedSeries", int, Fraction]


def _normalize(value: Coefficient) -> Coefficient:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def _exact_div(numerator: Coefficient, denominator: Coefficient) -> Coefficient:
    if isinstance(numerator, int) and isinstance(denominator, int) and numerator % denominator == 0:
        return numerator // denominator
    return _normalize(Fraction(numerator) / Fraction(denominator))


class TruncatedSeries:
    """
    A power series c_0 + c_1 x + ... + c_N x^N + O(x^(N+1)) with exact coefficients.

    :param coefficients: Leading coefficients; missing ones up to the order are zero
    :type coefficients: Iterable[Coefficient]
    :param order: Truncation order N; defaults to the last given index
    :type order: int
    """
    __slots__ = ("coeffs", "order")

    def __init__(self, coefficients: Iterable[Coefficient], order: int = -1) -> None:
        values = [_normalize(c) for c in coefficients]
        if order < 0:
            order = len(values) - 1
        if order < 0:
            raise InvalidInputError("A series needs an order or at least one coefficient")
        values = values[:order + 1] + [0] * (order + 1 - len(values))
        self.coeffs: tuple = tuple(values)
        self.order: int = order

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, value: Coefficient, order: int) -> "TruncatedSeries":
        return cls([value], order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, degree: int, order: int, coefficient: Coefficient = 1) -> "TruncatedSeries":
        return cls([0] * degree + [coefficient], order)

    @classmethod
    def geometric(cls, order: int) -> "TruncatedSeries":
        """1/(1-x)."""
        return cls([1] * (order + 1), order)

    @classmethod
    def from_string(cls, text: str) -> "TruncatedSeries":
        """Parse the series text format: comma-separated coefficients from c_0."""
        parts = [part.strip() for part in text.split(",") if part.strip()]
        try:
            return cls([Fraction(part) for part in parts])
        except (ValueError, ZeroDivisionError):
            raise InvalidInputError(f"Malformed series: {text!r}")

    # -- inspection -----------------------------------------------------

    @property
    def valuation(self) -> int:
        """Index of the first nonzero coefficient, or order + 1 when all known coefficients vanish."""
        for index, value in enumerate(self.coeffs):
            if value != 0:
                return index
        return self.order + 1

    def is_zero(self) -> bool:
        return self.valuation > self.order

    def __getitem__(self, index: int) -> Coefficient:
        if index < 0 or index > self.order:
            raise IndexError(f"Coefficient {index} lies beyond the truncation order {self.order}")
        return self.coeffs[index]

    def __iter__(self) -> Iterator[Coefficient]:
        return iter(self.coeffs)

    def coefficients(self) -> List[Coefficient]:
        return list(self.coeffs)

    def to_integers(self) -> List[int]:
        """The coefficients as integers; a proper fraction is an error."""
        for index, value in enumerate(self.coeffs):
            if not isinstance(value, int):
                raise NonIntegralSeriesError(f"Coefficient {index} is {value}, not an integer")
        return list(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesDomainError(f"Cannot raise the order of a series from {self.order} to {order}")
        return TruncatedSeries(self.coeffs, order)

    def agrees_with(self, other: "TruncatedSeries", order: int = -1) -> bool:
        """True when both series have equal coefficients up to ``order`` (default: the smaller order)."""
        limit = min(self.order, other.order) if order < 0 else order
        return self.coeffs[:limit + 1] == other.coeffs[:limit + 1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TruncatedSeries) and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries([{self}], order={self.order})"

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other: Operand) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Rational)):
            return TruncatedSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other: Operand) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[k] + other.coeffs[k] for k in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other: Operand) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Operand) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other: Operand) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        va, vb = self.valuation, other.valuation
        order = min(max(self.order, other.order), self.order + vb, other.order + va)
        result: List[Coefficient] = [0] * (order + 1)
        for i in range(va, min(self.order, order) + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(vb, min(other.order, order - i) + 1):
                result[i + j] += a * other.coeffs[j]
        return TruncatedSeries(result, order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            return TruncatedSeries.one(self.order) / (self ** -exponent)
        result = TruncatedSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def __truediv__(self, other: Operand) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return divide(self, other)

    def __rtruediv__(self, other: Operand) -> "TruncatedSeries":
        return divide(self._coerce(other), self)

    def sqrt(self) -> "TruncatedSeries":
        """
        The square root with constant term 1.

        :raises SeriesDomainError: if the constant term is not 1
        """
        if self.coeffs[0] != 1:
            raise SeriesDomainError(f"Square root needs constant term 1, got {self.coeffs[0]}")
        root: List[Coefficient] = [1]
        for k in range(1, self.order + 1):
            acc = self.coeffs[k] - sum(root[i] * root[k - i] for i in range(1, k))
            root.append(_exact_div(acc, 2))
        return TruncatedSeries(root, self.order)


def divide(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """
    Valuation-aware division: the common power x^val(b) is cancelled before inverting.

    The quotient is exact up to order min(N_a, N_b) - val(b).

    :param a: The dividend
    :type a: TruncatedSeries
    :param b: The divisor
    :type b: TruncatedSeries
    :return: q with q * b = a up to the quotient's order
    :rtype: TruncatedSeries
    :raises DivisionValuationError: if b vanishes to its order or a has smaller valuation than b
    """
    vb = b.valuation
    if vb > b.order:
        raise DivisionValuationError("Division by a series with no nonzero coefficient")
    if a.valuation < vb:
        raise DivisionValuationError(f"Dividend valuation {a.valuation} is below divisor valuation {vb}")

    order = min(a.order, b.order) - vb
    if order < 0:
        raise DivisionValuationError(f"No coefficient survives dividing by x^{vb} at order {min(a.order, b.order)}")
    numerator = a.coeffs[vb:]
    denominator = b.coeffs[vb:]
    lead = denominator[0]
    quotient: List[Coefficient] = []
    for k in range(order + 1):
        acc = numerator[k] - sum(quotient[i] * denominator[k - i] for i in range(max(0, k - len(denominator) + 1), k))
        quotient.append(_exact_div(acc, lead))
    return TruncatedSeries(quotient, order)
