"""Fixed-width checked integer arithmetic.

Python integers never wrap, so "checked" here means every value that a
64-bit implementation would hold in a register is range-checked as it is
produced. Callers route each intermediate through :func:`u64` or :func:`i64`.
"""
from __future__ import annotations

from .errors import CoefficientOverflowError

U64_MAX = (1 << 64) - 1
I64_MIN = -(1 << 63)
I64_MAX = (1 << 63) - 1


def u64(value: int, where: str = "value") -> int:
    if value < 0 or value > U64_MAX:
        raise CoefficientOverflowError(where, value, 64, signed=False)
    return value


def i64(value: int, where: str = "value") -> int:
    if value < I64_MIN or value > I64_MAX:
        raise CoefficientOverflowError(where, value, 64, signed=True)
    return value


def exact_div(numerator: int, denominator: int, where: str = "value") -> int:
    """Divide, refusing to truncate. A remainder means a broken identity."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(
            f"{where}: {numerator} is not divisible by {denominator}")
    return quotient
