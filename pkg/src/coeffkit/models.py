"""Value types shared by the closed-form and oracle routes.

Addressing convention: rows and positions are 1-based, and row ``r`` of the
triangle for power ``l`` is drawn from ``(x^(r-1) + ... + 1)^l``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, PositionError

CLOSED_FORM_POWERS = (2, 3, 4)


def general_row_width(l: int, r: int) -> int:
    """Row width for any power ``l >= 2``; the oracle has no closed-form cap."""
    if l < 2:
        raise DomainError(f"power l must be >= 2 (got {l})")
    if r < 1:
        raise DomainError(f"row r must be >= 1 (got {r})")
    return (l - 2) * (r - 1) + 1


def row_width(l: int, r: int) -> int:
    """Number of entries in row ``r`` of the triangle for power ``l``.

    >>> [row_width(4, r) for r in (1, 2, 3)]
    [1, 3, 5]
    """
    if l not in CLOSED_FORM_POWERS:
        raise DomainError(f"power l must be one of 2, 3, 4 (got {l})")
    return general_row_width(l, r)


@dataclass(frozen=True)
class PatternSpec:
    """The expansion ``(x^n + x^(n-1) + ... + 1)^l``."""

    n: int
    l: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"degree parameter n must be >= 0 (got {self.n})")
        if self.l < 1:
            raise DomainError(f"power l must be >= 1 (got {self.l})")

    @property
    def degree(self) -> int:
        return self.l * self.n


@dataclass(frozen=True)
class RelationQuery:
    """Address of one entry ``(l, r, k)`` in a unique-coefficient triangle."""

    l: int
    r: int
    k: int

    def __post_init__(self) -> None:
        width = row_width(self.l, self.r)
        if not 1 <= self.k <= width:
            raise PositionError(
                f"position k={self.k} outside row {self.r} of the l={self.l} "
                f"triangle (valid: 1..{width})")


@dataclass(frozen=True)
class UniqueRow:
    l: int
    r: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        width = general_row_width(self.l, self.r)
        if len(self.values) != width:
            raise DomainError(
                f"row ({self.l}, {self.r}) needs {width} values, got {len(self.values)}")

    def is_palindrome(self) -> bool:
        return self.values == self.values[::-1]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)
