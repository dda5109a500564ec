"""Exception hierarchy shared by every coeffkit module."""
from __future__ import annotations


class CoeffkitError(Exception):
    """Base class for all errors raised by coeffkit."""


class DomainError(CoeffkitError, ValueError):
    """An argument lies outside the domain of the operation."""


class PositionError(DomainError):
    """A position ``k`` does not address an entry of the requested row."""


class CoefficientOverflowError(CoeffkitError, OverflowError):
    """A result or intermediate does not fit the fixed-width integer type.

    ``where`` names the quantity being computed, ``context`` holds the
    user-facing coordinates (for instance ``{"l": 4, "r": 3_000_000, "k": 1}``)
    once a caller that knows them has attached them.
    """

    def __init__(self, where: str, value: int, bits: int, signed: bool = False,
                 context: dict[str, int] | None = None):
        self.where = where
        self.value = value
        self.bits = bits
        self.signed = signed
        self.context = dict(context or {})
        super().__init__(self._message())

    def _message(self) -> str:
        kind = "signed" if self.signed else "unsigned"
        msg = f"{self.where} does not fit in {self.bits}-bit {kind} arithmetic"
        if self.context:
            coords = ", ".join(f"{k}={v}" for k, v in self.context.items())
            msg = f"overflow at ({coords}): {msg}"
        return msg

    def with_context(self, **context: int) -> CoefficientOverflowError:
        """Return a copy carrying ``context``; existing keys are kept."""
        merged = {**context, **self.context}
        return CoefficientOverflowError(self.where, self.value, self.bits,
                                        self.signed, merged)
