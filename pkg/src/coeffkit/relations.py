"""Closed-form relation functions for the powers l = 2, 3, 4.

Nothing here expands a polynomial. Each coefficient costs a handful of
checked 64-bit operations, so rows and whole expansions are assembled in
time proportional to their length.

The l = 4 interior formula is the corrected one::

    g4(n, k) = n(n+1)(n+2)/6 + (k-1) * ((n^2 + n) + n*k - k*(k+1)) / 2

The commonly printed variant omits the leading edge term; it is kept as
:func:`g4_as_printed` only so the discrepancy stays reproducible.
"""
from __future__ import annotations

from ._checked import exact_div, u64
from .errors import CoefficientOverflowError, DomainError, PositionError
from .models import (CLOSED_FORM_POWERS, PatternSpec, RelationQuery,
                     UniqueRow, row_width)

__all__ = [
    "row_width", "g2", "g3_edge", "g3", "g4_edge", "g4", "g4_as_printed",
    "unique_value", "unique_row_closed", "unique_row_as_printed",
    "edge_value", "coefficient_closed", "expansion_closed",
]


def _require_row(n: int) -> None:
    if n < 1:
        raise DomainError(f"row index must be >= 1 (got {n})")


def _require_position(n: int, k: int) -> None:
    _require_row(n)
    if not 1 <= k <= n:
        raise PositionError(f"position k={k} outside 1..{n}")


def g2(r: int) -> int:
    """Unique coefficient of row ``r`` for l = 2, which is ``r`` itself."""
    _require_row(r)
    return u64(r, f"g2({r})")


def g3_edge(n: int) -> int:
    """First and last entry of row ``n`` for l = 3: ``n(n+1)/2``."""
    _require_row(n)
    where = f"g3_edge({n})"
    return exact_div(u64(n * (n + 1), where), 2, where)


def g3(n: int, k: int) -> int:
    """Entry ``k`` of row ``n`` for l = 3.

    Evaluates ``(2k(n+1) - 2k^2 + n(n-1)) / 2``. Valid on the whole row,
    where at ``k = 1`` and ``k = n`` it coincides with :func:`g3_edge`.
    """
    _require_position(n, k)
    where = f"g3({n}, {k})"
    lead = u64(u64(2 * k, where) * u64(n + 1, where), where)
    square = u64(2 * u64(k * k, where), where)
    tail = u64(n * (n - 1), where)
    numerator = u64(u64(lead - square, where) + tail, where)
    return exact_div(numerator, 2, where)


def g4_edge(n: int) -> int:
    """First and last entry of row ``n`` for l = 4: ``n(n+1)(n+2)/6``."""
    _require_row(n)
    where = f"g4_edge({n})"
    # halve before the third factor so the 64-bit range reaches n ~ 3.3e6
    triangular = exact_div(u64(u64(n * n, where) + n, where), 2, where)
    return exact_div(u64(triangular * (n + 2), where), 3, where)


def _g4_increment(n: int, k: int, where: str) -> int:
    # (k-1) * ((n^2 + n) + n*k - k(k+1)) / 2; the bracket is >= 0 for k <= n
    bracket = u64(u64(u64(n * n, where) + n, where) + u64(n * k, where), where)
    bracket = u64(bracket - u64(k * (k + 1), where), where)
    return exact_div(u64((k - 1) * bracket, where), 2, where)


def g4(n: int, k: int) -> int:
    """Entry ``k`` of row ``n`` for l = 4, for ``1 <= k <= n``.

    Positions past the middle of the row (``n < k <= 2n-1``) go through
    :func:`unique_value`, which folds them by symmetry.
    """
    _require_position(n, k)
    where = f"g4({n}, {k})"
    return u64(g4_edge(n) + _g4_increment(n, k, where), where)


def g4_as_printed(n: int, k: int) -> int:
    """The published l = 4 interior formula, without the edge term.

    Always short by exactly ``g4_edge(n)``: at ``(2, 2)`` it gives 2 where
    the triangle has 6. Only used to reproduce that discrepancy.
    """
    _require_position(n, k)
    return _g4_increment(n, k, f"g4_as_printed({n}, {k})")


def edge_value(l: int, r: int) -> int:
    """First entry of row ``r`` for power ``l``."""
    if l == 2:
        return g2(r)
    if l == 3:
        return g3_edge(r)
    if l == 4:
        return g4_edge(r)
    raise DomainError(f"no closed form for power l={l}")


def _dispatch(l: int, r: int, k: int) -> int:
    if l == 2:
        return g2(r)
    if l == 3:
        return g3(r, k)
    return g4(r, k if k <= r else 2 * r - k)


def unique_value(q: RelationQuery) -> int:
    """Entry ``q.k`` of row ``q.r`` in the triangle for power ``q.l``.

    >>> unique_value(RelationQuery(l=4, r=4, k=6))
    31
    """
    try:
        return _dispatch(q.l, q.r, q.k)
    except CoefficientOverflowError as exc:
        raise exc.with_context(l=q.l, r=q.r, k=q.k) from None


def unique_row_closed(l: int, r: int) -> UniqueRow:
    width = row_width(l, r)
    values = [unique_value(RelationQuery(l, r, k)) for k in range(1, width + 1)]
    return UniqueRow(l, r, tuple(values))


def unique_row_as_printed(r: int) -> UniqueRow:
    """Row ``r`` for l = 4 built from the published formulas verbatim.

    Edges come from :func:`g4_edge`, interior entries from
    :func:`g4_as_printed`, the right half from symmetry.
    """
    width = row_width(4, r)
    values = []
    for k in range(1, width + 1):
        j = k if k <= r else 2 * r - k
        values.append(g4_edge(r) if j == 1 else g4_as_printed(r, j))
    return UniqueRow(4, r, tuple(values))


def coefficient_closed(spec: PatternSpec, m: int) -> int:
    """Coefficient of ``x^m`` in ``spec`` using relation functions only.

    Degrees below ``n`` are edges of earlier rows, degrees in
    ``[n, (l-1)n]`` are row ``n+1``, and the rest mirror the front.
    """
    if spec.l not in CLOSED_FORM_POWERS:
        raise DomainError(f"no closed form for power l={spec.l}")
    if not 0 <= m <= spec.degree:
        raise DomainError(f"degree m={m} outside 0..{spec.degree}")
    folded = min(m, spec.degree - m)
    if folded >= spec.n:
        return unique_value(RelationQuery(spec.l, spec.n + 1, folded - spec.n + 1))
    try:
        return edge_value(spec.l, folded + 1)
    except CoefficientOverflowError as exc:
        raise exc.with_context(n=spec.n, l=spec.l, m=m) from None


def expansion_closed(spec: PatternSpec) -> list[int]:
    """All coefficients of ``spec`` from the relation functions."""
    return [coefficient_closed(spec, m) for m in range(spec.degree + 1)]
