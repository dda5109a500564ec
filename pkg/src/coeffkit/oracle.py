"""Brute-force ground truth for every closed-form claim.

The expansion is built by ``l`` sliding-window passes (convolution with the
all-ones vector of length ``n+1``). A second, unrelated route counts bounded
compositions by inclusion-exclusion. Neither route touches
:mod:`coeffkit.relations`.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

from ._checked import U64_MAX, u64
from .errors import CoefficientOverflowError, DomainError
from .models import PatternSpec, UniqueRow, general_row_width

CoefficientVector = list[int]


def _expand(n: int, l: int) -> tuple[int, ...]:
    coeffs = [1]
    width = n + 1
    for _ in range(l):
        out = []
        window = 0
        padded = coeffs + [0] * n
        for m, c in enumerate(padded):
            # drop the element leaving the window before adding the new one,
            # so the running sum never exceeds the coefficient it produces
            if m >= width:
                window -= padded[m - width]
            window += c
            if window > U64_MAX:
                raise CoefficientOverflowError(
                    f"coefficient of x^{m} in (x^{n}+...+1)^{l}", window, 64,
                    context={"n": n, "l": l, "m": m})
            out.append(window)
        coeffs = out
    return tuple(coeffs)


_expand_cached = lru_cache(maxsize=512)(_expand)


def expand_power_sum(spec: PatternSpec) -> CoefficientVector:
    """Every coefficient of ``(x^n + ... + 1)^l``, lowest degree first.

    >>> expand_power_sum(PatternSpec(n=2, l=3))
    [1, 3, 6, 7, 6, 3, 1]
    """
    return list(_expand_cached(spec.n, spec.l))


def bounded_composition_count(spec: PatternSpec, m: int) -> int:
    """Number of ``(a_1, ..., a_l)`` with ``0 <= a_i <= n`` summing to ``m``.

    Uses ``sum_j (-1)^j C(l, j) C(m - j(n+1) + l - 1, l - 1)``. Positive and
    negative terms are accumulated separately and each is range-checked, so
    the alternating sum never relies on wraparound.
    """
    n, l = spec.n, spec.l
    if not 0 <= m <= spec.degree:
        raise DomainError(f"degree m={m} outside 0..{spec.degree}")
    where = f"bounded compositions of {m} into {l} parts <= {n}"
    plus = minus = 0
    try:
        for j in range(l + 1):
            rest = m - j * (n + 1)
            if rest < 0:
                break
            term = u64(comb(l, j) * comb(rest + l - 1, l - 1), where)
            if j % 2:
                minus = u64(minus + term, where)
            else:
                plus = u64(plus + term, where)
    except CoefficientOverflowError as exc:
        raise exc.with_context(n=n, l=l, m=m) from None
    return plus - minus


def unique_row_oracle(l: int, r: int) -> UniqueRow:
    """Central block ``x^d .. x^((l-1)d)`` of ``(x^d + ... + 1)^l``, ``d = r-1``."""
    width = general_row_width(l, r)
    d = r - 1
    coeffs = _expand_cached(d, l)
    return UniqueRow(l, r, coeffs[d:d + width])


def first_occurrence_values(l: int, r: int) -> set[int]:
    """Values of pattern ``d = r-1`` absent from every pattern ``s < d``.

    This is the value-novelty reading of "unique coefficients". It agrees
    with the positional block for small rows but drops central values that
    happen to occur in an earlier pattern (l=3, r=8 loses 36).
    """
    if l < 2:
        raise DomainError(f"power l must be >= 2 (got {l})")
    if r < 1:
        raise DomainError(f"row r must be >= 1 (got {r})")
    seen: set[int] = set()
    for s in range(r - 1):
        seen.update(_expand_cached(s, l))
    return set(_expand_cached(r - 1, l)) - seen
