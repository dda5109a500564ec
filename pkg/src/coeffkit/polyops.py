"""Dense integer polynomials and single-coefficient product queries.

Coefficients are signed 64-bit; every product and partial sum is checked.
The text format is comma-separated integers in ascending degree, so
``"1,2"`` is ``1 + 2x``.
"""
from __future__ import annotations

from dataclasses import dataclass

from ._checked import i64
from .errors import CoefficientOverflowError, DomainError
from .models import PatternSpec
from .oracle import bounded_composition_count


class PolynomialParseError(DomainError):
    def __init__(self, token: str, text: str):
        self.token = token
        super().__init__(f"cannot parse coefficient {token!r} in polynomial {text!r}")


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with exact integer coefficients, index = degree.

    The tuple is trimmed of trailing zeros on construction; the zero
    polynomial is ``(0,)``.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = [int(c) for c in self.coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [0]
        for c in coeffs:
            i64(c, "polynomial coefficient")
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def parse(cls, text: str) -> IntPolynomial:
        coeffs = []
        for token in text.split(","):
            try:
                coeffs.append(int(token.strip()))
            except ValueError:
                raise PolynomialParseError(token.strip(), text) from None
        return cls(tuple(coeffs))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coefficients)

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return 0

    def __len__(self) -> int:
        return len(self.coefficients)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        return multiply(self, other)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as 0."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def multiply(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Schoolbook product with checked signed 64-bit accumulation."""
    if p.is_zero() or q.is_zero():
        return IntPolynomial((0,))
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p.coefficients):
        if a == 0:
            continue
        for j, b in enumerate(q.coefficients):
            where = f"product coefficient of x^{i + j}"
            out[i + j] = i64(out[i + j] + i64(a * b, where), where)
    return IntPolynomial(tuple(out))


def power_sum_poly(n: int) -> IntPolynomial:
    """``x^n + ... + x + 1``."""
    if n < 0:
        raise DomainError(f"degree parameter n must be >= 0 (got {n})")
    return IntPolynomial((1,) * (n + 1))


def product_terms(p: IntPolynomial, spec: PatternSpec, m: int) -> list[tuple[int, int, int]]:
    """Nonzero contributions ``(j, p[j], e[m-j])`` to ``x^m`` of ``p * e``.

    ``e`` is the expansion of ``spec``; its coefficients are counted
    directly, so neither ``e`` nor the product is materialized.
    """
    top = p.degree + spec.degree
    if not 0 <= m <= top:
        raise DomainError(f"degree m={m} outside 0..{top}")
    terms = []
    for j, a in enumerate(p.coefficients):
        if a == 0 or not 0 <= m - j <= spec.degree:
            continue
        terms.append((j, a, bounded_composition_count(spec, m - j)))
    return terms


def coefficient_of_product(p: IntPolynomial, spec: PatternSpec, m: int) -> int:
    """Coefficient of ``x^m`` in ``p * (x^n + ... + 1)^l``.

    >>> coefficient_of_product(IntPolynomial((1, 2)), PatternSpec(n=4, l=3), 9)
    40
    """
    where = f"coefficient of x^{m} in ({p}) * (x^{spec.n}+...+1)^{spec.l}"
    total = 0
    try:
        for _, a, e in product_terms(p, spec, m):
            total = i64(total + i64(a * e, where), where)
    except CoefficientOverflowError as exc:
        raise exc.with_context(n=spec.n, l=spec.l, m=m) from None
    return total
