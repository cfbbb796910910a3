"""
Supersymmetric polynomials as polynomials in the power sums.

The ring of supersymmetric polynomials in x_1..x_r, y_1..y_s is generated by

    p_k = x_1^k + ... + x_r^k + (-1)^{k+1} (y_1^k + ... + y_s^k).

A SupersymPoly is an element of Q[p_0, p_1, ...] together with a display
label. The unit of the ring is kept apart from p_0, which evaluates to
r - s. Evaluation substitutes either the Jucys-Murphy elements (giving an
algebra element) or a content vector (giving a scalar).

Example:
    >>> SupersymPoly.elementary(3).degree
    3
"""

from __future__ import annotations

import typing as t
from dataclasses import dataclass
from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from ..algebra import AlgebraElement, JmFamily, power_sum_jm
from ..common.exceptions import InvalidParameterError
from ..scalars import Scalar, from_qq, to_qq
from ..weights import partitions_of

MAX_DEGREE = 24

POWER_SUM_RING, *POWER_SUMS = ring(",".join(f"p{k}" for k in range(MAX_DEGREE + 1)), QQ)


def _check_degree(k: int) -> None:
    if not 0 <= k <= MAX_DEGREE:
        raise InvalidParameterError(f"Degree {k} outside 0..{MAX_DEGREE}")


@dataclass(frozen=True, slots=True)
class SupersymPoly:
    """
    A polynomial in the power sums p_0, p_1, ...

    Attributes:
        expr: Element of ``POWER_SUM_RING``.
        label: Short display name ("p2", "e3", "p1*p2").
    """

    expr: PolyElement
    label: str = ""

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def unit(cls) -> SupersymPoly:
        return cls(POWER_SUM_RING.one, "1")

    @classmethod
    def power_sum(cls, k: int) -> SupersymPoly:
        _check_degree(k)
        return cls(POWER_SUMS[k], f"p{k}")

    @classmethod
    def monomial(cls, parts: t.Sequence[int]) -> SupersymPoly:
        """The product p_{parts[0]} p_{parts[1]} ...; the empty product is the unit."""
        expr = POWER_SUM_RING.one
        for k in parts:
            _check_degree(k)
            expr = expr * POWER_SUMS[k]
        label = "*".join(f"p{k}" for k in parts) or "1"
        return cls(expr, label)

    @classmethod
    def elementary(cls, k: int) -> SupersymPoly:
        """e_k from k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i, e_0 = 1."""
        _check_degree(k)
        values = [POWER_SUM_RING.one]
        for m in range(1, k + 1):
            acc = POWER_SUM_RING.zero
            for i in range(1, m + 1):
                term = values[m - i] * POWER_SUMS[i]
                acc = acc + term if i % 2 else acc - term
            values.append(acc.mul_ground(QQ(1, m)))
        return cls(values[k], f"e{k}")

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def __add__(self, other: SupersymPoly) -> SupersymPoly:
        return SupersymPoly(self.expr + other.expr, f"{self.label}+{other.label}")

    def __sub__(self, other: SupersymPoly) -> SupersymPoly:
        return SupersymPoly(self.expr - other.expr, f"{self.label}-{other.label}")

    def __mul__(self, other: SupersymPoly) -> SupersymPoly:
        return SupersymPoly(self.expr * other.expr, f"{self.label}*{other.label}")

    def scale(self, value: int | Fraction) -> SupersymPoly:
        return SupersymPoly(self.expr.mul_ground(to_qq(value)), f"{value}*{self.label}")

    @property
    def degree(self) -> int:
        """Weighted degree with p_k of degree k."""
        if not self.expr:
            return 0
        return max(sum(k * e for k, e in enumerate(monom)) for monom in self.expr.monoms())

    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """(exponent vector, coefficient) pairs."""
        return [(monom, from_qq(coeff)) for monom, coeff in self.expr.terms()]

    def __str__(self) -> str:
        return self.label or str(self.expr)

    def to_dict(self) -> dict[str, t.Any]:
        return {"label": self.label, "expr": str(self.expr)}

    # -------------------------------------------------------------------------
    # Evaluation
    # -------------------------------------------------------------------------

    def evaluate(self, family: JmFamily) -> AlgebraElement:
        """Substitute p_k -> p_k(L_1, ..., L_{r+s})."""
        wall, mode = family.wall, family.mode
        power_sums: dict[int, AlgebraElement] = {}
        result = AlgebraElement.zero(wall, mode)
        for monom, coeff in self.terms():
            product = AlgebraElement.one(wall, mode)
            for k, exponent in enumerate(monom):
                if not exponent:
                    continue
                if k not in power_sums:
                    power_sums[k] = power_sum_jm(family, k)
                for _ in range(exponent):
                    product = product * power_sums[k]
            result = result + product.scale(coeff)
        return result

    def evaluate_at(self, values: t.Sequence[Scalar], r: int) -> Scalar:
        """
        Substitute x_i = values[i] for i < r and y_j = values[r + j].

        ``values`` must share one field; p_0 evaluates to r - s.
        """
        s = len(values) - r
        sample = values[0] if values else Fraction(0)

        def const(value: int | Fraction) -> Scalar:
            if isinstance(sample, Fraction):
                return Fraction(value)
            return sample.field.ground_new(to_qq(value))

        zero = const(0)
        power_sums: dict[int, Scalar] = {}

        def power_sum(k: int) -> Scalar:
            if k not in power_sums:
                if k == 0:
                    power_sums[k] = const(r - s)
                else:
                    left = sum((v**k for v in values[:r]), zero)
                    right = sum((v**k for v in values[r:]), zero)
                    power_sums[k] = left + right if k % 2 else left - right
            return power_sums[k]

        total = zero
        for monom, coeff in self.terms():
            product = const(coeff)
            for k, exponent in enumerate(monom):
                if exponent:
                    product = product * power_sum(k) ** exponent
            total = total + product
        return total


def degree_ordered_candidates(max_degree: int) -> t.Iterator[SupersymPoly]:
    """
    Unit, then for each degree d = 1..max_degree: p_d, then the products of
    two or more power sums of total degree d (largest part first).
    """
    yield SupersymPoly.unit()
    for d in range(1, min(max_degree, MAX_DEGREE) + 1):
        yield SupersymPoly.power_sum(d)
        for parts in sorted(partitions_of(d), reverse=True):
            if len(parts) > 1:
                yield SupersymPoly.monomial(parts)
