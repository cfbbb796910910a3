"""
Jucys-Murphy elements and their supersymmetric polynomials.

For 1 <= k <= r the element L_k is the sum of the transpositions (j, k) with
j < k. Right of the wall,

    L_k = -sum_{j<=r} e_{j,k} + sum_{r<j<k} (j, k) + delta.

A shift a adds a to L_1..L_r and subtracts it from L_{r+1}..L_{r+s}; every
commutation relation survives the shift.

Example:
    >>> family = jm_family(Wall(2, 2), ScalarMode.generic_delta())
    >>> is_central(power_sum_jm(family, 3))
    True
"""

from __future__ import annotations

import logging
import typing as t
from dataclasses import dataclass, field
from fractions import Fraction

from ..common.exceptions import IndexOutOfRangeError, InvalidParameterError
from ..common.types import Wall
from ..diagrams import E, Transposition
from ..scalars import ScalarLike, ScalarMode
from .element import AlgebraElement

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class JmFamily:
    """
    The elements L_1..L_{r+s} of one algebra.

    Powers of the L_k are memoized per family, so repeated power-sum and
    elementary evaluations reuse the same products.

    Attributes:
        wall: The wall of the algebra.
        mode: Scalar mode of every element.
        elements: L_1..L_{r+s} in order (index 0 holds L_1).
        shift: The shift a of the variant family.
    """

    wall: Wall
    mode: ScalarMode
    elements: tuple[AlgebraElement, ...]
    shift: ScalarLike = 0
    _powers: dict[tuple[int, int], AlgebraElement] = field(default_factory=dict, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, k: int) -> AlgebraElement:
        """L_k with 1-based ``k``."""
        if not 1 <= k <= len(self.elements):
            raise IndexOutOfRangeError("Jucys-Murphy", k, f"1..{len(self.elements)}")
        return self.elements[k - 1]

    def __iter__(self) -> t.Iterator[AlgebraElement]:
        return iter(self.elements)

    def power(self, k: int, exponent: int) -> AlgebraElement:
        """L_k ** exponent, memoized."""
        if exponent < 0:
            raise InvalidParameterError(f"Exponent must be nonnegative, got {exponent}")
        if exponent == 0:
            return AlgebraElement.one(self.wall, self.mode)
        key = (k, exponent)
        cached = self._powers.get(key)
        if cached is None:
            cached = self[k] if exponent == 1 else self.power(k, exponent - 1) * self[k]
            self._powers[key] = cached
        return cached

    def replace(self, k: int, element: AlgebraElement) -> JmFamily:
        """A copy with L_k swapped for ``element``; used to build perturbed families."""
        elements = list(self.elements)
        elements[k - 1] = element
        return JmFamily(self.wall, self.mode, tuple(elements), self.shift)

    def mirrored(self) -> JmFamily:
        """The family carried to the transposed wall by diagram mirroring."""
        return JmFamily(self.wall.transposed(), self.mode, tuple(x.mirrored() for x in self.elements), self.shift)


def jm_element(wall: Wall, mode: ScalarMode, k: int, shift: ScalarLike = 0) -> AlgebraElement:
    """The single element L_k (1-based), optionally shifted."""
    wall.check_position(k)
    r = wall.r
    terms = [AlgebraElement.generator(wall, mode, Transposition(j, k)) for j in range(1, k) if (j <= r) == (k <= r)]
    if k <= r:
        element = AlgebraElement.zero(wall, mode)
        for term in terms:
            element = element + term
        return element + shift if shift else element
    element = AlgebraElement.scalar(wall, mode, mode.delta)
    for j in range(1, r + 1):
        element = element - AlgebraElement.generator(wall, mode, E(j, k))
    for term in terms:
        element = element + term
    return element - shift if shift else element


def jm_family(wall: Wall, mode: ScalarMode, shift: ScalarLike = 0) -> JmFamily:
    """
    All Jucys-Murphy elements L_1..L_{r+s}.

    With r = 0 the formula right of the wall gives L_1 = delta; otherwise
    L_1 = 0.
    """
    elements = tuple(jm_element(wall, mode, k, shift) for k in range(1, wall.n + 1))
    logger.debug("built %d Jucys-Murphy elements on %s in %s", len(elements), wall, mode)
    return JmFamily(wall, mode, elements, shift)


# =============================================================================
# Supersymmetric evaluations
# =============================================================================


def power_sum_jm(family: JmFamily, k: int) -> AlgebraElement:
    """
    p_k(L) = L_1^k + ... + L_r^k + (-1)^{k+1} (L_{r+1}^k + ... + L_{r+s}^k).

    For k = 0 this is (r - s) times the identity.
    """
    if k < 0:
        raise InvalidParameterError(f"Power-sum degree must be nonnegative, got {k}")
    wall, mode = family.wall, family.mode
    if k == 0:
        return AlgebraElement.scalar(wall, mode, wall.r - wall.s)
    left = AlgebraElement.zero(wall, mode)
    right = AlgebraElement.zero(wall, mode)
    for i in range(1, wall.n + 1):
        if i <= wall.r:
            left = left + family.power(i, k)
        else:
            right = right + family.power(i, k)
    return left + right if k % 2 else left - right


def elementary_supersym_jm(family: JmFamily, k: int) -> AlgebraElement:
    """
    e_k(L) from the Newton recursion k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i.

    The e_k are the coefficients of prod(1 + x_i z) / prod(1 - y_j z).
    """
    if k < 0:
        raise InvalidParameterError(f"Elementary degree must be nonnegative, got {k}")
    wall, mode = family.wall, family.mode
    powers = [power_sum_jm(family, i) for i in range(1, k + 1)]
    elementary = [AlgebraElement.one(wall, mode)]
    for m in range(1, k + 1):
        acc = AlgebraElement.zero(wall, mode)
        for i in range(1, m + 1):
            term = elementary[m - i] * powers[i - 1]
            acc = acc + term if i % 2 else acc - term
        elementary.append(acc.scale(Fraction(1, m)))
    return elementary[k]


def z_element(wall: Wall, mode: ScalarMode) -> AlgebraElement:
    """
    sum of same-side transpositions minus sum of all e_{i,j}.

    Equals p_1(L) - s * delta.
    """
    r, n = wall.r, wall.n
    element = AlgebraElement.zero(wall, mode)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i <= r) == (j <= r):
                element = element + AlgebraElement.generator(wall, mode, Transposition(i, j))
            else:
                element = element - AlgebraElement.generator(wall, mode, E(i, j))
    return element
