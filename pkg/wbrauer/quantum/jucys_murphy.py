"""
Quantum Jucys-Murphy elements.

With E_{j,k} the conjugates of E_{r,r+1} and T_{(a,b)} the quantum
transpositions, the elements are defined recursively:

    L_1 = 0,   L_{r+1} = rho (delta - sum_{j<=r} E_{j,r+1})
    L_k = S_{k-1}^{-1} L_{k-1} S_{k-1}^{-1} + S_{k-1}^{-1}   (2 <= k <= r)
    L_k = S_{k-1} L_{k-1} S_{k-1} + S_{k-1}                  (k >= r+2)

and agree with the closed forms sum_j T_{(j,k)} left of the wall and
rho (delta - sum_j E_{j,k}) + rho^2 sum_{r<j<k} T_{(j,k)} right of it.
"""

from __future__ import annotations

import logging
import typing as t
from dataclasses import dataclass, field

from ..common.exceptions import ClosedFormMismatchError, CrossesWallError, IndexOutOfRangeError
from .element import QElement
from .presentation import Letter
from .rewriting import RewriteSystem

logger = logging.getLogger(__name__)


# =============================================================================
# Building blocks
# =============================================================================


def q_s(system: RewriteSystem, i: int) -> QElement:
    return QElement.letter(system, Letter("S", i))


def q_s_inverse(system: RewriteSystem, i: int) -> QElement:
    """S_i^{-1} = S_i - (q - 1/q)."""
    return q_s(system, i) - system.presentation.mode.q_diff


def q_e(system: RewriteSystem) -> QElement:
    return QElement.letter(system, Letter("E", system.presentation.wall.r))


def _product(system: RewriteSystem, factors: t.Iterable[QElement]) -> QElement:
    result = QElement.one(system)
    for factor in factors:
        result = result * factor
    return result


def q_transposition(system: RewriteSystem, a: int, b: int) -> QElement:
    """
    T_{(a,b)} for two vertices on one side of the wall.

    Left of the wall it is S_{b-1}^{-1} ... S_a^{-1} ... S_{b-1}^{-1}; right
    of it the same word without inverses.

    Raises:
        CrossesWallError: If a and b are on different sides.
    """
    wall = system.presentation.wall
    a, b = min(a, b), max(a, b)
    wall.check_position(a)
    wall.check_position(b)
    if a == b:
        raise IndexOutOfRangeError("transposition", (a, b), "two distinct vertices")
    if not wall.same_side(a, b):
        raise CrossesWallError(f"T({a},{b}) crosses the wall")
    factor = q_s_inverse if b <= wall.r else q_s
    down = [factor(system, i) for i in range(b - 1, a - 1, -1)]
    up = [factor(system, i) for i in range(a + 1, b)]
    return _product(system, down + up)


def q_turnback(system: RewriteSystem, j: int, k: int) -> QElement:
    """
    E_{j,k} = (S_{k-1}..S_{r+1})(S_j^{-1}..S_{r-1}^{-1}) E (S_{r-1}^{-1}..S_j^{-1})(S_{r+1}..S_{k-1}).

    Raises:
        CrossesWallError: Unless j <= r < k.
    """
    wall = system.presentation.wall
    r = wall.r
    wall.check_position(j)
    wall.check_position(k)
    if not j <= r < k:
        raise CrossesWallError(f"E({j},{k}) needs j <= {r} < k")
    outer_left = [q_s(system, i) for i in range(k - 1, r, -1)]
    inner_left = [q_s_inverse(system, i) for i in range(j, r)]
    inner_right = [q_s_inverse(system, i) for i in range(r - 1, j - 1, -1)]
    outer_right = [q_s(system, i) for i in range(r + 1, k)]
    return _product(system, outer_left + inner_left + [q_e(system)] + inner_right + outer_right)


# =============================================================================
# Family
# =============================================================================


@dataclass(frozen=True, slots=True)
class QJmFamily:
    """
    The quantum Jucys-Murphy elements of one completed system.

    Attributes:
        system: The completed rewriting system.
        elements: L_1..L_{r+s} (index 0 holds L_1).
    """

    system: RewriteSystem
    elements: tuple[QElement, ...]
    _powers: dict[tuple[int, int], QElement] = field(default_factory=dict, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, k: int) -> QElement:
        if not 1 <= k <= len(self.elements):
            raise IndexOutOfRangeError("quantum Jucys-Murphy", k, f"1..{len(self.elements)}")
        return self.elements[k - 1]

    def __iter__(self) -> t.Iterator[QElement]:
        return iter(self.elements)

    def power(self, k: int, exponent: int) -> QElement:
        if exponent == 0:
            return QElement.one(self.system)
        key = (k, exponent)
        if key not in self._powers:
            self._powers[key] = self[k] if exponent == 1 else self.power(k, exponent - 1) * self[k]
        return self._powers[key]

    def replace(self, k: int, element: QElement) -> QJmFamily:
        elements = list(self.elements)
        elements[k - 1] = element
        return QJmFamily(self.system, tuple(elements))


def _wall_element(system: RewriteSystem) -> QElement:
    """L_{r+1} = rho (delta - sum_{j<=r} E_{j,r+1})."""
    mode = system.presentation.mode
    r = system.presentation.wall.r
    inner = QElement.scalar(system, mode.delta)
    for j in range(1, r + 1):
        inner = inner - q_turnback(system, j, r + 1)
    return inner.scale(mode.rho)


def q_jm_family(system: RewriteSystem, check: bool = True) -> QJmFamily:
    """
    L_1..L_{r+s} by the recursion.

    With r = 0 the element at the wall is L_1 = rho * delta.

    Args:
        system: A completed rewriting system.
        check: Compare every element with its closed form.

    Raises:
        ClosedFormMismatchError: If ``check`` and some L_k disagrees.
    """
    wall = system.presentation.wall
    r = wall.r
    elements: list[QElement] = []
    for k in range(1, wall.n + 1):
        if k == r + 1:
            element = _wall_element(system)
        elif k == 1:
            element = QElement.zero(system)
        elif k <= r:
            inverse = q_s_inverse(system, k - 1)
            element = inverse * elements[-1] * inverse + inverse
        else:
            s = q_s(system, k - 1)
            element = s * elements[-1] * s + s
        elements.append(element)
    family = QJmFamily(system, tuple(elements))
    if check:
        check_closed_forms(family)
    logger.debug("built %d quantum Jucys-Murphy elements on H%s", len(elements), wall)
    return family


def closed_form_jm(system: RewriteSystem, k: int) -> QElement:
    """The closed form of L_k as a sum of quantum transpositions and turnbacks."""
    wall = system.presentation.wall
    mode = system.presentation.mode
    r = wall.r
    wall.check_position(k)
    total = QElement.zero(system)
    if k <= r:
        for j in range(1, k):
            total = total + q_transposition(system, j, k)
        return total
    inner = QElement.scalar(system, mode.delta)
    for j in range(1, r + 1):
        inner = inner - q_turnback(system, j, k)
    for j in range(r + 1, k):
        total = total + q_transposition(system, j, k)
    return inner.scale(mode.rho) + total.scale(mode.rho * mode.rho)


def check_closed_forms(family: QJmFamily) -> None:
    """
    Raises:
        ClosedFormMismatchError: For the first L_k that differs from its closed form.
    """
    for k in range(1, len(family) + 1):
        if family[k] != closed_form_jm(family.system, k):
            raise ClosedFormMismatchError(k)


# =============================================================================
# Supersymmetric evaluations
# =============================================================================


def q_power_sum(family: QJmFamily, m: int) -> QElement:
    """
    L_1^m + ... + L_r^m + (-1)^{m+1} (L_{r+1}^m + ... + L_{r+s}^m).

    For m = 0 this is (r - s) times the identity.
    """
    wall = family.system.presentation.wall
    if m == 0:
        return QElement.scalar(family.system, wall.r - wall.s)
    left = QElement.zero(family.system)
    right = QElement.zero(family.system)
    for k in range(1, wall.n + 1):
        if k <= wall.r:
            left = left + family.power(k, m)
        else:
            right = right + family.power(k, m)
    return left + right if m % 2 else left - right
