"""
The Gelfand-Zetlin subalgebra and path idempotents.

In a semisimple mode the Jucys-Murphy elements act diagonally on the
Gelfand-Zetlin basis, with L_i acting on the vector of a path T by the
content step c_T(i). Writing C(i) for the set of values c_T(i) over all
paths, the elements

    I_T = prod_i prod_{c in C(i), c != c_T(i)} (L_i - c) / (c_T(i) - c)

form a complete set of primitive orthogonal idempotents.

The construction runs on the tower with r >= s. For a wall with r < s the
idempotents and the Jucys-Murphy family are built on the transposed wall
and mirrored back.

Example:
    >>> report = verify_idempotents(Wall(1, 1), ScalarMode.rational(3))
    >>> report.passed
    True
"""

from __future__ import annotations

import collections
import functools
import logging
import typing as t
from dataclasses import dataclass, field

from ..algebra import AlgebraElement, JmFamily, jm_family
from ..common.config import Limits, get_limits
from ..common.exceptions import ZeroDenominatorError
from ..common.types import Wall
from ..diagrams import WalledDiagram
from ..scalars import LinearSpan, ScalarMode
from ..weights import Path, Step, all_paths, as_delta, is_semisimple, tower_wall, transpose_wall

logger = logging.getLogger(__name__)


# =============================================================================
# Gelfand-Zetlin subalgebra
# =============================================================================


def _tower_family(wall: Wall, mode: ScalarMode) -> JmFamily:
    tower = tower_wall(wall)
    family = jm_family(tower, mode)
    return family if tower == wall else family.mirrored()


def gz_dimension(wall: Wall, mode: ScalarMode, limits: Limits | None = None, family: JmFamily | None = None) -> int:
    """
    Dimension of the unital subalgebra generated by L_1, ..., L_{r+s}.

    The span of monomials in the L_k is closed under right multiplication by
    each L_k until no product leaves it. The L_k commute, so this span is the
    whole subalgebra. Without ``family`` the elements come from the r >= s
    tower, mirrored back when r < s.

    Raises:
        SizeLimitExceededError: If r + s exceeds the size cap.
    """
    (limits or get_limits()).check_wall(wall)
    if not is_semisimple(wall, mode):
        logger.warning("%s in %s is not semisimple; the subalgebra is not the diagonal one", wall, mode.label)
    if family is None:
        family = _tower_family(wall, mode)
    span: LinearSpan[WalledDiagram] = LinearSpan()
    one = AlgebraElement.one(wall, mode)
    span.add(one.terms)
    queue = collections.deque([one])
    while queue:
        current = queue.popleft()
        for generator in family:
            product = current * generator
            if span.add(product.terms):
                queue.append(product)
    logger.debug("Gelfand-Zetlin subalgebra of %s has dimension %d", wall, span.rank)
    return span.rank


def gz_basis_count(wall: Wall) -> int:
    """Number of paths in the branching graph, the expected value of :func:`gz_dimension`."""
    return len(all_paths(wall))


# =============================================================================
# Idempotents
# =============================================================================


@functools.lru_cache(maxsize=64)
def content_steps(wall: Wall) -> tuple[tuple[Step, ...], ...]:
    """For each position i, the distinct steps c_T(i) over all paths, sorted."""
    steps: list[set[Step]] = [set() for _ in range(wall.n)]
    for path in all_paths(wall):
        for i, step in enumerate(path.steps):
            steps[i].add(step)
    return tuple(tuple(sorted(group, key=lambda s: (s[1], s[0]))) for group in steps)


def _step_value(step: Step, mode: ScalarMode) -> t.Any:
    value, with_delta = step
    scalar = mode.coerce(value)
    return scalar + mode.delta if with_delta else scalar


def idempotent(path: Path, mode: ScalarMode, family: JmFamily | None = None) -> AlgebraElement:
    """
    The idempotent I_T of ``path``.

    Factors are multiplied with i ascending and, for each i, c in step order.
    Steps are compared against the paths of ``path.wall`` itself; pass paths of
    an r >= s wall, as :func:`verify_idempotents` does.

    Raises:
        ZeroDenominatorError: If some c in C(i) other than c_T(i) takes the
            same value as c_T(i) in ``mode``.
    """
    wall = path.wall
    family = family if family is not None else jm_family(wall, mode)
    result = AlgebraElement.one(wall, mode)
    for i, (own, others) in enumerate(zip(path.steps, content_steps(wall)), start=1):
        own_value = _step_value(own, mode)
        for step in others:
            if step == own:
                continue
            value = _step_value(step, mode)
            gap = own_value - value
            if not gap:
                raise ZeroDenominatorError(str(path), i, value)
            factor = (family[i] - value).scale(1 / gap)
            result = result * factor
    return result


@dataclass(frozen=True, slots=True)
class EigenCheck:
    """Whether L_index * I_T = c_T(index) * I_T for one path."""

    path: str
    index: int
    passed: bool

    def to_dict(self) -> dict[str, t.Any]:
        return {"path": self.path, "index": self.index, "passed": self.passed}


@dataclass(frozen=True, slots=True)
class IdempotentReport:
    """
    Outcome of :func:`verify_idempotents`.

    Attributes:
        wall: The wall of the algebra.
        mode: Label of the scalar mode.
        path_count: Number of paths, one idempotent each.
        squares: Whether I_T^2 = I_T for every path.
        pairwise_orthogonal: Whether I_T I_T' = 0 for every T != T'.
        sum_is_one: Whether the idempotents sum to 1.
        eigen_relations: One check per (path, index).
    """

    wall: Wall
    mode: str
    path_count: int
    squares: bool
    pairwise_orthogonal: bool
    sum_is_one: bool
    eigen_relations: tuple[EigenCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return self.squares and self.pairwise_orthogonal and self.sum_is_one and all(c.passed for c in self.eigen_relations)

    def to_dict(self) -> dict[str, t.Any]:
        return {
            "wall": self.wall.to_dict(),
            "mode": self.mode,
            "path_count": self.path_count,
            "squares": self.squares,
            "pairwise_orthogonal": self.pairwise_orthogonal,
            "sum_is_one": self.sum_is_one,
            "eigen_relations": [c.to_dict() for c in self.eigen_relations],
            "passed": self.passed,
        }


def verify_idempotents(wall: Wall, mode: ScalarMode, limits: Limits | None = None) -> IdempotentReport:
    """
    Build every I_T and check idempotence, orthogonality, completeness and
    the eigenvalue relations L_i I_T = c_T(i) I_T.

    When r < s the paths and idempotents come from the transposed wall and
    are mirrored back, so the checks run in the algebra of ``wall`` against
    the mirrored Jucys-Murphy family. Path labels are transposed to match.

    Raises:
        SizeLimitExceededError: If r + s exceeds the size cap.
        ZeroDenominatorError: If ``mode`` makes two content steps collide.
    """
    (limits or get_limits()).check_wall(wall)
    tower = tower_wall(wall)
    family = jm_family(tower, mode)
    paths = all_paths(tower)
    idempotents = [idempotent(path, mode, family) for path in paths]
    if tower != wall:
        logger.debug("building the idempotents of %s on %s", wall, tower)
        family = family.mirrored()
        paths = [transpose_wall(path) for path in paths]
        idempotents = [element.mirrored() for element in idempotents]

    squares = all(e * e == e for e in idempotents)
    orthogonal = all(
        not (a * b) for i, a in enumerate(idempotents) for j, b in enumerate(idempotents) if i != j
    )
    total = AlgebraElement.zero(wall, mode)
    for element in idempotents:
        total = total + element
    sum_is_one = total == AlgebraElement.one(wall, mode)

    delta = as_delta(mode)
    eigen: list[EigenCheck] = []
    for path, element in zip(paths, idempotents):
        for i, value in enumerate(path.contents(delta), start=1):
            passed = family[i] * element == element.scale(value)
            if not passed:
                logger.warning("L_%d does not act by %s on the idempotent of %s", i, value, path)
            eigen.append(EigenCheck(str(path), i, passed))

    report = IdempotentReport(wall, mode.label, len(paths), squares, orthogonal, sum_is_one, tuple(eigen))
    logger.info("idempotents of %s in %s: %d paths, passed=%s", wall, mode.label, len(paths), report.passed)
    return report
