"""
Relation suites for the walled Brauer algebra.

Each relation is checked at every admissible index instance on the given
wall; failures become report entries instead of exceptions. Relation ids:

    +----------------------------------+------------------------------------------+
    | id                               | identity                                 |
    +----------------------------------+------------------------------------------+
    | transposition-commutes-with-     | (i',j') e_{i,j} = e_{i,j} (i',j')        |
    |   turnback                       |                                          |
    | transposition-conjugates-        | (i,i') e_{i,j} = e_{i',j} (i,i') and     |
    |   turnback                       | (j,j') e_{i,j} = e_{i,j'} (j,j')         |
    | disjoint-turnbacks-commute       | e_{i,j} e_{i',j'} = e_{i',j'} e_{i,j}    |
    | turnbacks-sharing-vertex         | e_{i,j} e_{i,j'} = e_{i,j} (j,j') and    |
    |                                  | e_{i,j} e_{i',j} = e_{i,j} (i,i')        |
    | turnback-pair-transpositions     | e_{i,j} e_{i',j'} (i,i') =               |
    |                                  | e_{i,j} e_{i',j'} (j,j')                 |
    | jm-adjacent                      | (i,i+1) L_{i+1} - L_i (i,i+1) = 1 and    |
    |                                  | L_{i+1} (i,i+1) - (i,i+1) L_i = 1        |
    | jm-wall-annihilation             | e (L_r + L_{r+1}) = (L_r + L_{r+1}) e = 0|
    | transposition-commutes-with-jm   | (i,i+1) L_k = L_k (i,i+1)                |
    | turnback-commutes-with-jm        | e_{r,r+1} L_k = L_k e_{r,r+1}            |
    | jm-commute                       | L_i L_j = L_j L_i                        |
    | power-sum-central                | p_k(L) commutes with the generators      |
    | tau-jm-annihilation              | (L_{r-a+1} + L_{r+a}) tau_t = 0          |
    | tau-turnback-annihilation        | (-sum e_{i,j} + sum (i,j)) tau_t = 0     |
    +----------------------------------+------------------------------------------+
"""

from __future__ import annotations

import itertools
import logging
import typing as t
from dataclasses import dataclass, field

from ..common.config import Limits, get_limits
from ..common.exceptions import NotCentralError
from ..common.types import Wall
from ..diagrams import E, S, Tau, Transposition
from ..scalars import Scalar, ScalarMode
from .element import AlgebraElement, commutator, is_central
from .jucys_murphy import JmFamily, jm_family, power_sum_jm

logger = logging.getLogger(__name__)

RELATION_IDS: tuple[str, ...] = (
    "transposition-commutes-with-turnback",
    "transposition-conjugates-turnback",
    "disjoint-turnbacks-commute",
    "turnbacks-sharing-vertex",
    "turnback-pair-transpositions",
    "jm-adjacent",
    "jm-wall-annihilation",
    "transposition-commutes-with-jm",
    "turnback-commutes-with-jm",
    "jm-commute",
    "power-sum-central",
    "tau-jm-annihilation",
    "tau-turnback-annihilation",
)


@dataclass(frozen=True, slots=True)
class RelationCheck:
    """One relation instance: its id, the index tuple and the outcome."""

    relation: str
    indices: tuple[t.Any, ...]
    passed: bool

    def to_dict(self) -> dict[str, t.Any]:
        return {"relation": self.relation, "indices": list(self.indices), "passed": self.passed}


@dataclass(frozen=True, slots=True)
class RelationReport:
    """
    Outcome of a relation suite.

    Attributes:
        wall: The wall checked.
        mode: Label of the scalar mode.
        checks: Every instance, in suite order.
    """

    wall: Wall
    mode: str
    checks: tuple[RelationCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self, relation: str | None = None) -> list[RelationCheck]:
        return [c for c in self.checks if not c.passed and (relation is None or c.relation == relation)]

    def counts(self) -> dict[str, dict[str, int]]:
        """Per relation id: number of instances checked and failed."""
        out: dict[str, dict[str, int]] = {}
        for check in self.checks:
            entry = out.setdefault(check.relation, {"checked": 0, "failed": 0})
            entry["checked"] += 1
            entry["failed"] += 0 if check.passed else 1
        return out

    def to_dict(self) -> dict[str, t.Any]:
        return {
            "wall": self.wall.to_dict(),
            "mode": self.mode,
            "passed": self.passed,
            "counts": self.counts(),
            "failures": [c.to_dict() for c in self.failures()],
        }


class _Suite:
    """Collects checks for one wall and mode, caching generator elements."""

    def __init__(self, wall: Wall, mode: ScalarMode) -> None:
        self.wall = wall
        self.mode = mode
        self.checks: list[RelationCheck] = []
        self._cache: dict[t.Any, AlgebraElement] = {}

    def gen(self, kind: t.Any) -> AlgebraElement:
        element = self._cache.get(kind)
        if element is None:
            element = AlgebraElement.generator(self.wall, self.mode, kind)
            self._cache[kind] = element
        return element

    def tr(self, a: int, b: int) -> AlgebraElement:
        return self.gen(Transposition(min(a, b), max(a, b)))

    def e(self, i: int, j: int) -> AlgebraElement:
        return self.gen(E(i, j))

    def record(self, relation: str, indices: tuple[t.Any, ...], passed: bool) -> None:
        if not passed:
            logger.debug("relation %s failed at %s", relation, indices)
        self.checks.append(RelationCheck(relation, indices, passed))


# =============================================================================
# Turnback and transposition relations
# =============================================================================


def _turnback_relations(suite: _Suite) -> None:
    wall = suite.wall
    left, right = list(wall.left), list(wall.right)
    turnbacks = [(i, j) for i in left for j in right]
    same_side = [(a, b) for block in (left, right) for a, b in itertools.combinations(block, 2)]

    for (i, j), (a, b) in itertools.product(turnbacks, same_side):
        if {a, b} & {i, j}:
            continue
        e, s = suite.e(i, j), suite.tr(a, b)
        suite.record("transposition-commutes-with-turnback", (i, j, a, b), s * e == e * s)

    for i, j in turnbacks:
        e = suite.e(i, j)
        for i2 in left:
            if i2 != i:
                s = suite.tr(i, i2)
                suite.record("transposition-conjugates-turnback", (i, j, i2, "left"), s * e == suite.e(i2, j) * s)
        for j2 in right:
            if j2 != j:
                s = suite.tr(j, j2)
                suite.record("transposition-conjugates-turnback", (i, j, j2, "right"), s * e == suite.e(i, j2) * s)

    for (i, j), (i2, j2) in itertools.product(turnbacks, repeat=2):
        if i == i2 and j == j2:
            continue
        e1, e2 = suite.e(i, j), suite.e(i2, j2)
        product = e1 * e2
        if i != i2 and j != j2:
            suite.record("disjoint-turnbacks-commute", (i, j, i2, j2), product == e2 * e1)
            suite.record(
                "turnback-pair-transpositions",
                (i, j, i2, j2),
                product * suite.tr(i, i2) == product * suite.tr(j, j2),
            )
        elif i == i2:
            suite.record("turnbacks-sharing-vertex", (i, j, i2, j2), product == e1 * suite.tr(j, j2))
        else:
            suite.record("turnbacks-sharing-vertex", (i, j, i2, j2), product == e1 * suite.tr(i, i2))


# =============================================================================
# Jucys-Murphy relations
# =============================================================================


def _jm_relations(suite: _Suite, family: JmFamily) -> None:
    wall, mode = suite.wall, suite.mode
    r, n = wall.r, wall.n
    one = AlgebraElement.one(wall, mode)

    for i in range(1, n):
        if i == r:
            continue
        s = suite.gen(S(i))
        li, lj = family[i], family[i + 1]
        suite.record("jm-adjacent", (i, "left"), s * lj - li * s == one)
        suite.record("jm-adjacent", (i, "right"), lj * s - s * li == one)
        for k in range(1, n + 1):
            if k not in (i, i + 1):
                suite.record("transposition-commutes-with-jm", (i, k), not commutator(s, family[k]))

    if r and wall.s:
        e = suite.e(r, r + 1)
        pair = family[r] + family[r + 1]
        suite.record("jm-wall-annihilation", (r, "left"), not e * pair)
        suite.record("jm-wall-annihilation", (r, "right"), not pair * e)
        for k in range(1, n + 1):
            if k not in (r, r + 1):
                suite.record("turnback-commutes-with-jm", (k,), not commutator(e, family[k]))

    for i, j in itertools.combinations(range(1, n + 1), 2):
        suite.record("jm-commute", (i, j), not commutator(family[i], family[j]))

    for k in range(1, n + 1):
        suite.record("power-sum-central", (k,), is_central(power_sum_jm(family, k)))


def _tau_relations(suite: _Suite, family: JmFamily) -> None:
    wall = suite.wall
    r, n = wall.r, wall.n
    for size in range(1, wall.max_arcs + 1):
        tau = suite.gen(Tau(size))
        for a in range(1, size + 1):
            pair = family[r - a + 1] + family[r + a]
            suite.record("tau-jm-annihilation", (size, a), not pair * tau)
        for j in range(r + size + 1, n + 1):
            element = AlgebraElement.zero(wall, suite.mode)
            for i in range(r - size + 1, r + 1):
                element = element - suite.e(i, j)
            for i in range(r + 1, r + size + 1):
                element = element + suite.tr(i, j)
            suite.record("tau-turnback-annihilation", (size, j), not element * tau)


# =============================================================================
# Public API
# =============================================================================


def verify_relation_suite(
    wall: Wall,
    mode: ScalarMode,
    family: JmFamily | None = None,
    limits: Limits | None = None,
) -> RelationReport:
    """
    Check every instance of the turnback, Jucys-Murphy and tau relations.

    Args:
        wall: The wall to check on.
        mode: Scalar mode of the computation.
        family: Jucys-Murphy family to use; a perturbed family shows which
            relations detect the perturbation. Defaults to ``jm_family``.
        limits: Size limits; defaults to ``get_limits()``.

    Raises:
        SizeLimitExceededError: If r + s exceeds the size cap.
    """
    (limits or get_limits()).check_wall(wall)
    family = family if family is not None else jm_family(wall, mode)
    suite = _Suite(wall, mode)
    _turnback_relations(suite)
    _jm_relations(suite, family)
    _tau_relations(suite, family)
    report = RelationReport(wall, mode.label, tuple(suite.checks))
    logger.info(
        "relation suite on %s in %s: %d instances, %d failed",
        wall,
        mode.label,
        len(report.checks),
        len(report.failures()),
    )
    return report


def annihilator_check(z: AlgebraElement, scalars: t.Iterable[Scalar]) -> bool:
    """
    Whether the product of (z - c) over the distinct ``scalars`` vanishes.

    Raises:
        NotCentralError: If ``z`` does not commute with the generators.
    """
    if not is_central(z):
        raise NotCentralError("annihilator_check needs a central element")
    values = list(dict.fromkeys(z.mode.coerce(c) for c in scalars))
    product = AlgebraElement.one(z.wall, z.mode)
    for value in values:
        product = product * (z - value)
        if not product:
            return True
    return not product
