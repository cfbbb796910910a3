"""
Identity testing at random rational specializations.

Identities in two parameters (q, rho) are checked by evaluating both sides at
random rational points instead of working in Q(q, rho). A polynomial identity
of total degree at most D that holds at D + 1 independent points holds
identically; the harness always uses at least three points and records the
degree bound it was given.
"""

from __future__ import annotations

import logging
import random
import typing as t
from dataclasses import dataclass, field
from fractions import Fraction

from .modes import ScalarMode

logger = logging.getLogger(__name__)

MIN_SPECIALIZATIONS = 3
_HEIGHT = 40


@dataclass(frozen=True, slots=True)
class SpecializationReport:
    """
    Outcome of checking an identity at several rational points.

    Attributes:
        passed: True iff the identity held at every point.
        points: The (q0, rho0) pairs used, in order.
        failures: Points at which the identity failed.
        degree_bound: Degree bound supplied by the caller, if any.
    """

    passed: bool
    points: tuple[tuple[Fraction, Fraction], ...]
    failures: tuple[tuple[Fraction, Fraction], ...] = field(default_factory=tuple)
    degree_bound: int | None = None

    def to_dict(self) -> dict[str, t.Any]:
        return {
            "passed": self.passed,
            "points": [[str(q0), str(rho0)] for q0, rho0 in self.points],
            "failures": [[str(q0), str(rho0)] for q0, rho0 in self.failures],
            "degree_bound": self.degree_bound,
        }


def _random_rational(rng: random.Random) -> Fraction:
    while True:
        value = Fraction(rng.randint(-_HEIGHT, _HEIGHT), rng.randint(1, _HEIGHT))
        if value not in (0, 1, -1):
            return value


def random_specializations(count: int = MIN_SPECIALIZATIONS, seed: int = 0) -> list[ScalarMode]:
    """
    Distinct ``rational-qr`` modes drawn from a seeded generator.

    q0 and rho0 both avoid 0, 1 and -1, so delta is defined and nonzero.
    """
    rng = random.Random(seed)
    seen: set[tuple[Fraction, Fraction]] = set()
    modes: list[ScalarMode] = []
    while len(modes) < count:
        point = (_random_rational(rng), _random_rational(rng))
        if point in seen:
            continue
        seen.add(point)
        modes.append(ScalarMode.rational_qr(*point))
    return modes


def check_at_specializations(
    check: t.Callable[[ScalarMode], bool],
    *,
    count: int = MIN_SPECIALIZATIONS,
    seed: int = 0,
    degree_bound: int | None = None,
) -> SpecializationReport:
    """
    Run ``check`` at random ``rational-qr`` points.

    Args:
        check: Returns True when the identity holds in the given mode.
        count: Requested number of points; raised to at least three and to
            ``degree_bound + 1`` when a bound is given.
        seed: Seed for the point generator.
        degree_bound: Total degree bound of the identity in (q, rho).
    """
    needed = max(count, MIN_SPECIALIZATIONS)
    if degree_bound is not None:
        needed = max(needed, degree_bound + 1)
    points: list[tuple[Fraction, Fraction]] = []
    failures: list[tuple[Fraction, Fraction]] = []
    for mode in random_specializations(needed, seed):
        point = (t.cast(Fraction, mode.q0), t.cast(Fraction, mode.rho0))
        points.append(point)
        if not check(mode):
            logger.debug("identity failed at q=%s rho=%s", *point)
            failures.append(point)
    return SpecializationReport(
        passed=not failures,
        points=tuple(points),
        failures=tuple(failures),
        degree_bound=degree_bound,
    )
