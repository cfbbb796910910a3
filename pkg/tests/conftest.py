"""
Pytest configuration and fixtures for the wbrauer tests.

The B_{2,2} fixtures are the class sums C_1..C_10 and the center basis
B_1..B_6 used to check the known expansions of p_k(L) and e_k(L) over the
generic loop value. Heavy cases are marked ``slow``; deselect them with
``pytest -m "not slow"``.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from wbrauer.algebra import AlgebraElement
from wbrauer.common.config import Limits
from wbrauer.common.types import Wall
from wbrauer.diagrams import E, Transposition
from wbrauer.scalars import ScalarMode


@pytest.fixture
def wall22() -> Wall:
    return Wall(2, 2)


@pytest.fixture
def wall21() -> Wall:
    return Wall(2, 1)


@pytest.fixture
def generic() -> ScalarMode:
    return ScalarMode.generic_delta()


@pytest.fixture
def seven_thirds() -> ScalarMode:
    return ScalarMode.rational(Fraction(7, 3))


@pytest.fixture
def limits() -> Limits:
    return Limits()


@pytest.fixture(autouse=True)
def _no_size_cap_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep a developer's WBR_SIZE_CAP from leaking into the tests."""
    monkeypatch.delenv("WBR_SIZE_CAP", raising=False)


@pytest.fixture
def b22_classes(wall22: Wall, generic: ScalarMode) -> dict[int, AlgebraElement]:
    """C_1..C_10 of B_{2,2}(delta), keyed 1..10."""

    def gen(kind: object) -> AlgebraElement:
        return AlgebraElement.generator(wall22, generic, kind)  # type: ignore[arg-type]

    e13, e14, e23, e24 = gen(E(1, 3)), gen(E(1, 4)), gen(E(2, 3)), gen(E(2, 4))
    c: dict[int, AlgebraElement] = {
        1: AlgebraElement.one(wall22, generic),
        2: gen(Transposition(1, 2)),
        3: gen(Transposition(3, 4)),
        4: e23 + e13 + e14 + e24,
        5: e13 * e24 + e14 * e23,
    }
    c[6] = c[2] * c[3]
    c[7] = c[2] * c[4]
    c[8] = c[3] * c[4]
    c[9] = c[2] * c[5]
    c[10] = c[4] * c[6]
    return c


@pytest.fixture
def b22_basis(b22_classes: dict[int, AlgebraElement], generic: ScalarMode) -> list[AlgebraElement]:
    """B_1..B_6, a basis of the center of B_{2,2}(delta)."""
    c = b22_classes
    d = generic.delta
    return [
        c[1],
        c[4] - c[2] - c[3],
        c[8] - c[3].scale(d) - c[5] - c[6],
        c[7] - c[2].scale(d) - c[5] - c[6],
        c[9] - c[5].scale(d),
        c[10] - c[3] - c[6].scale(d) - c[2],
    ]
