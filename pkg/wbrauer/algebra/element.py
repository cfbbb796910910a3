"""
Algebra Elements.

An element of the walled Brauer algebra is a finitely supported map from
diagrams to scalars of one ScalarMode. Multiplication is the bilinear
extension of diagram composition, with each removed loop contributing a
factor delta.

Example:
    >>> wall, mode = Wall(2, 2), ScalarMode.generic_delta()
    >>> e = AlgebraElement.generator(wall, mode, E(2, 3))
    >>> e * e == e.scale(mode.delta)
    True
"""

from __future__ import annotations

import typing as t
from dataclasses import dataclass, field

from ..common.exceptions import MixedModesError, WallMismatchError
from ..common.serialization import format_scalar
from ..common.types import Wall
from ..diagrams import GeneratorKind, WalledDiagram, algebra_generators, compose, generator
from ..scalars import Scalar, ScalarLike, ScalarMode


@dataclass(frozen=True, slots=True, eq=False)
class AlgebraElement:
    """
    A linear combination of walled Brauer diagrams.

    Instances are immutable. ``terms`` never holds explicit zeros; build
    elements through the classmethods, which coerce and prune.

    Attributes:
        wall: The wall every diagram lives on.
        mode: The scalar mode of every coefficient.
        terms: Diagram to nonzero coefficient.
    """

    wall: Wall
    mode: ScalarMode
    terms: dict[WalledDiagram, Scalar] = field(default_factory=dict)

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def from_terms(
        cls, wall: Wall, mode: ScalarMode, terms: t.Mapping[WalledDiagram, ScalarLike] | t.Iterable[tuple[WalledDiagram, ScalarLike]]
    ) -> AlgebraElement:
        items = terms.items() if isinstance(terms, t.Mapping) else terms
        out: dict[WalledDiagram, Scalar] = {}
        zero = mode.zero
        for diagram, coeff in items:
            if diagram.wall != wall:
                raise WallMismatchError(wall, diagram.wall)
            out[diagram] = out.get(diagram, zero) + mode.coerce(coeff)
        return cls(wall, mode, {d: c for d, c in out.items() if c})

    @classmethod
    def zero(cls, wall: Wall, mode: ScalarMode) -> AlgebraElement:
        return cls(wall, mode, {})

    @classmethod
    def one(cls, wall: Wall, mode: ScalarMode) -> AlgebraElement:
        return cls.scalar(wall, mode, 1)

    @classmethod
    def scalar(cls, wall: Wall, mode: ScalarMode, value: ScalarLike) -> AlgebraElement:
        return cls.from_terms(wall, mode, {WalledDiagram.identity(wall): value})

    @classmethod
    def basis(cls, diagram: WalledDiagram, mode: ScalarMode, coeff: ScalarLike = 1) -> AlgebraElement:
        return cls.from_terms(diagram.wall, mode, {diagram: coeff})

    @classmethod
    def generator(cls, wall: Wall, mode: ScalarMode, kind: GeneratorKind) -> AlgebraElement:
        return cls.basis(generator(wall, kind), mode)

    # -------------------------------------------------------------------------
    # Queries
    # -------------------------------------------------------------------------

    def coefficient(self, diagram: WalledDiagram) -> Scalar:
        return self.terms.get(diagram, self.mode.zero)

    def sorted_terms(self) -> list[tuple[WalledDiagram, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: item[0])

    @property
    def support(self) -> list[WalledDiagram]:
        return sorted(self.terms)

    def mirrored(self) -> AlgebraElement:
        """The image in the algebra of the transposed wall under diagram mirroring."""
        return AlgebraElement(self.wall.transposed(), self.mode, {d.mirrored(): c for d, c in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AlgebraElement):
            return self.wall == other.wall and self.mode == other.mode and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if not self.terms:
            return f"AlgebraElement({self.wall}, 0)"
        body = " + ".join(f"({format_scalar(c)})*{d}" for d, c in self.sorted_terms())
        return f"AlgebraElement({self.wall}, {body})"

    def to_dict(self) -> dict[str, t.Any]:
        return {
            "wall": self.wall.to_dict(),
            "mode": self.mode.label,
            "terms": [{"diagram": d.to_dict(), "coeff": format_scalar(c)} for d, c in self.sorted_terms()],
        }

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def _check(self, other: AlgebraElement) -> None:
        if self.wall != other.wall:
            raise WallMismatchError(self.wall, other.wall)
        if self.mode != other.mode:
            raise MixedModesError(self.mode.label, other.mode.label)

    def _combine(self, other: AlgebraElement, sign: int) -> AlgebraElement:
        self._check(other)
        out = dict(self.terms)
        for diagram, coeff in other.terms.items():
            current = out.get(diagram)
            updated = (sign * coeff) if current is None else (current + coeff if sign > 0 else current - coeff)
            if updated:
                out[diagram] = updated
            else:
                out.pop(diagram, None)
        return AlgebraElement(self.wall, self.mode, out)

    def __add__(self, other: AlgebraElement | ScalarLike) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            other = AlgebraElement.scalar(self.wall, self.mode, other)
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other: AlgebraElement | ScalarLike) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            other = AlgebraElement.scalar(self.wall, self.mode, other)
        return self._combine(other, -1)

    def __rsub__(self, other: ScalarLike) -> AlgebraElement:
        return AlgebraElement.scalar(self.wall, self.mode, other) - self

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.wall, self.mode, {d: -c for d, c in self.terms.items()})

    def scale(self, value: ScalarLike) -> AlgebraElement:
        c = self.mode.coerce(value)
        if not c:
            return AlgebraElement.zero(self.wall, self.mode)
        return AlgebraElement(self.wall, self.mode, {d: c * v for d, v in self.terms.items()})

    def __mul__(self, other: AlgebraElement | ScalarLike) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: ScalarLike) -> AlgebraElement:
        return self.scale(other)

    def __pow__(self, exponent: int) -> AlgebraElement:
        if exponent < 0:
            raise ValueError("Negative powers are not defined")
        result = AlgebraElement.one(self.wall, self.mode)
        for _ in range(exponent):
            result = result * self
        return result


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """
    Product ``a * b``: every diagram of ``a`` is stacked under every diagram of ``b``.

    Raises:
        WallMismatchError: Different walls.
        MixedModesError: Different scalar modes.
    """
    a._check(b)
    mode = a.mode
    delta = mode.delta
    powers = [mode.one]
    out: dict[WalledDiagram, Scalar] = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            diagram, loops = compose(d1, d2)
            while len(powers) <= loops:
                powers.append(powers[-1] * delta)
            coeff = c1 * c2 if not loops else c1 * c2 * powers[loops]
            current = out.get(diagram)
            out[diagram] = coeff if current is None else current + coeff
    return AlgebraElement(a.wall, mode, {d: c for d, c in out.items() if c})


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """``a b - b a``."""
    return mul(a, b) - mul(b, a)


def generator_elements(wall: Wall, mode: ScalarMode) -> list[AlgebraElement]:
    """The algebra generators s_i (i != r) and e_{r,r+1} as elements."""
    return [AlgebraElement.generator(wall, mode, kind) for kind in algebra_generators(wall)]


def is_central(a: AlgebraElement) -> bool:
    """Whether ``a`` commutes with every algebra generator."""
    return all(not commutator(a, g) for g in generator_elements(a.wall, a.mode))
