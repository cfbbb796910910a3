"""
The finite presentation of the quantized walled Brauer algebra H_{r,s}(q, rho).

Generators are S_1..S_{r-1}, S_{r+1}..S_{r+s-1} and E = E_{r,r+1}. Words are
tuples of letter indices; letters are numbered S's first (ascending), then
E, and words are compared degree-lexicographically in that numbering.

Inverses never appear: S_i^{-1} is replaced by S_i - (q - 1/q) everywhere,
so the relations are polynomials in the free algebra on the letters.

Example:
    >>> p = Presentation.build(Wall(1, 1), ScalarMode.generic_q(2))
    >>> [r.name for r in p.relations]
    ['turnback-square']
"""

from __future__ import annotations

import typing as t
from dataclasses import dataclass

from ..common.exceptions import IndexOutOfRangeError, InvalidParameterError
from ..common.types import Wall
from ..diagrams import E as ClassicalE
from ..diagrams import GeneratorKind, S as ClassicalS
from ..scalars import Scalar, ScalarLike, ScalarMode

Word = tuple[int, ...]
FreePoly = dict[Word, Scalar]

EMPTY_WORD: Word = ()


def word_key(word: Word) -> tuple[int, Word]:
    """Sort key of the degree-lexicographic word order."""
    return len(word), word


# =============================================================================
# Letters
# =============================================================================


@dataclass(frozen=True, slots=True)
class Letter:
    """
    One generator of the presentation.

    Attributes:
        kind: ``"S"`` or ``"E"``.
        index: i for S_i; r for E_{r,r+1}.
    """

    kind: t.Literal["S", "E"]
    index: int

    def classical(self, wall: Wall) -> GeneratorKind:
        """The generator of B_{r,s} this letter specializes to at q = 1."""
        if self.kind == "S":
            return ClassicalS(self.index)
        return ClassicalE(wall.r, wall.r + 1)

    def __str__(self) -> str:
        return f"S{self.index}" if self.kind == "S" else "E"


# =============================================================================
# Free algebra arithmetic
# =============================================================================


def free_add(a: FreePoly, b: FreePoly, sign: int = 1) -> FreePoly:
    out = dict(a)
    for word, coeff in b.items():
        current = out.get(word)
        value = (coeff if sign > 0 else -coeff) if current is None else (current + coeff if sign > 0 else current - coeff)
        if value:
            out[word] = value
        else:
            out.pop(word, None)
    return out


def free_mul(a: FreePoly, b: FreePoly) -> FreePoly:
    out: FreePoly = {}
    for u, c in a.items():
        for v, d in b.items():
            word = u + v
            current = out.get(word)
            out[word] = c * d if current is None else current + c * d
    return {w: c for w, c in out.items() if c}


def free_scale(a: FreePoly, value: Scalar) -> FreePoly:
    if not value:
        return {}
    return {w: c * value for w, c in a.items()}


def free_product(*factors: FreePoly) -> FreePoly:
    result = factors[0]
    for factor in factors[1:]:
        result = free_mul(result, factor)
    return result


# =============================================================================
# Presentation
# =============================================================================


@dataclass(frozen=True, slots=True)
class Relation:
    """A defining relation, stored as a free polynomial equal to zero."""

    name: str
    poly: FreePoly


@dataclass(frozen=True, slots=True)
class Presentation:
    """
    Generators and defining relations of H_{r,s}(q, rho) over one scalar mode.

    Attributes:
        wall: The wall (r, s).
        mode: ``generic-q`` or ``rational-qr``.
        letters: The generators in word-order precedence.
        relations: The defining relations, inverse-free.
    """

    wall: Wall
    mode: ScalarMode
    letters: tuple[Letter, ...]
    relations: tuple[Relation, ...]

    @classmethod
    def build(cls, wall: Wall, mode: ScalarMode) -> Presentation:
        """
        Assemble the defining relations.

        Raises:
            InvalidParameterError: If ``mode`` carries no q and rho.
        """
        if not mode.has_q:
            raise InvalidParameterError(f"The quantized algebra needs a q-mode, got {mode.label}")
        letters = [Letter("S", i) for i in range(1, wall.n) if i != wall.r]
        if wall.r and wall.s:
            letters.append(Letter("E", wall.r))
        builder = _RelationBuilder(wall, mode, tuple(letters))
        return cls(wall, mode, tuple(letters), tuple(builder.relations()))

    def index_of(self, letter: Letter) -> int:
        try:
            return self.letters.index(letter)
        except ValueError:
            raise IndexOutOfRangeError("letter", str(letter), ", ".join(map(str, self.letters))) from None

    def s(self, i: int) -> int:
        """Letter index of S_i."""
        return self.index_of(Letter("S", i))

    @property
    def e(self) -> int:
        """Letter index of E_{r,r+1}."""
        return self.index_of(Letter("E", self.wall.r))

    @property
    def has_e(self) -> bool:
        return bool(self.wall.r and self.wall.s)

    def format_word(self, word: Word) -> str:
        return "*".join(str(self.letters[i]) for i in word) or "1"

    def parse_word(self, text: str) -> Word:
        """Inverse of :meth:`format_word`."""
        if text.strip() in ("", "1"):
            return EMPTY_WORD
        names = {str(letter): i for i, letter in enumerate(self.letters)}
        try:
            return tuple(names[part.strip()] for part in text.split("*"))
        except KeyError as exc:
            raise InvalidParameterError(f"Unknown letter {exc.args[0]!r} in {text!r}") from None

    def to_dict(self) -> dict[str, t.Any]:
        return {
            "wall": self.wall.to_dict(),
            "mode": self.mode.label,
            "letters": [str(letter) for letter in self.letters],
            "relations": [relation.name for relation in self.relations],
        }


class _RelationBuilder:
    """Spells out the defining relations as free polynomials."""

    def __init__(self, wall: Wall, mode: ScalarMode, letters: tuple[Letter, ...]) -> None:
        self.wall = wall
        self.mode = mode
        self.index = {letter: i for i, letter in enumerate(letters)}

    def const(self, value: ScalarLike) -> FreePoly:
        scalar = self.mode.coerce(value)
        return {EMPTY_WORD: scalar} if scalar else {}

    def s(self, i: int) -> FreePoly:
        return {(self.index[Letter("S", i)],): self.mode.one}

    def s_inv(self, i: int) -> FreePoly:
        return free_add(self.s(i), self.const(self.mode.q_diff), -1)

    def e(self) -> FreePoly:
        return {(self.index[Letter("E", self.wall.r)],): self.mode.one}

    def relations(self) -> list[Relation]:
        r, n = self.wall.r, self.wall.n
        mode = self.mode
        indices = [i for i in range(1, n) if i != r]
        out: list[Relation] = []

        for i in indices:
            quadratic = free_add(free_mul(self.s(i), self.s(i)), free_scale(self.s(i), mode.q_diff), -1)
            out.append(Relation(f"quadratic-S{i}", free_add(quadratic, self.const(1), -1)))
        for i in indices:
            if i + 1 in indices:
                left = free_product(self.s(i), self.s(i + 1), self.s(i))
                right = free_product(self.s(i + 1), self.s(i), self.s(i + 1))
                out.append(Relation(f"braid-S{i}", free_add(left, right, -1)))
        for i in indices:
            for j in indices:
                if j > i + 1:
                    out.append(Relation(f"far-S{i}-S{j}", free_add(free_mul(self.s(i), self.s(j)), free_mul(self.s(j), self.s(i)), -1)))

        if not (r and self.wall.s):
            return out
        e = self.e()
        out.append(Relation("turnback-square", free_add(free_mul(e, e), free_scale(e, mode.delta), -1)))
        for j in indices:
            if j not in (r - 1, r + 1):
                out.append(Relation(f"turnback-commutes-S{j}", free_add(free_mul(e, self.s(j)), free_mul(self.s(j), e), -1)))
        for j in (r - 1, r + 1):
            if j in indices:
                out.append(Relation(f"turnback-S{j}-turnback", free_add(free_product(e, self.s(j), e), free_scale(e, mode.rho), -1)))
        if r - 1 in indices and r + 1 in indices:
            a, b = r - 1, r + 1
            core = free_product(e, self.s_inv(a), self.s(b), e)
            out.append(Relation("long-right", free_add(free_mul(core, self.s(a)), free_mul(core, self.s(b)), -1)))
            out.append(Relation("long-left", free_add(free_mul(self.s(a), core), free_mul(self.s(b), core), -1)))
        return out
