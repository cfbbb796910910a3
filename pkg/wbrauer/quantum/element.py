"""
Elements of the quantized walled Brauer algebra.

A QElement is a finitely supported map from normal words of a completed
RewriteSystem to scalars. Products concatenate words and reduce.

Example:
    >>> e = QElement.letter(system, Letter("E", 1))
    >>> e * e == e.scale(system.presentation.mode.delta)
    True
"""

from __future__ import annotations

import typing as t
from dataclasses import dataclass, field

from ..common.exceptions import MixedModesError
from ..common.serialization import format_scalar
from ..scalars import Scalar, ScalarLike, ScalarMode
from .presentation import EMPTY_WORD, Letter, Word
from .rewriting import RewriteSystem


@dataclass(frozen=True, slots=True, eq=False)
class QElement:
    """
    A linear combination of normal words.

    Attributes:
        system: The completed rewriting system.
        terms: Normal word to nonzero coefficient.
    """

    system: RewriteSystem
    terms: dict[Word, Scalar] = field(default_factory=dict)

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def from_word(cls, system: RewriteSystem, word: Word, coeff: ScalarLike = 1) -> QElement:
        """The normal form of ``coeff * word``."""
        c = system.presentation.mode.coerce(coeff)
        if not c:
            return cls(system, {})
        return cls(system, {w: v * c for w, v in system.normal_form_word(word).items()})

    @classmethod
    def letter(cls, system: RewriteSystem, letter: Letter) -> QElement:
        return cls.from_word(system, (system.presentation.index_of(letter),))

    @classmethod
    def zero(cls, system: RewriteSystem) -> QElement:
        return cls(system, {})

    @classmethod
    def one(cls, system: RewriteSystem) -> QElement:
        return cls.scalar(system, 1)

    @classmethod
    def scalar(cls, system: RewriteSystem, value: ScalarLike) -> QElement:
        return cls.from_word(system, EMPTY_WORD, value)

    # -------------------------------------------------------------------------
    # Queries
    # -------------------------------------------------------------------------

    @property
    def mode(self) -> ScalarMode:
        return self.system.presentation.mode

    def coefficient(self, word: Word) -> Scalar:
        return self.terms.get(word, self.mode.zero)

    def sorted_terms(self) -> list[tuple[Word, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QElement):
            return self.system is other.system and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        fmt = self.system.presentation.format_word
        body = " + ".join(f"({format_scalar(c)})*{fmt(w)}" for w, c in self.sorted_terms()) or "0"
        return f"QElement({body})"

    def to_dict(self) -> dict[str, t.Any]:
        fmt = self.system.presentation.format_word
        return {"terms": [{"word": fmt(w), "coeff": format_scalar(c)} for w, c in self.sorted_terms()]}

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def _check(self, other: QElement) -> None:
        if self.system is not other.system:
            raise MixedModesError(self.system.presentation.mode.label, other.system.presentation.mode.label)

    def _combine(self, other: QElement, sign: int) -> QElement:
        self._check(other)
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            current = out.get(word)
            if current is None:
                updated = coeff if sign > 0 else -coeff
            else:
                updated = current + coeff if sign > 0 else current - coeff
            if updated:
                out[word] = updated
            else:
                out.pop(word, None)
        return QElement(self.system, out)

    def __add__(self, other: QElement | ScalarLike) -> QElement:
        if not isinstance(other, QElement):
            other = QElement.scalar(self.system, other)
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other: QElement | ScalarLike) -> QElement:
        if not isinstance(other, QElement):
            other = QElement.scalar(self.system, other)
        return self._combine(other, -1)

    def __rsub__(self, other: ScalarLike) -> QElement:
        return QElement.scalar(self.system, other) - self

    def __neg__(self) -> QElement:
        return QElement(self.system, {w: -c for w, c in self.terms.items()})

    def scale(self, value: ScalarLike) -> QElement:
        c = self.mode.coerce(value)
        if not c:
            return QElement.zero(self.system)
        return QElement(self.system, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other: QElement | ScalarLike) -> QElement:
        if isinstance(other, QElement):
            return q_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: ScalarLike) -> QElement:
        return self.scale(other)

    def __pow__(self, exponent: int) -> QElement:
        if exponent < 0:
            raise ValueError("Negative powers are not defined")
        result = QElement.one(self.system)
        for _ in range(exponent):
            result = result * self
        return result


def q_mul(a: QElement, b: QElement) -> QElement:
    """Concatenate every pair of normal words and reduce."""
    a._check(b)
    system = a.system
    out: dict[Word, Scalar] = {}
    for u, c in a.terms.items():
        for v, d in b.terms.items():
            for w, e in system.normal_form_word(u + v).items():
                coeff = c * d * e
                current = out.get(w)
                out[w] = coeff if current is None else current + coeff
    return QElement(system, {w: c for w, c in out.items() if c})


def q_commutator(a: QElement, b: QElement) -> QElement:
    return q_mul(a, b) - q_mul(b, a)


def q_generators(system: RewriteSystem) -> list[QElement]:
    """Every letter of the presentation as an element."""
    return [QElement.letter(system, letter) for letter in system.presentation.letters]
