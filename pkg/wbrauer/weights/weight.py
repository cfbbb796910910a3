"""
Weights and content vectors.

A weight of the wall (r, s) is a bipartition (lambda^L, lambda^R) with
|lambda^L| = r - t and |lambda^R| = s - t for some 0 <= t <= min(r, s). Its
content vector lists, in order, the contents of lambda^L, then 2t zeros,
then the contents of lambda^R shifted by delta.

Delta arguments are exact scalars: a Fraction for a fixed value, or a
rational function (e.g. ``DELTA``) for the generic parameter. Integer
sensitive predicates treat any non-constant rational function as a
non-integer.

Example:
    >>> w = Weight(Wall(2, 1), (2,), (1,))
    >>> contents(w, Fraction(3)).values
    (Fraction(0, 1), Fraction(1, 1), Fraction(3, 1))
"""

from __future__ import annotations

import math
import typing as t
from dataclasses import dataclass
from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field

from ..common.exceptions import InvalidParameterError
from ..common.types import EMPTY_PARTITION, Partition, Wall
from ..scalars import Scalar, ScalarLike, ScalarMode, from_qq, to_qq
from .partitions import check_partition, contents_of, format_partition, partitions_of, size, standard_tableaux_count

Z_FIELD, Z = field("z", QQ)
ZD_FIELD, ZD_Z, ZD_D = field("z,d", QQ)

DeltaLike = t.Union[int, Fraction, FracElement, ScalarMode]


# =============================================================================
# Delta helpers
# =============================================================================


def as_delta(delta: DeltaLike) -> Scalar:
    """Normalize a delta argument (a scalar or a ScalarMode) to a scalar."""
    if isinstance(delta, ScalarMode):
        return delta.delta
    if isinstance(delta, FracElement):
        return delta
    return Fraction(delta)


def integer_delta(delta: DeltaLike) -> int | None:
    """delta as an int when it is an integer constant, else ``None``."""
    value = as_delta(delta)
    if isinstance(value, FracElement):
        if value.numer.is_ground and value.denom.is_ground:
            value = from_qq(value.numer.LC) / from_qq(value.denom.LC)
        else:
            return None
    return int(value) if value.denominator == 1 else None


def lift(value: ScalarLike, delta: Scalar) -> Scalar:
    """Embed an integer or Fraction into the field that ``delta`` lives in."""
    if isinstance(delta, FracElement):
        if isinstance(value, FracElement):
            return value
        return delta.field.ground_new(to_qq(Fraction(value)))
    return Fraction(value)


# =============================================================================
# Weight
# =============================================================================


@dataclass(frozen=True, slots=True, order=True)
class Weight:
    """
    A weight (lambda^L, lambda^R) of the wall (r, s).

    Attributes:
        wall: The wall the weight belongs to.
        left: lambda^L, a partition of r - t.
        right: lambda^R, a partition of s - t.
    """

    wall: Wall
    left: Partition = EMPTY_PARTITION
    right: Partition = EMPTY_PARTITION

    def __post_init__(self) -> None:
        object.__setattr__(self, "left", check_partition(self.left))
        object.__setattr__(self, "right", check_partition(self.right))
        t_left = self.wall.r - size(self.left)
        t_right = self.wall.s - size(self.right)
        if t_left != t_right or t_left < 0:
            raise InvalidParameterError(
                f"({format_partition(self.left)},{format_partition(self.right)}) is not a weight of {self.wall}"
            )

    @classmethod
    def from_dict(cls, wall: Wall, data: t.Mapping[str, t.Any]) -> Weight:
        return cls(wall, tuple(data.get("left", ())), tuple(data.get("right", ())))

    @property
    def t(self) -> int:
        """Number of arcs: r - |lambda^L|."""
        return self.wall.r - size(self.left)

    @property
    def is_empty(self) -> bool:
        return not self.left and not self.right

    def transposed(self) -> Weight:
        """The weight of the transposed wall with the two partitions exchanged."""
        return Weight(self.wall.transposed(), self.right, self.left)

    def to_dict(self) -> dict[str, t.Any]:
        return {"left": list(self.left), "right": list(self.right), "t": self.t}

    def __str__(self) -> str:
        return f"({format_partition(self.left)},{format_partition(self.right)})"


def enumerate_weights(wall: Wall) -> list[Weight]:
    """All weights of ``wall``, ordered by t, then lambda^L, then lambda^R (each largest first)."""
    out = []
    for arcs in range(wall.max_arcs + 1):
        for left in partitions_of(wall.r - arcs):
            for right in partitions_of(wall.s - arcs):
                out.append(Weight(wall, left, right))
    return out


def dot_variant(wall: Wall, delta: DeltaLike) -> list[Weight]:
    """The weights indexing simple modules: (empty, empty) is dropped when delta = 0 and r = s != 0."""
    weights = enumerate_weights(wall)
    if integer_delta(delta) == 0 and wall.r == wall.s and wall.r:
        weights = [w for w in weights if not w.is_empty]
    return weights


# =============================================================================
# Contents
# =============================================================================


@dataclass(frozen=True, slots=True)
class ContentVector:
    """
    The content sequence c(lambda, 1..r+s).

    Attributes:
        values: One scalar per position.
        left: Number of leading entries that are lambda^L contents.
        middle: Number of zeros between the two blocks (2t).
    """

    values: tuple[Scalar, ...]
    left: int = 0
    middle: int = 0

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> t.Iterator[Scalar]:
        return iter(self.values)

    def __getitem__(self, i: int) -> Scalar:
        return self.values[i]

    def to_dict(self) -> dict[str, t.Any]:
        return {"values": list(self.values)}


def contents(weight: Weight, delta: DeltaLike) -> ContentVector:
    """The content vector of ``weight`` with lambda^R contents shifted by delta."""
    d = as_delta(delta)
    left = [lift(c, d) for c in contents_of(weight.left)]
    middle = [lift(0, d)] * (2 * weight.t)
    right = [lift(c, d) + d for c in contents_of(weight.right)]
    return ContentVector(tuple(left + middle + right), len(left), len(middle))


def content_rational_function(weight: Weight, delta: DeltaLike) -> FracElement:
    """
    prod(1 + cont(lambda^L, i) z) / prod(1 - (cont(lambda^R, j) + delta) z).

    For a rational delta the result lies in Q(z). A symbolic delta is
    represented by the indeterminate d of Q(z, d).
    """
    d = as_delta(delta)
    if isinstance(d, FracElement) and integer_delta(d) is None:
        fld, z, shift = ZD_FIELD, ZD_Z, ZD_D
    else:
        value = integer_delta(d) if isinstance(d, FracElement) else d
        fld, z = Z_FIELD, Z
        shift = fld.ground_new(to_qq(value))
    numer = fld.one
    for c in contents_of(weight.left):
        numer = numer * (z * c + 1)
    denom = fld.one
    for c in contents_of(weight.right):
        denom = denom * (1 - z * (shift + c))
    return numer / denom


def is_semisimple(wall: Wall, delta: DeltaLike) -> bool:
    """
    Semisimplicity of B_{r,s}(delta).

    True iff r = 0 or s = 0, delta is not an integer, |delta| > r + s - 2,
    or delta = 0 with (r, s) one of (1,2), (1,3), (2,1), (3,1).
    """
    r, s = wall.r, wall.s
    if r == 0 or s == 0:
        return True
    d = integer_delta(delta)
    if d is None:
        return True
    if abs(d) > r + s - 2:
        return True
    return d == 0 and (r, s) in {(1, 2), (1, 3), (2, 1), (3, 1)}


def cell_dimension(weight: Weight) -> int:
    """C(r,t) C(s,t) t! f^{lambda^L} f^{lambda^R}; the number of paths to ``weight``."""
    r, s, arcs = weight.wall.r, weight.wall.s, weight.t
    return (
        math.comb(r, arcs)
        * math.comb(s, arcs)
        * math.factorial(arcs)
        * standard_tableaux_count(weight.left)
        * standard_tableaux_count(weight.right)
    )
