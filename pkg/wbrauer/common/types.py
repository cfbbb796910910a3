"""
Core Types.

This module defines the value types shared by every layer:
- Wall: the split of r + s vertices into a left block of r and a right block of s
- Partition: weakly decreasing tuple of positive integers (alias)

Vertex indices in the public API are 1-based, matching the way diagrams are
read left to right.
"""

from __future__ import annotations

import math
import re
import typing as t
from dataclasses import dataclass

from .exceptions import IndexOutOfRangeError, InvalidParameterError

# =============================================================================
# Constants
# =============================================================================

Partition = tuple[int, ...]

EMPTY_PARTITION: Partition = ()

_WALL_PATTERN = re.compile(r"^\s*\(?\s*(\d+)\s*[,x ]\s*(\d+)\s*\)?\s*$")


# =============================================================================
# Wall
# =============================================================================


@dataclass(frozen=True, slots=True, order=True)
class Wall:
    """
    The wall of an (r, s)-walled Brauer diagram.

    The first r vertices of each row sit left of the wall, the last s right
    of it.

    Examples:
        >>> Wall(2, 1).n
        3
        >>> Wall.from_string("2,2")
        Wall(r=2, s=2)
        >>> Wall(2, 1).side(3)
        'right'

    Attributes:
        r: Number of vertices left of the wall.
        s: Number of vertices right of the wall.
    """

    r: int
    s: int

    def __post_init__(self) -> None:
        if self.r < 0 or self.s < 0:
            raise InvalidParameterError(f"Wall sizes must be nonnegative, got r={self.r}, s={self.s}")

    @classmethod
    def from_string(cls, value: str) -> Wall:
        """Parse "r,s", "(r, s)" or "rxs"."""
        match = _WALL_PATTERN.match(value)
        if not match:
            raise InvalidParameterError(f"Cannot parse wall from {value!r}")
        return cls(int(match.group(1)), int(match.group(2)))

    @property
    def n(self) -> int:
        """Total number of vertices in one row."""
        return self.r + self.s

    @property
    def dimension(self) -> int:
        """Dimension of the walled Brauer algebra over this wall, (r+s)!."""
        return math.factorial(self.n)

    @property
    def max_arcs(self) -> int:
        return min(self.r, self.s)

    @property
    def left(self) -> range:
        """1-based vertex positions left of the wall."""
        return range(1, self.r + 1)

    @property
    def right(self) -> range:
        """1-based vertex positions right of the wall."""
        return range(self.r + 1, self.n + 1)

    def side(self, position: int) -> t.Literal["left", "right"]:
        self.check_position(position)
        return "left" if position <= self.r else "right"

    def same_side(self, a: int, b: int) -> bool:
        return self.side(a) == self.side(b)

    def check_position(self, position: int) -> None:
        if not 1 <= position <= self.n:
            raise IndexOutOfRangeError("vertex", position, f"1..{self.n}")

    def transposed(self) -> Wall:
        """The wall with the two blocks exchanged."""
        return Wall(self.s, self.r)

    def to_dict(self) -> dict[str, int]:
        return {"r": self.r, "s": self.s}

    def __str__(self) -> str:
        return f"({self.r},{self.s})"
