"""
Walled Brauer Diagrams.

A diagram on the wall (r, s) has two rows of n = r + s vertices. Internally
vertex v in 0..n-1 is top-row position v + 1 and vertex n + v is the
bottom-row vertex below it. The ``pairing`` tuple maps each vertex to its
partner, so it is a fixed-point-free involution.

Wall conditions:
    +-----------------+---------------------------+
    | strand          | allowed                   |
    +-----------------+---------------------------+
    | top to bottom   | both ends on one side     |
    | within one row  | ends on opposite sides    |
    +-----------------+---------------------------+

Composition puts ``d1`` under ``d2``: the product's top row is the top row of
``d2``, its bottom row is the bottom row of ``d1``, and the middle row joins
the bottom of ``d2`` to the top of ``d1``. Closed loops left in the middle
row are removed and counted.
"""

from __future__ import annotations

import functools
import typing as t
from dataclasses import dataclass

from ..common.exceptions import InvalidParameterError, WallMismatchError
from ..common.types import Wall

Pairing = tuple[int, ...]


@dataclass(frozen=True, slots=True, order=True)
class WalledDiagram:
    """
    An (r, s)-walled Brauer diagram.

    Diagrams order lexicographically by their pairing array, which is the
    canonical order used for bases and JSON output.

    Attributes:
        wall: The wall the diagram lives on.
        pairing: 0-based involution on the 2n vertices.
    """

    wall: Wall
    pairing: Pairing

    def __post_init__(self) -> None:
        n = self.wall.n
        p = self.pairing
        if len(p) != 2 * n:
            raise InvalidParameterError(f"Pairing has {len(p)} entries, expected {2 * n}")
        for v, w in enumerate(p):
            if not 0 <= w < 2 * n or w == v or p[w] != v:
                raise InvalidParameterError(f"Pairing is not a fixed-point-free involution at vertex {v + 1}")
            if v > w:
                continue
            left_v = v % n < self.wall.r
            left_w = w % n < self.wall.r
            vertical = (v < n) != (w < n)
            if vertical and left_v != left_w:
                raise InvalidParameterError(f"Vertical strand {v + 1}-{w + 1} crosses the wall")
            if not vertical and left_v == left_w:
                raise InvalidParameterError(f"Horizontal strand {v + 1}-{w + 1} does not cross the wall")

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def identity(cls, wall: Wall) -> WalledDiagram:
        n = wall.n
        return cls(wall, tuple(list(range(n, 2 * n)) + list(range(n))))

    @classmethod
    def from_pairs(cls, wall: Wall, pairs: t.Iterable[tuple[int, int]]) -> WalledDiagram:
        """
        Build a diagram from 1-based vertex pairs.

        Vertices 1..n are the top row and n+1..2n the bottom row.
        """
        pairing = [-1] * (2 * wall.n)
        for a, b in pairs:
            pairing[a - 1] = b - 1
            pairing[b - 1] = a - 1
        return cls(wall, tuple(pairing))

    @classmethod
    def from_dict(cls, data: t.Mapping[str, t.Any]) -> WalledDiagram:
        wall = Wall(int(data["r"]), int(data["s"]))
        return cls(wall, tuple(int(v) - 1 for v in data["pairing"]))

    # -------------------------------------------------------------------------
    # Queries
    # -------------------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.wall.n

    def top_arcs(self) -> list[tuple[int, int]]:
        """Horizontal strands in the top row as 1-based position pairs."""
        n = self.n
        return [(v + 1, w + 1) for v, w in enumerate(self.pairing[:n]) if v < w < n]

    def bottom_arcs(self) -> list[tuple[int, int]]:
        """Horizontal strands in the bottom row as 1-based position pairs."""
        n = self.n
        return [(v - n + 1, w - n + 1) for v, w in enumerate(self.pairing) if n <= v < w]

    @property
    def top_arc_count(self) -> int:
        return len(self.top_arcs())

    @property
    def bottom_arc_count(self) -> int:
        return len(self.bottom_arcs())

    @property
    def is_identity(self) -> bool:
        return self == WalledDiagram.identity(self.wall)

    def flip(self) -> WalledDiagram:
        """Mirror the diagram across the horizontal axis."""
        n = self.n
        swap = [v + n if v < n else v - n for v in range(2 * n)]
        pairing = [0] * (2 * n)
        for v, w in enumerate(self.pairing):
            pairing[swap[v]] = swap[w]
        return WalledDiagram(self.wall, tuple(pairing))

    def mirrored(self) -> WalledDiagram:
        """
        Mirror the diagram across the vertical axis.

        The result lives on the transposed wall (s, r). Mirroring commutes
        with composition and keeps loop counts, so it extends to an algebra
        isomorphism between the two walls.
        """
        n = self.n
        swap = [n - 1 - v if v < n else 3 * n - 1 - v for v in range(2 * n)]
        pairing = [0] * (2 * n)
        for v, w in enumerate(self.pairing):
            pairing[swap[v]] = swap[w]
        return WalledDiagram(self.wall.transposed(), tuple(pairing))

    def to_dict(self) -> dict[str, t.Any]:
        return {"r": self.wall.r, "s": self.wall.s, "pairing": [w + 1 for w in self.pairing]}

    def __str__(self) -> str:
        n = self.n
        strands = []
        for v, w in enumerate(self.pairing):
            if v < w:
                a = f"{v + 1}" if v < n else f"{v - n + 1}'"
                b = f"{w + 1}" if w < n else f"{w - n + 1}'"
                strands.append(f"{a}-{b}")
        return "{" + " ".join(strands) + "}"


def top_arc_count(diagram: WalledDiagram) -> int:
    return diagram.top_arc_count


def bottom_arc_count(diagram: WalledDiagram) -> int:
    return diagram.bottom_arc_count


# =============================================================================
# Composition
# =============================================================================


def _compose_pairings(n: int, lower: Pairing, upper: Pairing) -> tuple[Pairing, int]:
    result = [-1] * (2 * n)
    seen = [False] * n

    for start in range(2 * n):
        if result[start] >= 0:
            continue
        in_upper = start < n
        v = start
        while True:
            if in_upper:
                p = upper[v]
                if p < n:
                    break
                seen[p - n] = True
                in_upper, v = False, p - n
            else:
                p = lower[v]
                if p >= n:
                    break
                seen[p] = True
                in_upper, v = True, p + n
        result[start] = p
        result[p] = start

    loops = 0
    for m in range(n):
        if seen[m]:
            continue
        loops += 1
        v = m
        while not seen[v]:
            seen[v] = True
            w = lower[v]
            seen[w] = True
            v = upper[w + n] - n
    return tuple(result), loops


@functools.lru_cache(maxsize=1 << 18)
def compose(d1: WalledDiagram, d2: WalledDiagram) -> tuple[WalledDiagram, int]:
    """
    Stack ``d1`` under ``d2``.

    Returns:
        ``(d1 * d2, loops)``; the algebra product is delta**loops times the
        returned diagram.

    Raises:
        WallMismatchError: If the diagrams live on different walls.
    """
    if d1.wall != d2.wall:
        raise WallMismatchError(d1.wall, d2.wall)
    pairing, loops = _compose_pairings(d1.wall.n, d1.pairing, d2.pairing)
    return WalledDiagram(d1.wall, pairing), loops
