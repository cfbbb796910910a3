"""
Generator diagrams and enumeration.

The generator kinds are small frozen records so that words in the generators
can be stored, compared and serialized:

- ``S(i)``: the simple transposition swapping positions i and i+1 (i != r)
- ``E(j, k)``: top arc j-k and bottom arc j-k (j <= r < k), all else vertical
- ``Transposition(a, b)``: swaps a and b on one side of the wall
- ``Tau(t)``: e_{r,r+1} e_{r-1,r+2} ... e_{r-t+1,r+t}

Example:
    >>> wall = Wall(2, 2)
    >>> generator(wall, E(2, 3)).top_arcs()
    [(2, 3)]
"""

from __future__ import annotations

import itertools
import math
import typing as t
from dataclasses import dataclass

from ..common.config import Limits, get_limits
from ..common.exceptions import CrossesWallError, IndexOutOfRangeError
from ..common.types import Wall
from .diagram import WalledDiagram, compose

# =============================================================================
# Generator kinds
# =============================================================================


@dataclass(frozen=True, slots=True)
class S:
    i: int

    def __str__(self) -> str:
        return f"s{self.i}"


@dataclass(frozen=True, slots=True)
class E:
    j: int
    k: int

    def __str__(self) -> str:
        return f"e{self.j},{self.k}"


@dataclass(frozen=True, slots=True)
class Transposition:
    a: int
    b: int

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True, slots=True)
class Tau:
    t: int

    def __str__(self) -> str:
        return f"tau{self.t}"


GeneratorKind = t.Union[S, E, Transposition, Tau]


# =============================================================================
# Construction
# =============================================================================


def _swap(wall: Wall, a: int, b: int) -> WalledDiagram:
    n = wall.n
    pairing = list(range(n, 2 * n)) + list(range(n))
    pairing[a - 1], pairing[b - 1] = n + b - 1, n + a - 1
    pairing[n + a - 1], pairing[n + b - 1] = b - 1, a - 1
    return WalledDiagram(wall, tuple(pairing))


def _turnback(wall: Wall, pairs: t.Iterable[tuple[int, int]]) -> WalledDiagram:
    n = wall.n
    pairing = list(range(n, 2 * n)) + list(range(n))
    for j, k in pairs:
        pairing[j - 1], pairing[k - 1] = k - 1, j - 1
        pairing[n + j - 1], pairing[n + k - 1] = n + k - 1, n + j - 1
    return WalledDiagram(wall, tuple(pairing))


def check_generator(wall: Wall, kind: GeneratorKind) -> None:
    """
    Validate the index ranges of ``kind`` on ``wall``.

    Raises:
        IndexOutOfRangeError: If an index lies outside 1..r+s.
        CrossesWallError: For S(r), same-side E, or cross-wall transpositions.
    """
    n, r = wall.n, wall.r
    if isinstance(kind, S):
        if not 1 <= kind.i <= n - 1:
            raise IndexOutOfRangeError("S", kind.i, f"1..{n - 1}")
        if kind.i == r:
            raise CrossesWallError(f"S({r}) would swap the two vertices adjacent to the wall")
    elif isinstance(kind, E):
        for index in (kind.j, kind.k):
            if not 1 <= index <= n:
                raise IndexOutOfRangeError("E", index, f"1..{n}")
        if not kind.j <= r < kind.k:
            raise CrossesWallError(f"E({kind.j},{kind.k}) needs j <= {r} < k")
    elif isinstance(kind, Transposition):
        for index in (kind.a, kind.b):
            if not 1 <= index <= n:
                raise IndexOutOfRangeError("transposition", index, f"1..{n}")
        if kind.a == kind.b:
            raise IndexOutOfRangeError("transposition", (kind.a, kind.b), "two distinct vertices")
        if not wall.same_side(kind.a, kind.b):
            raise CrossesWallError(f"Transposition ({kind.a},{kind.b}) crosses the wall")
    elif isinstance(kind, Tau):
        if not 0 <= kind.t <= wall.max_arcs:
            raise IndexOutOfRangeError("Tau", kind.t, f"0..{wall.max_arcs}")
    else:
        raise TypeError(f"Unknown generator kind {kind!r}")


def generator(wall: Wall, kind: GeneratorKind) -> WalledDiagram:
    """The diagram of a generator kind on ``wall``."""
    check_generator(wall, kind)
    if isinstance(kind, S):
        return _swap(wall, kind.i, kind.i + 1)
    if isinstance(kind, E):
        return _turnback(wall, [(kind.j, kind.k)])
    if isinstance(kind, Transposition):
        return _swap(wall, kind.a, kind.b)
    r = wall.r
    return _turnback(wall, [(r - a + 1, r + a) for a in range(1, kind.t + 1)])


def algebra_generators(wall: Wall) -> list[GeneratorKind]:
    """The generating set s_1..s_{r-1}, s_{r+1}..s_{r+s-1} and e_{r,r+1}."""
    kinds: list[GeneratorKind] = [S(i) for i in range(1, wall.n) if i != wall.r]
    if wall.r and wall.s:
        kinds.append(E(wall.r, wall.r + 1))
    return kinds


def word_to_diagram(wall: Wall, word: t.Iterable[GeneratorKind]) -> tuple[WalledDiagram, int]:
    """Multiply out a word of generators left to right, summing the loops."""
    diagram = WalledDiagram.identity(wall)
    loops = 0
    for kind in word:
        diagram, extra = compose(diagram, generator(wall, kind))
        loops += extra
    return diagram, loops


# =============================================================================
# Enumeration
# =============================================================================


def _partial_transpose(diagram_pairing: t.Sequence[int], wall: Wall) -> tuple[int, ...]:
    n, r = wall.n, wall.r
    swap = [v if v % n < r else (v + n if v < n else v - n) for v in range(2 * n)]
    pairing = [0] * (2 * n)
    for v, w in enumerate(diagram_pairing):
        pairing[swap[v]] = swap[w]
    return tuple(pairing)


def permutation_to_walled(wall: Wall, permutation: t.Sequence[int]) -> WalledDiagram:
    """
    The walled diagram whose partial transpose is the permutation diagram.

    ``permutation`` maps top position i to bottom position permutation[i-1]
    (1-based). Exchanging top and bottom vertices right of the wall is a
    bijection between permutations of r+s and (r, s)-walled diagrams.
    """
    n = wall.n
    pairing = [0] * (2 * n)
    for i, image in enumerate(permutation):
        pairing[i] = n + image - 1
        pairing[n + image - 1] = i
    return WalledDiagram(wall, _partial_transpose(pairing, wall))


def walled_to_permutation(diagram: WalledDiagram) -> tuple[int, ...]:
    """Inverse of :func:`permutation_to_walled`."""
    n = diagram.n
    pairing = _partial_transpose(diagram.pairing, diagram.wall)
    return tuple(pairing[i] - n + 1 for i in range(n))


def enumerate_diagrams(wall: Wall, limits: Limits | None = None) -> list[WalledDiagram]:
    """
    All (r+s)! diagrams on ``wall`` in canonical order.

    Raises:
        SizeLimitExceededError: If r + s exceeds the size cap.
    """
    (limits or get_limits()).check_wall(wall)
    diagrams = [permutation_to_walled(wall, perm) for perm in itertools.permutations(range(1, wall.n + 1))]
    diagrams.sort()
    return diagrams


def ideal_filtration(wall: Wall, limits: Limits | None = None) -> list[int]:
    """
    Number of basis diagrams with exactly k top arcs, for k = 0..min(r, s).

    The diagrams with at least k arcs span the two-sided ideal J^k.
    """
    counts = [0] * (wall.max_arcs + 1)
    for diagram in enumerate_diagrams(wall, limits):
        counts[diagram.top_arc_count] += 1
    return counts


def expected_filtration(wall: Wall) -> list[int]:
    """Closed form of :func:`ideal_filtration`: (C(r,k) C(s,k) k!)^2 (r-k)! (s-k)!."""
    r, s = wall.r, wall.s
    return [
        (math.comb(r, k) * math.comb(s, k) * math.factorial(k)) ** 2 * math.factorial(r - k) * math.factorial(s - k)
        for k in range(wall.max_arcs + 1)
    ]
