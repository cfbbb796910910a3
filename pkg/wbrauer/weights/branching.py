"""
The branching graph and its paths.

Level a of the graph holds the weights of the wall (a, 0) for a <= r and of
(r, a - r) for a > r. An edge mu -> lambda into level a <= r adds one box to
the left partition. Into a level a > r it either removes one box from the
left partition or adds one box to the right partition.

Each edge carries the content c_T(a) of the step:

    +----------------------+---------------------------+
    | step                 | c_T(a)                    |
    +----------------------+---------------------------+
    | add box to left      | content of the box        |
    | remove box from left | minus content of the box  |
    | add box to right     | content of the box + delta|
    +----------------------+---------------------------+

The graph is built for every (r, s). The Gelfand-Zetlin constructions work
on the tower of :func:`tower_wall`, which has r >= s, and reach a wall with
r < s through :func:`transpose_wall`.
"""

from __future__ import annotations

import functools
import logging
import typing as t
from dataclasses import dataclass

from ..common.exceptions import InvalidParameterError
from ..common.types import Wall
from ..scalars import Scalar
from .partitions import add_box, addable_boxes, remove_box, removable_boxes, single_box_difference
from .weight import DeltaLike, Weight, as_delta, enumerate_weights, lift

logger = logging.getLogger(__name__)

# (integer part, coefficient of delta)
Step = tuple[int, int]


def level_wall(wall: Wall, level: int) -> Wall:
    """The wall of the subalgebra at ``level`` of the tower."""
    if not 0 <= level <= wall.n:
        raise InvalidParameterError(f"Level {level} outside 0..{wall.n}")
    return Wall(level, 0) if level <= wall.r else Wall(wall.r, level - wall.r)


def edge_step(wall: Wall, level: int, source: Weight, target: Weight) -> Step:
    """
    The content step of the edge ``source -> target`` into ``level``.

    Above level r the two rules exclude each other: one changes only the left
    partition, the other only the right.

    Raises:
        InvalidParameterError: If the two weights are not joined by an edge.
    """
    if level <= wall.r:
        cell = single_box_difference(target.left, source.left)
        if cell is None or target.right or source.right:
            raise InvalidParameterError(f"No edge {source} -> {target} at level {level}")
        return cell[1] - cell[0], 0

    removed = single_box_difference(source.left, target.left) if source.right == target.right else None
    added = single_box_difference(target.right, source.right) if source.left == target.left else None
    if removed is not None:
        return -(removed[1] - removed[0]), 0
    if added is not None:
        return added[1] - added[0], 1
    raise InvalidParameterError(f"No edge {source} -> {target} at level {level}")


@dataclass(frozen=True, slots=True)
class Path:
    """
    A path from the empty weight to a weight of the full wall.

    Attributes:
        wall: The wall of the terminal weight.
        vertices: lambda_0 (empty), lambda_1, ..., lambda_{r+s}.
        steps: The content step of each edge as (integer part, delta coefficient).
    """

    wall: Wall
    vertices: tuple[Weight, ...]
    steps: tuple[Step, ...]

    @property
    def end(self) -> Weight:
        return self.vertices[-1]

    def contents(self, delta: DeltaLike) -> tuple[Scalar, ...]:
        """c_T(1), ..., c_T(r+s) with delta substituted."""
        d = as_delta(delta)
        return tuple(lift(c, d) + d if with_delta else lift(c, d) for c, with_delta in self.steps)

    def to_dict(self) -> dict[str, t.Any]:
        return {
            "vertices": [str(v) for v in self.vertices],
            "steps": [f"{c}+delta" if with_delta else str(c) for c, with_delta in self.steps],
        }

    def transposed(self) -> Path:
        """The same path with every vertex transposed; the steps are kept."""
        return Path(self.wall.transposed(), tuple(v.transposed() for v in self.vertices), self.steps)

    def __str__(self) -> str:
        return " -> ".join(str(v) for v in self.vertices)


# =============================================================================
# Transposition
# =============================================================================

Transposable = t.TypeVar("Transposable", Wall, Weight, Path)


def transpose_wall(value: Transposable) -> Transposable:
    """
    Swap r and s, and with them lambda^L and lambda^R.

    Accepts a wall, a weight or a path and returns the same kind of value.
    Applying it twice gives back ``value``.
    """
    if isinstance(value, (Wall, Weight, Path)):
        return value.transposed()
    raise TypeError(f"Cannot transpose {type(value).__name__}")


def tower_wall(wall: Wall) -> Wall:
    """``wall`` if r >= s, otherwise its transpose."""
    return wall if wall.r >= wall.s else transpose_wall(wall)


@dataclass(frozen=True, slots=True)
class BranchingGraph:
    """
    The levelled graph of weights.

    Attributes:
        wall: The full wall.
        levels: Weights at each level 0..r+s in canonical order.
        edges: For each level a >= 1, the pairs (source, target) into it.
    """

    wall: Wall
    levels: tuple[tuple[Weight, ...], ...]
    edges: tuple[tuple[tuple[Weight, Weight], ...], ...]

    def children(self, level: int, source: Weight) -> list[Weight]:
        return [b for a, b in self.edges[level + 1] if a == source] if level < self.wall.n else []

    def parents(self, level: int, target: Weight) -> list[Weight]:
        return [a for a, b in self.edges[level] if b == target] if level > 0 else []

    def edge_count(self) -> int:
        return sum(len(e) for e in self.edges)


def _successors(wall: Wall, level: int, source: Weight) -> list[Weight]:
    target_wall = level_wall(wall, level)
    out = []
    if level <= wall.r:
        for row, _ in addable_boxes(source.left):
            out.append(Weight(target_wall, add_box(source.left, row), ()))
        return out
    for row, _ in removable_boxes(source.left):
        out.append(Weight(target_wall, remove_box(source.left, row), source.right))
    for row, _ in addable_boxes(source.right):
        out.append(Weight(target_wall, source.left, add_box(source.right, row)))
    return out


@functools.lru_cache(maxsize=64)
def branching_graph(wall: Wall) -> BranchingGraph:
    """Build the branching graph of ``wall``; every edge is classified by :func:`edge_step`."""
    levels: list[tuple[Weight, ...]] = [(Weight(Wall(0, 0)),)]
    edges: list[tuple[tuple[Weight, Weight], ...]] = [()]
    for level in range(1, wall.n + 1):
        expected = enumerate_weights(level_wall(wall, level))
        found: list[tuple[Weight, Weight]] = []
        for source in levels[-1]:
            for target in _successors(wall, level, source):
                edge_step(wall, level, source, target)
                found.append((source, target))
        reached = {target for _, target in found}
        levels.append(tuple(w for w in expected if w in reached))
        edges.append(tuple(found))
    logger.debug("branching graph of %s: %d edges", wall, sum(len(e) for e in edges))
    return BranchingGraph(wall, tuple(levels), tuple(edges))


def paths_to(weight: Weight) -> list[Path]:
    """All paths from the empty weight to ``weight``, in lexicographic vertex order."""
    graph = branching_graph(weight.wall)
    wall = weight.wall

    @functools.lru_cache(maxsize=None)
    def walk(level: int, target: Weight) -> tuple[tuple[tuple[Weight, ...], tuple[Step, ...]], ...]:
        if level == 0:
            return (((target,), ()),)
        out = []
        for source in graph.parents(level, target):
            step = edge_step(wall, level, source, target)
            for vertices, steps in walk(level - 1, source):
                out.append((vertices + (target,), steps + (step,)))
        out.sort()
        return tuple(out)

    return [Path(wall, vertices, steps) for vertices, steps in walk(wall.n, weight)]


def all_paths(wall: Wall) -> list[Path]:
    """Paths to every weight of ``wall``, grouped by weight in canonical order."""
    return [path for weight in enumerate_weights(wall) for path in paths_to(weight)]
