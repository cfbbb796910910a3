"""
Delta-balanced weights and blocks.

Two weights are delta-balanced when the boxes of lambda^L outside mu^L pair
with the boxes of lambda^R outside mu^R so that each pair of contents sums
to -delta, and likewise with lambda and mu exchanged. Equivalently, for every
integer k the signed count

    #{boxes of lambda^L with content k} - #{boxes of lambda^R with content -delta-k}

agrees for the two weights. Blocks are the classes of this relation on the
weights indexing simple modules.

Example:
    >>> wall = Wall(2, 1)
    >>> is_delta_balanced(Weight(wall, (2,), (1,)), Weight(wall, (1,), ()), -1)
    True
"""

from __future__ import annotations

import collections
import itertools
import logging
import typing as t

from ..common.exceptions import WallMismatchError
from ..common.types import Partition, Wall
from .partitions import boxes
from .weight import DeltaLike, Weight, dot_variant, integer_delta

logger = logging.getLogger(__name__)


def _signed_profile(weight: Weight, delta: int) -> dict[int, int]:
    profile: collections.Counter[int] = collections.Counter()
    for a, b in boxes(weight.left):
        profile[b - a] += 1
    for a, b in boxes(weight.right):
        profile[-delta - (b - a)] -= 1
    return {k: v for k, v in profile.items() if v}


def balance_key(weight: Weight, delta: DeltaLike) -> t.Hashable:
    """A key that two weights share exactly when they are delta-balanced."""
    d = integer_delta(delta)
    if d is None:
        return weight.left, weight.right
    return tuple(sorted(_signed_profile(weight, d).items()))


def is_delta_balanced(first: Weight, second: Weight, delta: DeltaLike) -> bool:
    """
    Whether two weights of one wall are delta-balanced (signed content counts).

    For a non-integral delta this holds only for equal weights.
    """
    if first.wall != second.wall:
        raise WallMismatchError(first.wall, second.wall)
    return balance_key(first, delta) == balance_key(second, delta)


# =============================================================================
# Pairing search
# =============================================================================


def _outside(big: Partition, small: Partition) -> list[tuple[int, int]]:
    inner = set(boxes(small))
    return [cell for cell in boxes(big) if cell not in inner]


def _pairs_exist(left_cells: list[tuple[int, int]], right_cells: list[tuple[int, int]], delta: int) -> bool:
    if len(left_cells) != len(right_cells):
        return False
    left_contents = [b - a for a, b in left_cells]
    right_contents = [b - a for a, b in right_cells]
    for order in itertools.permutations(range(len(right_contents))):
        if all(c + right_contents[j] == -delta for c, j in zip(left_contents, order)):
            return True
    return False


def balanced_pairing(first: Weight, second: Weight, delta: DeltaLike) -> bool:
    """
    Decide delta-balance by searching for the box pairings directly.

    Exponential in the number of differing boxes; kept as a cross-check of
    :func:`is_delta_balanced`.
    """
    if first.wall != second.wall:
        raise WallMismatchError(first.wall, second.wall)
    d = integer_delta(delta)
    first_left = _outside(first.left, second.left)
    first_right = _outside(first.right, second.right)
    second_left = _outside(second.left, first.left)
    second_right = _outside(second.right, first.right)
    if d is None:
        return not (first_left or first_right or second_left or second_right)
    return _pairs_exist(first_left, first_right, d) and _pairs_exist(second_left, second_right, d)


# =============================================================================
# Blocks
# =============================================================================


def blocks(wall: Wall, delta: DeltaLike) -> list[list[Weight]]:
    """
    Partition the weights of simple modules into delta-balanced classes.

    Classes and their members follow the canonical weight order.
    """
    classes: dict[t.Hashable, list[Weight]] = {}
    for weight in dot_variant(wall, delta):
        classes.setdefault(balance_key(weight, delta), []).append(weight)
    result = list(classes.values())
    logger.debug("%s: %d weights in %d blocks", wall, sum(len(c) for c in result), len(result))
    return result
