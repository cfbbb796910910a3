"""
Partition combinatorics.

Partitions are weakly decreasing tuples of positive integers; the empty
partition is ``()``. The content of the box in row a, column b (both
1-based) is b - a, and boxes are read row by row.

Example:
    >>> contents_of((2, 1))
    (0, 1, -1)
    >>> partition_from_contents([0, 1, -1])
    (2, 1)
"""

from __future__ import annotations

import collections
import functools
import math
import typing as t

from sympy.utilities.iterables import partitions as _sympy_partitions

from ..common.exceptions import InvalidParameterError
from ..common.types import Partition


def check_partition(parts: t.Sequence[int]) -> Partition:
    """
    Canonicalize ``parts`` (trailing zeros stripped) and validate it.

    Raises:
        InvalidParameterError: If the parts are negative or increase.
    """
    values = [int(p) for p in parts]
    while values and values[-1] == 0:
        values.pop()
    for a, b in zip(values, values[1:]):
        if b > a:
            raise InvalidParameterError(f"Partition {tuple(parts)} is not weakly decreasing")
    if any(p <= 0 for p in values):
        raise InvalidParameterError(f"Partition {tuple(parts)} has nonpositive parts")
    return tuple(values)


@functools.lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n``, in reverse lexicographic order ((n) first)."""
    if n < 0:
        return ()
    out = []
    for multiplicities in _sympy_partitions(n):
        parts = sorted((part for part, count in multiplicities.items() for _ in range(count)), reverse=True)
        out.append(tuple(parts))
    out.sort(reverse=True)
    return tuple(out)


def size(partition: Partition) -> int:
    return sum(partition)


def boxes(partition: Partition) -> list[tuple[int, int]]:
    """The (row, column) cells in row-reading order, 1-based."""
    return [(a, b) for a, length in enumerate(partition, start=1) for b in range(1, length + 1)]


def contents_of(partition: Partition) -> tuple[int, ...]:
    """Contents of the boxes of the row-reading tableau."""
    return tuple(b - a for a, b in boxes(partition))


def addable_boxes(partition: Partition) -> list[tuple[int, int]]:
    """Cells that can be added to give another partition, top row first."""
    cells = []
    for a in range(1, len(partition) + 2):
        length = partition[a - 1] if a <= len(partition) else 0
        above = partition[a - 2] if a >= 2 else math.inf
        if length < above:
            cells.append((a, length + 1))
    return cells


def removable_boxes(partition: Partition) -> list[tuple[int, int]]:
    """Cells whose removal leaves a partition, top row first."""
    cells = []
    for a, length in enumerate(partition, start=1):
        below = partition[a] if a < len(partition) else 0
        if length > below:
            cells.append((a, length))
    return cells


def add_box(partition: Partition, row: int) -> Partition:
    parts = list(partition) + [0]
    parts[row - 1] += 1
    return check_partition(parts)


def remove_box(partition: Partition, row: int) -> Partition:
    parts = list(partition)
    parts[row - 1] -= 1
    return check_partition(parts)


def single_box_difference(big: Partition, small: Partition) -> tuple[int, int] | None:
    """The cell of [big]/[small] when it is a single box, else ``None``."""
    if size(big) != size(small) + 1 or len(big) < len(small):
        return None
    diff = [b - (small[i] if i < len(small) else 0) for i, b in enumerate(big)]
    rows = [i for i, d in enumerate(diff) if d]
    if len(rows) != 1 or diff[rows[0]] != 1:
        return None
    row = rows[0] + 1
    return row, big[row - 1]


def hook_lengths(partition: Partition) -> list[int]:
    conjugate = conjugate_partition(partition)
    return [partition[a - 1] - b + conjugate[b - 1] - a + 1 for a, b in boxes(partition)]


def conjugate_partition(partition: Partition) -> Partition:
    if not partition:
        return ()
    return tuple(sum(1 for p in partition if p >= j) for j in range(1, partition[0] + 1))


def standard_tableaux_count(partition: Partition) -> int:
    """f^mu by the hook length formula."""
    return math.factorial(size(partition)) // math.prod(hook_lengths(partition))


def partition_from_contents(contents: t.Iterable[int]) -> Partition:
    """
    The unique partition with the given content multiset.

    Diagonal c of a Young diagram is filled from its top-left end, so box
    (a, b) exists iff diagonal b - a holds at least min(a, b) boxes.

    Raises:
        InvalidParameterError: If no partition has these contents.
    """
    counts = collections.Counter(int(c) for c in contents)
    total = sum(counts.values())
    rows = []
    for a in range(1, total + 1):
        length = 0
        while counts.get(length + 1 - a, 0) >= min(a, length + 1):
            length += 1
        if not length:
            break
        rows.append(length)
    try:
        partition = check_partition(rows)
    except InvalidParameterError:
        partition = None
    if partition is None or collections.Counter(contents_of(partition)) != counts:
        raise InvalidParameterError(f"No partition has content multiset {sorted(counts.elements())}")
    return partition


def format_partition(partition: Partition) -> str:
    return "(" + ",".join(str(p) for p in partition) + ")" if partition else "∅"
