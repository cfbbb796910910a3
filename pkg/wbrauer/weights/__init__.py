"""
Weights, contents, the branching graph and blocks.

Example:
    >>> from wbrauer.weights import enumerate_weights, is_semisimple
    >>> len(enumerate_weights(Wall(2, 2)))
    6
    >>> is_semisimple(Wall(2, 2), 1)
    False
"""

from .blocks import balance_key, balanced_pairing, blocks, is_delta_balanced
from .branching import (
    BranchingGraph,
    Path,
    Step,
    all_paths,
    branching_graph,
    edge_step,
    level_wall,
    paths_to,
    tower_wall,
    transpose_wall,
)
from .partitions import (
    conjugate_partition,
    contents_of,
    format_partition,
    hook_lengths,
    partition_from_contents,
    partitions_of,
    standard_tableaux_count,
)
from .weight import (
    ContentVector,
    DeltaLike,
    Weight,
    as_delta,
    cell_dimension,
    content_rational_function,
    contents,
    dot_variant,
    enumerate_weights,
    integer_delta,
    is_semisimple,
)

__all__ = [
    # Partitions
    "partitions_of",
    "contents_of",
    "conjugate_partition",
    "hook_lengths",
    "standard_tableaux_count",
    "partition_from_contents",
    "format_partition",
    # Weights
    "Weight",
    "DeltaLike",
    "ContentVector",
    "as_delta",
    "integer_delta",
    "enumerate_weights",
    "dot_variant",
    "contents",
    "content_rational_function",
    "is_semisimple",
    "cell_dimension",
    # Branching
    "BranchingGraph",
    "Path",
    "Step",
    "level_wall",
    "edge_step",
    "branching_graph",
    "paths_to",
    "all_paths",
    "transpose_wall",
    "tower_wall",
    # Blocks
    "is_delta_balanced",
    "balanced_pairing",
    "balance_key",
    "blocks",
]
