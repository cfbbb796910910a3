"""
Walled Brauer diagrams: construction, enumeration and composition.

Example:
    >>> from wbrauer.common import Wall
    >>> from wbrauer.diagrams import E, compose, generator
    >>> e = generator(Wall(2, 2), E(2, 3))
    >>> compose(e, e)[1]
    1
"""

from .diagram import Pairing, WalledDiagram, bottom_arc_count, compose, top_arc_count
from .generators import (
    E,
    GeneratorKind,
    S,
    Tau,
    Transposition,
    algebra_generators,
    check_generator,
    enumerate_diagrams,
    expected_filtration,
    generator,
    ideal_filtration,
    permutation_to_walled,
    walled_to_permutation,
    word_to_diagram,
)

__all__ = [
    # Diagrams
    "WalledDiagram",
    "Pairing",
    "compose",
    "top_arc_count",
    "bottom_arc_count",
    # Generators
    "S",
    "E",
    "Transposition",
    "Tau",
    "GeneratorKind",
    "generator",
    "check_generator",
    "algebra_generators",
    "word_to_diagram",
    # Enumeration
    "enumerate_diagrams",
    "permutation_to_walled",
    "walled_to_permutation",
    "ideal_filtration",
    "expected_filtration",
]
