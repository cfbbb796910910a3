"""
Arithmetic in the walled Brauer algebra B_{r,s}(delta).

- AlgebraElement: sparse linear combinations of diagrams
- jm_family: the Jucys-Murphy elements L_1..L_{r+s}
- power_sum_jm / elementary_supersym_jm: supersymmetric polynomials in the L_k
- verify_relation_suite: exhaustive checks of the commutation relations

Example:
    >>> from wbrauer.algebra import jm_family, power_sum_jm, is_central
    >>> family = jm_family(Wall(2, 1), ScalarMode.rational(5))
    >>> is_central(power_sum_jm(family, 2))
    True
"""

from .element import AlgebraElement, commutator, generator_elements, is_central, mul
from .jucys_murphy import (
    JmFamily,
    elementary_supersym_jm,
    jm_element,
    jm_family,
    power_sum_jm,
    z_element,
)
from .relations import (
    RELATION_IDS,
    RelationCheck,
    RelationReport,
    annihilator_check,
    verify_relation_suite,
)

__all__ = [
    # Elements
    "AlgebraElement",
    "mul",
    "commutator",
    "is_central",
    "generator_elements",
    # Jucys-Murphy
    "JmFamily",
    "jm_element",
    "jm_family",
    "power_sum_jm",
    "elementary_supersym_jm",
    "z_element",
    # Relations
    "RELATION_IDS",
    "RelationCheck",
    "RelationReport",
    "verify_relation_suite",
    "annihilator_check",
]
