"""
wbrauer - exact computer algebra for walled Brauer algebras.

This package computes with the walled Brauer algebra B_{r,s}(delta) and its
quantized deformation H_{r,s}(q, rho):

- Diagrams: walled Brauer diagrams, composition and generators
- AlgebraElement: linear combinations of diagrams over an exact field
- jm_family: Jucys-Murphy elements and their relation suites
- Weights: bipartition weights, the branching graph, contents and blocks
- Center: the center, supersymmetric evaluations and path idempotents
- Quantum: the quantized presentation completed to a rewriting system

Example usage:
    >>> from wbrauer import Wall, ScalarMode, compute_center
    >>> compute_center(Wall(2, 2), ScalarMode.generic_delta()).dimension
    6
"""

from wbrauer.algebra import AlgebraElement, jm_family, power_sum_jm, verify_relation_suite, z_element
from wbrauer.center import (
    CenterBasis,
    SupersymPoly,
    compute_center,
    idempotent,
    supersym_rank,
    verify_idempotents,
)
from wbrauer.common.config import Limits, get_limits
from wbrauer.common.exceptions import WbrError
from wbrauer.common.types import Wall
from wbrauer.diagrams import WalledDiagram, compose, enumerate_diagrams
from wbrauer.quantum import Presentation, QElement, RewriteSystem, complete, q_jm_family
from wbrauer.report import Report, resolve_mode
from wbrauer.scalars import ScalarMode
from wbrauer.weights import Weight, all_paths, blocks, contents, dot_variant, enumerate_weights

__version__ = "0.1.0"

__all__ = [
    # Foundations
    "Wall",
    "ScalarMode",
    "Limits",
    "get_limits",
    "WbrError",
    # Diagrams
    "WalledDiagram",
    "compose",
    "enumerate_diagrams",
    # Algebra
    "AlgebraElement",
    "jm_family",
    "power_sum_jm",
    "z_element",
    "verify_relation_suite",
    # Weights
    "Weight",
    "enumerate_weights",
    "dot_variant",
    "contents",
    "all_paths",
    "blocks",
    # Center
    "SupersymPoly",
    "CenterBasis",
    "compute_center",
    "supersym_rank",
    "idempotent",
    "verify_idempotents",
    # Quantized algebra
    "Presentation",
    "RewriteSystem",
    "QElement",
    "complete",
    "q_jm_family",
    # Reports
    "Report",
    "resolve_mode",
]
