"""
The quantized walled Brauer algebra H_{r,s}(q, rho).

- Presentation: generators and inverse-free defining relations
- complete / RewriteSystem: a confluent rule set and its normal words
- QElement: linear combinations of normal words
- q_jm_family: quantum Jucys-Murphy elements, checked against closed forms
- verify_q_relations / classical_limit_check / q_center_dimension

Example:
    >>> from wbrauer.quantum import Presentation, complete
    >>> system = complete(Presentation.build(Wall(2, 2), ScalarMode.rational_qr(2, 3)))
    >>> system.dimension
    24
"""

from .element import QElement, q_commutator, q_generators, q_mul
from .jucys_murphy import (
    QJmFamily,
    check_closed_forms,
    closed_form_jm,
    q_e,
    q_jm_family,
    q_power_sum,
    q_s,
    q_s_inverse,
    q_transposition,
    q_turnback,
)
from .presentation import EMPTY_WORD, FreePoly, Letter, Presentation, Relation, Word, word_key
from .rewriting import RewriteSystem, complete
from .verification import (
    Q_RELATION_IDS,
    ClassicalLimitReport,
    QCenterReport,
    check_at_seeds,
    classical_limit_check,
    q_center_dimension,
    q_supersym_central_check,
    q_supersym_evaluate,
    verify_q_relations,
)

__all__ = [
    # Presentation
    "Letter",
    "Word",
    "FreePoly",
    "EMPTY_WORD",
    "word_key",
    "Relation",
    "Presentation",
    # Rewriting
    "RewriteSystem",
    "complete",
    # Elements
    "QElement",
    "q_mul",
    "q_commutator",
    "q_generators",
    # Jucys-Murphy
    "QJmFamily",
    "q_s",
    "q_s_inverse",
    "q_e",
    "q_transposition",
    "q_turnback",
    "q_jm_family",
    "closed_form_jm",
    "check_closed_forms",
    "q_power_sum",
    # Verification
    "Q_RELATION_IDS",
    "verify_q_relations",
    "q_supersym_central_check",
    "q_supersym_evaluate",
    "ClassicalLimitReport",
    "classical_limit_check",
    "QCenterReport",
    "q_center_dimension",
    "check_at_seeds",
]
