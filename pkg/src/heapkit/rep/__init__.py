"""The ideal module V_E: basis cuts, operators, relation suites, structure constants."""

from heapkit.rep.chevalley import (
    BracketRow,
    ChevalleyTable,
    CorootRow,
    chevalley_table,
    match_constant,
    operator_rank,
    verify_chevalley,
)
from heapkit.rep.laurent import LaurentPoly, q_factorial, q_integer
from heapkit.rep.loop import (
    affine_epsilon,
    central_operator,
    loop_action,
    loop_operator,
    shift_power,
    verify_affine_relations,
)
from heapkit.rep.operators import (
    HeapOperator,
    OperatorKind,
    RepresentationSpace,
    RootHeap,
    agree_on,
    bracket,
    identity,
    zero_operator,
)
from heapkit.rep.relations import (
    ad_power,
    verify_composition,
    verify_defining_relations,
    verify_maximal_element_cases,
    verify_root_operators,
)
from heapkit.rep.vectors import IdealCut, ModuleVector

__all__ = [
    # Scalars and vectors
    "LaurentPoly",
    "q_integer",
    "q_factorial",
    "IdealCut",
    "ModuleVector",
    # Operators
    "OperatorKind",
    "HeapOperator",
    "RepresentationSpace",
    "RootHeap",
    "bracket",
    "identity",
    "zero_operator",
    "agree_on",
    # Relation suites
    "ad_power",
    "verify_defining_relations",
    "verify_maximal_element_cases",
    "verify_root_operators",
    "verify_composition",
    # Structure constants
    "BracketRow",
    "CorootRow",
    "ChevalleyTable",
    "chevalley_table",
    "match_constant",
    "operator_rank",
    "verify_chevalley",
    # Loop algebra
    "shift_power",
    "loop_operator",
    "loop_action",
    "affine_epsilon",
    "central_operator",
    "verify_affine_relations",
]
