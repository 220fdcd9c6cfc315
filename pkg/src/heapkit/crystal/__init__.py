"""Crystal graphs, weights, Weyl group action and the quantized action on the ideal module."""

from heapkit.crystal.graph import (
    CrystalEdge,
    CrystalGraph,
    CrystalKind,
    build_crystal_graph,
    kashiwara,
    verify_crystal_axioms,
)
from heapkit.crystal.quantum import QuantumAction, verify_quantum_relations
from heapkit.crystal.weights import WeightVector, verify_weights, weight
from heapkit.crystal.weyl import (
    dihedral_words,
    verify_cyclicity,
    verify_cyclicity_sample,
    verify_tl_annihilation,
    verify_weyl_relations,
    weyl_action,
    weyl_operator,
)

__all__ = [
    # Crystal graphs
    "CrystalKind",
    "CrystalEdge",
    "CrystalGraph",
    "kashiwara",
    "build_crystal_graph",
    "verify_crystal_axioms",
    # Weights
    "WeightVector",
    "weight",
    "verify_weights",
    # Weyl group
    "weyl_action",
    "weyl_operator",
    "dihedral_words",
    "verify_weyl_relations",
    "verify_tl_annihilation",
    "verify_cyclicity",
    "verify_cyclicity_sample",
    # Quantum group
    "QuantumAction",
    "verify_quantum_relations",
]
