"""Cartan matrices, Dynkin diagrams, roots, signs and folding."""

from heapkit.cartan.folding import (
    FoldedDiagram,
    compatible_orientation,
    fold_diagram,
    is_compatible,
)
from heapkit.cartan.matrix import (
    CartanClass,
    CartanType,
    DynkinDiagram,
    GeneralizedCartanMatrix,
    classify,
)
from heapkit.cartan.named import (
    NO_FULL_HEAP,
    affine_diagram,
    finite_diagram,
    parse_diagram,
    require_full_heap_possible,
)
from heapkit.cartan.roots import (
    RootCase,
    RootVector,
    comarks,
    finite_positive_roots,
    null_and_highest_root,
    null_root,
    pairing,
    positive_roots,
    root_trichotomy,
    sgn,
    simple_reflection,
    symmetrizer,
)

__all__ = [
    # Matrices and diagrams
    "GeneralizedCartanMatrix",
    "DynkinDiagram",
    "CartanClass",
    "CartanType",
    "classify",
    # Named diagrams
    "affine_diagram",
    "finite_diagram",
    "parse_diagram",
    "require_full_heap_possible",
    "NO_FULL_HEAP",
    # Roots
    "RootVector",
    "RootCase",
    "pairing",
    "simple_reflection",
    "positive_roots",
    "finite_positive_roots",
    "null_and_highest_root",
    "null_root",
    "comarks",
    "symmetrizer",
    "sgn",
    "root_trichotomy",
    # Folding
    "FoldedDiagram",
    "fold_diagram",
    "compatible_orientation",
    "is_compatible",
]
