"""
heapkit error hierarchy.

Every domain error derives from HeapkitError. Errors that reject an argument
also derive from ValueError so callers can keep catching ValueError.
"""

from __future__ import annotations

from typing import Any


class HeapkitError(Exception):
    """Base class for all heapkit errors."""


# ============================================================================
# Cartan matrices and diagrams
# ============================================================================


class InvalidCartanMatrix(HeapkitError, ValueError):
    """Matrix violates the doubly-laced generalized Cartan matrix axioms."""


class DisconnectedDiagram(HeapkitError, ValueError):
    """Operation needs an indecomposable matrix."""


class DimensionMismatch(HeapkitError, ValueError):
    """Vectors or matrices indexed by different vertex sets."""


class NotFiniteType(HeapkitError, ValueError):
    pass


class NotAffineType(HeapkitError, ValueError):
    pass


class NotAnAutomorphism(HeapkitError, ValueError):
    pass


class OrderNotTwo(HeapkitError, ValueError):
    pass


class AdjacentOrbitViolation(HeapkitError, ValueError):
    """Some p and mu(p) are distinct adjacent vertices."""


class NotARoot(HeapkitError, ValueError):
    pass


class NotAPositiveRoot(HeapkitError, ValueError):
    pass


# ============================================================================
# Heaps
# ============================================================================


class DiagramMismatch(HeapkitError, ValueError):
    pass


class MissingCoverData(HeapkitError, ValueError):
    """Parity of a folded heap requested without cover provenance."""


class NoFullHeap(HeapkitError, ValueError):
    """No full heap exists over the requested diagram."""


class NotConvex(HeapkitError, ValueError):
    pass


class InvalidCut(HeapkitError, ValueError):
    pass


# ============================================================================
# Catalog
# ============================================================================


class RankOutOfBounds(HeapkitError, ValueError):
    pass


class FoldPreconditionViolated(HeapkitError, ValueError):
    """A folding hypothesis failed; `witness` names the offending pair."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class SearchBudgetExceeded(HeapkitError):
    """Synthesis stopped early; `partial` holds the incomplete result."""

    def __init__(self, message: str, partial: Any = None):
        super().__init__(message)
        self.partial = partial


# ============================================================================
# Representation layer
# ============================================================================


class AmbiguousMatch(HeapkitError):
    """Operator could not be expressed as a single structure constant."""


class NoConsistentEpsilon(HeapkitError):
    pass


class UnsupportedFormat(HeapkitError, ValueError):
    pass
