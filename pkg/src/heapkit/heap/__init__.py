"""Finite and periodic heaps, windows, isomorphism and serialization."""

from heapkit.heap.finite import (
    CoverLabels,
    FiniteHeap,
    HeapElement,
    SubheapKind,
    character,
    classify_subheap,
    compose,
    finite_isomorphic,
    heap_of_word,
    parity,
)
from heapkit.heap.io import (
    heap_from_json,
    heap_to_json,
    load_heap,
    render_dot,
    render_text,
    save_heap,
)
from heapkit.heap.isomorphism import canonical_word, isomorphic, periodic_isomorphic
from heapkit.heap.periodic import FoldProvenance, PeriodicHeap, verify_axioms
from heapkit.heap.window import HeapWindow, materialize

__all__ = [
    # Finite heaps
    "HeapElement",
    "CoverLabels",
    "FiniteHeap",
    "SubheapKind",
    "compose",
    "classify_subheap",
    "character",
    "parity",
    "heap_of_word",
    "finite_isomorphic",
    # Periodic heaps
    "PeriodicHeap",
    "FoldProvenance",
    "verify_axioms",
    "HeapWindow",
    "materialize",
    # Isomorphism
    "canonical_word",
    "periodic_isomorphic",
    "isomorphic",
    # I/O
    "heap_to_json",
    "heap_from_json",
    "save_heap",
    "load_heap",
    "render_text",
    "render_dot",
]
