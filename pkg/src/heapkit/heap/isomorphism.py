"""
Heap isomorphism.

Finite heaps are compared by labelled DiGraph matching (networkx). A periodic heap is
determined by the slab word of any fundamental domain, so the least slab word over all
height-zero base ideals is a complete invariant.
"""

from __future__ import annotations

from heapkit.heap.finite import FiniteHeap, finite_isomorphic
from heapkit.heap.periodic import PeriodicHeap


def canonical_word(heap: PeriodicHeap) -> tuple[int, ...]:
    return min(heap.lex_slab_word(cut) for cut in heap.height_zero_cuts)


def periodic_isomorphic(first: PeriodicHeap, second: PeriodicHeap) -> bool:
    if first.cartan != second.cartan or first.period != second.period:
        return False
    return canonical_word(first) == canonical_word(second)


def isomorphic(first: FiniteHeap | PeriodicHeap, second: FiniteHeap | PeriodicHeap) -> bool:
    if isinstance(first, PeriodicHeap) and isinstance(second, PeriodicHeap):
        return periodic_isomorphic(first, second)
    if isinstance(first, FiniteHeap) and isinstance(second, FiniteHeap):
        return finite_isomorphic(first, second)
    return False
