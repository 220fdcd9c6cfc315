"""
The finite base heap E0 and height-zero ideals.

With base vertex 0, E' = {x <= E(0, 0)} and E0 = {x not >= E(0, 1)} minus E'.
Order ideals J of E0 correspond to height-zero proper ideals E' u J of E.
"""

from __future__ import annotations

from heapkit.heap.finite import FiniteHeap
from heapkit.heap.periodic import PeriodicHeap
from heapkit.rep.vectors import IdealCut


def base_subheap_E0(heap: PeriodicHeap) -> tuple[IdealCut, FiniteHeap]:
    """(E' as a cut, E0 as a finite subheap with window indices as ids)."""
    low, high = heap.base_cuts
    window = heap.base_window
    members = [
        i for i, (p, t) in enumerate(window.coords) if low[p] <= t < high[p]
    ]
    return IdealCut(low), window.subheap(members)


def order_ideals(heap: FiniteHeap) -> list[frozenset[int]]:
    """All down-closed subsets, grown one minimal element at a time, by size."""
    lower: dict[int, set[int]] = {x: set() for x in heap.elements}
    for x, y in heap.covers:
        lower[y].add(x)
    empty: frozenset[int] = frozenset()
    seen = {empty}
    frontier = [empty]
    while frontier:
        nxt = []
        for ideal in frontier:
            for x in heap.ids:
                if x not in ideal and lower[x] <= ideal:
                    grown = ideal | {x}
                    if grown not in seen:
                        seen.add(grown)
                        nxt.append(grown)
        frontier = nxt
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def enumerate_height_zero_ideals(heap: PeriodicHeap) -> list[IdealCut]:
    """Height-zero proper ideals as J u E' over the order ideals J of E0."""
    prime, e0 = base_subheap_E0(heap)
    cuts = []
    for ideal in order_ideals(e0):
        counts = [0] * heap.n
        for x in ideal:
            counts[e0.label(x)] += 1
        cuts.append(prime.plus(counts, 1))
    return sorted(cuts, key=lambda c: (sum(c.levels), c.levels))
