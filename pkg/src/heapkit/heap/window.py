"""
Finite windows of periodic heaps.

Provides:
- HeapWindow: copies -k..k of the motif with chain coordinates and reachability bitsets
- materialize: build a window
- interval, convexity and ideal queries; induced finite subheaps; DOT export
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import cached_property
from typing import TYPE_CHECKING

from heapkit.heap.finite import CoverLabels, FiniteHeap, HeapElement, SubheapKind, hasse_covers

if TYPE_CHECKING:
    from heapkit.heap.periodic import PeriodicHeap


class HeapWindow:
    """Copies -k..k of a periodic heap; element indices follow a linear extension."""

    def __init__(self, heap: PeriodicHeap, k: int):
        if k < 1:
            raise ValueError(f"Window needs k >= 1, got {k}")
        self.heap = heap
        self.k = k
        m = heap.size
        self.copies = list(range(-k, k + 1))
        self.members: list[tuple[int, int]] = [(i, c) for c in self.copies for i in range(m)]
        self.coords: list[tuple[int, int]] = [heap.coord(i, c) for i, c in self.members]
        self._index = {coord: idx for idx, coord in enumerate(self.coords)}

        self.lower_covers: list[list[int]] = [[] for _ in self.members]
        self.upper_covers: list[list[int]] = [[] for _ in self.members]
        pairs: list[tuple[int, int]] = []
        for ci, c in enumerate(self.copies):
            base = ci * m
            for x, y in heap.covers:
                pairs.append((base + x, base + y))
            if ci + 1 < len(self.copies):
                for x, y in heap.boundary_covers:
                    pairs.append((base + x, base + m + y))
        for x, y in pairs:
            self.lower_covers[y].append(x)
            self.upper_covers[x].append(y)
        self.cover_pairs = pairs

        below: list[int] = [0] * len(self.members)
        for y in range(len(self.members)):
            mask = 0
            for x in self.lower_covers[y]:
                mask |= below[x] | (1 << x)
            below[y] = mask
        self._below = below

    def __len__(self) -> int:
        return len(self.members)

    # ------------------------------------------------------------------
    # Lookup
    # ------------------------------------------------------------------

    def index_of(self, p: int, t: int) -> int:
        try:
            return self._index[(p, t)]
        except KeyError as e:
            raise KeyError(f"E({p}, {t}) lies outside the window k={self.k}") from e

    def contains(self, p: int, t: int) -> bool:
        return (p, t) in self._index

    def label(self, idx: int) -> int:
        return self.coords[idx][0]

    def chain(self, p: int) -> list[int]:
        return [i for i, (q, _) in enumerate(self.coords) if q == p]

    def copy_indices(self, copy: int) -> list[int]:
        start = (copy + self.k) * self.heap.size
        return list(range(start, start + self.heap.size))

    def shift(self, idx: int, j: int = 1) -> int | None:
        """phi^j of an element, or None when it leaves the window."""
        p, t = self.coords[idx]
        return self._index.get((p, t + j * self.heap.period[p]))

    # ------------------------------------------------------------------
    # Order
    # ------------------------------------------------------------------

    def less(self, x: int, y: int) -> bool:
        return bool((self._below[y] >> x) & 1)

    def comparable(self, x: int, y: int) -> bool:
        return x == y or self.less(x, y) or self.less(y, x)

    def compare(self, x: int, y: int) -> str:
        if x == y:
            return "="
        if self.less(x, y):
            return "<"
        if self.less(y, x):
            return ">"
        return "||"

    def below_set(self, y: int) -> list[int]:
        mask = self._below[y]
        return [x for x in range(len(self.members)) if (mask >> x) & 1]

    def open_interval(self, x: int, y: int) -> list[int]:
        return [z for z in range(x + 1, y) if self.less(x, z) and self.less(z, y)]

    def closed_interval(self, x: int, y: int) -> list[int]:
        if x == y:
            return [x]
        if not self.less(x, y):
            return []
        return [x, *self.open_interval(x, y), y]

    # ------------------------------------------------------------------
    # Subsets
    # ------------------------------------------------------------------

    def cut_members(self, cut: Sequence[int]) -> list[int]:
        """Window elements of the ideal with the given cut."""
        return [i for i, (p, t) in enumerate(self.coords) if t < cut[p]]

    def is_ideal(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return all(x in s for y in s for x in self.lower_covers[y])

    def is_filter(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return all(y in s for x in s for y in self.upper_covers[x])

    def is_convex(self, subset: Iterable[int]) -> bool:
        s = sorted(set(subset))
        members = set(s)
        for x in s:
            for y in s:
                if y > x and self.less(x, y):
                    if any(z not in members for z in self.open_interval(x, y)):
                        return False
        return True

    def classify_subset(self, subset: Iterable[int]) -> SubheapKind:
        s = set(subset)
        ideal = self.is_ideal(s)
        proper = ideal and all(
            0 < sum(1 for i in self.chain(p) if i in s) < len(self.chain(p))
            for p in range(self.heap.n)
        )
        return SubheapKind(
            convex=self.is_convex(s), ideal=ideal, filter=self.is_filter(s), proper=proper
        )

    def subheap(self, subset: Iterable[int]) -> FiniteHeap:
        """Finite heap induced on `subset`; ids are window indices."""
        keep = sorted(set(subset))
        members = set(keep)
        relations = [(x, y) for y in keep for x in self.lower_covers[y] if x in members]
        # Induced order: add transitive relations through elements outside the subset.
        for y in keep:
            for x in keep:
                if x < y and self.less(x, y):
                    relations.append((x, y))
        covers = hasse_covers(keep, relations)
        elements = []
        for i in keep:
            p, t = self.coords[i]
            elements.append(HeapElement(i, p, self.heap.rank_of(p, t)))
        labels = None
        if self.heap.provenance is not None:
            labels = CoverLabels(
                self.heap.provenance.orientation,
                {i: self.heap.cover_label(*self.coords[i]) for i in keep},
            )
        return FiniteHeap(self.heap.diagram, elements, covers, labels)

    @cached_property
    def all_elements(self) -> FiniteHeap:
        return self.subheap(range(len(self.members)))

    # ------------------------------------------------------------------
    # Export
    # ------------------------------------------------------------------

    def to_dot(self) -> str:
        """One node per element labelled "p@t", one edge per cover, same-rank nodes aligned."""
        lines = [f'digraph "{self.heap.diagram.name}" {{', "  rankdir=BT;", "  node [shape=box];"]
        for i, (p, t) in enumerate(self.coords):
            lines.append(f'  n{i} [label="{p}@{t}"];')
        for x, y in sorted(self.cover_pairs):
            lines.append(f"  n{x} -> n{y};")
        if self.heap.rank_step is not None:
            layers: dict[int, list[int]] = {}
            for i, (p, t) in enumerate(self.coords):
                r = self.heap.rank_of(p, t)
                if r is not None:
                    layers.setdefault(r, []).append(i)
            for r in sorted(layers):
                nodes = " ".join(f"n{i};" for i in layers[r])
                lines.append(f"  {{ rank=same; {nodes} }}")
        lines.append("}")
        return "\n".join(lines) + "\n"


def materialize(heap: PeriodicHeap, k: int) -> HeapWindow:
    """Window over copies [-k, k]."""
    return HeapWindow(heap, k)
