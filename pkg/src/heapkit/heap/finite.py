"""
Finite labelled heaps.

Provides:
- HeapElement, CoverLabels (cover provenance for folded heaps)
- FiniteHeap: labelled poset over a Dynkin diagram given by its covers
- compose: the E o F heap
- classify_subheap flags (convex, ideal, filter, proper)
- character and parity
- isomorphism via labelled DiGraph matching (networkx)
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from heapkit.cartan.matrix import DynkinDiagram
from heapkit.cartan.roots import RootVector
from heapkit.core.errors import DiagramMismatch, MissingCoverData


@dataclass(frozen=True)
class HeapElement:
    id: int
    label: int
    rank: int | None = None


def as_element(e: HeapElement | Sequence[int]) -> HeapElement:
    """An element from a HeapElement or an (id, label) pair."""
    return e if isinstance(e, HeapElement) else HeapElement(int(e[0]), int(e[1]))


@dataclass(frozen=True)
class CoverLabels:
    """Labels of the elements in an unfolded cover, with a mu-compatible orientation."""

    orientation: DynkinDiagram
    labels: Mapping[int, int]


@dataclass(frozen=True)
class SubheapKind:
    convex: bool
    ideal: bool
    filter: bool
    proper: bool


class FiniteHeap:
    """A finite labelled heap: elements with labels and the covering relation."""

    def __init__(
        self,
        diagram: DynkinDiagram,
        elements: Iterable[HeapElement | tuple[int, int]],
        covers: Iterable[tuple[int, int]] = (),
        cover_labels: CoverLabels | None = None,
    ):
        self.diagram = diagram
        elems = [as_element(e) for e in elements]
        self.elements: dict[int, HeapElement] = {e.id: e for e in elems}
        if len(self.elements) != len(elems):
            raise ValueError("Duplicate element ids")
        for e in elems:
            if not 0 <= e.label < diagram.n:
                raise ValueError(f"Label {e.label} is not a vertex of {diagram.name}")
        self.covers: frozenset[tuple[int, int]] = frozenset((int(x), int(y)) for x, y in covers)
        for x, y in self.covers:
            if x not in self.elements or y not in self.elements:
                raise ValueError(f"Cover ({x}, {y}) mentions an unknown element")
        self.cover_labels = cover_labels
        self._topo = self._topological_order()

    # ------------------------------------------------------------------
    # Order structure
    # ------------------------------------------------------------------

    def _topological_order(self) -> list[int]:
        indegree = {x: 0 for x in self.elements}
        succ: dict[int, list[int]] = {x: [] for x in self.elements}
        for x, y in self.covers:
            indegree[y] += 1
            succ[x].append(y)
        ready = sorted(x for x, d in indegree.items() if d == 0)
        order: list[int] = []
        while ready:
            x = ready.pop(0)
            order.append(x)
            for y in sorted(succ[x]):
                indegree[y] -= 1
                if indegree[y] == 0:
                    ready.append(y)
            ready.sort()
        if len(order) != len(self.elements):
            raise ValueError("Covers contain a cycle; not a partial order")
        return order

    @cached_property
    def _below(self) -> dict[int, frozenset[int]]:
        lower: dict[int, list[int]] = {x: [] for x in self.elements}
        for x, y in self.covers:
            lower[y].append(x)
        below: dict[int, frozenset[int]] = {}
        for y in self._topo:
            acc: set[int] = set()
            for x in lower[y]:
                acc.add(x)
                acc |= below[x]
            below[y] = frozenset(acc)
        return below

    def label(self, x: int) -> int:
        return self.elements[x].label

    def less(self, x: int, y: int) -> bool:
        return x in self._below[y]

    def comparable(self, x: int, y: int) -> bool:
        return x == y or self.less(x, y) or self.less(y, x)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def ids(self) -> list[int]:
        """Element ids in a linear extension."""
        return list(self._topo)

    def word(self) -> tuple[int, ...]:
        return tuple(self.label(x) for x in self._topo)

    def maximal(self) -> list[int]:
        has_upper = {x for x, _ in self.covers}
        return [x for x in self._topo if x not in has_upper]

    def minimal(self) -> list[int]:
        has_lower = {y for _, y in self.covers}
        return [x for x in self._topo if x not in has_lower]

    # ------------------------------------------------------------------
    # Axioms and derived heaps
    # ------------------------------------------------------------------

    def heap_violations(self) -> list[tuple[str, tuple[int, int]]]:
        """Pairs violating the heap axioms (related labels incomparable, or an unrelated cover)."""
        bad: list[tuple[str, tuple[int, int]]] = []
        a = self.diagram.cartan
        ids = self._topo
        for i, x in enumerate(ids):
            for y in ids[i + 1 :]:
                if a.related(self.label(x), self.label(y)) and not self.comparable(x, y):
                    bad.append(("related-incomparable", (x, y)))
        for x, y in sorted(self.covers):
            if not a.related(self.label(x), self.label(y)):
                bad.append(("unrelated-cover", (x, y)))
        return bad

    def is_heap(self) -> bool:
        return not self.heap_violations()

    def character(self) -> RootVector:
        coeffs = [0] * self.diagram.n
        for e in self.elements.values():
            coeffs[e.label] += 1
        return RootVector(tuple(coeffs))

    def dual(self) -> FiniteHeap:
        return FiniteHeap(
            self.diagram,
            self.elements.values(),
            [(y, x) for x, y in self.covers],
            self.cover_labels,
        )

    def induced(self, subset: Iterable[int]) -> FiniteHeap:
        """Subheap on `subset` with the induced order."""
        keep = set(subset)
        relations = [(x, y) for y in keep for x in self._below[y] if x in keep]
        covers = hasse_covers(keep, relations)
        labels = None
        if self.cover_labels is not None:
            labels = CoverLabels(
                self.cover_labels.orientation,
                {x: self.cover_labels.labels[x] for x in keep},
            )
        return FiniteHeap(self.diagram, [self.elements[x] for x in sorted(keep)], covers, labels)

    def classify_subset(self, subset: Iterable[int]) -> SubheapKind:
        s = set(subset)
        ideal = all(x in s for y in s for x in self._below[y])
        upper = {x: {y for y in self.elements if x in self._below[y]} for x in s}
        filt = all(y in s for x in s for y in upper[x])
        convex = all(
            z in s
            for x in s
            for y in s
            if self.less(x, y)
            for z in upper[x]
            if self.less(z, y)
        )
        proper = ideal and 0 < len(s) < len(self.elements)
        return SubheapKind(convex=convex, ideal=ideal, filter=filt, proper=proper)

    # ------------------------------------------------------------------
    # Signs
    # ------------------------------------------------------------------

    def parity(self, orientation: DynkinDiagram | None = None) -> int:
        """
        Product of sgn(label(x), label(y)) over pairs x > y.

        Folded heaps are evaluated on their cover labels with the cover orientation.
        """
        if self.cover_labels is not None:
            oriented = self.cover_labels.orientation
            labels = dict(self.cover_labels.labels)
        else:
            if not self.diagram.cartan.simply_laced:
                raise MissingCoverData(
                    f"Parity over {self.diagram.name} needs the unfolded cover labels"
                )
            oriented = orientation if orientation is not None else self.diagram
            labels = {x: e.label for x, e in self.elements.items()}
        negatives = 0
        for y, lower in self._below.items():
            for x in lower:
                if oriented.sgn(labels[y], labels[x]) == -1:
                    negatives += 1
        return -1 if negatives % 2 else 1

    # ------------------------------------------------------------------
    # Conversion
    # ------------------------------------------------------------------

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        for x, e in self.elements.items():
            graph.add_node(x, label=e.label)
        graph.add_edges_from(self.covers)
        return graph

    def __repr__(self) -> str:
        return f"FiniteHeap({self.diagram.name}, word={self.word()})"


def hasse_covers(
    elements: Iterable[int], relations: Iterable[tuple[int, int]]
) -> list[tuple[int, int]]:
    """Covering pairs of the order generated by `relations` (transitive reduction)."""
    graph = nx.DiGraph()
    graph.add_nodes_from(elements)
    graph.add_edges_from(relations)
    if not nx.is_directed_acyclic_graph(graph):
        raise ValueError("Relations contain a cycle")
    closure = nx.transitive_closure_dag(graph)
    return sorted(nx.transitive_reduction(closure).edges())


def compose(first: FiniteHeap, second: FiniteHeap) -> tuple[FiniteHeap, dict[int, int]]:
    """
    The heap first o second.

    Second's ids are shifted past first's; returns the heap and the id map for `second`.
    Every related pair (x in first, y in second) gets x < y, so `first` is an ideal.
    """
    if first.diagram.cartan != second.diagram.cartan:
        raise DiagramMismatch(
            f"Cannot compose heaps over {first.diagram.name} and {second.diagram.name}"
        )
    offset = max(first.elements, default=-1) + 1
    shift = {y: y + offset for y in second.elements}
    elements = list(first.elements.values()) + [
        HeapElement(shift[y], e.label, e.rank) for y, e in second.elements.items()
    ]
    a = first.diagram.cartan
    relations = list(first.covers) + [(shift[x], shift[y]) for x, y in second.covers]
    for x, ex in first.elements.items():
        for y, ey in second.elements.items():
            if a.related(ex.label, ey.label):
                relations.append((x, shift[y]))
    covers = hasse_covers([e.id for e in elements], relations)
    labels = None
    if first.cover_labels is not None and second.cover_labels is not None:
        merged = dict(first.cover_labels.labels)
        merged.update({shift[y]: lab for y, lab in second.cover_labels.labels.items()})
        labels = CoverLabels(first.cover_labels.orientation, merged)
    return FiniteHeap(first.diagram, elements, covers, labels), shift


def heap_of_word(diagram: DynkinDiagram, word: Sequence[int]) -> FiniteHeap:
    """Heap of a word: position i < position j for related letters, closed transitively."""
    a = diagram.cartan
    relations = [
        (i, j)
        for j in range(len(word))
        for i in range(j)
        if a.related(word[i], word[j])
    ]
    covers = hasse_covers(range(len(word)), relations)
    return FiniteHeap(diagram, [HeapElement(i, p) for i, p in enumerate(word)], covers)


def classify_subheap(heap: FiniteHeap, subset: Iterable[int]) -> SubheapKind:
    return heap.classify_subset(subset)


def character(heap: FiniteHeap) -> RootVector:
    return heap.character()


def parity(heap: FiniteHeap, orientation: DynkinDiagram | None = None) -> int:
    return heap.parity(orientation)


def finite_isomorphic(first: FiniteHeap, second: FiniteHeap) -> bool:
    """Labelled-poset isomorphism via DiGraph matching on the Hasse diagrams."""
    if len(first) != len(second) or first.character() != second.character():
        return False
    matcher = DiGraphMatcher(
        first.to_networkx(),
        second.to_networkx(),
        node_match=lambda u, v: u["label"] == v["label"],
    )
    return bool(matcher.is_isomorphic())
