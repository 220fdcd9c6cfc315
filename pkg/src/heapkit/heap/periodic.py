"""
Periodic representation of infinite full heaps.

A full heap E is stored as one period (the motif), the covers inside a period and
the covers from one period to the next. Coordinates: the p-element with chain index
j in copy c is E(p, c * delta_p + j); E(p, 0) is the lowest p-element of copy 0.

Provides:
- PeriodicHeap: motif + boundary covers, chain coordinates, cut arithmetic
- FoldProvenance: cover heap data carried by folded heaps
- verify_axioms: heap, fibred and full axioms on the central period of a window
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Any

from heapkit.cartan.folding import FoldedDiagram
from heapkit.cartan.matrix import DynkinDiagram, GeneralizedCartanMatrix
from heapkit.cartan.named import require_full_heap_possible
from heapkit.cartan.roots import RootVector
from heapkit.core.errors import DiagramMismatch, InvalidCut
from heapkit.core.logging_config import get_logger
from heapkit.core.reports import VerificationReport
from heapkit.heap.finite import HeapElement, as_element

if TYPE_CHECKING:
    from heapkit.heap.window import HeapWindow

log = get_logger(__name__)

Cut = tuple[int, ...]


@dataclass(frozen=True)
class FoldProvenance:
    """
    How a folded heap sits over its cover.

    `cover_labels[i]` is the cover label of motif element i in copy 0. For twisted
    (halved-period) folds, copy c carries the labels mu^c(cover_labels).
    """

    cover: PeriodicHeap
    folded: FoldedDiagram
    orientation: DynkinDiagram
    cover_labels: tuple[int, ...]
    twisted: bool = False

    def cover_label(self, motif_id: int, copy: int) -> int:
        label = self.cover_labels[motif_id]
        if self.twisted and copy % 2:
            return self.folded.mu[label]
        return label


@dataclass(frozen=True)
class CoverCoord:
    """A cover E(lower, s0 + c d_lower) < E(upper, t0 + c d_upper), for every integer c."""

    lower: int
    s0: int
    upper: int
    t0: int


class PeriodicHeap:
    """An infinite periodic heap given by one period and its cross-period covers."""

    def __init__(
        self,
        diagram: DynkinDiagram,
        elements: Iterable[HeapElement | tuple[int, int]],
        covers: Iterable[tuple[int, int]],
        boundary_covers: Iterable[tuple[int, int]],
        provenance: FoldProvenance | None = None,
        cover_labels: Mapping[int, int] | None = None,
        check_diagram: bool = True,
    ):
        if check_diagram:
            require_full_heap_possible(diagram)
        self.diagram = diagram
        raw = [as_element(e) for e in elements]
        if not raw:
            raise ValueError("Motif must contain at least one element")
        for e in raw:
            if not 0 <= e.label < diagram.n:
                raise ValueError(f"Label {e.label} is not a vertex of {diagram.name}")
        ids = [e.id for e in raw]
        if len(set(ids)) != len(ids):
            raise ValueError("Duplicate motif ids")
        motif_covers = [(int(x), int(y)) for x, y in covers]
        cross_covers = [(int(x), int(y)) for x, y in boundary_covers]
        for x, y in motif_covers + cross_covers:
            if x not in set(ids) or y not in set(ids):
                raise ValueError(f"Cover ({x}, {y}) mentions an unknown motif element")

        order = _topological(ids, motif_covers)
        renumber = {old: new for new, old in enumerate(order)}
        by_id = {e.id: e for e in raw}
        self.elements: tuple[HeapElement, ...] = tuple(
            HeapElement(renumber[old], by_id[old].label, by_id[old].rank) for old in order
        )
        self.covers: tuple[tuple[int, int], ...] = tuple(
            sorted((renumber[x], renumber[y]) for x, y in motif_covers)
        )
        self.boundary_covers: tuple[tuple[int, int], ...] = tuple(
            sorted((renumber[x], renumber[y]) for x, y in cross_covers)
        )

        counts = [0] * diagram.n
        self.chain_index: tuple[int, ...]
        chain: list[list[int]] = [[] for _ in range(diagram.n)]
        index = []
        for e in self.elements:
            index.append(counts[e.label])
            counts[e.label] += 1
            chain[e.label].append(e.id)
        self.chain_index = tuple(index)
        self.chain_members: tuple[tuple[int, ...], ...] = tuple(tuple(c) for c in chain)
        self.period = RootVector(tuple(counts))

        if provenance is None and cover_labels is not None:
            raise ValueError("cover_labels need a provenance")
        if provenance is not None and cover_labels is not None:
            provenance = FoldProvenance(
                provenance.cover,
                provenance.folded,
                provenance.orientation,
                tuple(cover_labels[old] for old in order),
                provenance.twisted,
            )
        self.provenance = provenance

        if any(e.rank is None for e in self.elements):
            self.rank_step: int | None = None
            ranks = self._compute_ranks()
            if ranks is not None:
                pairs = zip(self.elements, ranks[0], strict=True)
                self.elements = tuple(HeapElement(e.id, e.label, r) for e, r in pairs)
                self.rank_step = ranks[1]
        else:
            self.rank_step = self._rank_step_from_elements()

    # ------------------------------------------------------------------
    # Construction helpers
    # ------------------------------------------------------------------

    @classmethod
    def from_word(
        cls,
        diagram: DynkinDiagram,
        word: Sequence[int],
        provenance: FoldProvenance | None = None,
        cover_labels: Sequence[int] | None = None,
        check_diagram: bool = True,
    ) -> PeriodicHeap:
        """
        Periodic heap of the bi-infinite word ... w w w ...

        Covers are read off three consecutive copies: position i lies below position j
        when a chain of related letters climbs from i to j.
        """
        m = len(word)
        a = diagram.cartan
        triple = list(word) * 3
        below: list[int] = []
        for j, q in enumerate(triple):
            mask = 0
            for i in range(j):
                if a.related(triple[i], q):
                    mask |= below[i] | (1 << i)
            below.append(mask)

        def covers_from(j: int) -> list[int]:
            lower = [
                i for i in range(j) if a.related(triple[i], triple[j]) and (below[j] >> i) & 1
            ]
            return [i for i in lower if not any((below[k] >> i) & 1 for k in lower if k != i)]

        motif: list[tuple[int, int]] = []
        boundary: list[tuple[int, int]] = []
        for j in range(m, 2 * m):
            for i in covers_from(j):
                if i >= m:
                    motif.append((i - m, j - m))
                elif i >= 0:
                    boundary.append((i, j - m))
        labels = None if cover_labels is None else dict(enumerate(cover_labels))
        return cls(
            diagram,
            [HeapElement(i, p) for i, p in enumerate(word)],
            motif,
            boundary,
            provenance=provenance,
            cover_labels=labels,
            check_diagram=check_diagram,
        )

    def with_covers(
        self,
        covers: Iterable[tuple[int, int]] | None = None,
        boundary_covers: Iterable[tuple[int, int]] | None = None,
    ) -> PeriodicHeap:
        """A copy with replaced cover lists (used for mutation testing)."""
        labels = None
        if self.provenance is not None:
            labels = dict(enumerate(self.provenance.cover_labels))
        return PeriodicHeap(
            self.diagram,
            [HeapElement(e.id, e.label) for e in self.elements],
            self.covers if covers is None else covers,
            self.boundary_covers if boundary_covers is None else boundary_covers,
            provenance=self.provenance,
            cover_labels=labels,
        )

    def dual(self) -> PeriodicHeap:
        """Order reversed, labels kept; copy k maps to copy -k."""
        provenance = None
        labels = None
        if self.provenance is not None:
            p = self.provenance
            provenance = FoldProvenance(
                p.cover.dual(), p.folded, p.orientation, p.cover_labels, p.twisted
            )
            labels = dict(enumerate(p.cover_labels))
        return PeriodicHeap(
            self.diagram,
            [HeapElement(e.id, e.label) for e in self.elements],
            [(y, x) for x, y in self.covers],
            [(y, x) for x, y in self.boundary_covers],
            provenance=provenance,
            cover_labels=labels,
        )

    # ------------------------------------------------------------------
    # Basic data
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.diagram.n

    @property
    def cartan(self) -> GeneralizedCartanMatrix:
        return self.diagram.cartan

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def folded(self) -> bool:
        return self.provenance is not None

    @property
    def orientation(self) -> DynkinDiagram:
        """Diagram whose arrows define sgn for parities (the cover's for folded heaps)."""
        if self.provenance is not None:
            return self.provenance.orientation
        return self.diagram

    def word(self) -> tuple[int, ...]:
        return tuple(e.label for e in self.elements)

    def label(self, motif_id: int) -> int:
        return self.elements[motif_id].label

    def coord(self, motif_id: int, copy: int = 0) -> tuple[int, int]:
        p = self.elements[motif_id].label
        return p, copy * self.period[p] + self.chain_index[motif_id]

    def locate(self, p: int, t: int) -> tuple[int, int]:
        """(motif id, copy) of E(p, t)."""
        d = self.period[p]
        copy, j = divmod(t, d)
        return self.chain_members[p][j], copy

    def cover_label(self, p: int, t: int) -> int:
        """Label used for sgn: the cover label for folded heaps, p otherwise."""
        if self.provenance is None:
            return p
        motif_id, copy = self.locate(p, t)
        return self.provenance.cover_label(motif_id, copy)

    def rank_of(self, p: int, t: int) -> int | None:
        if self.rank_step is None:
            return None
        motif_id, copy = self.locate(p, t)
        rank = self.elements[motif_id].rank
        return None if rank is None else rank + copy * self.rank_step

    def character(self) -> RootVector:
        return self.period

    # ------------------------------------------------------------------
    # Ranks
    # ------------------------------------------------------------------

    def _compute_ranks(self) -> tuple[list[int], int] | None:
        """Ranks with every cover raising rank by one, normalized to min 0; None if unranked."""
        m = self.size
        # Unknowns: r_i (motif) and R (per-period step); constraints r_y = r_x + 1 (+R).
        edges = [(x, y, 0) for x, y in self.covers] + [(x, y, 1) for x, y in self.boundary_covers]
        adjacency: dict[int, list[tuple[int, int, int]]] = {i: [] for i in range(m)}
        for x, y, shift in edges:
            adjacency[x].append((y, 1, shift))
            adjacency[y].append((x, -1, -shift))
        # Track r_i = a_i + b_i * R
        values: dict[int, tuple[int, int]] = {0: (0, 0)}
        stack = [0]
        step: int | None = None
        pending: list[tuple[tuple[int, int], tuple[int, int]]] = []
        while stack:
            x = stack.pop()
            ax, bx = values[x]
            for y, delta, shift in adjacency[x]:
                # r_y + shift*R = r_x + delta  =>  r_y = r_x + delta - shift*R
                candidate = (ax + delta, bx - shift)
                if y not in values:
                    values[y] = candidate
                    stack.append(y)
                else:
                    pending.append((values[y], candidate))
        if len(values) != m:
            return None
        for (a1, b1), (a2, b2) in pending:
            if b1 == b2:
                if a1 != a2:
                    return None
                continue
            solved, rem = divmod(a2 - a1, b1 - b2)
            if rem or (step is not None and step != solved):
                return None
            step = solved
        if step is None:
            return None
        def at(i: int, k: int = step) -> int:
            return values[i][0] + values[i][1] * k

        if any(at(y) != at(x) + 1 - s * step for x, y, s in edges):
            return None
        ranks = [values[i][0] + values[i][1] * step for i in range(m)]
        low = min(ranks)
        return [r - low for r in ranks], step

    def _rank_step_from_elements(self) -> int | None:
        for x, y in self.boundary_covers:
            rx, ry = self.elements[x].rank, self.elements[y].rank
            if rx is not None and ry is not None:
                return rx + 1 - ry
        return None

    # ------------------------------------------------------------------
    # Cut arithmetic
    # ------------------------------------------------------------------

    @cached_property
    def cover_coords(self) -> tuple[CoverCoord, ...]:
        coords = []
        for x, y in self.covers:
            q, s0 = self.coord(x, 0)
            p, t0 = self.coord(y, 0)
            coords.append(CoverCoord(q, s0, p, t0))
        for x, y in self.boundary_covers:
            q, s0 = self.coord(x, 0)
            p, t0 = self.coord(y, 1)
            coords.append(CoverCoord(q, s0, p, t0))
        return tuple(coords)

    @cached_property
    def _covers_by_upper(self) -> tuple[tuple[CoverCoord, ...], ...]:
        return tuple(tuple(c for c in self.cover_coords if c.upper == p) for p in range(self.n))

    @cached_property
    def _covers_by_lower(self) -> tuple[tuple[CoverCoord, ...], ...]:
        return tuple(tuple(c for c in self.cover_coords if c.lower == p) for p in range(self.n))

    def is_valid_cut(self, cut: Sequence[int]) -> bool:
        """Downward closure over every cover of the infinite heap."""
        if len(cut) != self.n:
            return False
        d = self.period.coeffs
        for c in self.cover_coords:
            shift = (cut[c.upper] - 1 - c.t0) // d[c.upper]
            if c.s0 + shift * d[c.lower] >= cut[c.lower]:
                return False
        return True

    def require_valid(self, cut: Sequence[int]) -> None:
        if not self.is_valid_cut(cut):
            raise InvalidCut(f"{tuple(cut)} is not an ideal cut of this heap")

    def can_add(self, cut: Sequence[int], p: int) -> bool:
        """E(p, N_p) is minimal in the complement of the (valid) cut."""
        d = self.period.coeffs
        target = cut[p]
        for c in self._covers_by_upper[p]:
            shift, rem = divmod(target - c.t0, d[p])
            if rem == 0 and c.s0 + shift * d[c.lower] >= cut[c.lower]:
                return False
        return True

    def can_remove(self, cut: Sequence[int], p: int) -> bool:
        """E(p, N_p - 1) is maximal in the (valid) cut."""
        d = self.period.coeffs
        target = cut[p] - 1
        for c in self._covers_by_lower[p]:
            shift, rem = divmod(target - c.s0, d[p])
            if rem == 0 and c.t0 + shift * d[c.upper] < cut[c.upper]:
                return False
        return True

    def shift_cut(self, cut: Sequence[int], j: int = 1) -> Cut:
        """phi^j on cuts."""
        return tuple(n + j * d for n, d in zip(cut, self.period.coeffs, strict=True))

    def height(self, cut: Sequence[int], base: int = 0) -> int:
        """h(I): the largest t with E(base, t) in I."""
        return cut[base] - 1

    # ------------------------------------------------------------------
    # Order between chain coordinates
    # ------------------------------------------------------------------

    def fitting_window(self, fits: Callable[[HeapWindow], bool], start: int = 2) -> HeapWindow:
        """
        Smallest window with k >= start that `fits` accepts.

        Paths only climb through copies, so anything below an element of copy 0 lies in
        copies <= 0 and a window holding one witness holds the extreme one as well. A
        full heap needs at most n + 2 extra periods on each side.
        """
        from heapkit.heap.window import materialize

        limit = start + self.n + 2
        for k in range(start, limit + 1):
            window = materialize(self, k)
            if fits(window):
                if k > start:
                    log.debug(f"{self.diagram.name}: window grown to k={k}")
                return window
        raise InvalidCut(
            f"No window up to k={limit} orders the chains of {self.diagram.name}; "
            "the heap is not full"
        )

    @cached_property
    def _below_base(self) -> dict[tuple[int, int, int], int]:
        """For related q: 1 + max{u : E(q, u) < E(p, j)} for motif chain index j."""
        a = self.cartan
        related = [
            (p, j, q)
            for p in range(self.n)
            for j in range(self.period[p])
            for q in range(self.n)
            if q != p and a.related(p, q)
        ]

        def below(window: HeapWindow, p: int, j: int, q: int) -> list[int]:
            target = window.index_of(p, j)
            return [window.coords[i][1] for i in window.chain(q) if window.less(i, target)]

        window = self.fitting_window(
            lambda w: all(below(w, p, j, q) for p, j, q in related)
        )
        return {(p, j, q): max(below(window, p, j, q)) + 1 for p, j, q in related}

    def below_count(self, p: int, t: int, q: int) -> int:
        """Number u0 such that E(q, u) < E(p, t) iff u < u0 (q equal or adjacent to p)."""
        if q == p:
            return t
        copy, j = divmod(t, self.period[p])
        return self._below_base[(p, j, q)] + copy * self.period[q]

    def coord_less(self, lower: tuple[int, int], upper: tuple[int, int]) -> bool:
        """Order between two elements with related labels."""
        q, u = lower
        p, t = upper
        if not self.cartan.related(p, q):
            raise ValueError(f"Labels {q} and {p} are not related; use a window")
        return u < self.below_count(p, t, q)

    def slab(self, low: Sequence[int], high: Sequence[int]) -> list[tuple[int, int]]:
        """Elements E(p, t) with low_p <= t < high_p."""
        return [(p, t) for p in range(self.n) for t in range(low[p], high[p])]

    def slab_parity(
        self, elements: Sequence[tuple[int, int]], orientation: DynkinDiagram | None = None
    ) -> int:
        """Parity of a convex set given by chain coordinates, evaluated in the cover."""
        a = self.cartan
        oriented = orientation or self.orientation
        cover = [self.cover_label(p, t) for p, t in elements]
        negatives = 0
        for i in range(len(elements)):
            p, t = elements[i]
            for k in range(i + 1, len(elements)):
                q, u = elements[k]
                if not a.related(p, q):
                    continue
                cp, cq = cover[i], cover[k]
                if p == q:
                    above_i = t > u
                else:
                    above_i = u < self.below_count(p, t, q)
                hi, lo = (cp, cq) if above_i else (cq, cp)
                if oriented.sgn(hi, lo) == -1:
                    negatives += 1
        return -1 if negatives % 2 else 1

    # ------------------------------------------------------------------
    # Base ideals
    # ------------------------------------------------------------------

    @cached_property
    def base_cuts(self) -> tuple[Cut, Cut]:
        """
        (E', E' u E0) as cuts, for base vertex 0.

        E' = {x <= E(0, 0)}; E' u E0 = {x : x not >= E(0, 1)}.
        """
        window = self.base_window
        lower = [max(ts) + 1 for ts in _base_chains(window, below=True)]
        upper = [min(ts) for ts in _base_chains(window, below=False)]
        return tuple(lower), tuple(upper)

    @cached_property
    def base_window(self) -> HeapWindow:
        """Window holding, on every chain, an element <= E(0, 0) and one >= E(0, 1)."""
        return self.fitting_window(
            lambda w: all(_base_chains(w, below=True)) and all(_base_chains(w, below=False)),
            start=3,
        )

    @cached_property
    def height_zero_cuts(self) -> tuple[Cut, ...]:
        """
        All proper ideals of height zero, as cuts between E' and E' u E0.

        Ordered by size, then lexicographically.
        """
        return self.cuts_between(*self.base_cuts)

    def cuts_between(self, low: Sequence[int], high: Sequence[int]) -> tuple[Cut, ...]:
        """Valid cuts J with low <= J <= high componentwise, by size then lexicographically."""
        start = tuple(low)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for cut in frontier:
                for p in range(self.n):
                    if cut[p] < high[p] and self.can_add(cut, p):
                        grown = cut[:p] + (cut[p] + 1,) + cut[p + 1 :]
                        if grown not in seen:
                            seen.add(grown)
                            nxt.append(grown)
            frontier = nxt
        return tuple(sorted(seen, key=lambda c: (sum(c), c)))

    def fundamental_domain(self, shifts: int = 1) -> tuple[Cut, ...]:
        """Height-zero cuts and their images under phi^j for |j| <= shifts."""
        base = self.height_zero_cuts
        return tuple(
            self.shift_cut(c, j) for j in range(-shifts, shifts + 1) for c in base
        )

    def lex_slab_word(self, cut: Sequence[int]) -> tuple[int, ...]:
        """Lexicographically least linear extension of phi(I) minus I."""
        return self.lex_word_between(cut, self.shift_cut(cut))

    def lex_word_between(self, low: Sequence[int], high: Sequence[int]) -> tuple[int, ...]:
        """Lexicographically least linear extension of the slab between two nested cuts."""
        target = tuple(high)
        cur = list(low)
        word: list[int] = []
        while tuple(cur) != target:
            for p in range(self.n):
                if cur[p] < target[p] and self.can_add(cur, p):
                    word.append(p)
                    cur[p] += 1
                    break
            else:
                raise InvalidCut(f"No addable element between {tuple(low)} and {target}")
        return tuple(word)

    def window(self, k: int = 3) -> HeapWindow:
        from heapkit.heap.window import materialize

        return materialize(self, k)

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "diagram": self.diagram.name,
            "motif": [{"id": e.id, "label": e.label, "rank": e.rank} for e in self.elements],
            "covers": [list(c) for c in self.covers],
            "boundary_covers": [list(c) for c in self.boundary_covers],
            "period": list(self.period.coeffs),
        }
        if self.provenance is not None:
            p = self.provenance
            data["provenance"] = {
                "cover": p.cover.to_dict(),
                "mu": list(p.folded.mu),
                "orientation": p.orientation.to_dict(),
                "cover_labels": list(p.cover_labels),
                "twisted": p.twisted,
            }
        return data

    def __repr__(self) -> str:
        return f"PeriodicHeap({self.diagram.name}, word={self.word()})"


def _base_chains(window: HeapWindow, below: bool) -> list[list[int]]:
    """Per chain, the t with E(q, t) <= E(0, 0) (below) or E(q, t) >= E(0, 1)."""
    pivot = window.index_of(0, 0 if below else 1)
    chains = []
    for q in range(window.heap.n):
        if below:
            picked = [i for i in window.chain(q) if i == pivot or window.less(i, pivot)]
        else:
            picked = [i for i in window.chain(q) if i == pivot or window.less(pivot, i)]
        chains.append([window.coords[i][1] for i in picked])
    return chains


def _topological(ids: Sequence[int], covers: Sequence[tuple[int, int]]) -> list[int]:
    indegree = {x: 0 for x in ids}
    succ: dict[int, list[int]] = {x: [] for x in ids}
    for x, y in covers:
        indegree[y] += 1
        succ[x].append(y)
    ready = sorted(x for x in ids if indegree[x] == 0)
    order: list[int] = []
    while ready:
        x = ready.pop(0)
        order.append(x)
        for y in succ[x]:
            indegree[y] -= 1
            if indegree[y] == 0:
                ready.append(y)
        ready.sort()
    if len(order) != len(ids):
        raise ValueError("Motif covers contain a cycle")
    return order


# ============================================================================
# Axiom verification
# ============================================================================


def verify_axioms(
    heap: PeriodicHeap, cartan: GeneralizedCartanMatrix | None = None, k: int = 3
) -> VerificationReport:
    """
    Check the heap, fibred and full axioms on the central period of a 2k+1 period window.

    Translation invariance makes the central period exhaustive.
    """
    from heapkit.heap.window import materialize

    if cartan is not None and cartan != heap.cartan:
        raise DiagramMismatch(f"Heap is over {heap.diagram.name}, not the given matrix")
    k = max(k, 2)
    a = heap.cartan
    window = materialize(heap, k)
    report = VerificationReport("axioms", metadata={"diagram": heap.diagram.name, "window": k})
    central = window.copy_indices(0)

    for x in central:
        px, tx = window.coords[x]
        for y in range(len(window)):
            if y == x:
                continue
            py, ty = window.coords[y]
            if a.related(px, py):
                report.record(
                    "heap.related_comparable",
                    window.comparable(x, y),
                    witness={"elements": [[px, tx], [py, ty]]},
                )

    for x, y in window.cover_pairs:
        if x in central or y in central:
            px, py = window.coords[x][0], window.coords[y][0]
            report.record(
                "heap.cover_related",
                a.related(px, py),
                witness={"cover": [list(window.coords[x]), list(window.coords[y])]},
            )

    for p in range(heap.n):
        report.record("fibred.chain_nonempty", heap.period[p] > 0, witness={"vertex": p})

    for x in central:
        p, t = window.coords[x]
        for q in a.neighbors[p]:
            found = any(
                window.coords[z][0] == q for z in window.upper_covers[x] + window.lower_covers[x]
            )
            report.record(
                "fibred.covering_neighbour", found, witness={"element": [p, t], "vertex": q}
            )

    for x in central:
        p, t = window.coords[x]
        nxt = window.index_of(p, t + 1)
        if not window.less(x, nxt):
            report.record(
                "full.interval_sum",
                False,
                witness={"interval": [[p, t], [p, t + 1]]},
                detail="consecutive chain elements are not ordered",
            )
            continue
        interval = window.open_interval(x, nxt)
        total = sum(a[p, window.coords[z][0]] for z in interval)
        report.record(
            "full.interval_sum",
            total == -2,
            witness={"interval": [[p, t], [p, t + 1]], "sum": total},
        )

    log.debug(f"Axiom check for {heap.diagram.name}: {report.summary()}")
    return report
