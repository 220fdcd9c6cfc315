"""
Folding full heaps along a diagram involution.

The folded heap keeps the elements and order of the cover and pushes every label
through the orbit map. When the pushed character is twice the folded null root the
cover is of the form ... u mu(u) u mu(u) ..., and the folded heap has period u.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import replace

from heapkit.cartan.folding import FoldedDiagram, compatible_orientation, fold_diagram
from heapkit.cartan.matrix import DynkinDiagram
from heapkit.cartan.roots import null_root
from heapkit.core.errors import FoldPreconditionViolated
from heapkit.core.logging_config import get_logger, log_function_call
from heapkit.heap.isomorphism import canonical_word
from heapkit.heap.periodic import FoldProvenance, PeriodicHeap, verify_axioms

log = get_logger(__name__)


def check_comparability(heap: PeriodicHeap, folded: FoldedDiagram, k: int = 2) -> None:
    """
    Every p- and q-labelled pair with mu(p) related to q must be comparable.

    Pairs with an element in the central copy of a k-period window are tested.
    """
    a = heap.cartan
    mu = folded.mu
    window = heap.window(k)
    for x in window.copy_indices(0):
        p = window.label(x)
        for y in range(len(window)):
            q = window.label(y)
            if a.related(mu[p], q) and not window.comparable(x, y):
                raise FoldPreconditionViolated(
                    f"Elements {window.coords[x]} and {window.coords[y]} are incomparable "
                    f"although mu({p}) = {mu[p]} is related to {q}",
                    witness=(window.coords[x], window.coords[y]),
                )


def half_period_word(heap: PeriodicHeap, mu: Sequence[int]) -> tuple[int, ...] | None:
    """A word u with ... u mu(u) u mu(u) ... isomorphic to the heap, or None."""
    if heap.size % 2:
        return None
    half = heap.size // 2
    target = canonical_word(heap)
    for base in heap.height_zero_cuts:
        top = heap.shift_cut(base)
        for cut in heap.cuts_between(base, top):
            if sum(cut) - sum(base) != half:
                continue
            u = heap.lex_word_between(base, cut)
            word = u + tuple(mu[p] for p in u)
            candidate = PeriodicHeap.from_word(heap.diagram, word, check_diagram=False)
            if candidate.period == heap.period and canonical_word(candidate) == target:
                return u
    return None


@log_function_call
def fold_heap(
    heap: PeriodicHeap,
    mu: Sequence[int],
    target: DynkinDiagram | None = None,
    check: bool = True,
) -> PeriodicHeap:
    """
    Fold a full heap along the involution mu of its diagram.

    `target` names the folded diagram; its Cartan matrix must agree with the orbit
    quotient. Raises FoldPreconditionViolated with a witness when the comparability
    hypothesis, the orientation or the period fails.
    """
    folded = fold_diagram(heap.diagram, mu)
    if target is not None:
        if target.cartan != folded.diagram.cartan:
            raise FoldPreconditionViolated(
                f"{heap.diagram.name} folds to {folded.diagram.cartan.to_list()}, "
                f"not to {target.name}",
                witness=target.name,
            )
        folded = replace(folded, diagram=target)
    orientation = compatible_orientation(heap.diagram, folded.mu)
    check_comparability(heap, folded)

    pushed = folded.push(heap.period)
    delta = null_root(folded.diagram.cartan)
    orbit_of = folded.orbit_of
    if pushed == delta:
        cover_word = heap.word()
        twisted = False
    elif pushed == delta * 2:
        half = half_period_word(heap, folded.mu)
        if half is None:
            raise FoldPreconditionViolated(
                f"The period of {heap.diagram.name} does not split as u mu(u)",
                witness=heap.word(),
            )
        cover_word = half
        twisted = True
    else:
        raise FoldPreconditionViolated(
            f"Pushed character {pushed} is neither delta nor 2 delta of {folded.diagram.name}",
            witness=pushed,
        )

    provenance = FoldProvenance(heap, folded, orientation, tuple(cover_word), twisted)
    result = PeriodicHeap.from_word(
        folded.diagram,
        [orbit_of[p] for p in cover_word],
        provenance=provenance,
        cover_labels=cover_word,
    )
    if check:
        report = verify_axioms(result, k=2)
        if not report.passed:
            raise FoldPreconditionViolated(
                f"Folded heap over {folded.diagram.name} fails {sorted(report.relations_failed())}",
                witness=report.failures[0].to_dict(),
            )
    log.info(
        f"Folded {heap.diagram.name} onto {folded.diagram.name}"
        + (" with halved period" if twisted else "")
    )
    return result
