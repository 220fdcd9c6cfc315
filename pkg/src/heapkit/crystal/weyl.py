"""
Weyl group and Temperley-Lieb type relations, and cyclicity of the ideal module.

S_i sends v_I to F_i v_I if that is nonzero, else to E_i v_I if nonzero, else to v_I.
The signed action s_i -> -S_i is used only for the dihedral annihilation sums.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from heapkit.core.logging_config import get_logger
from heapkit.core.reports import VerificationReport
from heapkit.heap.periodic import PeriodicHeap
from heapkit.rep.operators import HeapOperator, RepresentationSpace
from heapkit.rep.vectors import IdealCut, ModuleVector

log = get_logger(__name__)

# a_ij * a_ji -> order m of s_i s_j
DIHEDRAL_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}


def _space(heap: PeriodicHeap | RepresentationSpace) -> RepresentationSpace:
    return heap if isinstance(heap, RepresentationSpace) else RepresentationSpace(heap)


def weyl_action(heap: PeriodicHeap | RepresentationSpace, i: int, cut: IdealCut) -> IdealCut:
    space = _space(heap)
    if space.removable(cut, i):
        return cut.moved(i, -1)
    if space.addable(cut, i):
        return cut.moved(i, 1)
    return cut


def weyl_operator(space: RepresentationSpace, i: int) -> HeapOperator:
    return HeapOperator(f"S{i}", lambda cut: ModuleVector.basis(weyl_action(space, i, cut)))


def apply_word(space: RepresentationSpace, word: Sequence[int], cut: IdealCut) -> IdealCut:
    """S_{w_1} ... S_{w_k} applied right to left."""
    for i in reversed(word):
        cut = weyl_action(space, i, cut)
    return cut


def dihedral_words(i: int, j: int, m: int) -> list[tuple[int, ...]]:
    """One reduced word per element of the dihedral group of order 2m."""
    words: list[tuple[int, ...]] = [()]
    for length in range(1, m):
        for first, second in ((i, j), (j, i)):
            words.append(tuple(first if k % 2 == 0 else second for k in range(length)))
    words.append(tuple(i if k % 2 == 0 else j for k in range(m)))
    return words


def verify_weyl_relations(
    heap: PeriodicHeap | RepresentationSpace, basis: Sequence[IdealCut] | None = None
) -> VerificationReport:
    """S_i^2 = 1, commuting pairs, braid relations, and S_i reversing i-strings."""
    space = _space(heap)
    a = space.heap.cartan
    cuts = list(basis) if basis is not None else space.domain(1)
    report = VerificationReport("weyl", metadata={"diagram": space.heap.diagram.name})

    for i in range(space.n):
        for cut in cuts:
            w = {"cut": cut, "i": i}
            report.record("weyl.involution", apply_word(space, (i, i), cut) == cut, witness=w)
            image = weyl_action(space, i, cut)
            flipped = space.h_eigenvalue(i, image) == -space.h_eigenvalue(i, cut)
            report.record("weyl.string_end", flipped, witness=w)

    for i in range(space.n):
        for j in range(i + 1, space.n):
            bond = a[i, j] * a[j, i]
            m = DIHEDRAL_ORDER.get(bond)
            if m is None:
                report.skip(f"weyl.braid({i},{j})")
                continue
            left = tuple(i if k % 2 == 0 else j for k in range(m))
            right = tuple(j if k % 2 == 0 else i for k in range(m))
            relation = "weyl.commute" if m == 2 else "weyl.braid"
            for cut in cuts:
                report.record(
                    relation,
                    apply_word(space, left, cut) == apply_word(space, right, cut),
                    witness={"cut": cut, "i": i, "j": j},
                )

    log.info(report.summary())
    return report


def verify_tl_annihilation(
    heap: PeriodicHeap | RepresentationSpace, basis: Sequence[IdealCut] | None = None
) -> VerificationReport:
    """
    sum over w in <s_i, s_j> of (-1)^l(w) S_w kills every basis vector, for adjacent
    i, j generating a finite dihedral group. Pairs with a_ij a_ji = 4 are skipped.
    """
    space = _space(heap)
    a = space.heap.cartan
    cuts = list(basis) if basis is not None else space.domain(1)
    report = VerificationReport("temperley_lieb", metadata={"diagram": space.heap.diagram.name})
    applicable: list[list[int]] = []

    for i in range(space.n):
        for j in a.neighbors[i]:
            if j < i:
                continue
            m = DIHEDRAL_ORDER.get(a[i, j] * a[j, i])
            if m is None:
                report.skip(f"tl.annihilates({i},{j})")
                log.debug(f"Pair ({i}, {j}) generates an infinite dihedral group; skipped")
                continue
            applicable.append([i, j])
            words = dihedral_words(i, j, m)
            for cut in cuts:
                total = ModuleVector()
                for word in words:
                    image = apply_word(space, word, cut)
                    total = total + ModuleVector.basis(image, (-1) ** len(word))
                report.record(
                    "tl.annihilates",
                    not total,
                    witness={"cut": cut, "pair": [i, j], "terms": len(words), "sum": total},
                )
    report.metadata["pairs"] = applicable
    log.info(report.summary())
    return report


# ============================================================================
# Cyclicity
# ============================================================================


def verify_cyclicity(
    heap: PeriodicHeap | RepresentationSpace, start: IdealCut, goal: IdealCut
) -> list[tuple[str, int]]:
    """
    Moves ("F", p) down from `start` to start meet goal, then ("E", p) up to `goal`.

    Each step removes a maximal element of start minus the meet, or adds a minimal
    element of goal minus the current ideal.
    """
    space = _space(heap)
    meet = start.meet(goal)
    moves: list[tuple[str, int]] = []
    current = start
    while current != meet:
        p = next(
            (p for p in range(space.n) if current[p] > meet[p] and space.removable(current, p)),
            None,
        )
        if p is None:
            raise ValueError(f"No removable element between {current} and {meet}")
        moves.append(("F", p))
        current = current.moved(p, -1)
    while current != goal:
        p = next(
            (p for p in range(space.n) if current[p] < goal[p] and space.addable(current, p)),
            None,
        )
        if p is None:
            raise ValueError(f"No addable element between {current} and {goal}")
        moves.append(("E", p))
        current = current.moved(p, 1)
    return moves


def replay_moves(
    space: RepresentationSpace, start: IdealCut, moves: Sequence[tuple[str, int]]
) -> ModuleVector:
    """Apply F_p / E_p in order to v_start."""
    vector = ModuleVector.basis(start)
    for kind, p in moves:
        op = space.Y(p) if kind == "F" else space.X(p)
        vector = op(vector)
    return vector


def verify_cyclicity_sample(
    heap: PeriodicHeap | RepresentationSpace, pairs: int = 100, seed: int = 0
) -> VerificationReport:
    """Random ideal pairs from the fundamental domain: replay reaches the goal exactly."""
    space = _space(heap)
    cuts = space.domain(1)
    rng = np.random.default_rng(seed)
    report = VerificationReport(
        "cyclicity", metadata={"diagram": space.heap.diagram.name, "pairs": pairs, "seed": seed}
    )
    for _ in range(pairs):
        start = cuts[int(rng.integers(len(cuts)))]
        goal = cuts[int(rng.integers(len(cuts)))]
        moves = verify_cyclicity(space, start, goal)
        meet = start.meet(goal)
        expected_length = sum(s - m for s, m in zip(start, meet, strict=True)) + sum(
            g - m for g, m in zip(goal, meet, strict=True)
        )
        w = {"start": start, "goal": goal}
        report.record("cyclicity.length", len(moves) == expected_length, witness=w)
        report.record(
            "cyclicity.replay",
            replay_moves(space, start, moves) == ModuleVector.basis(goal),
            witness=w,
        )
    log.info(report.summary())
    return report
