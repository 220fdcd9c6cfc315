"""
Relation suites for the ideal module.

Every suite evaluates operator identities on basis cuts and returns a
VerificationReport; a failed identity becomes a report entry with the witness cut.

Provides:
- verify_defining_relations: the Chevalley-Serre relations among X_p, Y_p, H_p
- verify_maximal_element_cases: the three exclusive cases at a maximal element
- verify_root_operators: representability, exclusivity, coroot and weight brackets,
  unique splitting of root heaps
- verify_composition: signs of composed slab operators
"""

from __future__ import annotations

from collections.abc import Sequence
from math import comb

import numpy as np

from heapkit.cartan.roots import RootVector, pairing, sgn
from heapkit.core.errors import HeapkitError
from heapkit.core.logging_config import LogPerformance, get_logger
from heapkit.core.reports import VerificationReport
from heapkit.heap.periodic import PeriodicHeap
from heapkit.heap.window import materialize
from heapkit.rep.operators import (
    HeapOperator,
    OperatorKind,
    RepresentationSpace,
    bracket,
    zero_operator,
)
from heapkit.rep.vectors import IdealCut

log = get_logger(__name__)

BASIS_NOTE = "height-zero ideals and their T^{+1}, T^{-1} shifts"
COMPOSITION_ATTEMPTS_PER_SAMPLE = 50


def _space(heap: PeriodicHeap | RepresentationSpace) -> RepresentationSpace:
    return heap if isinstance(heap, RepresentationSpace) else RepresentationSpace(heap)


def _check(
    report: VerificationReport,
    relation: str,
    lhs: HeapOperator,
    rhs: HeapOperator,
    basis: Sequence[IdealCut],
    **witness: object,
) -> None:
    for cut in basis:
        left, right = lhs(cut), rhs(cut)
        report.record(
            relation,
            left == right,
            witness={"cut": cut, **witness, "lhs": left, "rhs": right} if left != right else None,
        )


STRUCTURE_ERRORS = (HeapkitError, ValueError, KeyError)


def _record_structure(report: VerificationReport, suite: str, error: Exception) -> None:
    report.record(
        f"{suite}.structure",
        False,
        witness={"error": type(error).__name__},
        detail=str(error),
    )
    log.warning(f"{report.metadata.get('diagram', '?')}: {suite} stopped early: {error}")


def _structure_failure(
    suite: str, heap: PeriodicHeap | RepresentationSpace, error: Exception
) -> VerificationReport:
    """Report for a heap whose ideals or operators cannot be evaluated at all."""
    base = heap.heap if isinstance(heap, RepresentationSpace) else heap
    report = VerificationReport(suite, metadata={"diagram": base.diagram.name})
    _record_structure(report, suite, error)
    return report


def ad_power(x: HeapOperator, y: HeapOperator, k: int) -> HeapOperator:
    """ad(x)^k (y) expanded as sum_j (-1)^j C(k, j) x^(k-j) y x^j."""
    total = zero_operator()
    for j in range(k + 1):
        term = x.power(k - j) @ y @ x.power(j)
        total = total + term.scale((-1) ** j * comb(k, j))
    return HeapOperator(f"ad({x.tag})^{k}({y.tag})", total.rule)


def verify_defining_relations(
    heap: PeriodicHeap | RepresentationSpace, basis: Sequence[IdealCut] | None = None
) -> VerificationReport:
    try:
        space = _space(heap)
        cuts = list(basis) if basis is not None else space.domain(1)
    except STRUCTURE_ERRORS as e:
        return _structure_failure("relations", heap, e)
    report = VerificationReport(
        "relations",
        metadata={
            "diagram": space.heap.diagram.name,
            "basis": BASIS_NOTE if basis is None else "explicit",
            "basis_size": len(cuts),
            "relation_3": "[H_p, Y_q] = -a_pq Y_q (printed with X_q on the right)",
        },
    )

    with LogPerformance(f"defining relations on {space.heap.diagram.name}"):
        try:
            _defining_relations(report, space, cuts)
        except STRUCTURE_ERRORS as e:
            _record_structure(report, "relations", e)

    log.info(report.summary())
    return report


def _defining_relations(
    report: VerificationReport, space: RepresentationSpace, cuts: Sequence[IdealCut]
) -> None:
    a = space.heap.cartan
    X = [space.X(p) for p in range(space.n)]
    Y = [space.Y(p) for p in range(space.n)]
    H = [space.H(p) for p in range(space.n)]
    zero = zero_operator()
    for p in range(space.n):
        for q in range(space.n):
            pq = {"p": p, "q": q}
            _check(report, "H_commute", H[p] @ H[q], H[q] @ H[p], cuts, **pq)
            _check(report, "HX_bracket", bracket(H[p], X[q]), X[q].scale(a[p, q]), cuts, **pq)
            _check(report, "HY_bracket", bracket(H[p], Y[q]), Y[q].scale(-a[p, q]), cuts, **pq)
            rhs = H[q] if p == q else zero
            _check(report, "XY_bracket", bracket(X[p], Y[q]), rhs, cuts, **pq)
            if p != q and a[p, q] == 0:
                _check(report, "X_commute", X[p] @ X[q], X[q] @ X[p], cuts, **pq)
                _check(report, "Y_commute", Y[p] @ Y[q], Y[q] @ Y[p], cuts, **pq)
            if p != q and a[p, q] == -1:
                _check(report, "XqX_vanish", X[p] @ X[q] @ X[p], zero, cuts, **pq)
                _check(report, "YqY_vanish", Y[p] @ Y[q] @ Y[p], zero, cuts, **pq)
            if p != q and a[p, q] < 0:
                k = 1 - a[p, q]
                _check(report, "serre_X", ad_power(X[p], X[q], k), zero, cuts, **pq)
                _check(report, "serre_Y", ad_power(Y[p], Y[q], k), zero, cuts, **pq)
        _check(report, "XX_vanish", X[p] @ X[p], zero, cuts, p=p)
        _check(report, "YY_vanish", Y[p] @ Y[p], zero, cuts, p=p)


def verify_maximal_element_cases(
    heap: PeriodicHeap | RepresentationSpace, basis: Sequence[IdealCut] | None = None
) -> VerificationReport:
    """
    At a maximal element of label p of an ideal and a neighbour q of p, exactly one of:
    a_qp = -1 and q is removable after removing it; a_qp = -1 and q is addable;
    a_qp = -2 and both.
    """
    space = _space(heap)
    a = space.heap.cartan
    cuts = list(basis) if basis is not None else space.domain(1)
    report = VerificationReport("maximal_elements", metadata={"diagram": space.heap.diagram.name})
    for cut in cuts:
        for p in range(space.n):
            if not space.removable(cut, p):
                continue
            lowered = cut.moved(p, -1)
            for q in a.neighbors[p]:
                after = space.removable(lowered, q)
                addable = space.addable(cut, q)
                cases = [
                    a[q, p] == -1 and after,
                    a[q, p] == -1 and addable,
                    a[q, p] == -2 and after and addable,
                ]
                report.record(
                    "maximal.exactly_one_case",
                    sum(cases) == 1,
                    witness={"cut": cut, "p": p, "q": q, "cases": cases},
                )
    log.info(report.summary())
    return report


def verify_root_operators(
    heap: PeriodicHeap | RepresentationSpace,
    roots: Sequence[RootVector] | None = None,
    basis: Sequence[IdealCut] | None = None,
    window_k: int = 1,
) -> VerificationReport:
    """Root operators of the finite part: representability, exclusivity, brackets, splitting."""
    space = _space(heap)
    a = space.heap.cartan
    root_list = list(roots) if roots is not None else list(space.finite_roots)
    cuts = list(basis) if basis is not None else space.domain(1)
    report = VerificationReport(
        "roots",
        metadata={"diagram": space.heap.diagram.name, "roots": len(root_list), "window": window_k},
    )
    window = materialize(space.heap, window_k)

    with LogPerformance(f"root operators on {space.heap.diagram.name}"):
        for alpha in root_list:
            X, Y, Hr = space.X_root(alpha), space.Y_root(alpha), space.H_root(alpha)
            report.record(
                "root.representable",
                any(X(cut) for cut in cuts),
                witness={"root": alpha},
            )
            for cut in cuts:
                both = bool(X(cut)) and bool(Y(cut))
                witness = {"root": alpha, "cut": cut} if both else None
                report.record("root.exclusive", not both, witness=witness)
            _check(report, "root.coroot_bracket", bracket(X, Y), Hr, cuts, root=alpha)
            for p in range(space.n):
                k = pairing(alpha, RootVector.simple(space.n, p), a)
                Hp = space.H(p)
                _check(report, "root.weight_X", bracket(Hp, X), X.scale(k), cuts, root=alpha, p=p)
                _check(report, "root.weight_Y", bracket(Hp, Y), Y.scale(-k), cuts, root=alpha, p=p)

        root_set = set(root_list)
        for alpha in root_list:
            decompositions = [
                (beta, alpha - beta)
                for beta in root_list
                if beta < alpha - beta and (alpha - beta) in root_set
            ]
            if not decompositions:
                continue
            for root_heap in space.find_root_heaps(alpha, window):
                for beta, gamma in decompositions:
                    splits = space.split_root_heap(root_heap, beta, gamma)
                    report.record(
                        "root.unique_split",
                        len(splits) == 1,
                        witness={"heap": root_heap, "beta": beta, "gamma": gamma, "splits": splits},
                    )

    log.info(report.summary())
    return report


def verify_composition(
    heap: PeriodicHeap | RepresentationSpace,
    sample_size: int = 200,
    seed: int = 0,
    roots: Sequence[RootVector] | None = None,
) -> VerificationReport:
    """
    X_L X_L' = sgn(alpha, beta) X_{L u L'} and Y_L Y_L' = sgn(beta, alpha) Y_{L u L'}
    on sampled (alpha, beta, cut) triples where the left side is nonzero.

    Draws continue until `sample_size` nonzero compositions are checked or the attempt cap
    is reached; the report metadata records both counts.
    """
    space = _space(heap)
    root_list = list(roots) if roots is not None else list(space.finite_roots)
    cuts = space.domain(1)
    rng = np.random.default_rng(seed)
    report = VerificationReport(
        "composition", metadata={"diagram": space.heap.diagram.name, "seed": seed}
    )
    if space.heap.folded:
        # Root characters live on the folded diagram, signs on the cover.
        report.skip("composition")
        log.warning(f"Composition signs skipped for folded heap {space.heap.diagram.name}")
        return report
    orientation = space.orientation
    max_attempts = COMPOSITION_ATTEMPTS_PER_SAMPLE * sample_size
    attempts = 0
    while report.checks < sample_size and attempts < max_attempts:
        attempts += 1
        alpha = root_list[int(rng.integers(len(root_list)))]
        beta = root_list[int(rng.integers(len(root_list)))]
        cut = cuts[int(rng.integers(len(cuts)))]
        total = alpha + beta
        for kind, upper, lower in (
            (OperatorKind.X, alpha, beta),
            (OperatorKind.Y, beta, alpha),
        ):
            if report.checks >= sample_size:
                break
            inner = space.slab_action(kind, beta, cut)
            if not inner:
                continue
            inner_cut, inner_sign = next(inner.items())
            outer = space.slab_action(kind, alpha, inner_cut).scale(inner_sign)
            if not outer:
                continue
            expected = space.slab_action(kind, total, cut).scale(sgn(orientation, upper, lower))
            report.record(
                f"composition.{kind.value}",
                outer == expected,
                witness={"alpha": alpha, "beta": beta, "cut": cut},
            )
    report.metadata["attempts"] = attempts
    report.metadata["sampled"] = report.checks
    if report.checks < sample_size:
        report.metadata["exhausted"] = True
        log.warning(
            f"Only {report.checks} of {sample_size} nonzero compositions found "
            f"in {attempts} draws on {space.heap.diagram.name}"
        )
    log.info(report.summary())
    return report
