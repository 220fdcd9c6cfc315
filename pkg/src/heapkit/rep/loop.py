"""
Loop-algebra picture of the ideal module.

t^j (x) P acts as T^j o P, where T = X_delta shifts cuts by one period. The affine
generators are recovered from the highest root: X_0 = eps T Y_theta, Y_0 = eps T^-1 X_theta.
"""

from __future__ import annotations

from collections.abc import Sequence

from heapkit.cartan.roots import comarks, null_and_highest_root
from heapkit.core.errors import NoConsistentEpsilon, NotARoot
from heapkit.core.logging_config import get_logger
from heapkit.core.reports import VerificationReport
from heapkit.heap.periodic import PeriodicHeap
from heapkit.rep.operators import HeapOperator, RepresentationSpace, bracket, zero_operator
from heapkit.rep.vectors import IdealCut, ModuleVector

log = get_logger(__name__)


def _space(heap: PeriodicHeap | RepresentationSpace) -> RepresentationSpace:
    return heap if isinstance(heap, RepresentationSpace) else RepresentationSpace(heap)


def shift_power(space: RepresentationSpace, j: int) -> HeapOperator:
    """T^j (T^-1 repeated for negative j)."""
    base = space.T() if j >= 0 else space.T_inv()
    return HeapOperator(f"T^{j}", base.power(abs(j)).rule)


def loop_operator(space: RepresentationSpace, j: int, operator: HeapOperator) -> HeapOperator:
    return HeapOperator(f"t^{j}({operator.tag})", (shift_power(space, j) @ operator).rule)


def loop_action(
    space: RepresentationSpace, j: int, operator: HeapOperator, v: ModuleVector | IdealCut
) -> ModuleVector:
    """(t^j (x) P)(v) = T^j(P(v))."""
    return loop_operator(space, j, operator)(v)


def _ratio(
    lhs: HeapOperator, rhs: HeapOperator, basis: Sequence[IdealCut]
) -> tuple[set[int], IdealCut | None]:
    """Signs s with lhs(v) = s rhs(v) on nonzero images, and a cut where supports differ."""
    signs: set[int] = set()
    for cut in basis:
        left, right = lhs(cut), rhs(cut)
        if bool(left) != bool(right):
            return signs, cut
        if not left:
            continue
        lt, rt = left.single(), right.single()
        if lt is None or rt is None or lt[0] != rt[0]:
            return signs, cut
        signs.add(int(lt[1]) * int(rt[1]))
    return signs, None


def affine_epsilon(
    heap: PeriodicHeap | RepresentationSpace, basis: Sequence[IdealCut] | None = None
) -> int:
    """The sign eps with X_0 = eps T Y_theta and Y_0 = eps T^-1 X_theta on the basis."""
    space = _space(heap)
    _, theta = null_and_highest_root(space.heap.cartan)
    cuts = list(basis) if basis is not None else space.domain(1)
    x0_signs, bad_x = _ratio(space.X(0), space.T() @ space.Y_root(theta), cuts)
    y0_signs, bad_y = _ratio(space.Y(0), space.T_inv() @ space.X_root(theta), cuts)
    if bad_x is not None or bad_y is not None:
        raise NoConsistentEpsilon(
            f"X_0 or Y_0 does not match the shifted highest-root operator at {bad_x or bad_y}"
        )
    signs = x0_signs | y0_signs
    if len(signs) != 1:
        raise NoConsistentEpsilon(f"Signs {sorted(signs)} on {space.heap.diagram.name}")
    eps = signs.pop()
    log.debug(f"eps = {eps} for {space.heap.diagram.name}")
    return eps


def central_operator(space: RepresentationSpace) -> HeapOperator:
    """sum_i a_i^vee H_i, the image of the canonical central element."""
    marks = comarks(space.heap.cartan)
    total = zero_operator()
    for i, c in enumerate(marks.coeffs):
        total = total + space.H(i).scale(c)
    return HeapOperator("K", total.rule)


def verify_affine_relations(
    heap: PeriodicHeap | RepresentationSpace, basis: Sequence[IdealCut] | None = None
) -> VerificationReport:
    """T-equivariance, the D bracket, the central element and the affine sign eps."""
    space = _space(heap)
    cuts = list(basis) if basis is not None else space.domain(1)
    name = space.heap.diagram.name
    report = VerificationReport("affine", metadata={"diagram": name, "basis_size": len(cuts)})
    T, Tinv, D = space.T(), space.T_inv(), space.D()

    for cut in cuts:
        back = Tinv(T(cut))
        report.record("affine.T_inverse", back == ModuleVector.basis(cut), witness={"cut": cut})
        lhs = bracket(D, T)(cut)
        report.record("affine.D_shift", lhs == T(cut), witness={"cut": cut})

    twisted = space.heap.provenance is not None and space.heap.provenance.twisted
    if twisted:
        report.skip("affine.T_commutes")
        log.warning(f"T-commutation skipped for twisted heap {name}")
    else:
        for p in range(space.n):
            for op in (space.X(p), space.Y(p), space.H(p)):
                for cut in cuts:
                    ok = T(op(cut)) == op(T(cut))
                    report.record("affine.T_commutes", ok, witness={"cut": cut, "operator": op.tag})

    K = central_operator(space)
    for cut in cuts:
        report.record("affine.central", not K(cut), witness={"cut": cut})

    try:
        _, theta = null_and_highest_root(space.heap.cartan)
    except NotARoot:
        report.skip("affine.epsilon")
        report.skip("affine.faithful")
        log.warning(f"{name} has no finite highest root; epsilon and loop checks skipped")
        log.info(report.summary())
        return report
    if twisted:
        report.skip("affine.epsilon")
        log.warning(f"Affine sign skipped for twisted heap {name}")
    else:
        try:
            eps = affine_epsilon(space, cuts)
            report.record("affine.epsilon", True)
            report.metadata["epsilon"] = eps
        except NoConsistentEpsilon as e:
            report.record("affine.epsilon", False, detail=str(e))

    x_theta = space.X_root(theta)
    for j in range(-2, 3):
        op = loop_operator(space, j, x_theta)
        report.record("affine.faithful", any(op(cut) for cut in cuts), witness={"j": j})

    log.info(report.summary())
    return report
