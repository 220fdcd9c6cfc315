"""
Quantized enveloping algebra relations on the ideal module.

E_i and F_i act as X_i and Y_i with coefficient 1; t_i acts on v_I by q_i^{m_i(I)} with
q_i = q^{d_i} from the symmetrizer. Coefficients are exact Laurent polynomials.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from heapkit.cartan.roots import symmetrizer
from heapkit.core.logging_config import LogPerformance, get_logger
from heapkit.core.reports import VerificationReport
from heapkit.heap.periodic import PeriodicHeap
from heapkit.rep.laurent import LaurentPoly, q_factorial, q_integer
from heapkit.rep.operators import HeapOperator, RepresentationSpace, zero_operator
from heapkit.rep.vectors import IdealCut, ModuleVector

log = get_logger(__name__)


class QuantumAction:
    """E_i, F_i, t_i and divided powers over Z[q, q^-1]."""

    def __init__(self, space: RepresentationSpace):
        self.space = space
        self.d = symmetrizer(space.heap.cartan)

    def q_i(self, i: int) -> LaurentPoly:
        return LaurentPoly.q(self.d[i])

    def E(self, i: int) -> HeapOperator:
        return self.space.X(i)

    def F(self, i: int) -> HeapOperator:
        return self.space.Y(i)

    def t(self, i: int, power: int = 1) -> HeapOperator:
        def rule(cut: IdealCut) -> ModuleVector:
            m = self.space.h_eigenvalue(i, cut)
            return ModuleVector.basis(cut, LaurentPoly.q(power * self.d[i] * m))

        return HeapOperator(f"t{i}^{power}", rule)

    def divided(self, op: HeapOperator, i: int, p: int) -> HeapOperator:
        """op^p / [p]_{q_i}!."""
        denominator = q_factorial(p, self.d[i])
        power = op.power(p)

        def rule(cut: IdealCut) -> ModuleVector:
            image = power(cut)
            return ModuleVector(
                {
                    target: LaurentPoly.constant(c).exact_div(denominator)
                    if isinstance(c, int)
                    else c.exact_div(denominator)
                    for target, c in image.items()
                }
            )

        return HeapOperator(f"{op.tag}^({p})", rule)

    def serre(self, op_i: HeapOperator, op_j: HeapOperator, i: int, b: int) -> HeapOperator:
        """sum_{p=0}^{b} (-1)^p op_i^(p) op_j op_i^(b-p)."""
        total = zero_operator()
        for p in range(b + 1):
            term = self.divided(op_i, i, p) @ op_j @ self.divided(op_i, i, b - p)
            total = total + term.scale((-1) ** p)
        return HeapOperator(f"serre({op_i.tag},{op_j.tag})", total.rule)


def _space(heap: PeriodicHeap | RepresentationSpace) -> RepresentationSpace:
    return heap if isinstance(heap, RepresentationSpace) else RepresentationSpace(heap)


def verify_quantum_relations(
    heap: PeriodicHeap | RepresentationSpace,
    sample: Sequence[IdealCut] | None = None,
    sample_size: int | None = None,
    seed: int = 0,
) -> VerificationReport:
    """
    t-conjugation, [E_i, F_j] = delta_ij [m_i]_{q_i} and the quantum Serre relations,
    evaluated exactly on sampled basis vectors.
    """
    space = _space(heap)
    action = QuantumAction(space)
    a = space.heap.cartan
    cuts = list(sample) if sample is not None else space.domain(1)
    if sample_size is not None and sample_size < len(cuts):
        rng = np.random.default_rng(seed)
        picks = rng.choice(len(cuts), size=sample_size, replace=False)
        cuts = [cuts[int(k)] for k in sorted(picks)]
    report = VerificationReport(
        "quantum",
        metadata={"diagram": space.heap.diagram.name, "sample": len(cuts), "q_i": list(action.d)},
    )

    with LogPerformance(f"quantum relations on {space.heap.diagram.name}"):
        for j in range(space.n):
            t_j, t_j_inv = action.t(j), action.t(j, -1)
            for i in range(space.n):
                q_pow = LaurentPoly.q(action.d[j] * a[j, i])
                q_neg = LaurentPoly.q(-action.d[j] * a[j, i])
                conj_e = t_j @ action.E(i) @ t_j_inv
                conj_f = t_j @ action.F(i) @ t_j_inv
                commutator = action.E(i) @ action.F(j) - action.F(j) @ action.E(i)
                for cut in cuts:
                    w = {"cut": cut, "i": i, "j": j}
                    e_image = action.E(i)(cut).scale(q_pow)
                    f_image = action.F(i)(cut).scale(q_neg)
                    report.record("quantum.tE", conj_e(cut) == e_image, witness=w)
                    report.record("quantum.tF", conj_f(cut) == f_image, witness=w)
                    if i == j:
                        value = q_integer(space.h_eigenvalue(i, cut), action.d[i])
                        expected = ModuleVector.basis(cut, value)
                    else:
                        expected = ModuleVector()
                    report.record("quantum.EF", commutator(cut) == expected, witness=w)

        for i in range(space.n):
            for j in a.neighbors[i]:
                b = 1 - a[i, j]
                serre_e = action.serre(action.E(i), action.E(j), i, b)
                serre_f = action.serre(action.F(i), action.F(j), i, b)
                for cut in cuts:
                    w = {"cut": cut, "i": i, "j": j, "b": b}
                    report.record("quantum.serre_E", not serre_e(cut), witness=w)
                    report.record("quantum.serre_F", not serre_f(cut), witness=w)

    log.info(report.summary())
    return report
