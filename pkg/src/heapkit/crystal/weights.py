"""
Weights of basis vectors.

The weight of v_I records the H_i-eigenvalues m_i(I) in {-1, 0, 1} and the D-eigenvalue
h(I). Adding a p-element shifts m by column p of the Cartan matrix and h by one when
p is the base vertex.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from heapkit.cartan.matrix import GeneralizedCartanMatrix
from heapkit.cartan.roots import comarks
from heapkit.core.reports import VerificationReport
from heapkit.heap.periodic import PeriodicHeap
from heapkit.rep.operators import RepresentationSpace
from heapkit.rep.vectors import IdealCut


@dataclass(frozen=True, order=True)
class WeightVector:
    coords: tuple[int, ...]
    height: int = 0

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def level(self, marks: Sequence[int]) -> int:
        """Pairing with the canonical central element."""
        return sum(c * m for c, m in zip(marks, self.coords, strict=True))

    def add_simple(self, a: GeneralizedCartanMatrix, p: int, sign: int = 1) -> WeightVector:
        """Weight plus sign * alpha_p."""
        coords = tuple(m + sign * a[q, p] for q, m in enumerate(self.coords))
        return WeightVector(coords, self.height + (sign if p == 0 else 0))

    def to_json_value(self) -> dict[str, object]:
        return {"m": list(self.coords), "h": self.height}

    def __str__(self) -> str:
        return "(" + ",".join(str(m) for m in self.coords) + f"; h={self.height})"


def _space(heap: PeriodicHeap | RepresentationSpace) -> RepresentationSpace:
    return heap if isinstance(heap, RepresentationSpace) else RepresentationSpace(heap)


def weight(heap: PeriodicHeap | RepresentationSpace, cut: IdealCut) -> WeightVector:
    space = _space(heap)
    coords = tuple(space.h_eigenvalue(i, cut) for i in range(space.n))
    return WeightVector(coords, space.height(cut))


def verify_weights(
    heap: PeriodicHeap | RepresentationSpace, basis: Sequence[IdealCut] | None = None
) -> VerificationReport:
    """Range {-1, 0, 1}, level zero, and T raising only the height."""
    space = _space(heap)
    cuts = list(basis) if basis is not None else space.domain(1)
    marks = comarks(space.heap.cartan).coeffs
    report = VerificationReport("weights", metadata={"diagram": space.heap.diagram.name})
    for cut in cuts:
        wt = weight(space, cut)
        report.record("weight.range", all(m in (-1, 0, 1) for m in wt.coords), witness=wt)
        report.record("weight.level", wt.level(marks) == 0, witness={"cut": cut, "weight": wt})
        shifted = weight(space, IdealCut.of(space.heap.shift_cut(cut)))
        report.record(
            "weight.shift",
            shifted.coords == wt.coords and shifted.height == wt.height + space.delta[0],
            witness={"cut": cut},
        )
    return report
