"""
Structure constants of the finite-type algebra spanned by root operators.

For positive roots alpha, beta of the finite part (vertex 0 deleted):
- [X_alpha, X_beta] = N X_{alpha+beta} when alpha + beta is a root
- [X_alpha, Y_beta] = N X_{alpha-beta} when alpha - beta is a positive root
- [X_alpha, Y_alpha] expanded over H_1..H_l
Constants are read off by evaluating both sides on basis cuts.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Sequence
from dataclasses import dataclass, field

import sympy

from heapkit.cartan.matrix import DynkinDiagram
from heapkit.cartan.roots import RootVector, sgn
from heapkit.core.errors import AmbiguousMatch
from heapkit.core.logging_config import get_logger
from heapkit.core.reports import VerificationReport
from heapkit.heap.periodic import PeriodicHeap
from heapkit.rep.operators import HeapOperator, RepresentationSpace, bracket
from heapkit.rep.vectors import IdealCut

log = get_logger(__name__)


@dataclass(frozen=True)
class BracketRow:
    """[X_alpha, X_beta] = constant * X_result; a negative beta stands for Y_{-beta}."""

    alpha: RootVector
    beta: RootVector
    result: RootVector
    constant: int


@dataclass(frozen=True)
class CorootRow:
    """[X_alpha, Y_alpha] = sum_i coroot[i] H_i."""

    alpha: RootVector
    coroot: RootVector


@dataclass
class ChevalleyTable:
    diagram: str
    brackets: list[BracketRow] = field(default_factory=list)
    coroots: list[CorootRow] = field(default_factory=list)
    rank: int = 0
    dimension: int = 0

    @property
    def independent(self) -> bool:
        return self.rank == self.dimension

    def constant(self, alpha: RootVector, beta: RootVector) -> int:
        for row in self.brackets:
            if row.alpha == alpha and row.beta == beta:
                return row.constant
            if row.alpha == beta and row.beta == alpha:
                return -row.constant
        raise KeyError(f"No bracket row for ({alpha}, {beta})")

    def constants(self) -> list[int]:
        return [row.constant for row in self.brackets]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["alpha", "beta", "constant"])
        for row in self.brackets:
            writer.writerow([_fmt(row.alpha), _fmt(row.beta), row.constant])
        for crow in self.coroots:
            writer.writerow([_fmt(crow.alpha), _fmt(-crow.alpha), "H" + _fmt(crow.coroot)])
        return buffer.getvalue()


def _fmt(root: RootVector) -> str:
    return "(" + " ".join(str(c) for c in root.coeffs) + ")"


def _resolve(
    heap: PeriodicHeap | RepresentationSpace, orientation: DynkinDiagram | None
) -> RepresentationSpace:
    if isinstance(heap, RepresentationSpace):
        return heap if orientation is None else heap.with_orientation(orientation)
    return RepresentationSpace(heap, orientation)


def _op(space: RepresentationSpace, root: RootVector) -> HeapOperator:
    return space.X_root(root) if root.is_positive else space.Y_root(-root)


def match_constant(
    lhs: HeapOperator, rhs: HeapOperator, basis: Sequence[IdealCut]
) -> int:
    """The integer N with lhs = N * rhs on the basis; AmbiguousMatch if none."""
    constant: int | None = None
    for cut in basis:
        image = rhs(cut)
        term = image.single()
        if term is None:
            continue
        target, sign = term
        value = lhs(cut).coefficient(target)
        candidate = int(value) * int(sign)
        if constant is None:
            constant = candidate
        elif constant != candidate:
            raise AmbiguousMatch(
                f"{lhs.tag} is not a multiple of {rhs.tag} (got {constant}, {candidate})"
            )
    if constant is None:
        raise AmbiguousMatch(f"{rhs.tag} vanishes on the basis; enlarge the window")
    for cut in basis:
        if lhs(cut) != rhs(cut).scale(constant):
            raise AmbiguousMatch(f"{lhs.tag} != {constant} * {rhs.tag} at {cut}")
    return constant


def _coroot_expansion(
    space: RepresentationSpace, lhs: HeapOperator, basis: Sequence[IdealCut]
) -> RootVector:
    finite = list(range(1, space.n))
    rows = [[space.h_eigenvalue(i, cut) for i in finite] for cut in basis]
    values = [lhs(cut).coefficient(cut) for cut in basis]
    for cut in basis:
        image = lhs(cut)
        if any(target != cut for target in image.support()):
            raise AmbiguousMatch(f"{lhs.tag} is not diagonal at {cut}")
    m = sympy.Matrix(rows)
    b = sympy.Matrix(values)
    try:
        solution, params = m.gauss_jordan_solve(b)
    except ValueError as e:
        raise AmbiguousMatch(f"{lhs.tag} is not in the span of H_1..H_l") from e
    if params.shape[0]:
        raise AmbiguousMatch(f"Expansion of {lhs.tag} is not unique on this basis")
    coeffs = [0] + [int(x) for x in solution]
    return RootVector(tuple(coeffs))


def operator_rank(
    operators: Sequence[HeapOperator], basis: Sequence[IdealCut]
) -> int:
    """Rank of the operators as vectors of matrix entries over the basis."""
    columns: dict[tuple[IdealCut, IdealCut], int] = {}
    entries: list[dict[int, int]] = []
    for op in operators:
        row: dict[int, int] = {}
        for cut in basis:
            for target, c in op(cut).items():
                col = columns.setdefault((cut, target), len(columns))
                row[col] = int(c)
        entries.append(row)
    if not columns:
        return 0
    matrix = sympy.zeros(len(operators), len(columns))
    for i, row in enumerate(entries):
        for j, c in row.items():
            matrix[i, j] = c
    return int(matrix.rank())


def chevalley_table(
    heap: PeriodicHeap | RepresentationSpace,
    orientation: DynkinDiagram | None = None,
    basis: Sequence[IdealCut] | None = None,
) -> ChevalleyTable:
    space = _resolve(heap, orientation)
    cuts = list(basis) if basis is not None else space.domain(1)
    roots = list(space.finite_roots)
    root_set = set(roots)
    table = ChevalleyTable(space.heap.diagram.name)

    for i, alpha in enumerate(roots):
        for beta in roots[i + 1 :]:
            total = alpha + beta
            if total in root_set:
                lhs = bracket(_op(space, alpha), _op(space, beta))
                n = match_constant(lhs, _op(space, total), cuts)
                table.brackets.append(BracketRow(alpha, beta, total, n))
    for alpha in roots:
        for beta in roots:
            diff = alpha - beta
            if diff in root_set:
                lhs = bracket(_op(space, alpha), _op(space, -beta))
                n = match_constant(lhs, _op(space, diff), cuts)
                table.brackets.append(BracketRow(alpha, -beta, diff, n))
    for alpha in roots:
        lhs = bracket(_op(space, alpha), _op(space, -alpha))
        table.coroots.append(CorootRow(alpha, _coroot_expansion(space, lhs, cuts)))

    operators = [space.X_root(a) for a in roots] + [space.Y_root(a) for a in roots]
    operators += [space.H(i) for i in range(1, space.n)]
    table.dimension = len(operators)
    table.rank = operator_rank(operators, cuts)
    log.info(
        f"Chevalley table for {table.diagram}: {len(table.brackets)} brackets, "
        f"rank {table.rank}/{table.dimension}"
    )
    return table


def verify_chevalley(
    heap: PeriodicHeap | RepresentationSpace,
    orientation: DynkinDiagram | None = None,
) -> tuple[ChevalleyTable | None, VerificationReport]:
    """Build the table and check constants, coroots, independence and the sign rule."""
    space = _resolve(heap, orientation)
    report = VerificationReport("chevalley", metadata={"diagram": space.heap.diagram.name})
    try:
        table = chevalley_table(space)
    except AmbiguousMatch as e:
        report.record("chevalley.match", False, detail=str(e))
        return None, report

    simply_laced = space.heap.cartan.simply_laced
    allowed = {1, -1} if simply_laced else {1, -1, 2, -2}
    for row in table.brackets:
        report.record(
            "chevalley.constant_range",
            row.constant in allowed,
            witness={"alpha": row.alpha, "beta": row.beta, "constant": row.constant},
        )
        if simply_laced and not space.heap.folded and row.beta.is_positive:
            expected = sgn(space.orientation, row.alpha, row.beta)
            report.record(
                "chevalley.sign_rule",
                row.constant == expected,
                witness={"alpha": row.alpha, "beta": row.beta, "constant": row.constant},
            )
    for crow in table.coroots:
        report.record(
            "chevalley.coroot",
            crow.coroot == space.coroot(crow.alpha),
            witness={"alpha": crow.alpha, "expansion": crow.coroot},
        )
    report.record(
        "chevalley.independent",
        table.independent,
        witness={"rank": table.rank, "dimension": table.dimension},
    )
    report.metadata["rows"] = len(table.brackets) + len(table.coroots)
    return table, report
