"""
Generalized Cartan matrices and Dynkin diagrams.

Provides:
- GeneralizedCartanMatrix: validated doubly-laced integer matrix
- DynkinDiagram: named matrix with an edge orientation for sign computations
- CartanClass / CartanType: finite, affine or indefinite with a witness vector
- classify: exact type classification over the rationals (sympy)
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Any

import sympy

from heapkit.core.errors import DimensionMismatch, DisconnectedDiagram, InvalidCartanMatrix

ALLOWED_OFF_DIAGONAL = frozenset({0, -1, -2})


@dataclass(frozen=True)
class GeneralizedCartanMatrix:
    """A doubly-laced generalized Cartan matrix."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(a) for a in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0:
            raise InvalidCartanMatrix("Cartan matrix must have at least one vertex")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise InvalidCartanMatrix(f"Row {i} has length {len(row)}, expected {n}")
            if row[i] != 2:
                raise InvalidCartanMatrix(f"Diagonal entry a[{i}][{i}] = {row[i]}, expected 2")
            for j, a in enumerate(row):
                if i == j:
                    continue
                if a not in ALLOWED_OFF_DIAGONAL:
                    raise InvalidCartanMatrix(
                        f"Entry a[{i}][{j}] = {a} outside the doubly-laced range {{0, -1, -2}}"
                    )
                if (a == 0) != (rows[j][i] == 0):
                    raise InvalidCartanMatrix(f"a[{i}][{j}] and a[{j}][{i}] must vanish together")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> GeneralizedCartanMatrix:
        return cls(tuple(tuple(row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    @property
    def simply_laced(self) -> bool:
        """No entries equal to -2."""
        return all(a != -2 for row in self.entries for a in row)

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.entries[i][j] != 0

    def related(self, i: int, j: int) -> bool:
        """Labels equal or adjacent."""
        return i == j or self.entries[i][j] != 0

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(j for j in range(self.n) if self.adjacent(i, j)) for i in range(self.n)
        )

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j) for i in range(self.n) for j in range(i + 1, self.n) if self.adjacent(i, j)
        )

    def is_connected(self, vertices: Sequence[int] | None = None) -> bool:
        verts = list(range(self.n)) if vertices is None else list(vertices)
        if not verts:
            return True
        allowed = set(verts)
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            i = stack.pop()
            for j in self.neighbors[i]:
                if j in allowed and j not in seen:
                    seen.add(j)
                    stack.append(j)
        return seen == allowed

    def transpose(self) -> GeneralizedCartanMatrix:
        return GeneralizedCartanMatrix(tuple(zip(*self.entries, strict=True)))

    def submatrix(self, vertices: Sequence[int]) -> GeneralizedCartanMatrix:
        return GeneralizedCartanMatrix(
            tuple(tuple(self.entries[i][j] for j in vertices) for i in vertices)
        )

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(self.entries)

    def to_list(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def default_orientation(matrix: GeneralizedCartanMatrix) -> frozenset[tuple[int, int]]:
    """Each edge directed from the smaller to the larger vertex index."""
    return frozenset(matrix.edges)


@dataclass(frozen=True)
class DynkinDiagram:
    """
    A named Cartan matrix with an orientation.

    The orientation holds one arrow (p, q) per adjacent pair; sgn(p, q) is -1
    exactly when p == q or the arrow runs p -> q.
    """

    name: str
    cartan: GeneralizedCartanMatrix
    orientation: frozenset[tuple[int, int]] = field(default=frozenset())

    def __post_init__(self) -> None:
        if not self.orientation:
            object.__setattr__(self, "orientation", default_orientation(self.cartan))
        arrows = frozenset((int(p), int(q)) for p, q in self.orientation)
        object.__setattr__(self, "orientation", arrows)
        covered: set[tuple[int, int]] = set()
        for p, q in arrows:
            if not self.cartan.adjacent(p, q):
                raise InvalidCartanMatrix(f"Orientation arrow {p}->{q} joins non-adjacent vertices")
            key = (min(p, q), max(p, q))
            if key in covered:
                raise InvalidCartanMatrix(f"Edge {key} oriented twice")
            covered.add(key)
        if covered != set(self.cartan.edges):
            missing = sorted(set(self.cartan.edges) - covered)
            raise InvalidCartanMatrix(f"Edges without orientation: {missing}")

    @property
    def n(self) -> int:
        return self.cartan.n

    @property
    def vertices(self) -> range:
        return range(self.cartan.n)

    def sgn(self, p: int, q: int) -> int:
        if p == q or (p, q) in self.orientation:
            return -1
        return 1

    def with_orientation(self, arrows: Iterable[tuple[int, int]]) -> DynkinDiagram:
        return DynkinDiagram(self.name, self.cartan, frozenset(arrows))

    def flip(self, p: int, q: int) -> DynkinDiagram:
        """Reverse the arrow on edge {p, q}."""
        arrows = set(self.orientation)
        if (p, q) in arrows:
            arrows.remove((p, q))
            arrows.add((q, p))
        elif (q, p) in arrows:
            arrows.remove((q, p))
            arrows.add((p, q))
        else:
            raise InvalidCartanMatrix(f"No edge between {p} and {q}")
        return self.with_orientation(arrows)

    def edge_multiplicity(self, p: int, q: int) -> int:
        return self.cartan[p, q] * self.cartan[q, p]

    def arrow_towards(self, p: int, q: int) -> int | None:
        """For a double edge, the short end (a[short][long] == -2); None otherwise."""
        if self.cartan[p, q] == -2:
            return p
        if self.cartan[q, p] == -2:
            return q
        return None

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "cartan": self.cartan.to_list(),
            "orientation": sorted([list(a) for a in self.orientation]),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> DynkinDiagram:
        matrix = GeneralizedCartanMatrix.from_rows(data["cartan"])
        arrows = frozenset((int(a), int(b)) for a, b in data.get("orientation", []))
        return cls(data["name"], matrix, arrows)


class CartanClass(str, Enum):
    """Type of an indecomposable generalized Cartan matrix."""

    FINITE = "finite"
    AFFINE = "affine"
    INDEFINITE = "indefinite"


@dataclass(frozen=True)
class CartanType:
    """Classification result; `witness` is u with Au > 0 (finite) or Au = 0 (affine)."""

    kind: CartanClass
    witness: tuple[int, ...] | None = None


def integral_primitive(vector: Iterable[Any]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers, keeping signs."""
    fracs = []
    for v in vector:
        r = sympy.Rational(v)
        fracs.append(Fraction(int(r.p), int(r.q)))
    denom = 1
    for f in fracs:
        denom = lcm(denom, f.denominator)
    ints = [int(f * denom) for f in fracs]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        return tuple(ints)
    return tuple(a // g for a in ints)


def classify(matrix: GeneralizedCartanMatrix | DynkinDiagram) -> CartanType:
    """
    Classify an indecomposable matrix as finite, affine or indefinite.

    Finite iff det != 0 and u = A^-1 (1, ..., 1) is strictly positive (then Au > 0).
    Affine iff the kernel is one-dimensional and spanned by a positive vector.
    """
    a = matrix.cartan if isinstance(matrix, DynkinDiagram) else matrix
    if not a.is_connected():
        raise DisconnectedDiagram("classify needs a connected Dynkin diagram")

    m = a.to_sympy()
    if m.det() != 0:
        u = m.inv() * sympy.ones(a.n, 1)
        if all(x > 0 for x in u):
            return CartanType(CartanClass.FINITE, integral_primitive(u))
        return CartanType(CartanClass.INDEFINITE)

    kernel = m.nullspace()
    if len(kernel) == 1:
        vec = integral_primitive(kernel[0])
        if all(x < 0 for x in vec):
            vec = tuple(-x for x in vec)
        if all(x > 0 for x in vec):
            return CartanType(CartanClass.AFFINE, vec)
    return CartanType(CartanClass.INDEFINITE)


def check_same_size(*sizes: int) -> None:
    if len(set(sizes)) > 1:
        raise DimensionMismatch(f"Vertex counts disagree: {sizes}")
