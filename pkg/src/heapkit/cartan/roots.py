"""
Root vectors, pairings, reflections and the orientation sign function.

Provides:
- RootVector: integer coefficients over the simple roots
- pairing / simple_reflection against a Cartan matrix
- positive_roots: reflection closure for finite-type (sub)diagrams
- null_and_highest_root, comarks, symmetrizer for affine matrices
- sgn on vertices and on root pairs
- root_trichotomy: the five-case pairing classification
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import sympy

from heapkit.cartan.matrix import (
    CartanClass,
    DynkinDiagram,
    GeneralizedCartanMatrix,
    classify,
    integral_primitive,
)
from heapkit.core.errors import (
    DimensionMismatch,
    NotAffineType,
    NotARoot,
    NotFiniteType,
)


@dataclass(frozen=True, order=True)
class RootVector:
    """Integer combination of simple roots, indexed by diagram vertex."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls, n: int) -> RootVector:
        return cls((0,) * n)

    @classmethod
    def simple(cls, n: int, i: int) -> RootVector:
        return cls(tuple(1 if j == i else 0 for j in range(n)))

    @classmethod
    def of(cls, values: Iterable[int]) -> RootVector:
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def _check(self, other: RootVector) -> None:
        if len(other.coeffs) != len(self.coeffs):
            raise DimensionMismatch(
                f"Root vectors of length {len(self.coeffs)} and {len(other.coeffs)}"
            )

    def __add__(self, other: RootVector) -> RootVector:
        self._check(other)
        return RootVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __sub__(self, other: RootVector) -> RootVector:
        self._check(other)
        return RootVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __neg__(self) -> RootVector:
        return RootVector(tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> RootVector:
        return RootVector(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_positive(self) -> bool:
        return not self.is_zero and all(c >= 0 for c in self.coeffs)

    @property
    def is_negative(self) -> bool:
        return not self.is_zero and all(c <= 0 for c in self.coeffs)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def to_json_value(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            coeff = "" if c == 1 else ("-" if c == -1 else str(c))
            terms.append(f"{coeff}a{i}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _matrix(a: GeneralizedCartanMatrix | DynkinDiagram) -> GeneralizedCartanMatrix:
    return a.cartan if isinstance(a, DynkinDiagram) else a


def pairing(
    beta: RootVector, alpha_check: RootVector, cartan: GeneralizedCartanMatrix | DynkinDiagram
) -> int:
    """<beta, alpha_check> = sum_i sum_j b_j c_i a_ij."""
    a = _matrix(cartan)
    if len(beta) != a.n or len(alpha_check) != a.n:
        raise DimensionMismatch(
            f"pairing over {a.n} vertices got vectors of length {len(beta)}, {len(alpha_check)}"
        )
    total = 0
    for i, c in enumerate(alpha_check.coeffs):
        if c == 0:
            continue
        row = a.entries[i]
        total += c * sum(b * row[j] for j, b in enumerate(beta.coeffs) if b)
    return total


def simple_reflection(
    i: int, v: RootVector, cartan: GeneralizedCartanMatrix | DynkinDiagram
) -> RootVector:
    """s_i(v) = v - <v, alpha_i^vee> alpha_i."""
    a = _matrix(cartan)
    if not 0 <= i < a.n:
        raise IndexError(f"Vertex {i} out of range for {a.n} vertices")
    k = sum(b * a.entries[i][j] for j, b in enumerate(v.coeffs) if b)
    coeffs = list(v.coeffs)
    coeffs[i] -= k
    return RootVector(tuple(coeffs))


@lru_cache(maxsize=128)
def _positive_roots_cached(
    a: GeneralizedCartanMatrix, vertices: tuple[int, ...]
) -> tuple[RootVector, ...]:
    n = a.n
    seen: set[RootVector] = set()
    queue: deque[RootVector] = deque()
    for i in vertices:
        simple = RootVector.simple(n, i)
        seen.add(simple)
        queue.append(simple)
    while queue:
        beta = queue.popleft()
        for i in vertices:
            image = simple_reflection(i, beta, a)
            if image.is_positive and image not in seen:
                seen.add(image)
                queue.append(image)
    return tuple(sorted(seen, key=lambda r: r.coeffs))


def positive_roots(
    cartan: GeneralizedCartanMatrix | DynkinDiagram, exclude: Sequence[int] = ()
) -> tuple[RootVector, ...]:
    """
    Positive roots of a finite-type matrix by reflection closure of the simple roots.

    With `exclude`, works on the subdiagram without those vertices but returns
    vectors indexed by the full vertex set (zeros on excluded vertices).
    """
    a = _matrix(cartan)
    vertices = tuple(i for i in range(a.n) if i not in set(exclude))
    sub = a.submatrix(vertices)
    if classify(sub).kind is not CartanClass.FINITE:
        raise NotFiniteType("positive_roots needs a finite-type (sub)diagram")
    return _positive_roots_cached(a, vertices)


def finite_positive_roots(
    diagram: GeneralizedCartanMatrix | DynkinDiagram,
) -> tuple[RootVector, ...]:
    """Positive roots of the finite-type diagram obtained by deleting vertex 0."""
    return positive_roots(diagram, exclude=(0,))


def _affine_kernel(a: GeneralizedCartanMatrix) -> tuple[int, ...]:
    result = classify(a)
    if result.kind is not CartanClass.AFFINE or result.witness is None:
        raise NotAffineType(f"Matrix is of {result.kind.value} type")
    return result.witness


def null_and_highest_root(
    cartan: GeneralizedCartanMatrix | DynkinDiagram,
) -> tuple[RootVector, RootVector]:
    """delta (coprime positive kernel vector) and theta = delta - alpha_0."""
    a = _matrix(cartan)
    delta = RootVector(_affine_kernel(a))
    theta = delta - RootVector.simple(a.n, 0)
    if theta not in set(finite_positive_roots(a)):
        raise NotARoot(f"delta - alpha_0 = {theta} is not a root of the finite subdiagram")
    return delta, theta


def null_root(cartan: GeneralizedCartanMatrix | DynkinDiagram) -> RootVector:
    return RootVector(_affine_kernel(_matrix(cartan)))


def comarks(cartan: GeneralizedCartanMatrix | DynkinDiagram) -> RootVector:
    """Coprime positive kernel vector of the transpose."""
    return RootVector(_affine_kernel(_matrix(cartan).transpose()))


def symmetrizer(cartan: GeneralizedCartanMatrix | DynkinDiagram) -> tuple[int, ...]:
    """Positive integers d_i with d_i a_ij = d_j a_ji, normalized to minimum 1."""
    a = _matrix(cartan)
    d: list[sympy.Rational | None] = [None] * a.n
    for start in range(a.n):
        if d[start] is not None:
            continue
        d[start] = sympy.Rational(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in a.neighbors[i]:
                value = d[i] * sympy.Rational(a[i, j], a[j, i])  # type: ignore[operator]
                if d[j] is None:
                    d[j] = value
                    stack.append(j)
                elif d[j] != value:
                    raise ValueError("Cartan matrix is not symmetrizable")
    ints = integral_primitive(d)
    return ints


def sgn(
    diagram: DynkinDiagram,
    x: int | RootVector,
    y: int | RootVector,
    additive: bool = False,
) -> int:
    """
    Orientation sign.

    On vertices: -1 if x == y or the arrow runs x -> y, else +1.
    On root characters f, g: prod_{p,q} sgn(p, q)^(f(p) g(q)); with additive=True the
    plain sum sum_{p,q} f(p) g(q) sgn(p, q) instead.
    """
    if isinstance(x, int) and isinstance(y, int):
        return diagram.sgn(x, y)
    if not isinstance(x, RootVector) or not isinstance(y, RootVector):
        raise TypeError("sgn takes two vertices or two root vectors")
    if additive:
        return sum(
            f * g * diagram.sgn(p, q)
            for p, f in enumerate(x.coeffs)
            if f
            for q, g in enumerate(y.coeffs)
            if g
        )
    negatives = 0
    for p, f in enumerate(x.coeffs):
        if not f:
            continue
        for q, g in enumerate(y.coeffs):
            if g and diagram.sgn(p, q) == -1:
                negatives += f * g
    return -1 if negatives % 2 else 1


class RootCase(str, Enum):
    """Outcome of comparing two roots by their pairing."""

    EQUAL = "equal"  # <beta, alpha^vee> = 2, beta = alpha
    DIFFERENCE = "difference"  # 1: alpha - beta is a root
    ORTHOGONAL = "orthogonal"  # 0: neither alpha + beta nor alpha - beta is a root
    SUM = "sum"  # -1: alpha + beta is a root
    OPPOSITE = "opposite"  # -2: beta = -alpha


def root_trichotomy(
    alpha: RootVector,
    beta: RootVector,
    cartan: GeneralizedCartanMatrix | DynkinDiagram,
    roots: Iterable[RootVector] | None = None,
) -> tuple[RootCase, int]:
    """Classify the pair (alpha, beta) of roots of a simply-laced finite-type system."""
    a = _matrix(cartan)
    root_set = set(roots) if roots is not None else set(positive_roots(a))
    all_roots = root_set | {-r for r in root_set}
    for r in (alpha, beta):
        if r not in all_roots:
            raise NotARoot(f"{r} is not a root")

    k = pairing(beta, alpha, a)
    case = {
        2: RootCase.EQUAL,
        1: RootCase.DIFFERENCE,
        0: RootCase.ORTHOGONAL,
        -1: RootCase.SUM,
        -2: RootCase.OPPOSITE,
    }.get(k)
    if case is None:
        raise NotARoot(f"pairing {k} out of range for a simply-laced system")

    plus_root = (alpha + beta) in all_roots
    minus_root = (alpha - beta) in all_roots
    consistent = {
        RootCase.EQUAL: beta == alpha,
        RootCase.DIFFERENCE: minus_root and not plus_root,
        RootCase.ORTHOGONAL: not plus_root and not minus_root,
        RootCase.SUM: plus_root and not minus_root,
        RootCase.OPPOSITE: beta == -alpha,
    }[case]
    if not consistent:
        raise NotARoot(f"pair ({alpha}, {beta}) violates the pairing classification")
    return case, k
