"""
Operators on the ideal module V_E.

Provides:
- OperatorKind: X, Y, H and the affine T, Tinv, D
- HeapOperator: a tagged linear operator given by its action on basis cuts
- RepresentationSpace: simple, root, coroot and affine operators of a periodic heap,
  the b+/b- integers of a convex subheap and root-heap enumeration
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from heapkit.cartan.matrix import DynkinDiagram
from heapkit.cartan.roots import RootVector, finite_positive_roots, symmetrizer
from heapkit.core.errors import InvalidCut, NotAPositiveRoot, NotARoot, NotConvex
from heapkit.core.logging_config import get_logger
from heapkit.heap.periodic import PeriodicHeap
from heapkit.heap.window import HeapWindow
from heapkit.rep.laurent import Coefficient
from heapkit.rep.vectors import IdealCut, ModuleVector

log = get_logger(__name__)

Rule = Callable[[IdealCut], ModuleVector]


class OperatorKind(str, Enum):
    """Operator families acting on basis cuts."""

    X = "X"
    Y = "Y"
    H = "H"
    T = "T"
    TINV = "Tinv"
    D = "D"


def _kind(kind: OperatorKind | str) -> OperatorKind:
    return kind if isinstance(kind, OperatorKind) else OperatorKind(kind)


@dataclass(frozen=True)
class HeapOperator:
    """A linear operator defined on basis vectors and extended by linearity."""

    tag: str
    rule: Rule

    def __call__(self, v: ModuleVector | IdealCut) -> ModuleVector:
        if isinstance(v, IdealCut):
            return self.rule(v)
        out = ModuleVector()
        for cut, c in v.items():
            image = self.rule(cut)
            if image:
                out = out + image.scale(c)
        return out

    def __matmul__(self, other: HeapOperator) -> HeapOperator:
        """Composition: (self @ other)(v) = self(other(v))."""
        return HeapOperator(f"{self.tag}{other.tag}", lambda cut: self(other(cut)))

    def __add__(self, other: HeapOperator) -> HeapOperator:
        return HeapOperator(f"({self.tag} + {other.tag})", lambda cut: self(cut) + other(cut))

    def __sub__(self, other: HeapOperator) -> HeapOperator:
        return HeapOperator(f"({self.tag} - {other.tag})", lambda cut: self(cut) - other(cut))

    def __neg__(self) -> HeapOperator:
        return HeapOperator(f"-{self.tag}", lambda cut: -self(cut))

    def scale(self, factor: Coefficient) -> HeapOperator:
        return HeapOperator(f"{factor}*{self.tag}", lambda cut: self(cut).scale(factor))

    def power(self, k: int) -> HeapOperator:
        if k < 0:
            raise ValueError("Operator powers must be non-negative")
        result = identity()
        for _ in range(k):
            result = self @ result
        return HeapOperator(f"{self.tag}^{k}", result.rule)


def identity() -> HeapOperator:
    return HeapOperator("1", ModuleVector.basis)


def zero_operator() -> HeapOperator:
    return HeapOperator("0", lambda cut: ModuleVector())


def bracket(a: HeapOperator, b: HeapOperator) -> HeapOperator:
    """[a, b] = ab - ba."""
    return HeapOperator(f"[{a.tag},{b.tag}]", lambda cut: a(b(cut)) - b(a(cut)))


def agree_on(
    first: HeapOperator, second: HeapOperator, basis: Iterable[IdealCut]
) -> IdealCut | None:
    """First basis cut where the operators differ, or None."""
    for cut in basis:
        if first(cut) != second(cut):
            return cut
    return None


@dataclass(frozen=True)
class RootHeap:
    """A convex subheap L = (I + alpha) \\ I given by chain coordinates."""

    root: RootVector
    below: IdealCut
    elements: tuple[tuple[int, int], ...]

    @property
    def above(self) -> IdealCut:
        return self.below.plus(self.root)

    def indices(self, window: HeapWindow) -> list[int]:
        return [window.index_of(p, t) for p, t in self.elements]

    def to_json_value(self) -> dict[str, object]:
        return {
            "root": list(self.root.coeffs),
            "elements": [list(e) for e in self.elements],
        }


class RepresentationSpace:
    """
    The module V_E of a periodic full heap.

    Basis vectors are IdealCuts. Operators are evaluated in cut arithmetic; signs of
    root operators use slab parities computed in the cover heap for folded heaps.
    """

    def __init__(
        self,
        heap: PeriodicHeap,
        orientation: DynkinDiagram | None = None,
        check_results: bool = True,
    ):
        self.heap = heap
        self.orientation = orientation or heap.orientation
        self.check_results = check_results
        self._simple_cache: dict[tuple[OperatorKind, int, IdealCut], ModuleVector] = {}
        self._slab_cache: dict[tuple[OperatorKind, RootVector, IdealCut], ModuleVector] = {}

    @property
    def n(self) -> int:
        return self.heap.n

    @property
    def delta(self) -> RootVector:
        return self.heap.period

    def with_orientation(self, orientation: DynkinDiagram) -> RepresentationSpace:
        return RepresentationSpace(self.heap, orientation, self.check_results)

    # ------------------------------------------------------------------
    # Basis
    # ------------------------------------------------------------------

    def cut(self, levels: IdealCut | Sequence[int]) -> IdealCut:
        cut = levels if isinstance(levels, IdealCut) else IdealCut.of(levels)
        if not self.heap.is_valid_cut(cut):
            raise InvalidCut(f"{cut} is not an ideal cut of {self.heap.diagram.name}")
        return cut

    @cached_property
    def height_zero(self) -> tuple[IdealCut, ...]:
        return tuple(IdealCut.of(c) for c in self.heap.height_zero_cuts)

    def domain(self, shifts: int = 1) -> list[IdealCut]:
        """Height-zero cuts and their T^j images for |j| <= shifts."""
        return [IdealCut.of(c) for c in self.heap.fundamental_domain(shifts)]

    def height(self, cut: IdealCut) -> int:
        return self.heap.height(cut)

    def _result(self, cut: IdealCut, coefficient: int = 1) -> ModuleVector:
        if self.check_results and not self.heap.is_valid_cut(cut):
            raise InvalidCut(f"Operator produced the invalid cut {cut}")
        return ModuleVector.basis(cut, coefficient)

    # ------------------------------------------------------------------
    # Simple operators
    # ------------------------------------------------------------------

    def addable(self, cut: IdealCut, p: int) -> bool:
        return self.heap.can_add(cut, p)

    def removable(self, cut: IdealCut, p: int) -> bool:
        return self.heap.can_remove(cut, p)

    def h_eigenvalue(self, p: int, cut: IdealCut) -> int:
        up, down = self.addable(cut, p), self.removable(cut, p)
        if up and down:
            raise InvalidCut(f"E({p}, *) both addable and removable at {cut}")
        return 1 if down else (-1 if up else 0)

    def apply_simple(self, kind: OperatorKind | str, p: int, cut: IdealCut) -> ModuleVector:
        k = _kind(kind)
        key = (k, p, cut)
        cached = self._simple_cache.get(key)
        if cached is not None:
            return cached
        if k is OperatorKind.X:
            out = self._result(cut.moved(p, 1)) if self.addable(cut, p) else ModuleVector()
        elif k is OperatorKind.Y:
            out = self._result(cut.moved(p, -1)) if self.removable(cut, p) else ModuleVector()
        elif k is OperatorKind.H:
            value = self.h_eigenvalue(p, cut)
            out = ModuleVector.basis(cut, value) if value else ModuleVector()
        else:
            raise ValueError(f"{k.value} is not a simple operator kind")
        self._simple_cache[key] = out
        return out

    def X(self, p: int) -> HeapOperator:
        return HeapOperator(f"X{p}", lambda cut: self.apply_simple(OperatorKind.X, p, cut))

    def Y(self, p: int) -> HeapOperator:
        return HeapOperator(f"Y{p}", lambda cut: self.apply_simple(OperatorKind.Y, p, cut))

    def H(self, p: int) -> HeapOperator:
        return HeapOperator(f"H{p}", lambda cut: self.apply_simple(OperatorKind.H, p, cut))

    # ------------------------------------------------------------------
    # Slab and root operators
    # ------------------------------------------------------------------

    def slab_action(
        self, kind: OperatorKind | str, vector: RootVector, cut: IdealCut
    ) -> ModuleVector:
        """Signed action of the unique convex slab of character `vector` above or below the cut."""
        k = _kind(kind)
        key = (k, vector, cut)
        cached = self._slab_cache.get(key)
        if cached is not None:
            return cached
        if k is OperatorKind.X:
            low, high = cut, cut.plus(vector)
            target = high
        elif k is OperatorKind.Y:
            low, high = cut.plus(vector, -1), cut
            target = low
        else:
            raise ValueError(f"{k.value} is not a slab operator kind")
        if not self.heap.is_valid_cut(target):
            out = ModuleVector()
        else:
            sign = self.heap.slab_parity(self.heap.slab(low, high), self.orientation)
            out = ModuleVector.basis(target, sign)
        self._slab_cache[key] = out
        return out

    @cached_property
    def finite_roots(self) -> tuple[RootVector, ...]:
        return finite_positive_roots(self.heap.cartan)

    def is_positive_real_root(self, alpha: RootVector) -> bool:
        """alpha = gamma + k delta with gamma a finite root (negative only when k > 0)."""
        if not alpha.is_positive:
            return False
        finite = set(self.finite_roots)
        delta = self.delta
        k = 0
        gamma = alpha
        while all(c >= -m for c, m in zip(gamma.coeffs, delta.coeffs, strict=True)):
            if gamma in finite or (k > 0 and -gamma in finite):
                return True
            k += 1
            gamma = gamma - delta
        return False

    def _require_root(self, alpha: RootVector) -> None:
        if len(alpha) != self.n:
            raise NotAPositiveRoot(f"{alpha} has {len(alpha)} coordinates, expected {self.n}")
        if not self.is_positive_real_root(alpha):
            raise NotAPositiveRoot(f"{alpha} is not a positive real root")

    def apply_root(
        self, kind: OperatorKind | str, alpha: RootVector, cut: IdealCut
    ) -> ModuleVector:
        self._require_root(alpha)
        return self.slab_action(kind, alpha, cut)

    def X_root(self, alpha: RootVector) -> HeapOperator:
        self._require_root(alpha)
        return HeapOperator(
            f"X[{alpha}]", lambda cut: self.slab_action(OperatorKind.X, alpha, cut)
        )

    def Y_root(self, alpha: RootVector) -> HeapOperator:
        self._require_root(alpha)
        return HeapOperator(
            f"Y[{alpha}]", lambda cut: self.slab_action(OperatorKind.Y, alpha, cut)
        )

    def coroot(self, alpha: RootVector) -> RootVector:
        """Coefficients of alpha^vee over the simple coroots."""
        a = self.heap.cartan
        d = symmetrizer(a)
        lam = alpha.coeffs
        norm = sum(
            lam[i] * lam[j] * d[i] * a[i, j]
            for i in range(self.n)
            if lam[i]
            for j in range(self.n)
            if lam[j]
        )
        if norm <= 0 or norm % 2:
            raise NotARoot(f"{alpha} has norm {norm}, not a real root")
        half = norm // 2
        coeffs = []
        for i, c in enumerate(lam):
            value, rem = divmod(c * d[i], half)
            if rem:
                raise NotARoot(f"Coroot of {alpha} is not integral")
            coeffs.append(value)
        return RootVector(tuple(coeffs))

    def apply_H_alpha(self, alpha: RootVector, cut: IdealCut) -> ModuleVector:
        """alpha^vee acting on v_I; for simply-laced diagrams sum_i lambda_i H_i."""
        self._require_root(alpha)
        coroot = self.coroot(alpha)
        total = sum(c * self.h_eigenvalue(i, cut) for i, c in enumerate(coroot.coeffs) if c)
        return ModuleVector.basis(cut, total) if total else ModuleVector()

    def H_root(self, alpha: RootVector) -> HeapOperator:
        self._require_root(alpha)
        return HeapOperator(f"H[{alpha}]", lambda cut: self.apply_H_alpha(alpha, cut))

    # ------------------------------------------------------------------
    # Affine operators
    # ------------------------------------------------------------------

    def apply_T_D(self, kind: OperatorKind | str, cut: IdealCut) -> ModuleVector:
        k = _kind(kind)
        if k is OperatorKind.T:
            return self.slab_action(OperatorKind.X, self.delta, cut)
        if k is OperatorKind.TINV:
            return self.slab_action(OperatorKind.Y, self.delta, cut)
        if k is OperatorKind.D:
            h = self.height(cut)
            return ModuleVector.basis(cut, h) if h else ModuleVector()
        raise ValueError(f"{k.value} is not an affine operator kind")

    def T(self) -> HeapOperator:
        return HeapOperator("T", lambda cut: self.apply_T_D(OperatorKind.T, cut))

    def T_inv(self) -> HeapOperator:
        return HeapOperator("Tinv", lambda cut: self.apply_T_D(OperatorKind.TINV, cut))

    def D(self) -> HeapOperator:
        return HeapOperator("D", lambda cut: self.apply_T_D(OperatorKind.D, cut))

    # ------------------------------------------------------------------
    # Convex subheaps of a window
    # ------------------------------------------------------------------

    @staticmethod
    def _runs(window: HeapWindow, subset: Iterable[int]) -> dict[int, tuple[int, int]]:
        chains: dict[int, list[int]] = {}
        for idx in subset:
            p, t = window.coords[idx]
            chains.setdefault(p, []).append(t)
        runs = {}
        for p, ts in chains.items():
            ts.sort()
            if ts[-1] - ts[0] + 1 != len(ts):
                raise NotConvex(f"Chain {p} of the subset is not contiguous")
            runs[p] = (ts[0], ts[-1] + 1)
        return runs

    def apply_convex(
        self, kind: OperatorKind | str, window: HeapWindow, subset: Iterable[int], cut: IdealCut
    ) -> ModuleVector:
        """Unsigned X_L / Y_L for a finite convex subheap L of a window."""
        k = _kind(kind)
        members = set(subset)
        if not window.is_convex(members):
            raise NotConvex("X_L and Y_L need a convex subheap")
        runs = self._runs(window, members)
        levels = list(cut.levels)
        for p, (low, high) in runs.items():
            if k is OperatorKind.X:
                if cut[p] != low:
                    return ModuleVector()
                levels[p] = high
            elif k is OperatorKind.Y:
                if cut[p] != high:
                    return ModuleVector()
                levels[p] = low
            else:
                raise ValueError(f"{k.value} is not a convex-subheap operator kind")
        target = IdealCut.of(levels)
        if not self.heap.is_valid_cut(target):
            return ModuleVector()
        return ModuleVector.basis(target)

    def hull_cut(self, window: HeapWindow, subset: Iterable[int]) -> IdealCut:
        """Cut of the ideal (down-set of L) minus L, on which X_L acts."""
        members = set(subset)
        levels = []
        for p in range(self.n):
            top = None
            for idx in window.chain(p):
                if idx in members or any(window.less(idx, y) for y in members):
                    t = window.coords[idx][1]
                    top = t if top is None else max(top, t)
            if top is None:
                raise ValueError(f"Window too small to bound chain {p} below the subset")
            inside = sum(1 for idx in members if window.coords[idx][0] == p)
            levels.append(top + 1 - inside)
        return self.cut(levels)

    def b_pm(self, window: HeapWindow, subset: Iterable[int], p: int) -> tuple[int, int]:
        """(b+, b-) of a finite convex subheap L at vertex p."""
        members = set(subset)
        if not members:
            raise NotConvex("b+/b- need a nonempty subheap")
        if not window.is_convex(members):
            raise NotConvex("b+/b- need a convex subheap")
        maximal = [x for x in members if not any(window.less(x, y) for y in members)]
        minimal = [x for x in members if not any(window.less(y, x) for y in members)]

        def extends(above: bool) -> bool:
            for a in window.chain(p):
                if a in members:
                    continue
                if above:
                    touches = any(window.less(y, a) for y in members)
                    extreme = not any(window.less(a, y) for y in members)
                else:
                    touches = any(window.less(a, y) for y in members)
                    extreme = not any(window.less(y, a) for y in members)
                if touches and extreme and window.is_convex(members | {a}):
                    return True
            return False

        if any(window.label(x) == p for x in maximal):
            b_plus = 1
        elif extends(above=True):
            b_plus = -1
        else:
            b_plus = 0
        if any(window.label(x) == p for x in minimal):
            b_minus = 1
        elif extends(above=False):
            b_minus = -1
        else:
            b_minus = 0
        return b_plus, b_minus

    # ------------------------------------------------------------------
    # Root heaps
    # ------------------------------------------------------------------

    def find_root_heaps(self, alpha: RootVector, window: HeapWindow) -> list[RootHeap]:
        """
        Every convex subheap of the window with character alpha.

        Each such L is (I + alpha) minus I for I = down-set(L) minus L, and I is a
        T-shift of a height-zero ideal, so height-zero cuts and their shifts suffice.
        """
        if not alpha.is_positive:
            raise NotAPositiveRoot(f"{alpha} is not positive")
        support = alpha.support
        found: dict[tuple[tuple[int, int], ...], RootHeap] = {}
        for base in self.height_zero:
            top = base.plus(alpha)
            if not self.heap.is_valid_cut(top):
                continue
            for j in range(-window.k - 1, window.k + 2):
                low = base.plus(self.delta * j)
                elements = tuple(
                    sorted(
                        (p, t) for p in support for t in range(low[p], low[p] + alpha[p])
                    )
                )
                if not all(window.contains(p, t) for p, t in elements):
                    continue
                found.setdefault(elements, RootHeap(alpha, low, elements))
        heaps = sorted(found.values(), key=lambda rh: rh.elements)
        log.debug(f"{len(heaps)} root heaps of character {alpha} in window k={window.k}")
        return heaps

    def split_root_heap(
        self, root_heap: RootHeap, beta: RootVector, gamma: RootVector
    ) -> list[tuple[RootVector, RootVector]]:
        """
        Decompositions of L into an ideal and a filter of characters (beta, gamma).

        Each entry is (ideal character, filter character).
        """
        if beta + gamma != root_heap.root:
            raise ValueError(f"{beta} + {gamma} != {root_heap.root}")
        splits = []
        for lower, upper in ((beta, gamma), (gamma, beta)):
            if self.heap.is_valid_cut(root_heap.below.plus(lower)):
                splits.append((lower, upper))
            if lower == upper:
                break
        return splits
