"""
Catalog of full heaps over affine diagrams.

Heaps of natural, spin and exceptional type are grown from a level-zero start weight
with coordinates in {-1, 0, 1}: the walk keeps adding a vertex whose coordinate is -1
until the weight recurs, and the recurring stretch of the word is one period.
The remaining families are folds of those heaps.

Provides:
- Family, CatalogKey, DEFAULT_KEYS
- heap_from_weight: the weight walk
- spin_layer_variants: which layer rule a D spin heap satisfies
- build: the heap for a catalog key
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from heapkit.cartan.matrix import DynkinDiagram
from heapkit.cartan.named import affine_diagram
from heapkit.cartan.roots import RootVector, comarks, null_root
from heapkit.catalog.folding import fold_heap
from heapkit.core.errors import DimensionMismatch, RankOutOfBounds
from heapkit.core.logging_config import get_logger
from heapkit.heap.periodic import PeriodicHeap

log = get_logger(__name__)


class Family(str, Enum):
    A1_NAT = "A1_nat"
    A_NAT = "A_nat"
    C_FOLD = "C_fold"
    D_NAT = "D_nat"
    A2_TWIST = "A2_twist"
    D_SPIN = "D_spin"
    B_FOLD = "B_fold"
    D2_TWIST = "D2_twist"
    E6 = "E6"
    E7 = "E7"


FIXED_RANK = {Family.A1_NAT: 1, Family.E6: 6, Family.E7: 7}

MIN_RANK = {
    Family.A_NAT: 2,
    Family.C_FOLD: 2,
    Family.D_NAT: 4,
    Family.A2_TWIST: 2,
    Family.D_SPIN: 4,
    Family.B_FOLD: 3,
    Family.D2_TWIST: 2,
}

VARIANTS: dict[Family, tuple[str, ...]] = {
    Family.D_SPIN: ("plain", "twisted"),
    Family.E6: ("heap", "dual"),
}

# affine_diagram kind per family
_DIAGRAM_KIND = {
    Family.A1_NAT: "A",
    Family.A_NAT: "A",
    Family.C_FOLD: "C",
    Family.D_NAT: "D",
    Family.A2_TWIST: "A2",
    Family.D_SPIN: "D",
    Family.B_FOLD: "B",
    Family.D2_TWIST: "D2",
    Family.E6: "E",
    Family.E7: "E",
}


@dataclass(frozen=True)
class CatalogKey:
    """A catalog family at a rank, with a variant where the family has two."""

    family: Family
    rank: int = 0
    variant: str | None = None

    def __post_init__(self) -> None:
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        if family in FIXED_RANK:
            fixed = FIXED_RANK[family]
            if self.rank not in (0, fixed):
                raise RankOutOfBounds(f"{family.value} has fixed rank {fixed}, got {self.rank}")
            object.__setattr__(self, "rank", fixed)
        elif self.rank < MIN_RANK[family]:
            raise RankOutOfBounds(
                f"{family.value} needs rank >= {MIN_RANK[family]}, got {self.rank}"
            )
        variants = VARIANTS.get(family, ())
        if self.variant is None:
            object.__setattr__(self, "variant", variants[0] if variants else None)
        elif self.variant not in variants:
            raise ValueError(f"{family.value} has no variant {self.variant!r}")

    @classmethod
    def parse(cls, text: str) -> CatalogKey:
        """Parse "family[:rank[:variant]]", e.g. "D_spin:6:twisted" or "E7"."""
        parts = text.split(":")
        rank = int(parts[1]) if len(parts) > 1 and parts[1] else 0
        variant = parts[2] if len(parts) > 2 else None
        return cls(Family(parts[0]), rank, variant)

    @property
    def diagram(self) -> DynkinDiagram:
        return affine_diagram(_DIAGRAM_KIND[self.family], self.rank)

    @property
    def slug(self) -> str:
        parts = [self.family.value]
        if self.family not in FIXED_RANK:
            parts.append(str(self.rank))
        if self.variant is not None:
            parts.append(self.variant)
        return "_".join(parts)

    def __str__(self) -> str:
        text = f"{self.family.value}({self.rank}"
        if self.variant is not None:
            text += f", {self.variant}"
        return text + ")"


DEFAULT_KEYS: tuple[CatalogKey, ...] = (
    CatalogKey(Family.A1_NAT),
    CatalogKey(Family.A_NAT, 2),
    CatalogKey(Family.A_NAT, 3),
    CatalogKey(Family.A_NAT, 5),
    CatalogKey(Family.C_FOLD, 2),
    CatalogKey(Family.C_FOLD, 3),
    CatalogKey(Family.D_NAT, 4),
    CatalogKey(Family.D_NAT, 5),
    CatalogKey(Family.A2_TWIST, 2),
    CatalogKey(Family.A2_TWIST, 3),
    CatalogKey(Family.D_SPIN, 4, "plain"),
    CatalogKey(Family.D_SPIN, 4, "twisted"),
    CatalogKey(Family.D_SPIN, 5, "plain"),
    CatalogKey(Family.D_SPIN, 6, "plain"),
    CatalogKey(Family.B_FOLD, 3),
    CatalogKey(Family.B_FOLD, 4),
    CatalogKey(Family.D2_TWIST, 2),
    CatalogKey(Family.D2_TWIST, 3),
    CatalogKey(Family.E6, variant="heap"),
    CatalogKey(Family.E6, variant="dual"),
    CatalogKey(Family.E7),
)


def expected_ideal_count(key: CatalogKey) -> int:
    """Number of phi-orbits of proper ideals (height-zero ideals) for a catalog heap."""
    l = key.rank
    counts: dict[Family, Callable[[int], int]] = {
        Family.A1_NAT: lambda _: 2,
        Family.A_NAT: lambda r: r + 1,
        Family.C_FOLD: lambda r: 2 * r,
        Family.D_NAT: lambda r: 2 * r,
        Family.A2_TWIST: lambda r: 2 * r,
        Family.D_SPIN: lambda r: 2 ** (r - 1),
        Family.B_FOLD: lambda r: 2**r,
        Family.D2_TWIST: lambda r: 2**r,
        Family.E6: lambda _: 27,
        Family.E7: lambda _: 56,
    }
    return counts[key.family](l)


# ============================================================================
# Weight walk
# ============================================================================


def heap_from_weight(diagram: DynkinDiagram, start: Sequence[int]) -> PeriodicHeap:
    """
    Periodic heap grown from a level-zero weight with coordinates in {-1, 0, 1}.

    Each step adds the smallest vertex p with coordinate -1 and updates
    m_q += a[q][p]. The word between the first recurrence of a weight is one period
    and must have character delta.
    """
    a = diagram.cartan
    if len(start) != a.n:
        raise DimensionMismatch(f"Start weight has {len(start)} coordinates, diagram {a.n}")
    marks = comarks(a)
    level = sum(c * m for c, m in zip(marks.coeffs, start, strict=True))
    if level:
        raise ValueError(f"Start weight {tuple(start)} has level {level}, not 0")
    delta = null_root(a)
    limit = 4 * (delta.height + a.n)

    weight = tuple(int(m) for m in start)
    seen: dict[tuple[int, ...], int] = {}
    word: list[int] = []
    while weight not in seen:
        if len(word) > limit:
            raise ValueError(f"Weight walk from {tuple(start)} does not recur within {limit} steps")
        if any(abs(m) > 1 for m in weight):
            raise ValueError(f"Weight {weight} leaves the range {{-1, 0, 1}}")
        seen[weight] = len(word)
        p = next((i for i, m in enumerate(weight) if m == -1), None)
        if p is None:
            raise ValueError(f"Weight {weight} has no coordinate -1")
        word.append(p)
        weight = tuple(m + a[q, p] for q, m in enumerate(weight))

    period = word[seen[weight] :]
    counts = [0] * a.n
    for p in period:
        counts[p] += 1
    if RootVector(tuple(counts)) != delta:
        raise ValueError(f"Walk period has character {tuple(counts)}, expected {delta}")
    log.debug(f"Weight walk on {diagram.name}: period {period}")
    return PeriodicHeap.from_word(diagram, period)


def _unit_weight(n: int, top: int) -> list[int]:
    start = [0] * n
    start[0] = -1
    start[top] = 1
    return start


# ============================================================================
# Spin layers
# ============================================================================


def _spin_others(l: int, k: int, low: int, high: int) -> list[int]:
    """Labels outside {2..l-2} on layer k for the end labels (low, high) = (l-1, l)."""
    if l % 2:
        return [(low, 0, high, 1)[k % 4]]
    if k % 2 == 0:
        return []
    j = (k - 1) // 2
    return sorted((0, low) if j % 2 else (1, high))


def _layers_match(
    layers: dict[int, list[int]], ranks: Sequence[int], l: int, low: int, high: int, shift: int
) -> bool:
    middle = set(range(2, l - 1))
    for r in ranks:
        k = r + shift
        labels = layers.get(r, [])
        xs = {p for p in labels if p in middle}
        if xs != {p for p in middle if p % 2 == k % 2}:
            return False
        if sum(1 for p in labels if p in middle) != len(xs):
            return False
        if sorted(p for p in labels if p not in middle) != _spin_others(l, k, low, high):
            return False
    return True


def spin_layer_variants(heap: PeriodicHeap) -> tuple[str, ...]:
    """
    Layer rules satisfied by a heap over D_l^(1), up to a shift of the layer origin.

    "plain": vertices 2..l-2 sit on layers of their own parity. For odd l layer k holds
    one more vertex, l-1, 0, l, 1 as k = 0, 1, 2, 3 mod 4; for even l layer 2j+1 holds
    {0, l-1} for odd j and {1, l} for even j. "twisted" swaps l-1 and l.
    """
    if heap.rank_step is None:
        return ()
    l = heap.n - 1
    window = heap.window(3)
    layers: dict[int, list[int]] = {}
    for p, t in window.coords:
        r = heap.rank_of(p, t)
        if r is not None:
            layers.setdefault(r, []).append(p)
    central = (heap.rank_of(*window.coords[i]) for i in window.copy_indices(0))
    ranks = sorted({r for r in central if r is not None})
    found = []
    for variant, (low, high) in (("plain", (l - 1, l)), ("twisted", (l, l - 1))):
        if any(_layers_match(layers, ranks, l, low, high, shift) for shift in range(4)):
            found.append(variant)
    return tuple(found)


# ============================================================================
# Builders
# ============================================================================


def half_turn(n: int = 4) -> tuple[int, ...]:
    """i -> i + n/2 mod n on the cycle A_{n-1}^(1)."""
    return tuple((i + n // 2) % n for i in range(n))


def c_fold_involution(l: int) -> tuple[int, ...]:
    """i -> -i mod 2l on A_{2l-1}^(1), fixing 0 and l."""
    return tuple((2 * l - i) % (2 * l) for i in range(2 * l))


def b_fold_involution(l: int) -> tuple[int, ...]:
    """Swap the two spin ends l and l+1 of D_{l+1}^(1)."""
    mu = list(range(l + 2))
    mu[l], mu[l + 1] = l + 1, l
    return tuple(mu)


def a2_fold_involution(l: int) -> tuple[int, ...]:
    """i -> 2l - i on D_{2l}^(1)."""
    return tuple(2 * l - i for i in range(2 * l + 1))


def d2_fold_involution(l: int) -> tuple[int, ...]:
    """Swap 0 <-> 1 and l+1 <-> l+2 on D_{l+2}^(1)."""
    mu = list(range(l + 3))
    mu[0], mu[1] = 1, 0
    mu[l + 1], mu[l + 2] = l + 2, l + 1
    return tuple(mu)


def _natural_a(l: int) -> PeriodicHeap:
    return heap_from_weight(affine_diagram("A", l), _unit_weight(l + 1, l))


def _natural_d(l: int) -> PeriodicHeap:
    return heap_from_weight(affine_diagram("D", l), _unit_weight(l + 1, 1))


def _spin_d(l: int, variant: str) -> PeriodicHeap:
    diagram = affine_diagram("D", l)
    for top in (l - 1, l):
        heap = heap_from_weight(diagram, _unit_weight(l + 1, top))
        if variant in spin_layer_variants(heap):
            return heap
    raise ValueError(f"No spin walk on {diagram.name} satisfies the {variant} layer rule")


@lru_cache(maxsize=None)
def build(key: CatalogKey) -> PeriodicHeap:
    """The catalog heap for `key`; folded families carry cover provenance."""
    l = key.rank
    family = key.family
    target = key.diagram
    if family is Family.A1_NAT:
        heap = fold_heap(_natural_a(3), half_turn(4), target)
    elif family is Family.A_NAT:
        heap = _natural_a(l)
    elif family is Family.C_FOLD:
        heap = fold_heap(_natural_a(2 * l - 1), c_fold_involution(l), target)
    elif family is Family.D_NAT:
        heap = _natural_d(l)
    elif family is Family.A2_TWIST:
        heap = fold_heap(_natural_d(2 * l), a2_fold_involution(l), target)
    elif family is Family.D_SPIN:
        heap = _spin_d(l, key.variant or "plain")
    elif family is Family.B_FOLD:
        heap = fold_heap(_spin_d(l + 1, "plain"), b_fold_involution(l), target)
    elif family is Family.D2_TWIST:
        heap = fold_heap(_spin_d(l + 2, "plain"), d2_fold_involution(l), target)
    elif family is Family.E6:
        heap = heap_from_weight(target, _unit_weight(7, 1))
        if key.variant == "dual":
            heap = heap.dual()
    else:
        heap = heap_from_weight(target, _unit_weight(8, 6))
    log.info(f"Built {key} over {heap.diagram.name}: motif of {heap.size} elements")
    return heap
