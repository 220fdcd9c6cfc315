"""
Diagram folding by an order-two automorphism.

Provides:
- FoldedDiagram: folded Dynkin diagram plus the cover, the involution and the orbit map
- fold_diagram: orbit quotient with double edges pointing at the folded (short) orbits
- compatible_orientation: cover orientation with sgn(p, q) = sgn(mu p, mu q)
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from heapkit.cartan.matrix import DynkinDiagram, GeneralizedCartanMatrix
from heapkit.cartan.roots import RootVector
from heapkit.core.errors import (
    AdjacentOrbitViolation,
    FoldPreconditionViolated,
    NotAnAutomorphism,
    OrderNotTwo,
)
from heapkit.core.logging_config import get_logger

log = get_logger(__name__)


@dataclass(frozen=True)
class FoldedDiagram:
    """A folded diagram and the data needed to push labels and characters through it."""

    diagram: DynkinDiagram
    cover: DynkinDiagram
    mu: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]

    @property
    def orbit_of(self) -> tuple[int, ...]:
        index = [0] * len(self.mu)
        for k, orbit in enumerate(self.orbits):
            for p in orbit:
                index[p] = k
        return tuple(index)

    def push(self, beta: RootVector) -> RootVector:
        """Push a cover character through the orbit map."""
        coeffs = [0] * len(self.orbits)
        orbit_of = self.orbit_of
        for p, c in enumerate(beta.coeffs):
            coeffs[orbit_of[p]] += c
        return RootVector(tuple(coeffs))


def check_involution(cover: DynkinDiagram, mu: Sequence[int]) -> tuple[int, ...]:
    """Validate mu as a nonidentity diagram automorphism of order two without adjacent orbits."""
    n = cover.n
    perm = tuple(int(x) for x in mu)
    if sorted(perm) != list(range(n)):
        raise NotAnAutomorphism(f"{perm} is not a permutation of 0..{n - 1}")
    if all(perm[i] == i for i in range(n)):
        raise OrderNotTwo("mu is the identity")
    if any(perm[perm[i]] != i for i in range(n)):
        raise OrderNotTwo(f"{perm} does not square to the identity")
    a = cover.cartan
    for i in range(n):
        for j in range(n):
            if a[perm[i], perm[j]] != a[i, j]:
                raise NotAnAutomorphism(
                    f"mu does not preserve a[{i}][{j}] = {a[i, j]} (image {a[perm[i], perm[j]]})"
                )
    for p in range(n):
        if perm[p] != p and a.adjacent(p, perm[p]):
            raise AdjacentOrbitViolation(f"Vertices {p} and mu({p}) = {perm[p]} are adjacent")
    return perm


def fold_diagram(cover: DynkinDiagram, mu: Sequence[int], name: str | None = None) -> FoldedDiagram:
    """
    Fold `cover` by mu.

    Orbits are numbered in order of their smallest vertex. The folded entry for orbits
    (P, Q) is sum_{p in P} a[p][q] for any fixed q in Q, which puts the arrow of a double
    edge toward P whenever some q is adjacent to both p and mu(p).
    """
    perm = check_involution(cover, mu)
    orbits = sorted({tuple(sorted({p, perm[p]})) for p in range(cover.n)})
    a = cover.cartan
    rows = []
    for orbit_p in orbits:
        row = []
        for orbit_q in orbits:
            q = orbit_q[0]
            row.append(sum(a[p, q] for p in orbit_p))
        rows.append(row)
    folded = GeneralizedCartanMatrix.from_rows(rows)
    label = name or f"{cover.name}/mu"
    log.debug(f"Folded {cover.name} into {len(orbits)} orbits as {label}")
    return FoldedDiagram(DynkinDiagram(label, folded), cover, perm, tuple(orbits))


def compatible_orientation(cover: DynkinDiagram, mu: Sequence[int]) -> DynkinDiagram:
    """
    Orient the cover so that sgn(p, q) = sgn(mu(p), mu(q)) for all p, q.

    Each mu-orbit of edges gets its smallest edge oriented from the smaller vertex and
    the arrow is transported along mu.
    """
    perm = check_involution(cover, mu)
    arrows: dict[tuple[int, int], tuple[int, int]] = {}
    for p, q in sorted(cover.cartan.edges):
        if (p, q) in arrows:
            continue
        arrows[(p, q)] = (p, q)
        mp, mq = perm[p], perm[q]
        image_key = (min(mp, mq), max(mp, mq))
        image_arrow = (mp, mq)
        existing = arrows.get(image_key)
        if existing is not None and existing != image_arrow:
            raise FoldPreconditionViolated(
                f"No compatible orientation: edge {image_key} needs both directions",
                witness=(p, q),
            )
        arrows[image_key] = image_arrow
    return cover.with_orientation(arrows.values())


def is_compatible(cover: DynkinDiagram, mu: Sequence[int]) -> bool:
    return all(
        cover.sgn(p, q) == cover.sgn(mu[p], mu[q]) for p in cover.vertices for q in cover.vertices
    )
