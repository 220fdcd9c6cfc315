"""
Named Cartan matrices in Kac labelling.

Affine families carry vertex 0 as the extending vertex. Double edges are given as
(short, long) pairs: a[short][long] = -2, a[long][short] = -1.
"""

from __future__ import annotations

import re

from heapkit.cartan.matrix import DynkinDiagram, GeneralizedCartanMatrix
from heapkit.core.errors import NoFullHeap, RankOutOfBounds


def _build(
    name: str,
    n: int,
    single: list[tuple[int, int]],
    double: list[tuple[int, int]] | None = None,
) -> DynkinDiagram:
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in single:
        rows[i][j] = rows[j][i] = -1
    for short, long in double or []:
        rows[short][long] = -2
        rows[long][short] = -1
    return DynkinDiagram(name, GeneralizedCartanMatrix.from_rows(rows))


def _chain(start: int, stop: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(start, stop)]


def _require(kind: str, rank: int, minimum: int) -> None:
    if rank < minimum:
        raise RankOutOfBounds(f"{kind} needs rank >= {minimum}, got {rank}")


# ============================================================================
# Finite types
# ============================================================================


def finite_diagram(kind: str, rank: int = 0) -> DynkinDiagram:
    """Finite Dynkin diagram with vertices 0..rank-1 in Bourbaki order."""
    kind = kind.upper()
    if kind == "A":
        _require("A", rank, 1)
        return _build(f"A{rank}", rank, _chain(0, rank - 1))
    if kind == "B":
        _require("B", rank, 2)
        return _build(f"B{rank}", rank, _chain(0, rank - 2), [(rank - 1, rank - 2)])
    if kind == "C":
        _require("C", rank, 2)
        return _build(f"C{rank}", rank, _chain(0, rank - 2), [(rank - 2, rank - 1)])
    if kind == "D":
        _require("D", rank, 4)
        return _build(f"D{rank}", rank, _chain(0, rank - 2) + [(rank - 3, rank - 1)])
    if kind == "E":
        if rank not in (6, 7, 8):
            raise RankOutOfBounds(f"E needs rank 6, 7 or 8, got {rank}")
        # 0 - 2 - 3 - 4 - ... with 1 attached to 3
        edges = [(0, 2), (1, 3)] + _chain(2, rank - 1)
        return _build(f"E{rank}", rank, edges)
    if kind == "F":
        return _build("F4", 4, [(0, 1), (2, 3)], [(2, 1)])
    raise ValueError(f"Unknown finite type {kind!r}")


# ============================================================================
# Affine types
# ============================================================================


def affine_diagram(kind: str, rank: int = 0) -> DynkinDiagram:
    """
    Affine Dynkin diagram in Kac labelling.

    kind: A, B, C, D, E (rank 6, 7, 8), F (rank 4) for untwisted types;
    A2 for A_{2l-1}^(2), D2 for D_{l+1}^(2), E2 for E_6^(2).
    """
    kind = kind.upper()
    l = rank
    if kind == "A":
        _require("A", l, 1)
        if l == 1:
            return DynkinDiagram(
                "A1^(1)", GeneralizedCartanMatrix.from_rows([[2, -2], [-2, 2]])
            )
        return _build(f"A{l}^(1)", l + 1, _chain(0, l) + [(0, l)])
    if kind == "B":
        _require("B", l, 3)
        return _build(f"B{l}^(1)", l + 1, [(0, 2)] + _chain(1, l - 1), [(l, l - 1)])
    if kind == "C":
        _require("C", l, 2)
        return _build(f"C{l}^(1)", l + 1, _chain(1, l - 1), [(1, 0), (l - 1, l)])
    if kind == "D":
        _require("D", l, 4)
        return _build(
            f"D{l}^(1)", l + 1, [(0, 2)] + _chain(1, l - 1) + [(l - 2, l)]
        )
    if kind == "E":
        if l == 6:
            return _build("E6^(1)", 7, _chain(1, 5) + [(3, 6), (0, 6)])
        if l == 7:
            return _build("E7^(1)", 8, _chain(0, 6) + [(3, 7)])
        if l == 8:
            return _build("E8^(1)", 9, _chain(0, 7) + [(5, 8)])
        raise RankOutOfBounds(f"affine E needs rank 6, 7 or 8, got {l}")
    if kind == "F":
        return _build("F4^(1)", 5, [(0, 1), (1, 2), (3, 4)], [(3, 2)])
    if kind == "A2":
        _require("A2", l, 2)
        if l == 2:
            return _build("A3^(2)", 3, [], [(0, 2), (1, 2)])
        return _build(f"A{2 * l - 1}^(2)", l + 1, [(0, 2)] + _chain(1, l - 1), [(l - 1, l)])
    if kind == "D2":
        _require("D2", l, 2)
        return _build(f"D{l + 1}^(2)", l + 1, _chain(1, l - 1), [(0, 1), (l, l - 1)])
    if kind == "E2":
        return _build("E6^(2)", 5, [(0, 1), (1, 2), (3, 4)], [(2, 3)])
    raise ValueError(f"Unknown affine type {kind!r}")


# ============================================================================
# Name parsing
# ============================================================================

_NAME = re.compile(
    r"^(?P<kind>[A-G])(?P<rank>\d+)"
    r"(?:\^?\((?P<twist>[12])\)|(?P<word>affine|twisted))?$"
)

# Affine diagrams over which no full heap exists.
NO_FULL_HEAP = frozenset({"F4^(1)", "E8^(1)", "E6^(2)"})


def parse_diagram(name: str) -> DynkinDiagram:
    """
    Parse names such as "E6^(1)", "E6affine", "C3^(1)", "A5^(2)", "D4^(2)" or "A3".

    Twisted names use the algebra's index: A_{2l-1}^(2) as "A5^(2)" (l = 3),
    D_{l+1}^(2) as "D4^(2)" (l = 3).
    """
    match = _NAME.match(name.strip())
    if match is None:
        raise ValueError(f"Cannot parse diagram name {name!r}")
    kind = match.group("kind")
    rank = int(match.group("rank"))
    twist = match.group("twist")
    word = match.group("word")
    if twist is None and word is None:
        return finite_diagram(kind, rank)
    if twist == "2" or word == "twisted":
        if kind == "A" and rank % 2 == 1:
            return affine_diagram("A2", (rank + 1) // 2)
        if kind == "D":
            return affine_diagram("D2", rank - 1)
        if kind == "E" and rank == 6:
            return affine_diagram("E2")
        raise ValueError(f"No twisted affine diagram named {name!r} in the doubly-laced range")
    return affine_diagram(kind, rank)


def require_full_heap_possible(diagram: DynkinDiagram) -> None:
    """Raise NoFullHeap for finite types and for F4^(1), E8^(1), E6^(2)."""
    from heapkit.cartan.matrix import CartanClass, classify

    if diagram.name in NO_FULL_HEAP:
        raise NoFullHeap(
            f"No full heap exists over {diagram.name}: full heaps do not exist over finite "
            "types or over F4^(1), E8^(1) and E6^(2)"
        )
    kind = classify(diagram).kind
    if kind is not CartanClass.AFFINE:
        raise NoFullHeap(
            f"No full heap exists over {diagram.name}: the diagram is of {kind.value} type, "
            "and full heaps exist only over affine diagrams"
        )
