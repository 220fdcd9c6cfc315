"""
Heap serialization and rendering.

JSON: {"diagram", "motif": [{"id", "label", "rank"}], "covers", "boundary_covers", "period"},
plus "provenance" (cover heap, mu, orientation, cover labels) for folded heaps.
Text: one line per window element, the central period marked as the motif box.
DOT: see HeapWindow.to_dot.
"""

from __future__ import annotations

from dataclasses import replace
from pathlib import Path
from typing import Any

import orjson

from heapkit.cartan.folding import fold_diagram
from heapkit.cartan.matrix import DynkinDiagram
from heapkit.cartan.named import parse_diagram
from heapkit.heap.finite import HeapElement
from heapkit.heap.periodic import FoldProvenance, PeriodicHeap
from heapkit.heap.window import materialize

MOTIF_MARK = "┆"


def heap_to_json(heap: PeriodicHeap) -> bytes:
    return orjson.dumps(heap.to_dict(), option=orjson.OPT_INDENT_2)


def _provenance_from_dict(
    diagram: DynkinDiagram, data: dict[str, Any]
) -> tuple[FoldProvenance, dict[int, int]]:
    cover = heap_from_dict(data["cover"])
    folded = replace(fold_diagram(cover.diagram, data["mu"]), diagram=diagram)
    labels = [int(x) for x in data["cover_labels"]]
    provenance = FoldProvenance(
        cover,
        folded,
        DynkinDiagram.from_dict(data["orientation"]),
        tuple(labels),
        bool(data.get("twisted", False)),
    )
    return provenance, dict(enumerate(labels))


def heap_from_dict(data: dict[str, Any]) -> PeriodicHeap:
    diagram = parse_diagram(data["diagram"])
    elements = [
        HeapElement(int(e["id"]), int(e["label"]), e.get("rank")) for e in data["motif"]
    ]
    provenance, labels = None, None
    if "provenance" in data:
        provenance, labels = _provenance_from_dict(diagram, data["provenance"])
    heap = PeriodicHeap(
        diagram,
        elements,
        [tuple(c) for c in data["covers"]],
        [tuple(c) for c in data["boundary_covers"]],
        provenance=provenance,
        cover_labels=labels,
    )
    if list(heap.period.coeffs) != list(data["period"]):
        raise ValueError(
            f"Stored period {data['period']} disagrees with motif character {heap.period.coeffs}"
        )
    return heap


def heap_from_json(raw: bytes | str) -> PeriodicHeap:
    return heap_from_dict(orjson.loads(raw))


def save_heap(heap: PeriodicHeap, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(heap_to_json(heap))


def load_heap(path: Path) -> PeriodicHeap:
    return heap_from_json(path.read_bytes())


def render_text(heap: PeriodicHeap, k: int = 1) -> str:
    """Window listing grouped by period copy; the copy-0 motif carries the box marker."""
    window = materialize(heap, k)
    lines = []
    for idx, (motif_id, copy) in enumerate(window.members):
        p, t = window.coords[idx]
        mark = MOTIF_MARK if copy == 0 else " "
        rank = heap.rank_of(p, t)
        rank_text = "-" if rank is None else str(rank)
        lines.append(f"{mark} copy {copy:+d} | E({p},{t}) | label {p} | rank {rank_text}")
    return "\n".join(lines) + "\n"


def render_dot(heap: PeriodicHeap, k: int = 1) -> str:
    return materialize(heap, k).to_dot()
