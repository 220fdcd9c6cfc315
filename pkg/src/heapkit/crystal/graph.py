"""
Crystal graphs of the ideal module.

Kashiwara operators act on basis labels: f_i removes the top i-element (Y_i) and e_i
adds the next one (X_i). A crystal graph over a height window has the ideals of those
heights as nodes and an edge (I -> J, i) whenever f_i(I) = J. In quotient mode nodes are
the height-zero ideals and an edge leaving height zero is folded back by T and marked
as a wrap edge.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

import networkx as nx
import orjson

from heapkit.core.logging_config import get_logger
from heapkit.core.reports import VerificationReport
from heapkit.crystal.weights import weight
from heapkit.heap.periodic import PeriodicHeap
from heapkit.rep.operators import RepresentationSpace
from heapkit.rep.vectors import IdealCut

log = get_logger(__name__)


class CrystalKind(str, Enum):
    E = "e"
    F = "f"


@dataclass(frozen=True)
class CrystalEdge:
    source: IdealCut
    target: IdealCut
    color: int
    wrap: bool = False


@dataclass
class CrystalGraph:
    space: RepresentationSpace
    nodes: list[IdealCut]
    edges: list[CrystalEdge] = field(default_factory=list)
    heights: tuple[int, ...] = (0,)
    quotient: bool = False

    def f_edge(self, node: IdealCut, color: int) -> CrystalEdge | None:
        for edge in self.edges:
            if edge.source == node and edge.color == color:
                return edge
        return None

    def e_edge(self, node: IdealCut, color: int) -> CrystalEdge | None:
        for edge in self.edges:
            if edge.target == node and edge.color == color:
                return edge
        return None

    def without_edge(self, index: int) -> CrystalGraph:
        """Copy with one edge removed."""
        edges = self.edges[:index] + self.edges[index + 1 :]
        return CrystalGraph(self.space, list(self.nodes), edges, self.heights, self.quotient)

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.nodes)
        for edge in self.edges:
            graph.add_edge(edge.source, edge.target, color=edge.color, wrap=edge.wrap)
        return graph

    @property
    def components(self) -> int:
        if not self.nodes:
            return 0
        return nx.number_weakly_connected_components(self.to_networkx())

    def extremal_nodes(self, ignore: Iterable[int] = (0,)) -> tuple[list[IdealCut], list[IdealCut]]:
        """Nodes with no e_i, and nodes with no f_i, for every color outside `ignore`."""
        skip = set(ignore)
        colors = [i for i in range(self.space.n) if i not in skip]
        tops = [
            node
            for node in self.nodes
            if all(kashiwara(self.space, CrystalKind.E, i, node) is None for i in colors)
        ]
        bottoms = [
            node
            for node in self.nodes
            if all(kashiwara(self.space, CrystalKind.F, i, node) is None for i in colors)
        ]
        return tops, bottoms

    # ------------------------------------------------------------------
    # Export
    # ------------------------------------------------------------------

    def to_dict(self) -> dict[str, object]:
        edges = []
        for edge in self.edges:
            row: list[object] = [
                edge.source.to_json_value(),
                edge.target.to_json_value(),
                edge.color,
            ]
            if self.quotient:
                row.append(edge.wrap)
            edges.append(row)
        return {"nodes": [n.to_json_value() for n in self.nodes], "edges": edges}

    def to_json(self) -> bytes:
        return orjson.dumps(self.to_dict(), option=orjson.OPT_INDENT_2)

    def to_dot(self) -> str:
        index = {node: i for i, node in enumerate(self.nodes)}
        lines = [f'digraph "{self.space.heap.diagram.name} crystal" {{', "  node [shape=box];"]
        for node, i in index.items():
            lines.append(f'  n{i} [label="{node}"];')
        for edge in self.edges:
            style = ", style=dashed" if edge.wrap else ""
            lines.append(
                f'  n{index[edge.source]} -> n{index[edge.target]} '
                f'[label="{edge.color}", colorscheme=set19, color={edge.color % 9 + 1}{style}];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def _space(heap: PeriodicHeap | RepresentationSpace) -> RepresentationSpace:
    return heap if isinstance(heap, RepresentationSpace) else RepresentationSpace(heap)


def kashiwara(
    heap: PeriodicHeap | RepresentationSpace, kind: CrystalKind | str, i: int, cut: IdealCut
) -> IdealCut | None:
    """e_i (add an i-element) or f_i (remove one) on a basis label; None when undefined."""
    space = _space(heap)
    if CrystalKind(kind) is CrystalKind.F:
        return cut.moved(i, -1) if space.removable(cut, i) else None
    return cut.moved(i, 1) if space.addable(cut, i) else None


def _node_edges(
    space: RepresentationSpace, node: IdealCut, members: set[IdealCut], quotient: bool
) -> list[CrystalEdge]:
    edges = []
    for i in range(space.n):
        target = kashiwara(space, CrystalKind.F, i, node)
        if target is None:
            continue
        if quotient:
            h = space.height(target)
            if h:
                target = IdealCut.of(space.heap.shift_cut(target, -h))
            edges.append(CrystalEdge(node, target, i, wrap=bool(h)))
        elif target in members:
            edges.append(CrystalEdge(node, target, i))
    return edges


def build_crystal_graph(
    heap: PeriodicHeap | RepresentationSpace,
    heights: Sequence[int] = (0,),
    quotient: bool = False,
    workers: int = 1,
) -> CrystalGraph:
    """Crystal graph on the ideals with height in `heights` (height zero in quotient mode)."""
    space = _space(heap)
    levels = (0,) if quotient else tuple(sorted(set(heights)))
    nodes = [
        IdealCut.of(space.heap.shift_cut(cut, h)) for h in levels for cut in space.height_zero
    ]
    members = set(nodes)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            chunks = list(
                executor.map(lambda node: _node_edges(space, node, members, quotient), nodes)
            )
    else:
        chunks = [_node_edges(space, node, members, quotient) for node in nodes]
    edges = [edge for chunk in chunks for edge in chunk]
    log.debug(
        f"Crystal graph on {space.heap.diagram.name}: {len(nodes)} nodes, {len(edges)} edges"
    )
    return CrystalGraph(space, nodes, edges, levels, quotient)


def verify_crystal_axioms(graph: CrystalGraph) -> VerificationReport:
    """
    Closure of e_i and f_i on the basis, edges as mutual inverses, exclusivity,
    i-strings of length at most two, and wt(f_i b) = wt(b) - alpha_i.
    """
    space = graph.space
    heap = space.heap
    a = heap.cartan
    report = VerificationReport(
        "crystal",
        metadata={
            "diagram": heap.diagram.name,
            "nodes": len(graph.nodes),
            "edges": len(graph.edges),
            "quotient": graph.quotient,
        },
    )
    members = set(graph.nodes)

    for node in graph.nodes:
        for i in range(space.n):
            up = kashiwara(space, CrystalKind.E, i, node)
            down = kashiwara(space, CrystalKind.F, i, node)
            for kind, image in ((CrystalKind.E, up), (CrystalKind.F, down)):
                if image is not None:
                    report.record(
                        f"crystal.{kind.value}_closed",
                        heap.is_valid_cut(image),
                        witness={"node": node, "color": i},
                    )
            report.record(
                "crystal.exclusive",
                up is None or down is None,
                witness={"node": node, "color": i},
            )
            if down is not None:
                report.record(
                    "crystal.string_length",
                    kashiwara(space, CrystalKind.F, i, down) is None,
                    witness={"node": node, "color": i},
                )
            # Every in-window f_i must appear as an edge.
            if down is not None and (graph.quotient or down in members):
                report.record(
                    "crystal.edge_complete",
                    graph.f_edge(node, i) is not None,
                    witness={"node": node, "color": i},
                )

    for edge in graph.edges:
        target = edge.target
        if edge.wrap:
            target = IdealCut.of(heap.shift_cut(target, -1))
        back = kashiwara(space, CrystalKind.E, edge.color, target)
        report.record(
            "crystal.edge_inverse",
            back == edge.source,
            witness={"source": edge.source, "target": edge.target, "color": edge.color},
        )
        expected = weight(space, edge.source).add_simple(a, edge.color, -1)
        actual = weight(space, target)
        report.record(
            "crystal.weight",
            actual == expected,
            witness={"edge": [edge.source, edge.target, edge.color], "weight": actual},
        )

    log.info(report.summary())
    return report
