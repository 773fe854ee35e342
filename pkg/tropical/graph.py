"""
Breadth-first exploration of the crystal graph of the UD crystal.

Edges are xi --i--> f~_i xi. Each level of the frontier is sorted
lexicographically and expanded on the worker pool; the owner merges the
results in frontier order, so the output does not depend on the pool size.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from g2module.weights import INDICES
from tropical.ud_crystal import UDPoint, ud_crystal
from utils.errors import StructuralError
from verification.sampling import run_samples

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Edge:
    source: UDPoint
    target: UDPoint
    color: int


@dataclass
class CrystalGraph:
    seed: UDPoint
    radius: int
    nodes: list[UDPoint] = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)

    def index(self) -> dict[UDPoint, int]:
        return {node: k for k, node in enumerate(self.nodes)}

    def inconsistent_edges(self) -> list[Edge]:
        """Edges along which eps_i does not grow by exactly one."""
        ud = ud_crystal()
        return [e for e in self.edges if ud.eps(e.color, e.target) != ud.eps(e.color, e.source) + 1]

    def to_dict(self) -> dict[str, Any]:
        ud = ud_crystal()
        ids = self.index()
        return {
            "seed": list(self.seed),
            "radius": self.radius,
            "nodes": [
                {
                    "id": ids[node],
                    "point": list(node),
                    "wt": list(ud.weight_vector(node)),
                    "eps": [ud.eps(i, node) for i in INDICES],
                    "phi": [ud.phi(i, node) for i in INDICES],
                }
                for node in self.nodes
            ],
            "edges": [
                {"source": ids[e.source], "target": ids[e.target], "color": e.color}
                for e in self.edges
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_dot(self) -> str:
        ids = self.index()
        lines = ["digraph crystal {", "  node [shape=box];"]
        for node in self.nodes:
            label = "(" + ",".join(str(v) for v in node) + ")"
            lines.append(f'  n{ids[node]} [label="{label}"];')
        for e in self.edges:
            lines.append(f'  n{ids[e.source]} -> n{ids[e.target]} [label="{e.color}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _neighbours(node: UDPoint) -> list[Edge]:
    ud = ud_crystal()
    edges = []
    for i in INDICES:
        edges.append(Edge(node, ud.f(i, node), i))
        edges.append(Edge(ud.e(i, node), node, i))
    return edges


def explore_crystal_graph(seed: Sequence[int], radius: int, workers: int = 1) -> CrystalGraph:
    if radius < 0:
        raise StructuralError("Radius must be non-negative", details={"radius": radius})
    if len(seed) != 6:
        raise StructuralError("Seed point must have six coordinates", details={"got": len(seed)})
    start = tuple(int(v) for v in seed)
    graph = CrystalGraph(seed=start, radius=radius, nodes=[start])
    seen = {start}
    edges: set[Edge] = set()
    frontier = [start]
    for depth in range(radius):
        expanded = run_samples(_neighbours, frontier, workers)
        discovered: set[UDPoint] = set()
        for found in expanded:
            for edge in found:
                edges.add(edge)
                for node in (edge.source, edge.target):
                    if node not in seen:
                        discovered.add(node)
        frontier = sorted(discovered)
        seen.update(frontier)
        graph.nodes.extend(frontier)
        logger.debug(f"Depth {depth + 1}: {len(frontier)} new nodes, {len(edges)} edges")
    graph.edges = sorted(edges)
    return graph
