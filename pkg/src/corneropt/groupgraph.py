"""Group graph of a basis and shortest-path search over its implicit arcs.

Vertices are the residue vectors modulo the invariant factors of the basis
matrix; class ``j`` contributes one outgoing arc per vertex, shifting by a
fixed generator.  Arcs are never materialized: neighbors are computed from
the generators on demand, so memory stays linear in the vertex count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from heapq import heappop, heappush
from typing import Optional, Sequence

from .errors import CapacityError
from .linalg import canonical_mod, smith_normal_form
from .lp import Basis, IpInstance, reduced_costs

_ZERO = Fraction(0)

DOT_VERTEX_LIMIT = 64


class SearchStatus(str, Enum):
    OPTIMAL = "optimal"
    UNREACHABLE = "unreachable"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class PathCounts:
    """Arcs traversed per class; the order of traversal is irrelevant."""

    counts: tuple[int, ...]


@dataclass(frozen=True)
class SppResult:
    status: SearchStatus
    path: Optional[PathCounts]
    cost: Optional[Fraction]


@dataclass
class GroupGraph:
    w: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    weights: tuple[Fraction, ...]
    destination: tuple[int, ...]
    vertex_count: int
    # mixed-radix strides over the nontrivial w entries; 0 marks collapsed dims
    strides: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        strides = [0] * len(self.w)
        acc = 1
        for j in range(len(self.w) - 1, -1, -1):
            if self.w[j] > 1:
                strides[j] = acc
                acc *= self.w[j]
        self.strides = tuple(strides)

    @property
    def source(self) -> tuple[int, ...]:
        return (0,) * len(self.w)

    def encode(self, label: Sequence[int]) -> int:
        return sum(label[j] * self.strides[j] for j in range(len(self.w)) if self.strides[j])

    def decode(self, code: int) -> tuple[int, ...]:
        return tuple(
            (code // self.strides[j]) % self.w[j] if self.strides[j] else 0
            for j in range(len(self.w))
        )

    def neighbor(self, code: int, class_index: int) -> int:
        label = self.decode(code)
        gen = self.generators[class_index]
        return self.encode(tuple((a + g) % m for a, g, m in zip(label, gen, self.w)))

    def predecessor(self, code: int, class_index: int) -> int:
        label = self.decode(code)
        gen = self.generators[class_index]
        return self.encode(tuple((a - g) % m for a, g, m in zip(label, gen, self.w)))


def build_group_graph(
    instance: IpInstance, basis: Basis, objective: Optional[Sequence[Fraction]] = None
) -> GroupGraph:
    """Build the group graph for a basis, weighting arcs by reduced costs."""
    obj = tuple(Fraction(v) for v in (objective if objective is not None else instance.c))
    sub = instance.a.submatrix_cols([i - 1 for i in basis.indices])
    snf = smith_normal_form(sub)
    generators = tuple(
        canonical_mod(snf.s.mul_vec(instance.a.col(j - 1)), snf.w)
        for j in basis.complement
    )
    weights = reduced_costs(instance, basis, obj)
    destination = canonical_mod(snf.s.mul_vec(instance.b), snf.w)
    vertex_count = 1
    for x in snf.w:
        vertex_count *= x
    assert vertex_count == abs(basis.det)
    return GroupGraph(snf.w, generators, weights, destination, vertex_count)


def _walk_back(graph: GroupGraph, pred_class: list[int], dst: int) -> tuple[int, ...]:
    counts = [0] * len(graph.generators)
    v = dst
    steps = 0
    while pred_class[v] != -1:
        j = pred_class[v]
        counts[j] += 1
        v = graph.predecessor(v, j)
        steps += 1
        assert steps <= graph.vertex_count, "predecessor walk exceeded vertex count"
    assert v == 0
    return tuple(counts)


def _dijkstra(graph: GroupGraph, dst: int) -> SppResult:
    nclass = len(graph.generators)
    dist: list[Optional[Fraction]] = [None] * graph.vertex_count
    pred_class = [-1] * graph.vertex_count
    dist[0] = _ZERO
    heap: list[tuple[Fraction, int]] = [(_ZERO, 0)]
    while heap:
        d, u = heappop(heap)
        if dist[u] != d:
            continue
        if u == dst:
            break
        for j in range(nclass):
            v = graph.neighbor(u, j)
            nd = d + graph.weights[j]
            if dist[v] is None or nd < dist[v]:
                dist[v] = nd
                pred_class[v] = j
                heappush(heap, (nd, v))
    if dist[dst] is None:
        return SppResult(SearchStatus.UNREACHABLE, None, None)
    return SppResult(SearchStatus.OPTIMAL, PathCounts(_walk_back(graph, pred_class, dst)), dist[dst])


def _bellman_ford(graph: GroupGraph, dst: int) -> SppResult:
    nclass = len(graph.generators)
    nv = graph.vertex_count
    dist: list[Optional[Fraction]] = [None] * nv
    pred_class = [-1] * nv
    dist[0] = _ZERO
    for _ in range(nv - 1):
        changed = False
        for u in range(nv):
            du = dist[u]
            if du is None:
                continue
            for j in range(nclass):
                v = graph.neighbor(u, j)
                nd = du + graph.weights[j]
                if dist[v] is None or nd < dist[v]:
                    dist[v] = nd
                    pred_class[v] = j
                    changed = True
        if not changed:
            break

    # One extra round: any improvement certifies a negative cycle reachable
    # from the source; the problem is unbounded iff its forward closure can
    # still reach the destination.
    improved: set[int] = set()
    for u in range(nv):
        du = dist[u]
        if du is None:
            continue
        for j in range(nclass):
            v = graph.neighbor(u, j)
            nd = du + graph.weights[j]
            if dist[v] is None or nd < dist[v]:
                improved.add(v)
    if improved:
        seen = set(improved)
        frontier = list(improved)
        while frontier:
            u = frontier.pop()
            for j in range(nclass):
                v = graph.neighbor(u, j)
                if v not in seen:
                    seen.add(v)
                    frontier.append(v)
        if dst in seen:
            return SppResult(SearchStatus.UNBOUNDED, None, None)
    if dist[dst] is None:
        return SppResult(SearchStatus.UNREACHABLE, None, None)
    return SppResult(SearchStatus.OPTIMAL, PathCounts(_walk_back(graph, pred_class, dst)), dist[dst])


def shortest_path(graph: GroupGraph) -> SppResult:
    """Minimum-weight source-to-destination path as per-class arc counts.

    Label-setting search when all weights are nonnegative, label-correcting
    with negative-cycle detection otherwise.
    """
    dst = graph.encode(graph.destination)
    if all(wt >= 0 for wt in graph.weights):
        return _dijkstra(graph, dst)
    return _bellman_ford(graph, dst)


def to_dot(graph: GroupGraph, max_vertices: int = DOT_VERTEX_LIMIT) -> str:
    """Render a small group graph in DOT format, one style per arc class."""
    if graph.vertex_count > max_vertices:
        raise CapacityError(
            f"graph has {graph.vertex_count} vertices; DOT export is limited to {max_vertices}"
        )
    styles = ["solid", "dashed", "dotted", "bold"]

    def name(code: int) -> str:
        return "(" + ",".join(str(v) for v in graph.decode(code)) + ")"

    dst = graph.encode(graph.destination)
    lines = ["digraph group_graph {", "  rankdir=LR;"]
    for code in range(graph.vertex_count):
        attrs = []
        if code == 0:
            attrs.append("shape=doublecircle")
        if code == dst:
            attrs.append("penwidth=2")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f'  "{name(code)}"{suffix};')
    for code in range(graph.vertex_count):
        for j in range(len(graph.generators)):
            v = graph.neighbor(code, j)
            style = styles[j % len(styles)]
            lines.append(
                f'  "{name(code)}" -> "{name(v)}" '
                f'[label="{graph.weights[j]}", style={style}];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
