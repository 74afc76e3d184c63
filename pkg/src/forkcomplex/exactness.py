"""Exactness: strictly monotone level functions on a fork complex.

The level problem is a system of strict difference constraints
``level(u) < level(v)`` (one per digraph edge) with the first boundary class
pinned to 0 and the second pinned to 1.  It is feasible iff the digraph is
acyclic and no directed path joins two pinned vertices in the wrong order.
On success a deterministic rational assignment is returned: interior vertex
``v`` gets ``(1 + layer(v)) / (L + 2)`` where ``layer`` is the longest-path
layer among interior vertices and ``L`` the largest layer.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from graphlib import CycleError, TopologicalSorter
from typing import Mapping

from .complex import ComplexLike, Digraph, Vertex, as_complex, boundary_partition, \
    exactness_digraph, vertex
from .errors import AuditFailed, NotExact


@dataclass(frozen=True)
class LevelAssignment:
    levels: Mapping[Vertex, Fraction]

    def __getitem__(self, v: Vertex) -> Fraction:
        return self.levels[v]

    def __len__(self) -> int:
        return len(self.levels)


@dataclass(frozen=True)
class Infeasible:
    """Why no level function exists.

    ``kind`` is ``"cycle"`` (``path`` starts and ends at the same vertex) or
    ``"pinned-path"`` (``path`` runs between two pinned vertices whose pinned
    values are in the wrong order).
    """
    kind: str
    path: tuple[Vertex, ...]

    def describe(self) -> str:
        arrow = " -> ".join(map(str, self.path))
        return f"{self.kind}: {arrow}"


def _find_cycle(graph: Digraph) -> tuple[Vertex, ...] | None:
    sorter = TopologicalSorter({v: graph.predecessors[v] for v in graph.vertices})
    try:
        sorter.prepare()
    except CycleError as exc:
        # each entry precedes the next, so the list follows edge direction
        return tuple(exc.args[1])
    return None


def _bad_pinned_path(graph: Digraph, pinned: Mapping[Vertex, int]
                     ) -> tuple[Vertex, ...] | None:
    for src in sorted(pinned, key=str):
        parent: dict[Vertex, Vertex | None] = {src: None}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in graph.successors[u]:
                if w in parent:
                    continue
                parent[w] = u
                if w in pinned and pinned[w] <= pinned[src]:
                    path = [w]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return tuple(reversed(path))
                queue.append(w)
    return None


def _layers(graph: Digraph, interior: set[Vertex]) -> dict[Vertex, int]:
    order = TopologicalSorter({v: [u for u in graph.predecessors[v] if u in interior]
                               for v in interior}).static_order()
    layer: dict[Vertex, int] = {}
    for v in order:
        preds = [layer[u] for u in graph.predecessors[v] if u in interior]
        layer[v] = 1 + max(preds) if preds else 0
    return layer


def check_exact(cx: ComplexLike) -> LevelAssignment | Infeasible:
    """Solve the level problem; infeasibility is returned, not raised."""
    cx = as_complex(cx)
    graph = exactness_digraph(cx)
    first, second = boundary_partition(cx)
    pinned = {vertex(n): 0 for n in first}
    pinned.update({vertex(n): 1 for n in second})

    cycle = _find_cycle(graph)
    if cycle is not None:
        return Infeasible("cycle", cycle)
    path = _bad_pinned_path(graph, pinned)
    if path is not None:
        return Infeasible("pinned-path", path)

    interior = set(graph.vertices) - set(pinned)
    layer = _layers(graph, interior)
    top = max(layer.values(), default=0)
    levels = {v: Fraction(1 + layer[v], top + 2) for v in interior}
    levels.update({v: Fraction(val) for v, val in pinned.items()})
    result = LevelAssignment(levels)
    problems = audit_levels(graph, result, pinned)
    if problems:
        raise AuditFailed("level assignment failed its audit: " + "; ".join(problems))
    return result


def audit_levels(graph: Digraph, assignment: LevelAssignment,
                 pinned: Mapping[Vertex, int]) -> list[str]:
    """Independent re-check of an assignment; returns the violations found."""
    problems = []
    for v in graph.vertices:
        if v not in assignment.levels:
            problems.append(f"{v} has no level")
    for v, val in pinned.items():
        if assignment.levels.get(v) != val:
            problems.append(f"{v} should be pinned at {val}")
    for u, v in graph.edges:
        lu, lv = assignment.levels.get(u), assignment.levels.get(v)
        if lu is not None and lv is not None and not lu < lv:
            problems.append(f"edge {u} -> {v} is not increasing ({lu} >= {lv})")
    return problems


def is_exact(cx: ComplexLike) -> bool:
    return isinstance(check_exact(cx), LevelAssignment)


def require_exact(cx: ComplexLike) -> LevelAssignment:
    result = check_exact(cx)
    if isinstance(result, Infeasible):
        first = result.path[0]
        raise NotExact(f"complex is not exact ({result.describe()})",
                       node=first.id if first.role == "node" else None,
                       fork=first.id if first.role == "root" else None,
                       witness=result)
    return result
