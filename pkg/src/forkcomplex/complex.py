"""Fork complexes and generalized Heegaard splittings.

A fork complex is stored as a set of forks and a set of labelled nodes.
Gluing is by node sharing: a node referenced by an A-fork slot and a B-fork
slot of the same kind is interior (glued); a node referenced once is a
boundary node.  Roots are implicit, one per fork.

Orientation conventions follow the exactness condition: along an A-fork the
level increases tine -> root -> grip, along a B-fork it increases
grip -> root -> tine.  Consequently unglued A-tines and unglued B-grips sit at
level 0 (the first boundary class) and unglued B-tines and unglued A-grips sit
at level 1 (the second boundary class).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Union

from .core import CompressionBody, body_euler, surface_euler, validate_body
from .errors import (BodyInvalid, Disconnected, DoubleGluing, DuplicateId, ForkError,
                     KindMismatch, UnknownNode)


class Side(str, Enum):
    A = "A"
    B = "B"

    @property
    def other(self) -> "Side":
        return Side.B if self is Side.A else Side.A


class NodeKind(str, Enum):
    TINE = "tine"
    GRIP = "grip"


@dataclass(frozen=True, order=True)
class Node:
    id: str
    kind: NodeKind
    label: int


@dataclass(frozen=True, order=True)
class Fork:
    id: str
    side: Side
    grip: str
    tines: tuple[str, ...] = ()

    @property
    def slots(self) -> tuple[tuple[str, NodeKind], ...]:
        return ((self.grip, NodeKind.GRIP),) + tuple((t, NodeKind.TINE) for t in self.tines)


class Vertex(NamedTuple):
    """A vertex of the underlying 1-complex: a fork root or a node."""
    role: str  # "root" or "node"
    id: str

    def __str__(self) -> str:
        return f"^{self.id}" if self.role == "root" else self.id


def root(fork_id: str) -> Vertex:
    return Vertex("root", fork_id)


def vertex(node_id: str) -> Vertex:
    return Vertex("node", node_id)


@dataclass(frozen=True)
class ForkComplex:
    """A well-formed fork complex.  Build with :func:`validate_complex`."""

    forks: tuple[Fork, ...]
    nodes: tuple[Node, ...]

    @cached_property
    def fork_map(self) -> dict[str, Fork]:
        return {f.id: f for f in self.forks}

    @cached_property
    def node_map(self) -> dict[str, Node]:
        return {n.id: n for n in self.nodes}

    @cached_property
    def slot_map(self) -> dict[str, dict[Side, str]]:
        """node id -> {side: id of the fork using the node on that side}"""
        out: dict[str, dict[Side, str]] = {n.id: {} for n in self.nodes}
        for f in self.forks:
            for nid, _ in f.slots:
                out[nid][f.side] = f.id
        return out

    def fork(self, fork_id: str) -> Fork:
        try:
            return self.fork_map[fork_id]
        except KeyError:
            raise UnknownNode(f"no fork {fork_id!r}", fork=fork_id) from None

    def node(self, node_id: str) -> Node:
        try:
            return self.node_map[node_id]
        except KeyError:
            raise UnknownNode(f"no node {node_id!r}", node=node_id) from None

    def is_interior(self, node_id: str) -> bool:
        return len(self.slot_map[node_id]) == 2

    def forks_at(self, node_id: str) -> dict[Side, str]:
        self.node(node_id)
        return dict(self.slot_map[node_id])

    def label(self, node_id: str) -> int:
        return self.node(node_id).label

    @property
    def grips(self) -> tuple[Node, ...]:
        return tuple(n for n in self.nodes if n.kind is NodeKind.GRIP)

    @property
    def tines(self) -> tuple[Node, ...]:
        return tuple(n for n in self.nodes if n.kind is NodeKind.TINE)

    def body(self, fork_id: str) -> CompressionBody:
        return induced_body(self, fork_id)

    def neighbours(self, fork_id: str) -> list[str]:
        """Forks glued to ``fork_id`` through some node, sorted by id."""
        out = set()
        for nid, _ in self.fork(fork_id).slots:
            out.update(self.slot_map[nid].values())
        out.discard(fork_id)
        return sorted(out)


Assertions = tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class GeneralizedSplitting:
    """An exact fork complex with genus labels and recorded user assertions.

    The map onto the complex is not represented; genus labels and the free-form
    assertions (claims such as ``"bounds a ball"`` that cannot be decided from
    genus data) are all that is kept.  Build with :func:`make_splitting`.
    """

    complex: ForkComplex
    assertions: Assertions = field(default=())

    def assertions_on(self, node_id: str) -> tuple[str, ...]:
        return tuple(text for nid, text in self.assertions if nid == node_id)

    def with_assertions(self, extra: Iterable[tuple[str, str]]) -> "GeneralizedSplitting":
        return replace(self, assertions=normalize_assertions(
            list(self.assertions) + list(extra), self.complex))

    # delegate the read-only complex accessors
    def __getattr__(self, name):
        if name in _DELEGATED:
            return getattr(self.complex, name)
        raise AttributeError(name)


_DELEGATED = frozenset({"forks", "nodes", "fork", "node", "label", "is_interior",
                        "forks_at", "grips", "tines", "body", "neighbours",
                        "fork_map", "node_map", "slot_map"})

ComplexLike = Union[ForkComplex, GeneralizedSplitting]


def as_complex(obj: ComplexLike) -> ForkComplex:
    return obj.complex if isinstance(obj, GeneralizedSplitting) else obj


def normalize_assertions(pairs: Iterable[tuple[str, str]], cx: ForkComplex) -> Assertions:
    """Deduplicate and sort assertions, dropping those on vanished nodes."""
    return tuple(sorted({(n, t) for n, t in pairs if n in cx.node_map}))


# -- construction -------------------------------------------------------------

def validate_complex(forks: Iterable[Fork], nodes: Iterable[Node]) -> ForkComplex:
    """Check the slot, kind, side and body rules and connectivity.

    Raises the :class:`ForkError` subclass of the first violated rule.
    """
    forks = list(forks)
    nodes = list(nodes)

    node_map: dict[str, Node] = {}
    for n in nodes:
        if n.id in node_map:
            raise DuplicateId(f"node id {n.id!r} declared twice", node=n.id)
        node_map[n.id] = n
    fork_map: dict[str, Fork] = {}
    for f in forks:
        if f.id in fork_map:
            raise DuplicateId(f"fork id {f.id!r} declared twice", fork=f.id)
        fork_map[f.id] = f
    if not forks:
        raise Disconnected("a fork complex needs at least one fork")

    used: dict[tuple[str, Side], str] = {}
    for f in forks:
        if not isinstance(f.side, Side):
            raise KindMismatch(f"fork {f.id!r} has unknown side {f.side!r}", fork=f.id)
        if len(set(f.tines)) != len(f.tines):
            dup = next(t for t in f.tines if f.tines.count(t) > 1)
            raise DoubleGluing(f"fork {f.id!r} lists tine {dup!r} twice",
                               fork=f.id, node=dup)
        for nid, kind in f.slots:
            if nid not in node_map:
                raise UnknownNode(f"fork {f.id!r} references undeclared node {nid!r}",
                                  fork=f.id, node=nid)
            if node_map[nid].kind is not kind:
                raise KindMismatch(
                    f"fork {f.id!r} uses {node_map[nid].kind.value} {nid!r} as a {kind.value}",
                    fork=f.id, node=nid)
            key = (nid, f.side)
            if key in used:
                raise DoubleGluing(
                    f"node {nid!r} is used by two {f.side.value}-forks "
                    f"({used[key]!r} and {f.id!r})", fork=f.id, node=nid)
            used[key] = f.id

    for n in nodes:
        if (n.id, Side.A) not in used and (n.id, Side.B) not in used:
            raise Disconnected(f"node {n.id!r} is not used by any fork", node=n.id)
        if not isinstance(n.label, int) or isinstance(n.label, bool) or n.label < 0:
            raise BodyInvalid(f"node {n.id!r} has invalid genus {n.label!r}", node=n.id)

    for f in forks:
        try:
            validate_body(node_map[f.grip].label, [node_map[t].label for t in f.tines])
        except ForkError as exc:
            raise BodyInvalid(f"fork {f.id!r}: {exc.message}", fork=f.id) from exc

    # connectivity of the 1-complex: forks are joined through shared nodes
    adjacency: dict[str, set[str]] = {f.id: set() for f in forks}
    by_node: dict[str, list[str]] = {}
    for (nid, _), fid in used.items():
        by_node.setdefault(nid, []).append(fid)
    for fids in by_node.values():
        for a in fids:
            adjacency[a].update(fids)
    start = min(fork_map)
    seen = {start}
    queue = deque([start])
    while queue:
        for nxt in adjacency[queue.popleft()]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    if len(seen) != len(forks):
        stray = min(set(fork_map) - seen)
        raise Disconnected(f"fork {stray!r} is not connected to fork {start!r}",
                           fork=stray)

    norm_forks = tuple(sorted(replace(f, tines=tuple(sorted(f.tines))) for f in forks))
    return ForkComplex(forks=norm_forks, nodes=tuple(sorted(nodes)))


def make_splitting(forks: Iterable[Fork], nodes: Iterable[Node],
                   assertions: Iterable[tuple[str, str]] = ()) -> GeneralizedSplitting:
    """Validate a complex, require exactness, and attach assertions."""
    from .exactness import require_exact

    cx = validate_complex(forks, nodes)
    require_exact(cx)
    assertions = list(assertions)
    for nid, _ in assertions:
        if nid not in cx.node_map:
            raise UnknownNode(f"assertion on undeclared node {nid!r}", node=nid)
    return GeneralizedSplitting(cx, normalize_assertions(assertions, cx))


def splitting_from_complex(cx: ForkComplex, assertions: Iterable[tuple[str, str]] = ()
                           ) -> GeneralizedSplitting:
    return make_splitting(cx.forks, cx.nodes, assertions)


# -- queries ------------------------------------------------------------------

def induced_body(cx: ComplexLike, fork_id: str) -> CompressionBody:
    cx = as_complex(cx)
    f = cx.fork(fork_id)
    return CompressionBody(cx.label(f.grip), tuple(cx.label(t) for t in f.tines))


def boundary_partition(cx: ComplexLike) -> tuple[frozenset[str], frozenset[str]]:
    """Return the (level-0, level-1) boundary node sets."""
    cx = as_complex(cx)
    first, second = set(), set()
    for n in cx.nodes:
        sides = cx.slot_map[n.id]
        if len(sides) != 1:
            continue
        (side,) = sides
        at_bottom = (side is Side.A) == (n.kind is NodeKind.TINE)
        (first if at_bottom else second).add(n.id)
    return frozenset(first), frozenset(second)


@dataclass(frozen=True)
class Digraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[Vertex, Vertex], ...]

    @cached_property
    def successors(self) -> dict[Vertex, list[Vertex]]:
        out: dict[Vertex, list[Vertex]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            out[u].append(v)
        return out

    @cached_property
    def predecessors(self) -> dict[Vertex, list[Vertex]]:
        out: dict[Vertex, list[Vertex]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            out[v].append(u)
        return out


def exactness_digraph(cx: ComplexLike) -> Digraph:
    """Edge ``u -> v`` encodes the strict constraint ``level(u) < level(v)``."""
    cx = as_complex(cx)
    vertices = [root(f.id) for f in cx.forks] + [vertex(n.id) for n in cx.nodes]
    edges = []
    for f in cx.forks:
        r = root(f.id)
        if f.side is Side.A:
            edges.extend((vertex(t), r) for t in f.tines)
            edges.append((r, vertex(f.grip)))
        else:
            edges.append((vertex(f.grip), r))
            edges.extend((r, vertex(t)) for t in f.tines)
    return Digraph(tuple(vertices), tuple(edges))


@dataclass(frozen=True)
class BoundaryReport:
    """The grip lies on the manifold boundary; only one body is incident."""
    node: str
    side: Side
    body: CompressionBody


def splitting_at_grip(gs: ComplexLike, grip: str):
    """Heegaard splitting induced at an interior grip.

    Returns ``(body_A, body_B)`` for an interior grip and a
    :class:`BoundaryReport` for a boundary grip.
    """
    cx = as_complex(gs)
    node = cx.node(grip)
    if node.kind is not NodeKind.GRIP:
        raise UnknownNode(f"{grip!r} is a tine, not a grip", node=grip)
    sides = cx.slot_map[grip]
    if len(sides) == 2:
        return induced_body(cx, sides[Side.A]), induced_body(cx, sides[Side.B])
    (side, fid), = sides.items()
    return BoundaryReport(grip, side, induced_body(cx, fid))


def complex_euler(gs: ComplexLike) -> int:
    """Euler characteristic of the manifold assembled from the fork bodies."""
    cx = as_complex(gs)
    bodies = sum(body_euler(induced_body(cx, f.id)) for f in cx.forks)
    glued = sum(surface_euler(n.label) for n in cx.nodes if cx.is_interior(n.id))
    return bodies - glued


def fresh_id(base: str, taken: Mapping[str, object] | set[str]) -> str:
    """``base`` if unused, otherwise ``base`` with primes appended."""
    name = base
    while name in taken:
        name += "'"
    return name
