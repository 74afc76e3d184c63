"""Canonical form of a labelled fork complex, for hashing and deduplication.

The complex is viewed as a bipartite graph (forks versus nodes, edges typed
grip/tine).  Vertex colours start from isomorphism-invariant data (side, node
kind, genus label, exactness level) and are refined by neighbour colour
multisets.  Exactness level comes first, so canonical order lists forks
bottom to top.  When refinement stalls, the first non-singleton cell is split by
individualizing each of its vertices in turn; each discrete leaf yields an
encoding and the lexicographically smallest one is the canonical form.  Nodes
with identical neighbourhoods are interchangeable, so only one vertex per
such twin class is individualized.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complex import ComplexLike, ForkComplex, as_complex, root, vertex
from .exactness import LevelAssignment, check_exact


@dataclass(frozen=True)
class Canonical:
    encoding: tuple
    fork_order: tuple[str, ...]
    node_order: tuple[str, ...]


def _refine(adj: dict, colors: dict) -> dict:
    n_classes = len(set(colors.values()))
    while True:
        sigs = {v: (colors[v], tuple(sorted((e, colors[w]) for w, e in adj[v])))
                for v in adj}
        rank = {s: i for i, s in enumerate(sorted(set(sigs.values())))}
        colors = {v: rank[sigs[v]] for v in adj}
        if len(rank) == n_classes:
            return colors
        n_classes = len(rank)


def _rank(keys: dict) -> dict:
    rank = {k: i for i, k in enumerate(sorted(set(keys.values())))}
    return {v: rank[keys[v]] for v in keys}


@lru_cache(maxsize=8192)
def _canonical(cx: ForkComplex) -> Canonical:
    levels = check_exact(cx)
    exact = isinstance(levels, LevelAssignment)

    adj: dict[tuple[str, str], list] = {}
    init: dict[tuple[str, str], tuple] = {}
    for f in cx.forks:
        v = ("F", f.id)
        adj[v] = [(("N", f.grip), 0)] + [(("N", t), 1) for t in f.tines]
        lvl = levels[root(f.id)] if exact else -1
        init[v] = (0, lvl, f.side.value, 0)
    for n in cx.nodes:
        v = ("N", n.id)
        adj[v] = []
        lvl = levels[vertex(n.id)] if exact else -1
        init[v] = (1, lvl, n.kind.value, n.label)
    for f in cx.forks:
        fv = ("F", f.id)
        for w, e in adj[fv]:
            adj[w].append((fv, e))

    twin_key = {v: frozenset(adj[v]) for v in adj}
    best: list = [None]

    def leaf(colors):
        order = sorted(adj, key=colors.__getitem__)
        forks = [v[1] for v in order if v[0] == "F"]
        nodes = [v[1] for v in order if v[0] == "N"]
        pos = {nid: i for i, nid in enumerate(nodes)}
        enc = (
            tuple((cx.fork(fid).side.value, pos[cx.fork(fid).grip],
                   tuple(sorted(pos[t] for t in cx.fork(fid).tines))) for fid in forks),
            tuple((cx.node(nid).kind.value, cx.node(nid).label) for nid in nodes),
        )
        key = (enc, tuple(forks), tuple(nodes))
        if best[0] is None or key < best[0]:
            best[0] = key

    def search(colors):
        colors = _refine(adj, colors)
        cells: dict[int, list] = {}
        for v, c in colors.items():
            cells.setdefault(c, []).append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            leaf(colors)
            return
        reps: dict[frozenset, tuple] = {}
        for v in sorted(cells[target]):
            reps.setdefault(twin_key[v], v)
        for v in sorted(reps.values()):
            search(_rank({u: (c, 0 if (c != target or u == v) else 1)
                          for u, c in colors.items()}))

    search(_rank(init))
    enc, forks, nodes = best[0]
    return Canonical(enc, forks, nodes)


def canonical(cx: ComplexLike) -> Canonical:
    return _canonical(as_complex(cx))


def canonical_form(cx: ComplexLike) -> tuple:
    """Relabelling-invariant encoding: equal iff the complexes are isomorphic."""
    return canonical(cx).encoding


def same_complex(a: ComplexLike, b: ComplexLike) -> bool:
    return canonical_form(a) == canonical_form(b)
