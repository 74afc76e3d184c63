"""Schematic drawings laid out by exactness level (first boundary at the bottom)."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from xml.sax.saxutils import escape

from ..complex import GeneralizedSplitting, NodeKind, Vertex, as_complex, exactness_digraph
from ..exactness import require_exact


def dot_id(v: Vertex) -> str:
    return ("r:" if v.role == "root" else "n:") + v.id


def _q(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _levels(gs) -> tuple[dict[Vertex, Fraction], dict[Fraction, list[Vertex]]]:
    levels = dict(require_exact(gs).levels)
    ranks: dict[Fraction, list[Vertex]] = defaultdict(list)
    for v in sorted(levels, key=lambda v: (levels[v], v)):
        ranks[levels[v]].append(v)
    return levels, dict(sorted(ranks.items()))


def render_dot(gs: GeneralizedSplitting) -> str:
    cx = as_complex(gs)
    levels, ranks = _levels(cx)
    graph = exactness_digraph(cx)
    out = ["digraph forkcomplex {", "  rankdir=BT;", "  node [fontname=Helvetica];"]
    for v in sorted(levels, key=lambda v: (levels[v], v)):
        lvl = levels[v]
        if v.role == "root":
            f = cx.fork(v.id)
            attrs = f"shape=circle, label={_q(f'{f.id} ({f.side.value})')}"
        else:
            n = cx.node(v.id)
            shape = "box" if n.kind is NodeKind.GRIP else "ellipse, style=dashed"
            attrs = f"shape={shape}, label={_q(f'{n.id}: {n.label}')}"
        out.append(f"  {_q(dot_id(v))} [{attrs}, level={_q(str(lvl))}];")
    for u, v in graph.edges:
        out.append(f"  {_q(dot_id(u))} -> {_q(dot_id(v))};")
    for members in ranks.values():
        names = "; ".join(_q(dot_id(v)) for v in members)
        out.append(f"  {{ rank=same; {names}; }}")
    out.append("}")
    return "\n".join(out) + "\n"


def render_svg(gs: GeneralizedSplitting, *, width: int = 640, height: int = 480) -> str:
    """Direct layout: ``y = 1 - level``, vertices spread evenly within a level."""
    cx = as_complex(gs)
    levels, ranks = _levels(cx)
    margin = 40
    pos: dict[Vertex, tuple[float, float]] = {}
    for lvl, members in ranks.items():
        y = margin + float(1 - lvl) * (height - 2 * margin)
        for i, v in enumerate(members):
            x = margin + (i + 1) * (width - 2 * margin) / (len(members) + 1)
            pos[v] = (round(x, 2), round(y, 2))
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">',
           '<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" '
           'markerWidth="6" markerHeight="6" orient="auto-start-reverse">'
           '<path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>']
    for u, v in exactness_digraph(cx).edges:
        (x1, y1), (x2, y2) = pos[u], pos[v]
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" '
                   f'marker-end="url(#arrow)"/>')
    for v, (x, y) in pos.items():
        if v.role == "root":
            f = cx.fork(v.id)
            out.append(f'<circle cx="{x}" cy="{y}" r="5" fill="black"/>')
            text = f"{f.id} ({f.side.value})"
        else:
            n = cx.node(v.id)
            if n.kind is NodeKind.GRIP:
                out.append(f'<rect x="{x - 7}" y="{y - 7}" width="14" height="14" '
                           f'fill="white" stroke="black"/>')
            else:
                out.append(f'<circle cx="{x}" cy="{y}" r="7" fill="white" stroke="black" '
                           f'stroke-dasharray="3,2"/>')
            text = f"{n.id}: {n.label}"
        out.append(f'<text x="{x + 10}" y="{y - 8}" font-family="Helvetica" '
                   f'font-size="11">{escape(text)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
