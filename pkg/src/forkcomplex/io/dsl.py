"""Line-oriented text format for complexes and a one-line move syntax.

Complex documents::

    # comment
    fork A1 side A grip S1:2
    fork B1 side B grip S1:2 tines T1:1,T2:1
    assert S1 "stabilized"

Nodes are glued by sharing an id; every occurrence repeats the genus.  Move
specs are ``verb key=value ...``, for example
``weakreduce grip=S case=NU a=1 b=1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..canonical import canonical
from ..complex import Fork, GeneralizedSplitting, Node, NodeKind, Side, make_splitting
from ..errors import DslSyntaxError, ForkError, GenusConflict, KindMismatch
from ..moves import (Amalgamate, Case, Destabilize, EliminateSphereTine, EliminateTrivialFork,
                     Move, Shape, Stabilize, TrivialVariant, WeakReduce, WeakReductionData)

FORMAT_HEADER = "# forkcomplex format 1"

ID_RE = r"[A-Za-z_][A-Za-z0-9_.'\-]*"
_TOKEN = re.compile(rf"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#.*)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<punct>[:,])
  | (?P<int>[0-9]+(?![A-Za-z_.'\-]))
  | (?P<id>{ID_RE})
""", re.VERBOSE)
_ID_FULL = re.compile(ID_RE + r"\Z")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


@dataclass(frozen=True)
class NodeRef:
    id: str
    label: int
    line: int
    col: int


@dataclass(frozen=True)
class ForkDecl:
    id: str
    side: Side
    grip: NodeRef
    tines: tuple[NodeRef, ...]
    line: int
    col: int


@dataclass(frozen=True)
class AssertDecl:
    node: str
    text: str
    line: int
    col: int


@dataclass
class ForkDocument:
    forks: list[ForkDecl] = field(default_factory=list)
    assertions: list[AssertDecl] = field(default_factory=list)
    comments: list[tuple[int, str]] = field(default_factory=list)


def _tokenize(line: str, lineno: int, comments: list | None = None) -> list[Token]:
    out = []
    pos = 0
    while pos < len(line):
        m = _TOKEN.match(line, pos)
        if m is None:
            raise DslSyntaxError(f"unexpected character {line[pos]!r}", line=lineno,
                                 col=pos + 1, expected=("identifier", "integer", ":", ","))
        kind = m.lastgroup
        if kind == "comment":
            if comments is not None:
                comments.append((lineno, m.group()))
        elif kind != "ws":
            out.append(Token(kind, m.group(), lineno, pos + 1))
        pos = m.end()
    return out


class _Cursor:
    def __init__(self, tokens: list[Token], lineno: int, line: str):
        self.tokens = tokens
        self.i = 0
        self.lineno = lineno
        self.end_col = len(line.rstrip()) + 1

    def peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def fail(self, expected: tuple[str, ...]) -> DslSyntaxError:
        tok = self.peek()
        if tok is None:
            return DslSyntaxError(f"unexpected end of line, expected {' or '.join(expected)}",
                                  line=self.lineno, col=self.end_col, expected=expected)
        return DslSyntaxError(f"unexpected {tok.text!r}, expected {' or '.join(expected)}",
                              line=tok.line, col=tok.col, expected=expected)

    def take(self, kind: str, text: str | None = None, label: str | None = None) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != kind or (text is not None and tok.text != text):
            raise self.fail((label or (repr(text) if text else kind),))
        self.i += 1
        return tok

    def keyword(self, *words: str) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != "id" or tok.text not in words:
            raise self.fail(tuple(repr(w) for w in words))
        self.i += 1
        return tok

    def done(self) -> bool:
        return self.i >= len(self.tokens)


def _node_ref(cur: _Cursor) -> NodeRef:
    name = cur.take("id", label="node id")
    cur.take("punct", ":", label="':'")
    value = cur.take("int", label="genus")
    return NodeRef(name.text, int(value.text), name.line, name.col)


def _unquote(raw: str) -> str:
    return re.sub(r"\\(.)", r"\1", raw[1:-1])


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def parse_document(text: str) -> ForkDocument:
    doc = ForkDocument()
    lines = text.split("\n")
    for lineno, line in enumerate(lines, 1):
        tokens = _tokenize(line, lineno, doc.comments)
        if not tokens:
            continue
        cur = _Cursor(tokens, lineno, line)
        head = cur.keyword("fork", "assert")
        if head.text == "fork":
            fid = cur.take("id", label="fork id")
            cur.keyword("side")
            side = cur.keyword("A", "B")
            cur.keyword("grip")
            grip = _node_ref(cur)
            tines = []
            if not cur.done():
                cur.keyword("tines")
                tines.append(_node_ref(cur))
                while not cur.done():
                    cur.take("punct", ",", label="','")
                    tines.append(_node_ref(cur))
            doc.forks.append(ForkDecl(fid.text, Side(side.text), grip, tuple(tines),
                                      head.line, head.col))
        else:
            node = cur.take("id", label="node id")
            msg = cur.take("string", label="quoted string")
            if not cur.done():
                raise cur.fail(("end of line",))
            doc.assertions.append(AssertDecl(node.text, _unquote(msg.text), head.line,
                                             head.col))
    if not doc.forks:
        raise DslSyntaxError("document declares no forks", line=max(len(lines), 1), col=1,
                             expected=("'fork'",))
    return doc


def build_splitting(doc: ForkDocument) -> GeneralizedSplitting:
    first: dict[str, tuple[NodeRef, NodeKind]] = {}
    fork_pos: dict[str, tuple[int, int]] = {}
    forks = []
    for decl in doc.forks:
        fork_pos.setdefault(decl.id, (decl.line, decl.col))
        refs = [(decl.grip, NodeKind.GRIP)] + [(t, NodeKind.TINE) for t in decl.tines]
        for ref, kind in refs:
            seen = first.get(ref.id)
            if seen is None:
                first[ref.id] = (ref, kind)
                continue
            if seen[0].label != ref.label:
                err = GenusConflict(ref.id, seen[0].label, ref.label)
                err.position = (ref.line, ref.col)
                raise err
            if seen[1] is not kind:
                err = KindMismatch(f"node {ref.id!r} used as a {seen[1].value} and as a "
                                   f"{kind.value}", node=ref.id)
                err.position = (ref.line, ref.col)
                raise err
        forks.append(Fork(decl.id, decl.side, decl.grip.id, tuple(t.id for t in decl.tines)))
    nodes = [Node(nid, kind, ref.label) for nid, (ref, kind) in first.items()]
    try:
        return make_splitting(forks, nodes, [(a.node, a.text) for a in doc.assertions])
    except ForkError as exc:
        if exc.position is None:
            if exc.fork in fork_pos:
                exc.position = fork_pos[exc.fork]
            elif exc.node in first:
                ref = first[exc.node][0]
                exc.position = (ref.line, ref.col)
            else:
                where = [(a.line, a.col) for a in doc.assertions if a.node == exc.node]
                if where:
                    exc.position = where[0]
        raise


def parse_complex(text: str) -> GeneralizedSplitting:
    return build_splitting(parse_document(text))


def format_complex(gs: GeneralizedSplitting) -> str:
    """Deterministic text with forks and tines in canonical order."""
    canon = canonical(gs.complex)
    npos = {nid: i for i, nid in enumerate(canon.node_order)}
    cx = gs.complex
    lines = [FORMAT_HEADER]
    for fid in canon.fork_order:
        f = cx.fork(fid)
        line = f"fork {f.id} side {f.side.value} grip {f.grip}:{cx.label(f.grip)}"
        if f.tines:
            tines = sorted(f.tines, key=npos.__getitem__)
            line += " tines " + ",".join(f"{t}:{cx.label(t)}" for t in tines)
        lines.append(line)
    for nid, text in sorted(gs.assertions, key=lambda a: (npos[a[0]], a[1])):
        lines.append(f"assert {nid} {_quote(text)}")
    return "\n".join(lines) + "\n"


# -- move specs ----------------------------------------------------------------------------

_VERBS = ("stabilize", "destabilize", "weakreduce", "amalgamate", "eliminate-sphere",
          "eliminate-trivial")
_KEYS = {
    "stabilize": ({"grip"}, set()),
    "destabilize": ({"grip"}, set()),
    "weakreduce": ({"grip", "case"}, {"a", "b", "k", "g1", "g2", "shape", "a_upper",
                                      "b_lower"}),
    "amalgamate": ({"grips"}, {"tines"}),
    "eliminate-sphere": ({"tine", "ball"}, set()),
    "eliminate-trivial": ({"fork", "variant"}, set()),
}
_CASE_PARAMS = {Case.NN: (), Case.NU: ("a", "b"), Case.NSSEP: ("a", "b"),
                Case.SS: ("k", "g1", "g2")}


def _spec_error(msg: str, col: int, expected=()) -> DslSyntaxError:
    return DslSyntaxError(msg, line=1, col=col, expected=tuple(expected))


def _split_spec(text: str) -> tuple[str, dict[str, tuple[str, int]]]:
    words = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text)]
    if not words:
        raise _spec_error("empty move spec", 1, _VERBS)
    verb, vcol = words[0]
    if verb not in _KEYS:
        raise _spec_error(f"unknown move {verb!r}", vcol, _VERBS)
    required, optional = _KEYS[verb]
    fields: dict[str, tuple[str, int]] = {}
    for word, col in words[1:]:
        key, eq, value = word.partition("=")
        if not eq or not value:
            raise _spec_error(f"expected key=value, got {word!r}", col, ("key=value",))
        if key not in required | optional:
            raise _spec_error(f"{verb} does not take {key!r}", col,
                              sorted(required | optional))
        if key in fields:
            raise _spec_error(f"{key!r} given twice", col)
        fields[key] = (value, col + len(key) + 1)
    missing = sorted(required - fields.keys())
    if missing:
        raise _spec_error(f"{verb} needs {', '.join(missing)}", len(text.rstrip()) + 1,
                          missing)
    return verb, fields


def _ident(value: str, col: int) -> str:
    if not _ID_FULL.match(value):
        raise _spec_error(f"{value!r} is not an identifier", col, ("identifier",))
    return value


def _ident_list(value: str, col: int) -> list[str]:
    out = []
    for part in value.split(","):
        out.append(_ident(part, col))
        col += len(part) + 1
    return out


def _nat(value: str, col: int) -> int:
    if not value.isdigit():
        raise _spec_error(f"{value!r} is not a non-negative integer", col, ("integer",))
    return int(value)


def parse_move(text: str) -> Move:
    verb, fields = _split_spec(text)
    get = lambda key: fields[key][0]  # noqa: E731
    col = lambda key: fields[key][1]  # noqa: E731
    if verb in ("stabilize", "destabilize"):
        grip = _ident(get("grip"), col("grip"))
        return Stabilize(grip) if verb == "stabilize" else Destabilize(grip)
    if verb == "weakreduce":
        try:
            case = Case(get("case"))
        except ValueError:
            raise _spec_error(f"unknown case {get('case')!r}", col("case"),
                              [c.value for c in Case]) from None
        wanted = _CASE_PARAMS[case]
        for key in ("a", "b", "k", "g1", "g2"):
            if key in fields and key not in wanted:
                raise _spec_error(f"case {case.value} does not take {key!r}", col(key),
                                  wanted)
        for key in wanted:
            if key not in fields:
                raise _spec_error(f"case {case.value} needs {key!r}", len(text.rstrip()) + 1,
                                  wanted)
        params = tuple(_nat(get(k), col(k)) for k in wanted)
        shape = Shape.CHAIN
        if "shape" in fields:
            try:
                shape = Shape(get("shape"))
            except ValueError:
                raise _spec_error(f"unknown shape {get('shape')!r}", col("shape"),
                                  [s.value for s in Shape]) from None
        a_upper = frozenset(_ident_list(get("a_upper"), col("a_upper"))) \
            if "a_upper" in fields else frozenset()
        b_lower = frozenset(_ident_list(get("b_lower"), col("b_lower"))) \
            if "b_lower" in fields else frozenset()
        return WeakReduce(WeakReductionData(_ident(get("grip"), col("grip")), case, params,
                                            a_upper, b_lower, shape))
    if verb == "amalgamate":
        grips = _ident_list(get("grips"), col("grips"))
        if len(grips) != 2:
            raise _spec_error("amalgamate needs exactly two grips", col("grips"),
                              ("G1,G2",))
        tines = frozenset(_ident_list(get("tines"), col("tines"))) \
            if "tines" in fields else frozenset()
        return Amalgamate((grips[0], grips[1]), tines)
    if verb == "eliminate-sphere":
        return EliminateSphereTine(_ident(get("tine"), col("tine")),
                                   frozenset(_ident_list(get("ball"), col("ball"))))
    try:
        variant = TrivialVariant(get("variant"))
    except ValueError:
        raise _spec_error(f"unknown variant {get('variant')!r}", col("variant"),
                          [v.value for v in TrivialVariant]) from None
    return EliminateTrivialFork(_ident(get("fork"), col("fork")), variant)


def format_move(move: Move) -> str:
    if isinstance(move, Stabilize):
        return f"stabilize grip={move.grip}"
    if isinstance(move, Destabilize):
        return f"destabilize grip={move.grip}"
    if isinstance(move, WeakReduce):
        d = move.data
        parts = [f"weakreduce grip={d.grip} case={d.case.value}"]
        parts += [f"{k}={v}" for k, v in zip(_CASE_PARAMS[d.case], d.params)]
        if d.shape is not Shape.CHAIN:
            parts.append(f"shape={d.shape.value}")
        if d.a_upper:
            parts.append("a_upper=" + ",".join(sorted(d.a_upper)))
        if d.b_lower:
            parts.append("b_lower=" + ",".join(sorted(d.b_lower)))
        return " ".join(parts)
    if isinstance(move, Amalgamate):
        text = f"amalgamate grips={move.grips[0]},{move.grips[1]}"
        if move.tines:
            text += " tines=" + ",".join(sorted(move.tines))
        return text
    if isinstance(move, EliminateSphereTine):
        return f"eliminate-sphere tine={move.tine} ball=" + ",".join(sorted(move.ball))
    if isinstance(move, EliminateTrivialFork):
        return f"eliminate-trivial fork={move.fork} variant={move.variant.value}"
    raise TypeError(f"not a move: {move!r}")


def weak_reduction_from_assertion(grip: str, text: str) -> WeakReductionData | None:
    """Read recorded weak-reduction data (``weakreduce case=... ...``) on a grip."""
    words = text.split()
    if not words or words[0] != "weakreduce":
        return None
    if not any(w.startswith("grip=") for w in words):
        words.insert(1, f"grip={grip}")
    try:
        move = parse_move(" ".join(words))
    except DslSyntaxError:
        return None
    if move.data.grip != grip:
        return None
    return move.data
