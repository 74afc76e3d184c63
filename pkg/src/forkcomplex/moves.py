"""Width-changing rewrites of generalized Heegaard splittings.

Every move is a formal rewrite of the labelled complex.  Topological side
conditions (disjoint essential disks, a sphere bounding a ball, a splitting
being stabilized) are never decided here; they are supplied by the caller and
recorded.  Each rewrite declares its width delta (entries removed, entries
added) and :func:`apply_move` audits the result: well-formedness, exactness,
Euler characteristic conservation and the declared delta.

Weak reduction replaces the two forks at an interior grip ``g`` by four forks
``A' - B' - A'' - B''`` (lower grip between ``A'`` and ``B'``, upper grip
between ``A''`` and ``B''``, new interior tines between ``B'`` and ``A''``):

=======  ==============  ==============  ===============  ====================
case     lower grip      upper grip      interior tines   strictly decreasing
=======  ==============  ==============  ===============  ====================
NN       g-1             g-1             g-2              always
NU       g-1             g-1             a, b (a+b=g-1)   always
NSsep    g-1             a+1             a    (a+b=g-1)   when b >= 1
SS       k               g-g1            g2 (g1+g2=k<g)   when g1 >= 1
=======  ==============  ==============  ===============  ====================

By default the original A-tines stay on ``A'`` and the original B-tines on
``B''``; ``a_upper`` moves A-tines up to ``A''`` and ``b_lower`` moves B-tines
down to ``B'``.  The ``split`` shape swaps the two grips (the construction
run from the B side); for NN and NU both shapes coincide.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Union

from .complex import (Fork, GeneralizedSplitting, Node, NodeKind, Side, boundary_partition,
                      complex_euler, fresh_id, induced_body, make_splitting,
                      validate_complex)
from .core import (JoinTube, NonSeparating, SelfTube, Separating, body_euler,
                   surface_euler, surger_genus, tube_genera, validate_body)
from .errors import (AuditFailed, BodyInvalid, CaseEquationViolated, ChiMismatch,
                     Disconnects, ForkError, GenusUnderflow, NotABall, NotAdjacent,
                     NotASphere, NotInterior, NotTrivial, PatternUnrecognized,
                     TrivialBody, UnknownNode, WrongShape)
from .exactness import LevelAssignment, audit_levels, check_exact
from .complex import exactness_digraph, vertex
from .width import Ordering, WidthMultiset, compare_width, width

STABILIZED = "stabilized"
BOUNDS_BALL = "bounds a ball"
WEAK_REDUCTION_PREFIX = "weakreduce"


class Case(str, Enum):
    NN = "NN"
    NU = "NU"
    NSSEP = "NSsep"
    SS = "SS"


CASE_ORDER = (Case.NN, Case.NU, Case.NSSEP, Case.SS)


class Shape(str, Enum):
    CHAIN = "chain"
    SPLIT = "split"


class TrivialVariant(str, Enum):
    BOUNDARY_GRIP = "boundary"
    INTERIOR_MERGE = "merge"


@dataclass(frozen=True)
class WeakReductionData:
    grip: str
    case: Case
    params: tuple[int, ...] = ()
    a_upper: frozenset[str] = frozenset()
    b_lower: frozenset[str] = frozenset()
    shape: Shape = Shape.CHAIN


@dataclass(frozen=True)
class Stabilize:
    grip: str


@dataclass(frozen=True)
class Destabilize:
    grip: str


@dataclass(frozen=True)
class WeakReduce:
    data: WeakReductionData


@dataclass(frozen=True)
class Amalgamate:
    grips: tuple[str, str]
    tines: frozenset[str] = frozenset()  # empty: use the full shared set


@dataclass(frozen=True)
class EliminateSphereTine:
    tine: str
    ball: frozenset[str]


@dataclass(frozen=True)
class EliminateTrivialFork:
    fork: str
    variant: TrivialVariant


Move = Union[Stabilize, Destabilize, WeakReduce, Amalgamate, EliminateSphereTine,
             EliminateTrivialFork]


@dataclass(frozen=True)
class Outcome:
    splitting: GeneralizedSplitting
    removed: tuple[int, ...]
    added: tuple[int, ...]
    expect: Ordering | None = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class MoveReport:
    move: Move
    before: WidthMultiset
    after: WidthMultiset
    comparison: Ordering
    removed: tuple[int, ...]
    added: tuple[int, ...]
    euler: int
    notes: tuple[str, ...] = field(default=())

    def summary(self) -> str:
        return f"{self.before} -> {self.after} {self.comparison.value}"


# -- helpers --------------------------------------------------------------------

class _Draft:
    """Mutable working copy of a splitting."""

    def __init__(self, gs: GeneralizedSplitting):
        self.forks: dict[str, Fork] = dict(gs.complex.fork_map)
        self.nodes: dict[str, Node] = dict(gs.complex.node_map)
        self.assertions: list[tuple[str, str]] = list(gs.assertions)

    def fresh_fork(self, base: str) -> str:
        name = fresh_id(base, self.forks)
        self.forks[name] = None  # reserve
        return name

    def fresh_node(self, base: str) -> str:
        name = fresh_id(base, self.nodes)
        self.nodes[name] = None
        return name

    def drop_assertions(self, node_id: str, pred=lambda text: True):
        self.assertions = [(n, t) for n, t in self.assertions
                           if not (n == node_id and pred(t))]

    def build(self) -> GeneralizedSplitting:
        forks = [f for f in self.forks.values() if f is not None]
        nodes = [n for n in self.nodes.values() if n is not None]
        alive = {n.id for n in nodes}
        return make_splitting(forks, nodes, [a for a in self.assertions if a[0] in alive])


def _is_move_data(text: str) -> bool:
    return text.split(" ", 1)[0] == WEAK_REDUCTION_PREFIX


def _grip_node(gs: GeneralizedSplitting, grip: str) -> Node:
    node = gs.complex.node(grip)
    if node.kind is not NodeKind.GRIP:
        raise UnknownNode(f"{grip!r} is a tine, not a grip", node=grip)
    return node


def _interior_forks(gs: GeneralizedSplitting, node_id: str) -> tuple[Fork, Fork]:
    sides = gs.complex.slot_map[node_id]
    if len(sides) != 2:
        raise NotInterior(f"node {node_id!r} lies on the boundary", node=node_id)
    return gs.complex.fork(sides[Side.A]), gs.complex.fork(sides[Side.B])


def _conserve(before: GeneralizedSplitting, after: GeneralizedSplitting) -> None:
    e0, e1 = complex_euler(before), complex_euler(after)
    if e0 != e1:
        raise ChiMismatch(f"Euler characteristic changed from {e0} to {e1}")


# -- stabilization ---------------------------------------------------------------

def _stabilize(gs: GeneralizedSplitting, grip: str) -> Outcome:
    node = _grip_node(gs, grip)
    g = node.label
    d = _Draft(gs)
    d.drop_assertions(grip, _is_move_data)
    sides = gs.complex.slot_map[grip]
    # "stabilized" is not recorded here: a later destabilize stays gated on the
    # caller's assertion, as for any other grip
    if len(sides) == 2:
        d.nodes[grip] = Node(grip, NodeKind.GRIP, g + 1)
        notes = ()
    else:
        # A boundary grip is first pushed off the boundary by a collar (a
        # trivial fork on the other side), then the new interior grip is
        # stabilized; the manifold and its boundary are unchanged.
        (side, fid), = sides.items()
        inner = d.fresh_node(f"{grip}.s")
        collar = d.fresh_fork(f"{fid}.c")
        old = d.forks[fid]
        d.forks[fid] = Fork(fid, old.side, inner, old.tines)
        d.forks[collar] = Fork(collar, side.other, inner, (grip,))
        d.nodes[inner] = Node(inner, NodeKind.GRIP, g + 1)
        d.nodes[grip] = Node(grip, NodeKind.TINE, g)
        notes = (f"boundary grip {grip!r} collared by fork {collar!r}; "
                 f"stabilized grip is {inner!r}",)
    out = d.build()
    _conserve(gs, out)
    return Outcome(out, (g,), (g + 1,), Ordering.GREATER, notes)


def _destabilize(gs: GeneralizedSplitting, grip: str) -> Outcome:
    node = _grip_node(gs, grip)
    fa, fb = _interior_forks(gs, grip)
    g = node.label
    if g < 1:
        raise GenusUnderflow(f"grip {grip!r} has genus 0", node=grip)
    for f in (fa, fb):
        try:
            validate_body(g - 1, [gs.complex.label(t) for t in f.tines])
        except ForkError as exc:
            raise BodyInvalid(f"fork {f.id!r} at genus {g - 1}: {exc.message}",
                              fork=f.id, node=grip) from exc
    d = _Draft(gs)
    d.nodes[grip] = Node(grip, NodeKind.GRIP, g - 1)
    d.drop_assertions(grip, lambda t: t == STABILIZED or _is_move_data(t))
    out = d.build()
    _conserve(gs, out)
    note = f"relies on assertion {STABILIZED!r} at {grip!r}"
    return Outcome(out, (g,), (g - 1,), Ordering.LESS, (note,))


def stabilize(gs: GeneralizedSplitting, grip: str) -> GeneralizedSplitting:
    return _stabilize(gs, grip).splitting


def destabilize(gs: GeneralizedSplitting, grip: str) -> GeneralizedSplitting:
    return _destabilize(gs, grip).splitting


# -- weak reduction ---------------------------------------------------------------

def _violated(msg: str, grip: str) -> CaseEquationViolated:
    return CaseEquationViolated(msg, node=grip)


def _check_params(g: int, case: Case, params: tuple[int, ...], grip: str) -> None:
    if any(isinstance(p, bool) or not isinstance(p, int) or p < 0 for p in params):
        raise _violated(f"case parameters must be non-negative integers: {params}", grip)
    expected = {Case.NN: 0, Case.NU: 2, Case.NSSEP: 2, Case.SS: 3}[case]
    if len(params) != expected:
        raise _violated(f"case {case.value} takes {expected} parameters, got {len(params)}",
                        grip)
    if case is Case.NN and g < 2:
        raise _violated(f"case NN needs genus >= 2 (interior tine genus {g - 2} < 0)", grip)
    if case in (Case.NU, Case.NSSEP):
        a, b = params
        if a + b != g - 1:
            raise _violated(f"case {case.value} needs a + b = g - 1, got {a}+{b} with g={g}",
                            grip)
    if case is Case.SS:
        k, g1, g2 = params
        if g1 + g2 != k:
            raise _violated(f"case SS needs g1 + g2 = k, got {g1}+{g2} != {k}", grip)
        if k > g - 1:
            raise _violated(f"case SS needs k <= g - 1, got k={k} with g={g}", grip)


def reduction_genera(g: int, case: Case, params: tuple[int, ...], grip: str = "?"
                     ) -> tuple[int, int, tuple[int, ...]]:
    """(lower grip, upper grip, interior tines) by surgery and tubing arithmetic."""
    _check_params(g, case, params, grip)
    if case is Case.NN:
        (lower,) = surger_genus(g, NonSeparating())
        tines = surger_genus(lower, NonSeparating())
        (upper,) = tube_genera(tines, SelfTube(tines[0]))
    elif case is Case.NU:
        a, b = params
        (lower,) = surger_genus(g, NonSeparating())
        tines = surger_genus(lower, Separating(a, b))
        (upper,) = tube_genera(tines, JoinTube(a, b))
    elif case is Case.NSSEP:
        a, b = params
        (lower,) = surger_genus(g, NonSeparating())
        pieces = Counter(surger_genus(lower, Separating(a, b)))
        tines = (a,)  # the b-side is absorbed into the lower B-fork
        assert pieces[a] >= 1
        (upper,) = tube_genera(tines, SelfTube(a))
    else:
        k, g1, g2 = params
        surger_genus(g, Separating(k, g - k))
        lower = k
        split = Counter(surger_genus(k, Separating(g1, g2)))
        assert split[g2] >= 1
        tines = (g2,)
        (upper,) = tube_genera((g2, g - k), JoinTube(g2, g - k))
    return lower, upper, tuple(sorted(tines, reverse=True))


def reduction_genera_closed_form(g: int, case: Case, params: tuple[int, ...]
                                 ) -> tuple[int, int, tuple[int, ...]]:
    if case is Case.NN:
        return g - 1, g - 1, (g - 2,)
    if case is Case.NU:
        a, b = params
        return g - 1, g - 1, tuple(sorted((a, b), reverse=True))
    if case is Case.NSSEP:
        a, b = params
        return g - 1, a + 1, (a,)
    k, g1, g2 = params
    return k, g - g1, (g2,)


def strictly_decreasing_case(case: Case, params: tuple[int, ...]) -> bool:
    if case is Case.NSSEP:
        return params[1] >= 1
    if case is Case.SS:
        return params[1] >= 1
    return True


def _weak_reduce(gs: GeneralizedSplitting, data: WeakReductionData) -> Outcome:
    grip = data.grip
    node = _grip_node(gs, grip)
    fa, fb = _interior_forks(gs, grip)
    g = node.label
    for f in (fa, fb):
        if induced_body(gs, f.id).is_trivial:
            raise TrivialBody(f"fork {f.id!r} induces a trivial compression body",
                              fork=f.id, node=grip)
    lower, upper, new_tines = reduction_genera(g, data.case, data.params, grip)
    if (lower, upper, new_tines) != reduction_genera_closed_form(g, data.case, data.params):
        raise AuditFailed(f"surgery arithmetic disagrees with the case table at {grip!r}")
    if data.shape is Shape.SPLIT:
        lower, upper = upper, lower
    for t in data.a_upper:
        if t not in fa.tines:
            raise UnknownNode(f"{t!r} is not a tine of A-fork {fa.id!r}", node=t)
    for t in data.b_lower:
        if t not in fb.tines:
            raise UnknownNode(f"{t!r} is not a tine of B-fork {fb.id!r}", node=t)

    d = _Draft(gs)
    del d.forks[fa.id], d.forks[fb.id], d.nodes[grip]
    low = d.fresh_node(f"{grip}.1")
    high = d.fresh_node(f"{grip}.2")
    mids = [d.fresh_node(f"{grip}.t{i + 1}") for i in range(len(new_tines))]
    a1, b1 = d.fresh_fork(f"{fa.id}.1"), d.fresh_fork(f"{fb.id}.1")
    a2, b2 = d.fresh_fork(f"{fa.id}.2"), d.fresh_fork(f"{fb.id}.2")
    d.nodes[low] = Node(low, NodeKind.GRIP, lower)
    d.nodes[high] = Node(high, NodeKind.GRIP, upper)
    for nid, genus in zip(mids, new_tines):
        d.nodes[nid] = Node(nid, NodeKind.TINE, genus)
    a_up = sorted(data.a_upper)
    b_low = sorted(data.b_lower)
    d.forks[a1] = Fork(a1, Side.A, low, tuple(t for t in fa.tines if t not in data.a_upper))
    d.forks[b1] = Fork(b1, Side.B, low, tuple(mids) + tuple(b_low))
    d.forks[a2] = Fork(a2, Side.A, high, tuple(mids) + tuple(a_up))
    d.forks[b2] = Fork(b2, Side.B, high, tuple(t for t in fb.tines if t not in data.b_lower))
    out = d.build()
    _conserve(gs, out)

    strict = strictly_decreasing_case(data.case, data.params)
    notes = [f"relies on weakly reducing disks at {grip!r} ({data.case.value})"]
    if not strict:
        notes.append("non-decreasing")
    return Outcome(out, (g,), (lower, upper), Ordering.LESS if strict else None,
                   tuple(notes))


def weak_reduce(gs: GeneralizedSplitting, data: WeakReductionData) -> GeneralizedSplitting:
    return _weak_reduce(gs, data).splitting


# -- amalgamation ---------------------------------------------------------------------

def _stem(first: str, second: str) -> str:
    if first.endswith(".1") and second.endswith(".2") and first[:-2] == second[:-2]:
        return first[:-2]
    return first


def amalgamation_genus(lower: int, upper: int, shared: list[int]) -> int:
    return lower + upper - sum(shared) + (len(shared) - 1)


def _amalgamate(gs: GeneralizedSplitting, grips: tuple[str, str],
                tines: frozenset[str] = frozenset()) -> Outcome:
    x, y = grips
    if x == y:
        raise PatternUnrecognized("amalgamation needs two distinct grips", node=x)
    cx = gs.complex
    for gid in (x, y):
        _grip_node(gs, gid)
        _interior_forks(gs, gid)
    pattern = None
    for lo, hi in ((x, y), (y, x)):
        b1 = cx.fork(cx.slot_map[lo][Side.B])
        a2 = cx.fork(cx.slot_map[hi][Side.A])
        shared = set(b1.tines) & set(a2.tines)
        if shared:
            pattern = lo, hi, b1, a2, shared
            break
    if pattern is None:
        raise NotAdjacent(f"grips {x!r} and {y!r} share no tines", node=x)
    lo, hi, b1, a2, shared = pattern
    if tines and set(tines) != shared:
        raise PatternUnrecognized(
            f"shared tines are {sorted(shared)}, not {sorted(tines)}", node=lo)
    a1 = cx.fork(cx.slot_map[lo][Side.A])
    b2 = cx.fork(cx.slot_map[hi][Side.B])
    if len({a1.id, b1.id, a2.id, b2.id}) != 4:
        raise PatternUnrecognized("the four forks around the grips are not distinct")

    g_lo, g_hi = cx.label(lo), cx.label(hi)
    f_genera = [cx.label(t) for t in sorted(shared)]
    new_a_tines = list(a1.tines) + [t for t in a2.tines if t not in shared]
    new_b_tines = [t for t in b1.tines if t not in shared] + list(b2.tines)
    genus = amalgamation_genus(g_lo, g_hi, f_genera)

    # Redundant derivation from Euler characteristics of each side.
    glue = sum(surface_euler(f) for f in f_genera)
    for side, parts, new_tines in (("A", (a1, a2), new_a_tines),
                                   ("B", (b1, b2), new_b_tines)):
        chi = sum(body_euler(induced_body(cx, f.id)) for f in parts) - glue
        from_chi = 1 + sum(1 - cx.label(t) for t in new_tines) - chi
        if from_chi != genus:
            raise ChiMismatch(f"amalgamated genus {genus} disagrees with the {side}-side "
                              f"Euler characteristic ({from_chi})", node=lo)

    d = _Draft(gs)
    for f in (a1, b1, a2, b2):
        del d.forks[f.id]
    for nid in (lo, hi, *shared):
        del d.nodes[nid]
    new_grip = d.fresh_node(_stem(lo, hi))
    fa = d.fresh_fork(_stem(a1.id, a2.id))
    fb = d.fresh_fork(_stem(b1.id, b2.id))
    d.nodes[new_grip] = Node(new_grip, NodeKind.GRIP, genus)
    d.forks[fa] = Fork(fa, Side.A, new_grip, tuple(new_a_tines))
    d.forks[fb] = Fork(fb, Side.B, new_grip, tuple(new_b_tines))
    out = d.build()
    _conserve(gs, out)
    return Outcome(out, (g_lo, g_hi), (genus,), None, ())


def amalgamate(gs: GeneralizedSplitting, grips: tuple[str, str],
               tines: frozenset[str] = frozenset()) -> GeneralizedSplitting:
    return _amalgamate(gs, grips, frozenset(tines)).splitting


# -- eliminations -------------------------------------------------------------------------

def _component(cx, start: set[str], blocked_node: str) -> set[str]:
    """Forks reachable from ``start`` without passing through ``blocked_node``."""
    seen = set(start)
    stack = list(start)
    while stack:
        f = cx.fork(stack.pop())
        for nid, _ in f.slots:
            if nid == blocked_node:
                continue
            for other in cx.slot_map[nid].values():
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
    return seen


def _eliminate_sphere_tine(gs: GeneralizedSplitting, tine: str, ball: frozenset[str]
                           ) -> Outcome:
    cx = gs.complex
    node = cx.node(tine)
    if node.kind is not NodeKind.TINE:
        raise UnknownNode(f"{tine!r} is a grip, not a tine", node=tine)
    if node.label != 0:
        raise NotASphere(f"tine {tine!r} has genus {node.label}", node=tine)
    if not cx.is_interior(tine):
        raise NotInterior(f"tine {tine!r} lies on the boundary", node=tine)
    ball = set(ball)
    for fid in ball:
        cx.fork(fid)
    incident = set(cx.slot_map[tine].values())
    inside = incident & ball
    if len(inside) != 1:
        raise Disconnects(f"the ball must contain exactly one of the forks at {tine!r}",
                          node=tine)
    (survivor,) = incident - ball
    first, second = boundary_partition(cx)
    for fid in sorted(ball):
        for nid, _ in cx.fork(fid).slots:
            if nid in first or nid in second:
                raise NotABall(f"fork {fid!r} touches boundary node {nid!r}",
                               fork=fid, node=nid)
    if _component(cx, inside, tine) != ball:
        raise Disconnects(f"forks {sorted(ball)} are not exactly one side of {tine!r}",
                          node=tine)
    rest = set(cx.fork_map) - ball
    if _component(cx, {survivor}, tine) != rest:
        raise Disconnects(f"removing the ball side of {tine!r} disconnects the complex",
                          node=tine)
    # the ball side, closed off by the sphere, must be a 3-ball
    ball_nodes = {nid for fid in ball for nid, _ in cx.fork(fid).slots}
    chi = sum(body_euler(induced_body(cx, f)) for f in ball) - sum(
        surface_euler(cx.label(n)) for n in ball_nodes if n != tine)
    if chi != 1:
        raise NotABall(f"ball side of {tine!r} has Euler characteristic {chi}", node=tine)

    removed = tuple(cx.label(g) for g in sorted({cx.fork(f).grip for f in ball}))
    d = _Draft(gs)
    for fid in ball:
        del d.forks[fid]
    for nid in ball_nodes:
        del d.nodes[nid]
    old = d.forks[survivor]
    d.forks[survivor] = Fork(old.id, old.side, old.grip,
                             tuple(t for t in old.tines if t != tine))
    out = d.build()
    _conserve(gs, out)
    return Outcome(out, removed, (), Ordering.LESS,
                   (f"relies on assertion {BOUNDS_BALL!r} at {tine!r}",))


def eliminate_sphere_tine(gs: GeneralizedSplitting, tine: str, ball) -> GeneralizedSplitting:
    return _eliminate_sphere_tine(gs, tine, frozenset(ball)).splitting


def _eliminate_trivial_fork(gs: GeneralizedSplitting, fork: str,
                            variant: TrivialVariant) -> Outcome:
    cx = gs.complex
    f = cx.fork(fork)
    body = induced_body(cx, fork)
    if not body.is_trivial:
        raise NotTrivial(f"fork {fork!r} induces {body}, which is not trivial", fork=fork)
    (t,) = f.tines
    d = _Draft(gs)
    if variant is TrivialVariant.BOUNDARY_GRIP:
        if cx.is_interior(f.grip):
            raise WrongShape(f"grip {f.grip!r} of fork {fork!r} is interior", fork=fork)
        if not cx.is_interior(t):
            raise WrongShape(f"fork {fork!r} is the whole complex", fork=fork)
        del d.forks[fork], d.nodes[f.grip]
    else:
        if not (cx.is_interior(f.grip) and cx.is_interior(t)):
            raise WrongShape(f"fork {fork!r} is not an interior 1-fork", fork=fork)
        grip_side = cx.fork(cx.slot_map[f.grip][f.side.other])
        tine_side = cx.fork(cx.slot_map[t][f.side.other])
        if grip_side.id == tine_side.id:
            raise WrongShape(f"fork {fork!r} is glued twice to {grip_side.id!r}", fork=fork)
        merged = Fork(tine_side.id, tine_side.side, tine_side.grip,
                      tuple(x for x in tine_side.tines if x != t) + grip_side.tines)
        del d.forks[fork], d.forks[grip_side.id], d.nodes[f.grip], d.nodes[t]
        d.forks[merged.id] = merged
    out = d.build()
    _conserve(gs, out)
    return Outcome(out, (cx.label(f.grip),), (), Ordering.LESS, ())


def eliminate_trivial_fork(gs: GeneralizedSplitting, fork: str,
                           variant: TrivialVariant) -> GeneralizedSplitting:
    return _eliminate_trivial_fork(gs, fork, TrivialVariant(variant)).splitting


# -- dispatch and audit -------------------------------------------------------------------

def _dispatch(gs: GeneralizedSplitting, move: Move) -> Outcome:
    if isinstance(move, Stabilize):
        return _stabilize(gs, move.grip)
    if isinstance(move, Destabilize):
        return _destabilize(gs, move.grip)
    if isinstance(move, WeakReduce):
        return _weak_reduce(gs, move.data)
    if isinstance(move, Amalgamate):
        return _amalgamate(gs, move.grips, move.tines)
    if isinstance(move, EliminateSphereTine):
        return _eliminate_sphere_tine(gs, move.tine, move.ball)
    if isinstance(move, EliminateTrivialFork):
        return _eliminate_trivial_fork(gs, move.fork, move.variant)
    raise TypeError(f"not a move: {move!r}")


def _boundary_euler(gs: GeneralizedSplitting) -> int:
    # chi(M) = chi(boundary M) / 2 for a compact 3-manifold
    first, second = boundary_partition(gs)
    return sum(1 - gs.complex.label(n) for n in first | second)


def audit(before: GeneralizedSplitting, outcome: Outcome) -> list[str]:
    """Post-hoc checks of a move outcome; returns the violations found."""
    after = outcome.splitting
    problems = []
    try:
        validate_complex(after.forks, after.nodes)
    except ForkError as exc:
        problems.append(f"result is not well formed: {exc}")
    levels = check_exact(after.complex)
    if not isinstance(levels, LevelAssignment):
        problems.append(f"result is not exact: {levels.describe()}")
    else:
        first, second = boundary_partition(after)
        pinned = {vertex(n): 0 for n in first} | {vertex(n): 1 for n in second}
        problems.extend(audit_levels(exactness_digraph(after), levels, pinned))
    e0, e1 = complex_euler(before), complex_euler(after)
    if e0 != e1:
        problems.append(f"Euler characteristic {e0} -> {e1}")
    if e1 != _boundary_euler(after):
        problems.append(f"Euler characteristic {e1} disagrees with the boundary count")
    w0, w1 = width(before), width(after)
    try:
        declared = w0.replace(outcome.removed, outcome.added)
    except ValueError as exc:
        problems.append(str(exc))
    else:
        if declared != w1:
            problems.append(f"declared width {declared} but recomputed {w1}")
    if outcome.expect is not None and compare_width(w1, w0) is not outcome.expect:
        problems.append(f"expected the new width to be {outcome.expect.value}, got "
                        f"{compare_width(w1, w0).value}")
    return problems


def apply_move(gs: GeneralizedSplitting, move: Move
               ) -> tuple[GeneralizedSplitting, MoveReport]:
    outcome = _dispatch(gs, move)
    problems = audit(gs, outcome)
    if problems:
        raise AuditFailed(f"move {move!r} failed its audit: " + "; ".join(problems))
    w0, w1 = width(gs), width(outcome.splitting)
    report = MoveReport(move, w0, w1, compare_width(w1, w0), outcome.removed,
                        outcome.added, complex_euler(outcome.splitting), outcome.notes)
    return outcome.splitting, report
