"""Move enumeration and search for move-minimal splittings.

"Thin" here means *move-minimal relative to the supplied assertions*: no
permitted move lowers the width any further.  Nothing is claimed about the
minimum over all generalized splittings of the manifold.

A move is permitted when it needs no assertion, or when the assertion it
relies on has been recorded:

* destabilize needs ``"stabilized"`` on the grip,
* sphere elimination needs ``"bounds a ball"`` on the tine,
* weak reduction needs recorded data ``"weakreduce case=... ..."`` on the grip.

Weak reductions that cannot lower the width are never permitted.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import count
from typing import Iterable, Iterator

from .canonical import canonical
from .complex import GeneralizedSplitting, Side, induced_body
from .errors import AuditFailed, BadParameter, BudgetExceeded, ForkError
from .io.dsl import weak_reduction_from_assertion
from .moves import (BOUNDS_BALL, CASE_ORDER, STABILIZED, Amalgamate, Case, Destabilize,
                    EliminateSphereTine, EliminateTrivialFork, Move, MoveReport, Stabilize,
                    TrivialVariant, WeakReduce, WeakReductionData, _amalgamate,
                    _component, _destabilize, _eliminate_sphere_tine,
                    _eliminate_trivial_fork, apply_move, strictly_decreasing_case)
from .width import Ordering, WidthMultiset, width


@dataclass(frozen=True)
class SearchBudget:
    max_depth: int = 8
    max_states: int = 10_000
    allow_nondecreasing: bool = False

    def __post_init__(self):
        if self.max_depth < 0:
            raise BadParameter(f"max_depth must be >= 0, got {self.max_depth}")
        if self.max_states < 1:
            raise BadParameter(f"max_states must be >= 1, got {self.max_states}")


@dataclass(frozen=True)
class MoveOption:
    move: Move
    flags: tuple[str, ...] = ()  # "assertion-required", "non-decreasing"

    @property
    def permitted(self) -> bool:
        return not self.flags


@dataclass(frozen=True)
class SearchResult:
    splitting: GeneralizedSplitting
    trace: tuple[MoveReport, ...]
    budget_exceeded: bool = False
    states: int = 0

    @property
    def width(self) -> WidthMultiset:
        return width(self.splitting)

    @property
    def moves(self) -> tuple[Move, ...]:
        return tuple(r.move for r in self.trace)


def _case_params(g: int) -> Iterator[tuple[Case, tuple[int, ...]]]:
    for case in CASE_ORDER:
        if case is Case.NN:
            if g >= 2:
                yield case, ()
        elif case is Case.NU:
            for a in range((g - 1) // 2 + 1) if g >= 1 else ():
                yield case, (a, g - 1 - a)
        elif case is Case.NSSEP:
            for a in range(g):
                yield case, (a, g - 1 - a)
        else:
            for k in range(g):
                for g1 in range(k + 1):
                    yield case, (k, g1, k - g1)


def _works(fn, *args) -> bool:
    try:
        fn(*args)
    except ForkError:
        return False
    return True


def enumerate_moves(gs: GeneralizedSplitting,
                    assertions: Iterable[tuple[str, str]] = ()) -> list[MoveOption]:
    """Structurally applicable moves in canonical order, flagged when not permitted."""
    if assertions:
        gs = gs.with_assertions(assertions)
    cx = gs.complex
    canon = canonical(cx)
    npos = {nid: i for i, nid in enumerate(canon.node_order)}
    fpos = {fid: i for i, fid in enumerate(canon.fork_order)}
    grips = sorted((n.id for n in cx.grips), key=npos.__getitem__)
    interior = [g for g in grips if cx.is_interior(g)]

    def asserted(node: str, text: str) -> bool:
        return text in gs.assertions_on(node)

    out: list[MoveOption] = [MoveOption(Stabilize(g)) for g in grips]

    for g in interior:
        if cx.label(g) >= 1 and _works(_destabilize, gs, g):
            flags = () if asserted(g, STABILIZED) else ("assertion-required",)
            out.append(MoveOption(Destabilize(g), flags))

    for g in interior:
        recorded = [d for d in (weak_reduction_from_assertion(g, t)
                                for t in gs.assertions_on(g)) if d is not None]
        plain = {(d.case, d.params) for d in recorded
                 if not d.a_upper and not d.b_lower and d.shape.value == "chain"}
        for case, params in _case_params(cx.label(g)):
            if (case, params) in plain:
                continue
            flags = ["assertion-required"]
            if not strictly_decreasing_case(case, params):
                flags.append("non-decreasing")
            out.append(MoveOption(WeakReduce(WeakReductionData(g, case, params)),
                                  tuple(flags)))
        for d in sorted(recorded, key=lambda d: (CASE_ORDER.index(d.case), d.params,
                                                 sorted(d.a_upper), sorted(d.b_lower),
                                                 d.shape.value)):
            flags = () if strictly_decreasing_case(d.case, d.params) else ("non-decreasing",)
            out.append(MoveOption(WeakReduce(d), flags))

    for lo in interior:
        for hi in interior:
            if lo == hi:
                continue
            b1 = cx.fork(cx.slot_map[lo][Side.B])
            a2 = cx.fork(cx.slot_map[hi][Side.A])
            shared = frozenset(b1.tines) & frozenset(a2.tines)
            if shared and _works(_amalgamate, gs, (lo, hi), shared):
                out.append(MoveOption(Amalgamate((lo, hi), shared)))

    spheres = sorted((n.id for n in cx.tines if n.label == 0 and cx.is_interior(n.id)),
                     key=npos.__getitem__)
    for t in spheres:
        for side in (Side.A, Side.B):
            ball = frozenset(_component(cx, {cx.slot_map[t][side]}, t))
            if _works(_eliminate_sphere_tine, gs, t, ball):
                flags = () if asserted(t, BOUNDS_BALL) else ("assertion-required",)
                out.append(MoveOption(EliminateSphereTine(t, ball), flags))

    for f in sorted(cx.forks, key=lambda f: fpos[f.id]):
        if not induced_body(cx, f.id).is_trivial:
            continue
        for variant in TrivialVariant:
            if _works(_eliminate_trivial_fork, gs, f.id, variant):
                out.append(MoveOption(EliminateTrivialFork(f.id, variant)))
    return out


def state_key(gs: GeneralizedSplitting) -> tuple:
    """Deduplication key: canonical form plus assertions at canonical positions."""
    canon = canonical(gs.complex)
    npos = {nid: i for i, nid in enumerate(canon.node_order)}
    return canon.encoding, tuple(sorted((npos[n], t) for n, t in gs.assertions))


def successors(gs: GeneralizedSplitting
               ) -> Iterator[tuple[GeneralizedSplitting, MoveReport]]:
    for option in enumerate_moves(gs):
        if not option.permitted:
            continue
        try:
            yield apply_move(gs, option.move)
        except AuditFailed:
            raise
        except ForkError:
            continue


def thin_search(gs: GeneralizedSplitting, budget: SearchBudget | None = None,
                assertions: Iterable[tuple[str, str]] = ()) -> SearchResult:
    """Best-first search for the smallest width reachable by permitted moves.

    Priority is (width, trace length, canonical key).  Without
    ``allow_nondecreasing`` only width-decreasing moves are followed, so every
    trace is strictly decreasing.  The whole reachable set is explored within
    the budget and the smallest state found is returned.
    """
    budget = budget or SearchBudget()
    start = gs.with_assertions(assertions)
    tie = count()
    k0 = state_key(start)
    heap = [(width(start).entries, 0, k0, next(tie), start, ())]
    seen = {k0}
    best = None
    expanded = 0
    exceeded = False
    while heap:
        w, depth, key, _, state, trace = heapq.heappop(heap)
        if best is None or (w, depth, key) < best[0]:
            best = ((w, depth, key), state, trace)
        if expanded >= budget.max_states:
            exceeded = True
            break
        expanded += 1
        for nxt, report in successors(state):
            if not budget.allow_nondecreasing and report.comparison is not Ordering.LESS:
                continue
            if depth >= budget.max_depth:
                exceeded = True
                break
            k = state_key(nxt)
            if k in seen:
                continue
            seen.add(k)
            heapq.heappush(heap, (width(nxt).entries, depth + 1, k, next(tie), nxt,
                                  trace + (report,)))
    _, state, trace = best
    return SearchResult(state, trace, exceeded, expanded)


def brute_force_min_width(gs: GeneralizedSplitting, budget: SearchBudget | None = None,
                          assertions: Iterable[tuple[str, str]] = ()) -> WidthMultiset:
    """Breadth-first closure over every permitted move, up to ``max_depth`` steps.

    Raises :class:`BudgetExceeded` (carrying the best width so far) once more
    than ``max_states`` distinct states have been generated.
    """
    budget = budget or SearchBudget()
    start = gs.with_assertions(assertions)
    seen = {state_key(start)}
    best = width(start)
    frontier = [start]
    for _ in range(budget.max_depth):
        nxt_frontier = []
        for state in frontier:
            for nxt, _report in successors(state):
                k = state_key(nxt)
                if k in seen:
                    continue
                seen.add(k)
                if len(seen) > budget.max_states:
                    raise BudgetExceeded(
                        f"more than {budget.max_states} states; best width so far {best}",
                        best=best)
                best = min(best, width(nxt))
                nxt_frontier.append(nxt)
        if not nxt_frontier:
            break
        frontier = nxt_frontier
    return best
