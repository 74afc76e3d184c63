"""Random complexes and moves for property tests (plain ``random.Random``)."""

from __future__ import annotations

import random

from forkcomplex.complex import (Fork, GeneralizedSplitting, Node, NodeKind, Side,
                                 make_splitting, validate_complex)
from forkcomplex.errors import AuditFailed, ForkError
from forkcomplex.moves import (Case, Shape, WeakReduce, WeakReductionData, apply_move)
from forkcomplex.search import enumerate_moves


def random_structure(rng: random.Random, max_forks: int = 6):
    """Forks in a topological order; every gluing runs from an earlier fork's
    outgoing slot (A grip, B tine) to a later fork's incoming slot (B grip, A tine).
    Returns the forks as (id, side, grip, tines) tuples and the tine ids."""
    n = rng.randint(1, max_forks)
    free_grips: list[str] = []   # unglued A grips
    free_tines: list[str] = []   # unglued B tines
    forks = []
    tine_ids: list[str] = []
    counter = iter(range(10_000))

    def new(prefix):
        return f"{prefix}{next(counter)}"

    for j in range(n):
        choices = []
        if j == 0 or free_grips:
            choices.append(Side.B)
        if j == 0 or free_tines:
            choices.append(Side.A)
        if not choices:
            break
        side = rng.choice(choices)
        fid = f"f{j}"
        if side is Side.B:
            if j > 0:
                grip = free_grips.pop(rng.randrange(len(free_grips)))
            else:
                grip = new("g")
            tines = [new("t") for _ in range(rng.choice([0, 1, 1, 2, 2, 3]))]
            tine_ids += tines
            free_tines += tines
        else:
            tines = []
            if j > 0:
                tines.append(free_tines.pop(rng.randrange(len(free_tines))))
            while free_tines and rng.random() < 0.3:
                tines.append(free_tines.pop(rng.randrange(len(free_tines))))
            for _ in range(rng.choice([0, 0, 1, 1, 2])):
                t = new("t")
                tines.append(t)
                tine_ids.append(t)
            grip = new("g")
            free_grips.append(grip)
        forks.append((fid, side, grip, tuple(tines)))
    return forks, tine_ids


def label_structure(rng: random.Random, forks, tine_ids, max_tine: int = 2):
    tl = {t: rng.randint(0, max_tine) for t in tine_ids}
    need: dict[str, int] = {}
    for _, _, grip, tines in forks:
        need[grip] = max(need.get(grip, 0), sum(tl[t] for t in tines))
    gl = {g: v + rng.choice([0, 0, 1, 1, 2]) for g, v in need.items()}
    nodes = [Node(t, NodeKind.TINE, v) for t, v in tl.items()]
    nodes += [Node(g, NodeKind.GRIP, v) for g, v in gl.items()]
    return [Fork(fid, side, grip, tines) for fid, side, grip, tines in forks], nodes


def random_splitting(rng: random.Random, max_forks: int = 6, max_tine: int = 2
                     ) -> GeneralizedSplitting:
    forks, tine_ids = random_structure(rng, max_forks)
    forks, nodes = label_structure(rng, forks, tine_ids, max_tine)
    return make_splitting(forks, nodes)


def random_well_formed(rng: random.Random, max_forks: int = 6):
    """A well-formed complex that may or may not be exact.

    Half the time the exact complex is returned as is.  Otherwise a 2-fork
    cycle is attached, or one fork changes side, which can create directed
    cycles and wrong-way boundary paths.
    """
    while True:
        gs = random_splitting(rng, max_forks)
        forks, nodes = list(gs.forks), list(gs.nodes)
        if rng.random() < 0.5:
            return gs.complex
        cyc = inject_cycle(rng, gs)
        if cyc is not None and rng.random() < 0.5:
            return cyc
        # flip the side of one fork; keep the result if it still validates
        i = rng.randrange(len(forks))
        f = forks[i]
        forks[i] = Fork(f.id, f.side.other, f.grip, f.tines)
        try:
            return validate_complex(forks, nodes)
        except ForkError:
            continue


def inject_cycle(rng: random.Random, gs: GeneralizedSplitting):
    """Attach an A-fork and a B-fork sharing both a grip and a tine."""
    cx = gs.complex
    free_b_tines = [t.id for t in cx.tines if set(cx.slot_map[t.id]) == {Side.B}]
    free_a_tines = [t.id for t in cx.tines if set(cx.slot_map[t.id]) == {Side.A}]
    if not free_b_tines and not free_a_tines:
        return None
    forks, nodes = list(cx.forks), list(cx.nodes)
    x_tines, y_tines = ["cyc_t"], ["cyc_t"]
    if free_b_tines:
        hook = rng.choice(free_b_tines)
        x_tines.append(hook)
    else:
        hook = rng.choice(free_a_tines)
        y_tines.append(hook)
    h = cx.label(hook)
    nodes += [Node("cyc_t", NodeKind.TINE, 0), Node("cyc_g", NodeKind.GRIP, h + 1)]
    forks += [Fork("cyc_x", Side.A, "cyc_g", tuple(x_tines)),
              Fork("cyc_y", Side.B, "cyc_g", tuple(y_tines))]
    return validate_complex(forks, nodes)


def chain(grips: list[int], prefix: str = "") -> GeneralizedSplitting:
    """Linear stack of levels with the given grip genera, separated by spheres."""
    forks, nodes = [], []
    below = None
    for i, g in enumerate(grips, 1):
        grip = f"{prefix}G{i}"
        nodes.append(Node(grip, NodeKind.GRIP, g))
        forks.append(Fork(f"{prefix}A{i}", Side.A, grip, (below,) if below else ()))
        if i < len(grips):
            below = f"{prefix}s{i}"
            nodes.append(Node(below, NodeKind.TINE, 0))
            forks.append(Fork(f"{prefix}B{i}", Side.B, grip, (below,)))
        else:
            forks.append(Fork(f"{prefix}B{i}", Side.B, grip, ()))
    return make_splitting(forks, nodes)


def random_weak_reduction(rng: random.Random, gs: GeneralizedSplitting):
    """A weak reduction with random case data and tine assignment."""
    interior = [n.id for n in gs.grips if gs.is_interior(n.id)]
    if not interior:
        return None
    grip = rng.choice(interior)
    g = gs.label(grip)
    case = rng.choice(list(Case))
    if case is Case.NN:
        params = ()
    elif case in (Case.NU, Case.NSSEP):
        a = rng.randint(0, max(g - 1, 0))
        params = (a, g - 1 - a)
    else:
        k = rng.randint(0, max(g - 1, 0))
        g1 = rng.randint(0, k)
        params = (k, g1, k - g1)
    fa = gs.fork(gs.slot_map[grip][Side.A])
    fb = gs.fork(gs.slot_map[grip][Side.B])
    a_upper = frozenset(t for t in fa.tines if rng.random() < 0.4)
    b_lower = frozenset(t for t in fb.tines if rng.random() < 0.4)
    shape = rng.choice(list(Shape))
    return WeakReduce(WeakReductionData(grip, case, params, a_upper, b_lower, shape))


def random_valid_moves(rng: random.Random, count: int, max_forks: int = 10):
    """Yield ``count`` successful (before, move, after, report) applications."""
    made = 0
    while made < count:
        if rng.random() < 0.15:
            gs = chain([rng.randint(0, 3) for _ in range(rng.randint(1, max_forks // 2))])
            gs = gs.with_assertions([(t.id, "bounds a ball") for t in gs.tines])
        else:
            gs = random_splitting(rng, max_forks)
        for _ in range(4):
            if rng.random() < 0.4:
                move = random_weak_reduction(rng, gs)
            else:
                options = enumerate_moves(gs)
                move = rng.choice(options).move if options else None
            if move is None:
                break
            try:
                after, report = apply_move(gs, move)
            except AuditFailed:
                raise
            except ForkError:
                continue
            yield gs, move, after, report
            made += 1
            if made >= count or len(after.forks) > max_forks:
                break
            gs = after
