"""Acceptance criteria 1-8, one pass/fail line each.

Run under pytest (lines are repeated in the terminal summary) or directly:
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import io
import random
import shutil
import sys
import tempfile
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import conftest  # noqa: E402
from dotparser import parse_dot  # noqa: E402
from gen import (inject_cycle, random_splitting, random_valid_moves,  # noqa: E402
                 random_well_formed)
from oracles import dfs_exact, levels_ok, sentinel_compare  # noqa: E402

from forkcomplex.canonical import same_complex  # noqa: E402
from forkcomplex.catalog import (all_keys, build_catalog, circle_bundle_trivial,  # noqa: E402
                                 f2s1_second_stage_assertions, f2s1_untelescoped_a,
                                 f2s1_untelescoped_b, f2s1_untelescoped_c,
                                 t3_reduction_assertions, t3_untelescoped)
from forkcomplex.complex import (Fork, Node, NodeKind, Side, boundary_partition,  # noqa: E402
                                 complex_euler, exactness_digraph, make_splitting, vertex)
from forkcomplex.errors import AuditFailed, ForkError  # noqa: E402
from forkcomplex.exactness import Infeasible, LevelAssignment, audit_levels, check_exact  # noqa: E402
from forkcomplex.io import format_complex, parse_complex  # noqa: E402
from forkcomplex.io.cli import run_cli  # noqa: E402
from forkcomplex.io.render import dot_id, render_dot  # noqa: E402
from forkcomplex.moves import (Amalgamate, Case, Destabilize, EliminateSphereTine,  # noqa: E402
                               EliminateTrivialFork, WeakReduce,
                               WeakReductionData, amalgamate, apply_move, destabilize,
                               stabilize, strictly_decreasing_case, weak_reduce)
from forkcomplex.search import (SearchBudget, brute_force_min_width,  # noqa: E402
                                enumerate_moves, thin_search)
from forkcomplex.width import Ordering, compare_width, width  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
CATALOG_DIR = ROOT / "catalog"
FIXTURE_DIR = ROOT / "tests" / "fixtures"
SIGN = {Ordering.LESS: -1, Ordering.EQUAL: 0, Ordering.GREATER: 1}


class Check:
    """Collects failures so every criterion reports a line before asserting."""

    def __init__(self, number: int, limit: float | None = None):
        self.number = number
        self.limit = limit
        self.failures: list[str] = []
        self.facts: list[str] = []
        self.start = time.perf_counter()

    def expect(self, ok: bool, message: str) -> None:
        if not ok and len(self.failures) < 20:
            self.failures.append(message)
        elif not ok:
            self.failures.append("...")

    def note(self, fact: str) -> None:
        self.facts.append(fact)

    def finish(self) -> str:
        elapsed = time.perf_counter() - self.start
        if self.limit is not None:
            self.expect(elapsed < self.limit, f"took {elapsed:.2f}s, limit {self.limit}s")
        status = "FAIL" if self.failures else "PASS"
        parts = [f"ACCEPTANCE {self.number} {status}", f"{elapsed:.2f}s"]
        if self.limit is not None:
            parts[-1] += f" (limit {self.limit:g}s)"
        parts += self.facts
        if self.failures:
            parts.append("failures: " + "; ".join(self.failures[:5]))
        line = " | ".join(parts)
        conftest.ACCEPTANCE_LINES.append(line)
        print(line)
        return line

    def conclude(self) -> None:
        self.finish()
        assert not self.failures, "; ".join(self.failures)


def handlebody_pair(g: int):
    return make_splitting([Fork("A1", Side.A, "S"), Fork("B1", Side.B, "S")],
                          [Node("S", NodeKind.GRIP, g)])


# -- 1 -----------------------------------------------------------------------------------

def criterion_1() -> Check:
    c = Check(1, limit=1.0)
    c.expect(compare_width((5, 3, 2, 2, 2, 1), (5, 4, 1, 1)) is Ordering.LESS, "E1 first pair")
    c.expect(compare_width((3, 1, 0, 0), (3, 1, 0, 0, 0)) is Ordering.LESS, "E1 second pair")
    rng = random.Random(1001)
    pool = [[rng.randint(0, 5) for _ in range(rng.randint(0, 7))] for _ in range(1000)]
    for a, b, d in zip(pool, pool[1:] + pool[:1], pool[2:] + pool[:2]):
        ab, ba = SIGN[compare_width(a, b)], SIGN[compare_width(b, a)]
        c.expect(ab == sentinel_compare(a, b), f"sentinel disagrees on {a} vs {b}")
        c.expect(ab == -ba, f"antisymmetry fails on {a}, {b}")
        c.expect((ab == 0) == (sorted(a) == sorted(b)), f"equality is not multiset equality {a}")
        if ab <= 0 and SIGN[compare_width(b, d)] <= 0:
            c.expect(SIGN[compare_width(a, d)] <= 0, f"transitivity fails {a} {b} {d}")
        c.expect(SIGN[compare_width(a, a)] == 0, f"reflexivity fails {a}")
    c.note("1000 random multisets against the sentinel comparator")
    return c


# -- 2 -----------------------------------------------------------------------------------

def expected_width(key) -> tuple[int, ...]:
    g = key.genus or 0
    return {"Ball1": (0,), "Ball2": (0,), "ProductTypeI": (g,), "ProductTypeII": (2 * g,),
            "CircleBundleTrivial": (2 * g + 1,), "T3Untelescoped": (2, 2),
            "F2S1UntelescopedA": (4, 4), "F2S1UntelescopedB": (2, 2, 2, 2),
            "F2S1UntelescopedC": (2, 2, 2, 2)}[key.name]


def criterion_2() -> Check:
    c = Check(2, limit=1.0)
    keys = all_keys(range(1, 7))
    for key in keys:
        try:
            gs = build_catalog(key)
        except ForkError as exc:
            c.expect(False, f"{key.file_stem}: {exc}")
            continue
        c.expect(isinstance(check_exact(gs), LevelAssignment), f"{key.file_stem} not exact")
        c.expect(width(gs).entries == expected_width(key),
                 f"{key.file_stem} width {width(gs)}")
    a = f2s1_untelescoped_a()
    c.expect(sorted(n.label for n in a.grips) == [4, 4], "F2S1 A grips are not genus 4")
    c.expect(sorted(n.label for n in a.tines) == [2, 2], "F2S1 A tines are not genus 2")
    for gs in (f2s1_untelescoped_b(), f2s1_untelescoped_c(1), f2s1_untelescoped_c(2)):
        c.expect(all(n.label == 2 for n in gs.grips), "F2S1 second stage grips are not genus 2")
    c.note(f"{len(keys)} entries for g = 1..6")
    return c


# -- 3 -----------------------------------------------------------------------------------

def every_move(gs):
    """Every enumerated move, permitted or not, that applies."""
    for option in enumerate_moves(gs):
        try:
            yield apply_move(gs, option.move)
        except AuditFailed:
            raise
        except ForkError:
            continue


def criterion_3() -> Check:
    c = Check(3)
    applied = 0
    for key in all_keys(range(1, 7)):
        gs = build_catalog(key)
        chi = complex_euler(gs)
        if key.name.startswith("Ball"):
            want = 1
        elif key.name.startswith("Product"):
            want = 2 - 2 * key.genus
        else:
            want = 0
        c.expect(chi == want, f"{key.file_stem}: euler {chi}, expected {want}")
        for after, report in every_move(gs):
            applied += 1
            c.expect(complex_euler(after) == chi == report.euler,
                     f"{key.file_stem}: {report.move} changed euler")
    extra = [(circle_bundle_trivial(1), t3_reduction_assertions()),
             (f2s1_untelescoped_a(), f2s1_second_stage_assertions())]
    for gs, assertions in extra:
        gs = gs.with_assertions(assertions)
        for after, report in every_move(gs):
            applied += 1
            c.expect(complex_euler(after) == complex_euler(gs), f"{report.move} changed euler")
    rng = random.Random(3003)
    count = 0
    for before, move, after, report in random_valid_moves(rng, 1000, max_forks=10):
        count += 1
        c.expect(len(before.forks) <= 10, "random input larger than 10 forks")
        c.expect(complex_euler(after) == complex_euler(before),
                 f"{move} changed euler on a random complex")
    c.expect(count == 1000, f"only {count} random moves")
    c.note(f"{applied} catalog moves, {count} random moves")
    return c


# -- 4 -----------------------------------------------------------------------------------

def reduction_cases(g: int):
    if g >= 2:
        yield Case.NN, ()
    for a in range(g):
        yield Case.NU, (a, g - 1 - a)


def stab_round_trips(c: Check, gs, label: str) -> int:
    done = 0
    for n in gs.grips:
        if not gs.is_interior(n.id):
            continue
        c.expect(same_complex(destabilize(stabilize(gs, n.id), n.id), gs),
                 f"{label}: destabilize after stabilize at {n.id}")
        done += 1
        try:
            lowered = destabilize(gs, n.id)
        except ForkError:
            continue
        c.expect(same_complex(stabilize(lowered, n.id), gs),
                 f"{label}: stabilize after destabilize at {n.id}")
        done += 1
    return done


def adjacent_pairs(gs):
    cx = gs.complex
    interior = [n.id for n in gs.grips if gs.is_interior(n.id)]
    for lo in interior:
        for hi in interior:
            if lo == hi:
                continue
            b1 = cx.fork(cx.slot_map[lo][Side.B])
            a2 = cx.fork(cx.slot_map[hi][Side.A])
            shared = set(b1.tines) & set(a2.tines)
            if shared:
                yield lo, hi, shared, frozenset(set(a2.tines) - shared), \
                    frozenset(set(b1.tines) - shared)


def criterion_4() -> Check:
    c = Check(4)
    identities = 0
    for g in range(1, 7):
        base = handlebody_pair(g)
        for case, params in reduction_cases(g):
            label = f"g={g} {case.value}{params}"
            reduced = weak_reduce(base, WeakReductionData("S", case, params))
            merged = amalgamate(reduced, ("S.1", "S.2"))
            c.expect(same_complex(merged, base), f"{label}: amalgamate after weak_reduce")
            again = weak_reduce(merged, WeakReductionData("S", case, params))
            c.expect(same_complex(again, reduced), f"{label}: weak_reduce after amalgamate")
            identities += 2 + stab_round_trips(c, reduced, label)
        identities += stab_round_trips(c, base, f"g={g}")
    fixtures = {"T3": t3_untelescoped(), "F2S1-A": f2s1_untelescoped_a(),
                "F2S1-B": f2s1_untelescoped_b(), "F2S1-C1": f2s1_untelescoped_c(1),
                "F2S1-C2": f2s1_untelescoped_c(2)}
    for name, gs in fixtures.items():
        pairs = 0
        for lo, hi, shared, a_upper, b_lower in adjacent_pairs(gs):
            try:
                merged = amalgamate(gs, (lo, hi), shared)
            except ForkError:  # e.g. a non-consecutive pair would close a cycle
                continue
            genus = merged.label(lo)
            candidates = [(case, params) for case, params in reduction_cases(genus)
                          if (case is Case.NN and len(shared) == 1)
                          or (case is Case.NU and len(shared) == 2
                              and sorted(params) == sorted(gs.label(t) for t in shared))]
            back = None
            for case, params in candidates:
                try:
                    back = weak_reduce(merged, WeakReductionData(lo, case, params,
                                                                 a_upper, b_lower))
                except ForkError:
                    continue
                if same_complex(back, gs):
                    break
            c.expect(back is not None and same_complex(back, gs),
                     f"{name}: weak_reduce after amalgamate at {lo},{hi}")
            identities += 1
            pairs += 1
        c.expect(pairs > 0, f"{name}: no amalgamable pair")
        identities += stab_round_trips(c, gs, name)
    c.note(f"{identities} canonical identities")
    return c


# -- 5 -----------------------------------------------------------------------------------

def is_cycle(graph, path) -> bool:
    edges = set(graph.edges)
    return len(path) >= 2 and path[0] == path[-1] and \
        all((u, v) in edges for u, v in zip(path, path[1:]))


def criterion_5() -> Check:
    c = Check(5, limit=5.0)
    rng = random.Random(5005)
    accepted = 0
    for _ in range(1000):
        cx = random_well_formed(rng, 8)
        res = check_exact(cx)
        ours = isinstance(res, LevelAssignment)
        c.expect(ours == dfs_exact(cx), "disagrees with the pinned-path checker")
        if ours:
            accepted += 1
            first, second = boundary_partition(cx)
            pinned = {vertex(n): 0 for n in first} | {vertex(n): 1 for n in second}
            problems = audit_levels(exactness_digraph(cx), res, pinned)
            c.expect(not problems and levels_ok(cx, res.levels), f"audit: {problems[:1]}")
    injected = 0
    while injected < 200:
        cx = inject_cycle(rng, random_splitting(rng, 6))
        if cx is None:
            continue
        injected += 1
        res = check_exact(cx)
        c.expect(isinstance(res, Infeasible) and res.kind == "cycle"
                 and is_cycle(exactness_digraph(cx), res.path), "injected cycle not witnessed")
    c.note(f"1000 complexes ({accepted} exact), {injected} injected 2-fork cycles")
    return c


# -- 6 -----------------------------------------------------------------------------------

def decreasing(move, gs) -> bool:
    if isinstance(move, (Destabilize, EliminateSphereTine, EliminateTrivialFork)):
        return True
    if isinstance(move, WeakReduce):
        return strictly_decreasing_case(move.data.case, move.data.params)
    return False


def criterion_6() -> Check:
    c = Check(6)
    seen = 0
    for key in all_keys(range(1, 7)):
        gs = build_catalog(key)
        for _after, report in every_move(gs):
            if decreasing(report.move, gs):
                seen += 1
                c.expect(report.comparison is Ordering.LESS, f"{report.move}: {report.summary()}")
    for before, move, _after, report in random_valid_moves(random.Random(6006), 1000):
        if decreasing(move, before):
            seen += 1
            c.expect(report.comparison is Ordering.LESS, f"{move}: {report.summary()}")
    t3, r1 = apply_move(circle_bundle_trivial(1),
                        WeakReduce(WeakReductionData("S", Case.NU, (1, 1))))
    back, r2 = apply_move(t3, Amalgamate(("S.1", "S.2")))
    c.expect(r1.summary() == "{3} -> {2,2} LESS", r1.summary())
    c.expect(r2.summary() == "{2,2} -> {3} GREATER", r2.summary())
    c.expect(same_complex(t3, t3_untelescoped()), "pipeline middle is not the T3 entry")
    c.expect(same_complex(back, circle_bundle_trivial(1)), "pipeline does not return")
    c.note(f"{seen} decreasing moves; T3 pipeline {{3}} -> {{2,2}} -> {{3}}")
    return c


# -- 7 -----------------------------------------------------------------------------------

# Stabilization never runs out, so the brute-force closure is cut at a depth.
# It always gets at least one step more than the thin trace: enough to reach
# the thin result and to try every permitted move from there.
CATALOG_DEPTH = 5  # longest thin trace on the catalog is 4
MIN_RANDOM_DEPTH = 3


def criterion_7() -> Check:
    c = Check(7, limit=60.0)
    cases = [(k.file_stem, build_catalog(k), ()) for k in all_keys(range(1, 7))]
    cases += [("circle_bundle_trivial_g1+NU", circle_bundle_trivial(1),
               t3_reduction_assertions()),
              ("f2s1_untelescoped_a+second-stage", f2s1_untelescoped_a(),
               f2s1_second_stage_assertions())]
    for name, gs, assertions in cases:
        thin = thin_search(gs, assertions=assertions)
        c.expect(len(thin.trace) < CATALOG_DEPTH, f"{name}: thin trace longer than oracle depth")
        best = brute_force_min_width(gs, SearchBudget(max_depth=CATALOG_DEPTH,
                                                      max_states=200_000), assertions)
        c.expect(best == thin.width, f"{name}: thin {thin.width}, brute force {best}")
    rng = random.Random(7007)
    done = longest = 0
    while done < 200:
        gs = random_splitting(rng, 8)
        if not isinstance(check_exact(gs), LevelAssignment):
            continue
        done += 1
        thin = thin_search(gs)
        longest = max(longest, len(thin.trace))
        depth = max(MIN_RANDOM_DEPTH, len(thin.trace) + 1)
        best = brute_force_min_width(gs, SearchBudget(max_depth=depth, max_states=200_000))
        c.expect(best == thin.width, f"random: thin {thin.width}, brute force {best}\n"
                 + format_complex(gs))
    one = thin_search(circle_bundle_trivial(1), assertions=t3_reduction_assertions())
    c.expect(len(one.trace) == 1 and one.width.entries == (2, 2),
             f"CircleBundleTrivial(1) gave {one.width} in {len(one.trace)} moves")
    c.note(f"{len(cases)} catalog cases, {done} random (longest thin trace {longest})")
    return c


# -- 8 -----------------------------------------------------------------------------------

MOVE_SPECS = [
    "stabilize grip=S1", "stabilize grip=G", "stabilize grip=m", "destabilize grip=S",
    "weakreduce grip=S case=NU a=1 b=1", "weakreduce grip=S case=NN", "weakreduce grip=P1 "
    "case=SS k=2 g1=2 g2=0 b_lower=U1", "amalgamate grips=S1,S2", "amalgamate grips=P1,P2",
    "eliminate-sphere tine=s1 ball=A1,B1", "eliminate-trivial fork=f1 variant=merge",
    "eliminate-trivial fork=f2 variant=boundary", "weakreduce grip=S case=ZZ", "stabilize",
    "frob", "", "amalgamate grips=S1", "weakreduce grip=S case=NU a=x b=1",
]
NAMES = ["Ball1", "ball2", "ProductTypeI", "product-type-ii", "CircleBundleTrivial",
         "T3Untelescoped", "f2s1_untelescoped_a", "F2S1UntelescopedB", "f2s1-untelescoped-c2",
         "F2S1UntelescopedC", "Klein", ""]
JUNK = ["", "-", "--", "-x", "--json", "--genus", "--move", "-o", "\x00", "é", "--help",
        "1", "-1", "99999999999999999999", "nan", "a=b", " ", "--max-states=2"]


def random_argv(rng: random.Random, files: list[str], tmp: Path) -> list[str]:
    def a_file() -> str:
        return rng.choice(files + [str(tmp / "missing.fork"), str(tmp), "", "-"])

    def an_int() -> str:
        return rng.choice(["0", "1", "2", "3", "-1", "x", "100", "1.5"])

    cmd = rng.choice(["validate", "width", "compare", "apply", "search", "render",
                      "catalog", "frob", "", "--json", "-h"])
    argv = [cmd]
    if cmd in ("validate", "width", "render", "apply", "search"):
        argv.append(a_file())
    elif cmd == "compare":
        argv += [a_file(), a_file()]
    elif cmd == "catalog":
        argv.append(rng.choice(NAMES))
        if rng.random() < 0.6:
            argv += ["--genus", an_int()]
        if rng.random() < 0.3:
            argv += ["--variant", an_int()]
    if cmd == "apply":
        for _ in range(rng.randint(0, 3)):
            argv += ["--move", rng.choice(MOVE_SPECS)]
    if cmd == "search":
        if rng.random() < 0.5:
            argv += ["--max-depth", an_int()]
        argv += ["--max-states", rng.choice(["1", "5", "30", "0", "x"])]
        if rng.random() < 0.3:
            argv.append("--allow-nondecreasing")
        for _ in range(rng.randint(0, 2)):
            argv += ["--assert", rng.choice(["S=weakreduce case=NU a=1 b=1", "S1=stabilized",
                                             "zz=x", "bad", "=x"])]
    if cmd == "render" and rng.random() < 0.5:
        argv += ["--format", rng.choice(["dot", "svg", "png"])]
    if cmd in ("apply", "search", "render", "catalog") and rng.random() < 0.2:
        argv += ["-o", str(tmp / rng.choice(["out.fork", "sub/none/out.fork"]))]
    if rng.random() < 0.3:
        argv.append("--json")
    for _ in range(rng.choices([0, 1, 2], [6, 3, 1])[0]):
        argv.insert(rng.randint(0, len(argv)), rng.choice(JUNK))
    return argv


def criterion_8() -> Check:
    c = Check(8)
    stable = 0
    for path in sorted(CATALOG_DIR.glob("*.fork")) + sorted(FIXTURE_DIR.glob("e1*.fork")):
        text = path.read_text()
        c.expect(format_complex(parse_complex(text)) == text, f"{path.name} not byte-stable")
        stable += 1
    for key in all_keys(range(1, 7)):
        gs = build_catalog(key)
        dot = parse_dot(render_dot(gs))
        graph = exactness_digraph(gs)
        c.expect(set(dot.edges) == {(dot_id(u), dot_id(v)) for u, v in graph.edges}
                 and len(dot.edges) == len(graph.edges), f"{key.file_stem}: DOT edges")
    codes: dict[int, int] = {}
    with tempfile.TemporaryDirectory() as d:
        tmp = Path(d)
        files = []
        for path in sorted(CATALOG_DIR.glob("*.fork")) + sorted(FIXTURE_DIR.glob("*.fork")):
            shutil.copy(path, tmp / path.name)
            files.append(str(tmp / path.name))
        rng = random.Random(8008)
        for _ in range(10_000):
            argv = random_argv(rng, files, tmp)
            out, err = io.StringIO(), io.StringIO()
            try:
                code = run_cli(argv, out, err)
            except BaseException as exc:  # a crash is exactly what this looks for
                c.expect(False, f"{argv!r} raised {type(exc).__name__}: {exc}")
                continue
            codes[code] = codes.get(code, 0) + 1
            c.expect(code in (0, 1, 2), f"{argv!r} exited {code}")
            c.expect("Traceback" not in err.getvalue(), f"{argv!r} printed a traceback")
    c.expect(set(codes) == {0, 1, 2}, f"exit codes seen: {sorted(codes)}")
    documented = [
        (["width", str(CATALOG_DIR / "t3_untelescoped.fork")], 0),
        (["validate", str(FIXTURE_DIR / "cycle.fork")], 1),
        (["catalog", "Klein"], 1),
        (["search", str(CATALOG_DIR / "t3_untelescoped.fork"), "--allow-nondecreasing",
          "--max-states", "2"], 1),
        (["validate", str(FIXTURE_DIR / "bad_syntax.fork")], 2),
        (["width"], 2),
        (["width", str(FIXTURE_DIR / "missing.fork")], 2),
    ]
    for argv, want in documented:
        got = run_cli(argv, io.StringIO(), io.StringIO())
        c.expect(got == want, f"{argv[0]} exited {got}, expected {want}")
    c.note(f"{stable} fixtures byte-stable; fuzz exit codes {dict(sorted(codes.items()))}")
    return c


def test_criterion_1():
    criterion_1().conclude()


def test_criterion_2():
    criterion_2().conclude()


def test_criterion_3():
    criterion_3().conclude()


def test_criterion_4():
    criterion_4().conclude()


def test_criterion_5():
    criterion_5().conclude()


def test_criterion_6():
    criterion_6().conclude()


def test_criterion_7():
    criterion_7().conclude()


def test_criterion_8():
    criterion_8().conclude()


if __name__ == "__main__":
    results = [f().finish() for f in (criterion_1, criterion_2, criterion_3, criterion_4,
                                      criterion_5, criterion_6, criterion_7, criterion_8)]
    sys.exit(0 if all(" PASS " in r for r in results) else 1)
