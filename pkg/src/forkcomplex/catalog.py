"""Worked examples as ready-made splittings.

All entries are closed under :func:`make_splitting`, so they are validated
and exact on construction.  Fork and node ids follow the chain order so the
shipped ``catalog/*.fork`` files read top to bottom.

The trivial splitting of ``F_g x S^1`` has genus ``2g + 1``: drilling a fibre
leaves ``F_g x [0,1]`` with a vertical tube removed, a genus-``2g`` handlebody,
and one more 1-handle closes it up.  For ``g = 1`` this gives a genus-3
splitting of the 3-torus whose weak reduction is the two-stage chain
``T3Untelescoped``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complex import Fork, GeneralizedSplitting, Node, NodeKind, Side, make_splitting
from .errors import BadParameter

A, B = Side.A, Side.B
GRIP, TINE = NodeKind.GRIP, NodeKind.TINE

NAMES = ("Ball1", "Ball2", "ProductTypeI", "ProductTypeII", "CircleBundleTrivial",
         "T3Untelescoped", "F2S1UntelescopedA", "F2S1UntelescopedB",
         "F2S1UntelescopedC")
GENUS_NAMES = frozenset({"ProductTypeI", "ProductTypeII", "CircleBundleTrivial"})


@dataclass(frozen=True)
class CatalogKey:
    name: str
    genus: int | None = None
    variant: int | None = None  # only F2S1UntelescopedC has two (1 and 2)

    def __post_init__(self):
        if self.name not in NAMES:
            raise BadParameter(f"unknown catalog entry {self.name!r}; "
                               f"expected one of {', '.join(NAMES)}")
        g = self.genus
        if self.name in GENUS_NAMES:
            if g is None or isinstance(g, bool) or not isinstance(g, int):
                raise BadParameter(f"{self.name} needs an integer genus")
            low = 1 if self.name == "CircleBundleTrivial" else 0
            if g < low:
                raise BadParameter(f"{self.name} needs genus >= {low}, got {g}")
        elif g is not None:
            raise BadParameter(f"{self.name} takes no genus")
        if self.name == "F2S1UntelescopedC":
            if self.variant not in (None, 1, 2):
                raise BadParameter(f"F2S1UntelescopedC has variants 1 and 2, not {self.variant}")
        elif self.variant is not None:
            raise BadParameter(f"{self.name} has no variants")

    @property
    def file_stem(self) -> str:
        stems = {
            "Ball1": "ball1", "Ball2": "ball2",
            "ProductTypeI": "product_type_i_g{g}", "ProductTypeII": "product_type_ii_g{g}",
            "CircleBundleTrivial": "circle_bundle_trivial_g{g}",
            "T3Untelescoped": "t3_untelescoped",
            "F2S1UntelescopedA": "f2s1_untelescoped_a",
            "F2S1UntelescopedB": "f2s1_untelescoped_b",
            "F2S1UntelescopedC": "f2s1_untelescoped_c{v}",
        }
        return stems[self.name].format(g=self.genus, v=self.variant or 1)


def _chain(spec: list[tuple[str, Side, str, tuple[str, ...]]], labels: dict[str, int]
           ) -> GeneralizedSplitting:
    forks = [Fork(fid, side, grip, tines) for fid, side, grip, tines in spec]
    grips = {f.grip for f in forks}
    nodes = [Node(nid, GRIP if nid in grips else TINE, g) for nid, g in labels.items()]
    return make_splitting(forks, nodes)


def ball1() -> GeneralizedSplitting:
    return _chain([("f1", A, "m", ())], {"m": 0})


def ball2() -> GeneralizedSplitting:
    return _chain([("f1", A, "G", ()), ("f2", B, "G", ("m",))], {"G": 0, "m": 0})


def product_type_i(g: int) -> GeneralizedSplitting:
    return _chain([("f1", A, "G", ("a",)), ("f2", B, "G", ("b",))],
                  {"G": g, "a": g, "b": g})


def product_type_ii(g: int) -> GeneralizedSplitting:
    return _chain([("f1", A, "G", ("a", "b")), ("f2", B, "G", ())],
                  {"G": 2 * g, "a": g, "b": g})


def circle_bundle_trivial(g: int) -> GeneralizedSplitting:
    return _chain([("A1", A, "S", ()), ("B1", B, "S", ())], {"S": 2 * g + 1})


def t3_untelescoped() -> GeneralizedSplitting:
    return _chain([
        ("A1", A, "S1", ()),
        ("B1", B, "S1", ("T1", "T2")),
        ("A2", A, "S2", ("T1", "T2")),
        ("B2", B, "S2", ()),
    ], {"S1": 2, "S2": 2, "T1": 1, "T2": 1})


def f2s1_untelescoped_a() -> GeneralizedSplitting:
    return _chain([
        ("A1", A, "P1", ()),
        ("B1", B, "P1", ("U1", "U2")),
        ("A2", A, "P2", ("U1", "U2")),
        ("B2", B, "P2", ()),
    ], {"P1": 4, "P2": 4, "U1": 2, "U2": 2})


def f2s1_untelescoped_b() -> GeneralizedSplitting:
    return _chain([
        ("A1", A, "P1", ()),
        ("B1", B, "P1", ("U1", "U2")),
        ("A2", A, "P2", ("U1", "U2")),
        ("B2", B, "P2", ("V1",)),
        ("A3", A, "P3", ("V1",)),
        ("B3", B, "P3", ("W1", "W2")),
        ("A4", A, "P4", ("W1", "W2")),
        ("B4", B, "P4", ()),
    ], {"P1": 2, "P2": 2, "P3": 2, "P4": 2,
        "U1": 1, "U2": 1, "V1": 1, "W1": 1, "W2": 1})


def f2s1_untelescoped_c(variant: int = 1) -> GeneralizedSplitting:
    if variant == 1:
        # the two tori below the second level feed separate branches
        spec = [
            ("A1", A, "P1", ()),
            ("B1", B, "P1", ("U1", "U2")),
            ("A2", A, "P2", ("U1",)),
            ("B2", B, "P2", ("V1",)),
            ("A3", A, "P3", ("U2",)),
            ("B3", B, "P3", ("V2",)),
            ("A4", A, "P4", ("V1", "V2")),
            ("B4", B, "P4", ()),
        ]
        labels = {"U1": 1, "U2": 1, "V1": 1, "V2": 1}
    else:
        # one torus bypasses the middle stages
        spec = [
            ("A1", A, "P1", ()),
            ("B1", B, "P1", ("U1", "U2")),
            ("A2", A, "P2", ("U1",)),
            ("B2", B, "P2", ("V1",)),
            ("A3", A, "P3", ("V1",)),
            ("B3", B, "P3", ("W1",)),
            ("A4", A, "P4", ("U2", "W1")),
            ("B4", B, "P4", ()),
        ]
        labels = {"U1": 1, "U2": 1, "V1": 1, "W1": 1}
    labels.update({"P1": 2, "P2": 2, "P3": 2, "P4": 2})
    return _chain(spec, labels)


def build_catalog(key: CatalogKey | str, genus: int | None = None,
                  variant: int | None = None) -> GeneralizedSplitting:
    if isinstance(key, str):
        key = CatalogKey(key, genus, variant)
    name, g = key.name, key.genus
    if name == "Ball1":
        return ball1()
    if name == "Ball2":
        return ball2()
    if name == "ProductTypeI":
        return product_type_i(g)
    if name == "ProductTypeII":
        return product_type_ii(g)
    if name == "CircleBundleTrivial":
        return circle_bundle_trivial(g)
    if name == "T3Untelescoped":
        return t3_untelescoped()
    if name == "F2S1UntelescopedA":
        return f2s1_untelescoped_a()
    if name == "F2S1UntelescopedB":
        return f2s1_untelescoped_b()
    return f2s1_untelescoped_c(key.variant or 1)


def all_keys(genera=range(1, 7)) -> list[CatalogKey]:
    keys = [CatalogKey("Ball1"), CatalogKey("Ball2")]
    for name in ("ProductTypeI", "ProductTypeII", "CircleBundleTrivial"):
        keys.extend(CatalogKey(name, g) for g in genera)
    keys += [CatalogKey("T3Untelescoped"), CatalogKey("F2S1UntelescopedA"),
             CatalogKey("F2S1UntelescopedB"), CatalogKey("F2S1UntelescopedC", variant=1),
             CatalogKey("F2S1UntelescopedC", variant=2)]
    return keys


# Recorded weak-reduction data used by the search examples.

def t3_reduction_assertions() -> list[tuple[str, str]]:
    """Weakly reducing data for the trivial genus-3 splitting of the 3-torus."""
    return [("S", "weakreduce case=NU a=1 b=1")]


def f2s1_second_stage_assertions() -> list[tuple[str, str]]:
    """Reduce each genus-4 level of the first untelescoping to two genus-2 levels.

    The only case reaching genus 2 on both new grips is SS with k=2, g1=2; one
    genus-2 tine has to move to the sphere side so every new body stays valid.
    """
    return [("P1", "weakreduce case=SS k=2 g1=2 g2=0 b_lower=U1"),
            ("P2", "weakreduce case=SS k=2 g1=2 g2=0 a_upper=U2")]
