"""Genus-level algebra of compression bodies and closed orientable surfaces.

A compression body is recorded only by the genera of its boundary: the genus
of the positive boundary and the multiset of genera of the negative boundary
components.  Handle structure is not kept; every move in this package only
needs the genus arithmetic.

Realizability.  ``sum(minus) <= plus`` is necessary and sufficient.  A body
is built from ``F x [0,1]`` (``genus(F) = plus``) by 2-handles and 3-handles.
A 2-handle along a non-separating curve lowers the total genus by one, along a
separating curve it splits a component ``h`` into ``a + b = h``; capping a
sphere removes a genus-0 component.  None of these raise the total genus, so
the inequality is necessary.  Conversely any multiset with total at most
``plus`` is reached by first splitting off the requested components with
separating curves, then killing the surplus genus with non-separating curves
(and splitting spheres off spheres when more components are wanted).

All arithmetic is on integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import BadSplit, GenusOverflow, MissingComponent, NoEssentialCurve

Genus = int


def _check_genus(value, what: str = "genus") -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ValueError(f"{what} must be a non-negative integer, got {value!r}")
    return value


@dataclass(frozen=True, order=True)
class CompressionBody:
    plus_genus: int
    minus_genera: tuple[int, ...] = ()

    def __post_init__(self):
        _check_genus(self.plus_genus, "plus genus")
        minus = tuple(sorted((_check_genus(g, "minus genus") for g in self.minus_genera),
                             reverse=True))
        object.__setattr__(self, "minus_genera", minus)

    @property
    def is_handlebody(self) -> bool:
        return not self.minus_genera

    @property
    def is_trivial(self) -> bool:
        return self.minus_genera == (self.plus_genus,)

    @property
    def is_reducible(self) -> bool:
        return 0 in self.minus_genera

    def __str__(self) -> str:
        minus = ",".join(map(str, self.minus_genera))
        return f"({self.plus_genus},{{{minus}}})"


@dataclass(frozen=True)
class BodyFlags:
    handlebody: bool
    trivial: bool
    reducible: bool


def validate_body(plus_genus: int, minus_genera: Iterable[int] = ()) -> CompressionBody:
    """Return the compression body with the given boundary genera.

    Raises :class:`GenusOverflow` when the negative boundary carries more
    genus than the positive boundary.
    """
    body = CompressionBody(plus_genus, tuple(minus_genera))
    total = sum(body.minus_genera)
    if total > body.plus_genus:
        raise GenusOverflow(
            f"sum of minus genera exceeds plus genus: {total} > {body.plus_genus}")
    return body


def classify_body(body: CompressionBody) -> BodyFlags:
    return BodyFlags(handlebody=body.is_handlebody,
                     trivial=body.is_trivial,
                     reducible=body.is_reducible)


def minimal_meridian_count(body: CompressionBody) -> int:
    """Number of disks in a minimal complete meridian system."""
    if body.is_handlebody:
        return body.plus_genus
    return body.plus_genus - sum(body.minus_genera) + len(body.minus_genera) - 1


def body_euler(body: CompressionBody) -> int:
    # chi(C) = chi(boundary C) / 2
    return (1 - body.plus_genus) + sum(1 - g for g in body.minus_genera)


def surface_euler(genus: int) -> int:
    return 2 - 2 * genus


# -- surgery and tubing ------------------------------------------------------

@dataclass(frozen=True)
class NonSeparating:
    pass


@dataclass(frozen=True)
class Separating:
    a: int
    b: int

    def __post_init__(self):
        _check_genus(self.a)
        _check_genus(self.b)
        # unordered pair
        if self.a < self.b:
            a, b = self.a, self.b
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)


SurgeryKind = Union[NonSeparating, Separating]


def surger_genus(g: int, kind: SurgeryKind) -> tuple[int, ...]:
    """Genera of the surface obtained from a genus-``g`` surface by surgery
    along one essential curve."""
    _check_genus(g)
    if isinstance(kind, NonSeparating):
        if g == 0:
            raise NoEssentialCurve("a sphere has no non-separating curve")
        return (g - 1,)
    if isinstance(kind, Separating):
        if kind.a + kind.b != g:
            raise BadSplit(f"split {kind.a}+{kind.b} does not add up to genus {g}")
        return (kind.a, kind.b)
    raise TypeError(f"unknown surgery kind {kind!r}")


@dataclass(frozen=True)
class SelfTube:
    """A 1-handle with both feet on the same component."""
    g: int


@dataclass(frozen=True)
class JoinTube:
    """A 1-handle joining two distinct components."""
    a: int
    b: int


Attachment = Union[SelfTube, JoinTube]


def tube_genera(components: Iterable[int], attachment: Attachment) -> tuple[int, ...]:
    """Attach one 1-handle to a disjoint union of surfaces.

    Returns the resulting genera, sorted non-increasingly.
    """
    pool = Counter(_check_genus(g) for g in components)
    if isinstance(attachment, SelfTube):
        wanted = Counter([attachment.g])
        added = attachment.g + 1
    elif isinstance(attachment, JoinTube):
        wanted = Counter([attachment.a, attachment.b])
        added = attachment.a + attachment.b
    else:
        raise TypeError(f"unknown attachment {attachment!r}")
    if wanted - pool:
        missing = sorted((wanted - pool).elements())
        raise MissingComponent(f"no component of genus {missing} to attach to")
    pool -= wanted
    pool[added] += 1
    return tuple(sorted(pool.elements(), reverse=True))
