"""Width of a splitting and the total order on finite multisets of genera."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import Iterable

from .complex import ComplexLike, as_complex


class Ordering(str, Enum):
    LESS = "LESS"
    EQUAL = "EQUAL"
    GREATER = "GREATER"

    @property
    def symbol(self) -> str:
        return {"LESS": "<", "EQUAL": "=", "GREATER": ">"}[self.value]


@total_ordering
@dataclass(frozen=True)
class WidthMultiset:
    """A finite multiset of non-negative integers.

    ``entries`` is kept sorted non-increasingly, which is also the comparison
    key: Python's tuple order is lexicographic with a proper prefix sorting
    first, exactly the order wanted here.
    """

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        for e in self.entries:
            if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                raise ValueError(f"width entries must be non-negative integers: {e!r}")
        object.__setattr__(self, "entries", tuple(sorted(self.entries, reverse=True)))

    @classmethod
    def of(cls, values: Iterable[int]) -> "WidthMultiset":
        return cls(tuple(values))

    def __lt__(self, other: "WidthMultiset") -> bool:
        if not isinstance(other, WidthMultiset):
            return NotImplemented
        return self.entries < other.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def counter(self) -> Counter:
        return Counter(self.entries)

    def replace(self, removed: Iterable[int], added: Iterable[int]) -> "WidthMultiset":
        """Multiset difference then union; raises if ``removed`` is not contained."""
        pool = self.counter()
        gone = Counter(removed)
        if gone - pool:
            raise ValueError(f"cannot remove {sorted(gone.elements())} from {self}")
        pool -= gone
        pool.update(added)
        return WidthMultiset(tuple(pool.elements()))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.entries)) + "}"


def compare_width(w1: WidthMultiset | Iterable[int], w2: WidthMultiset | Iterable[int]
                  ) -> Ordering:
    if not isinstance(w1, WidthMultiset):
        w1 = WidthMultiset.of(w1)
    if not isinstance(w2, WidthMultiset):
        w2 = WidthMultiset.of(w2)
    if w1.entries < w2.entries:
        return Ordering.LESS
    if w1.entries > w2.entries:
        return Ordering.GREATER
    return Ordering.EQUAL


def width(gs: ComplexLike) -> WidthMultiset:
    """Multiset of grip genera, one entry per grip node."""
    return WidthMultiset.of(n.label for n in as_complex(gs).grips)
