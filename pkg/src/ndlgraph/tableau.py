"""Neighborhood degree lists (tableaux) and the lists derived from them.

A tableau is stored row by row; row ``i`` is the list of degrees of the
neighbors of vertex ``i`` in descending order.  Row order is kept as given,
so a tableau read from a graph is *labeled*; :func:`canonicalize` produces
the unlabeled form.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from ._bits import bits
from .errors import InfeasibleTableauError
from .graph import Graph


class Tableau(tuple):
    """A tuple of rows, each a tuple of nonnegative ints sorted descending."""

    __slots__ = ()

    def __new__(cls, rows: Iterable[Iterable[int]] = ()):
        norm = []
        for row in rows:
            r = tuple(sorted((int(x) for x in row), reverse=True))
            if r and r[-1] < 0:
                raise ValueError(f"negative entry in row {r}")
            norm.append(r)
        return tuple.__new__(cls, norm)

    @classmethod
    def _trusted(cls, rows: Iterable[tuple[int, ...]]) -> Tableau:
        return tuple.__new__(cls, rows)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def degrees(self) -> tuple[int, ...]:
        """Row lengths in row order (the labeled degree list)."""
        return tuple(len(r) for r in self)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self]

    def __repr__(self) -> str:
        return f"Tableau({[list(r) for r in self]})"


def ndl_of(g: Graph) -> Tableau:
    """Labeled NDL of ``g``: row ``i`` lists the degrees of the neighbors of ``i``."""
    adj = g.adj
    deg = [m.bit_count() for m in adj]
    return Tableau._trusted(
        tuple(sorted((deg[u] for u in bits(m)), reverse=True)) for m in adj
    )


def _canonical_key(row: tuple[int, ...]):
    return (len(row), row)


def canonicalize(t: Iterable[Iterable[int]]) -> Tableau:
    """Rows ordered by length, then content, both descending."""
    if not isinstance(t, Tableau):
        t = Tableau(t)
    return Tableau._trusted(sorted(t, key=_canonical_key, reverse=True))


def ndl_equal_labeled(t1: Iterable[Iterable[int]], t2: Iterable[Iterable[int]]) -> bool:
    return Tableau(t1) == Tableau(t2)


def ndl_equal_unlabeled(t1: Iterable[Iterable[int]], t2: Iterable[Iterable[int]]) -> bool:
    return canonicalize(t1) == canonicalize(t2)


def is_feasible(t: Iterable[Iterable[int]]) -> bool:
    """True iff every entry equals one of the row lengths."""
    t = t if isinstance(t, Tableau) else Tableau(t)
    lengths = set(t.degrees)
    return all(x in lengths for row in t for x in row)


def ndl_entry_sum(t: Iterable[Iterable[int]]) -> int:
    return sum(sum(row) for row in t)


@dataclass(frozen=True)
class BipartitionedList:
    part_x: tuple[int, ...]
    part_y: tuple[int, ...]

    def __post_init__(self):
        if any(v < 0 for v in self.part_x + self.part_y):
            raise ValueError("bipartitioned list entries must be nonnegative")

    def __str__(self) -> str:
        return "({};{})".format(",".join(map(str, self.part_x)), ",".join(map(str, self.part_y)))


@dataclass(frozen=True)
class DerivedLists:
    """The degree list of a tableau and the per-class lists built from it.

    ``same_deg[k]`` holds D^k and ``cross_deg[(k, l)]`` (k > l) holds D^{k,l},
    each listed in increasing row index.  ``parity_violations`` and
    ``double_count_violations`` record classes whose counts cannot come from
    any graph; they are reported, not raised.
    """

    d: tuple[int, ...]
    classes: dict[int, tuple[int, ...]]
    counts: tuple[Counter, ...] = field(repr=False)
    same_deg: dict[int, tuple[int, ...]]
    cross_deg: dict[tuple[int, int], BipartitionedList]
    parity_violations: tuple[int, ...] = ()
    double_count_violations: tuple[tuple[int, int], ...] = ()

    def mu(self, i: int, value: int) -> int:
        """How many times ``value`` occurs in row ``i`` (0 when absent)."""
        return self.counts[i][value]

    @property
    def sorted_degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.d, reverse=True))


def derive(t: Iterable[Iterable[int]]) -> DerivedLists:
    """Compute d, the classes V_k, the multiplicities, D^k and D^{k,l}.

    Raises :class:`InfeasibleTableauError` if some entry is not a row length.
    """
    t = t if isinstance(t, Tableau) else Tableau(t)
    if not is_feasible(t):
        bad = sorted({x for row in t for x in row} - set(t.degrees))
        raise InfeasibleTableauError(f"entries {bad} are not row lengths")
    d = t.degrees
    classes: dict[int, list[int]] = {}
    for i, k in enumerate(d):
        classes.setdefault(k, []).append(i)
    counts = tuple(Counter(row) for row in t)
    ks = sorted(classes, reverse=True)

    same_deg = {k: tuple(counts[i][k] for i in classes[k]) for k in ks}
    cross_deg = {}
    for a, k in enumerate(ks):
        for l in ks[a + 1 :]:
            cross_deg[(k, l)] = BipartitionedList(
                tuple(counts[i][l] for i in classes[k]),
                tuple(counts[j][k] for j in classes[l]),
            )
    parity = tuple(k for k in ks if sum(same_deg[k]) % 2)
    double = tuple(kl for kl, b in cross_deg.items() if sum(b.part_x) != sum(b.part_y))
    return DerivedLists(
        d=d,
        classes={k: tuple(classes[k]) for k in ks},
        counts=counts,
        same_deg=same_deg,
        cross_deg=cross_deg,
        parity_violations=parity,
        double_count_violations=double,
    )
