"""NDL-uniqueness: when a labeled NDL has exactly one realization.

An NDL is uniquely realized iff every D^k is a threshold sequence and every
D^{k,l} is the degree list of a difference graph.  For a graph this reads:
each same-degree class induces a threshold graph and the edges between any
two classes form a difference graph.
"""

from __future__ import annotations

from typing import Iterable

from .errors import NotGraphicError
from .graph import Graph
from .graphicality import (
    alpha_beta,
    conjugate,
    graphicality_failures,
    is_difference_pair,
    is_threshold_sequence,
    normalize,
)
from .realization import NSwitch, enumerate_n_switches
from .tableau import DerivedLists, Tableau, derive, ndl_of


def is_ndl_unique_tableau(t: Iterable[Iterable[int]]) -> bool:
    t = t if isinstance(t, Tableau) else Tableau(t)
    failures = graphicality_failures(t)
    if failures:
        raise NotGraphicError(f"tableau is not graphic: {', '.join(failures)}", failures)
    dl = derive(t)
    return all(is_threshold_sequence(seq) for seq in dl.same_deg.values()) and all(
        is_difference_pair(b.part_x, b.part_y) for b in dl.cross_deg.values()
    )


def _unique_by_sequences(dl: DerivedLists) -> bool:
    for seq in dl.same_deg.values():
        alpha, beta = alpha_beta(seq)
        if alpha != beta:
            return False
    for b in dl.cross_deg.values():
        if normalize(b.part_x) != conjugate(b.part_y):
            return False
    return True


def is_ndl_unique_graph(g: Graph) -> bool:
    """Whether ``g`` is the only labeled realization of its own NDL."""
    return _unique_by_sequences(derive(ndl_of(g)))


def non_uniqueness_witness(g: Graph) -> NSwitch | None:
    """An N-switch on ``g`` if its NDL has another realization, else None."""
    if is_ndl_unique_graph(g):
        return None
    moves = enumerate_n_switches(g)
    if not moves:
        raise AssertionError("non-unique NDL but the realization admits no N-switch")
    return moves[0]
