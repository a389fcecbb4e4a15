"""Decks of vertex-deleted subgraphs and what they reveal about the NDL.

Every edge of an n-vertex graph survives in exactly n - 2 cards, which gives
the edge count; subtracting a card's edge count gives the degree of its
missing vertex.  Comparing the card's degrees with the full degree list then
shows which degrees dropped by one, i.e. the degrees of the missing vertex's
neighbors.  A deck carries no labels, so the recovered NDL is canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import compress
from operator import sub
from typing import Iterable, Iterator

from .errors import InconsistentDeckError
from .graph import Graph, degree_sequence
from .tableau import Tableau, canonicalize


@dataclass(frozen=True)
class Deck:
    """Cards in card-index order; card i is G - v_i."""

    cards: tuple[Graph, ...]

    def __post_init__(self):
        sizes = {c.n for c in self.cards}
        if len(sizes) > 1:
            raise InconsistentDeckError(f"cards have different vertex counts: {sorted(sizes)}")

    @property
    def n(self) -> int:
        """Vertex count of the graph the deck belongs to."""
        return len(self.cards)

    def __len__(self) -> int:
        return len(self.cards)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.cards)


def deck_of(g: Graph) -> Deck:
    if g.n < 1:
        raise InconsistentDeckError("a deck needs at least one vertex")
    cards = []
    adj = g.adj
    for v in range(g.n):
        low, high = (1 << v) - 1, v + 1
        cards.append(
            Graph.from_adjacency([(m & low) | (m >> high << v) for u, m in enumerate(adj) if u != v])
        )
    return Deck(tuple(cards))


def _check(deck: Deck) -> int:
    n = deck.n
    if n < 3:
        raise InconsistentDeckError(f"reconstruction needs n >= 3, got {n}")
    if deck.cards[0].n != n - 1:
        raise InconsistentDeckError(f"{n} cards must each have {n - 1} vertices")
    return n


def _edge_count(card_edges: list[int], n: int) -> int:
    s = sum(card_edges)
    if s % (n - 2):
        raise InconsistentDeckError(f"total card edges {s} is not divisible by {n - 2}")
    return s // (n - 2)


def edge_count_from_deck(deck: Deck) -> int:
    n = _check(deck)
    return _edge_count([c.edge_count for c in deck], n)


def _card_degrees(deck: Deck) -> list[tuple[int, ...]]:
    return [degree_sequence(c) for c in deck]


def missing_degrees(deck: Deck) -> list[int]:
    """Degree of the deleted vertex of each card, by card index."""
    return _missing(deck, _card_degrees(deck))


def _missing(deck: Deck, card_degs: list[tuple[int, ...]]) -> list[int]:
    n = _check(deck)
    card_edges = [sum(d) // 2 for d in card_degs]
    m = _edge_count(card_edges, n)
    out = [m - e for e in card_edges]
    if min(out) < 0:
        raise InconsistentDeckError("a card has more edges than the whole graph")
    if max(out) > n - 1:
        raise InconsistentDeckError("a computed degree exceeds n - 1")
    return out


def degrees_from_deck(deck: Deck) -> tuple[int, ...]:
    """Degree sequence of the deck's graph, descending."""
    return tuple(sorted(missing_degrees(deck), reverse=True))


_STEPS = frozenset((0, 1))


def _neighbor_degrees(full: list[int], missing: int, card: tuple[int, ...]) -> tuple[int, ...]:
    rest = full.copy()
    rest.remove(missing)
    # both lists descend, so each neighbor of the missing vertex drops by exactly one
    diffs = list(map(sub, rest, card))
    if not _STEPS.issuperset(diffs):
        g, c = next((g, c) for g, c in zip(rest, card) if g - c not in (0, 1))
        raise InconsistentDeckError(f"degree {c} in card cannot come from degree {g} in the graph")
    out = tuple(compress(rest, diffs))
    if len(out) != missing:
        raise InconsistentDeckError(
            f"missing vertex has degree {missing} but {len(out)} card degrees dropped"
        )
    return out


def _rows(card_degs: list[tuple[int, ...]], missing: list[int]) -> list[tuple[int, ...]]:
    full = sorted(missing, reverse=True)
    return [_neighbor_degrees(full, m, d) for m, d in zip(missing, card_degs)]


def ndl_rows_from_deck(deck: Deck) -> list[tuple[int, ...]]:
    """Neighbor-degree row of each card's missing vertex, by card index."""
    card_degs = _card_degrees(deck)
    return _rows(card_degs, _missing(deck, card_degs))


def ndl_from_deck(deck: Deck) -> Tableau:
    """Canonical NDL of the graph whose deck is given."""
    return canonicalize(Tableau._trusted(ndl_rows_from_deck(deck)))


@dataclass(frozen=True)
class Reconstruction:
    edges: int
    degrees: tuple[int, ...]
    ndl: Tableau


def reconstruct(deck: Deck) -> Reconstruction:
    """Edge count, degree sequence and canonical NDL in one pass over the deck."""
    card_degs = _card_degrees(deck)
    missing = _missing(deck, card_degs)
    m = sum(missing) // 2
    rows = _rows(card_degs, missing)
    return Reconstruction(
        m, tuple(sorted(missing, reverse=True)), canonicalize(Tableau._trusted(rows))
    )


def deck_from_cards(cards: Iterable[Graph]) -> Deck:
    return Deck(tuple(cards))
