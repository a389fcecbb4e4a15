"""Labeled simple graphs on vertices 0..n-1 and 2-switch mechanics.

A :class:`Graph` keeps its adjacency as one neighbor bitmask per vertex, so
edge queries and degree computations are cheap enough for exhaustive scans
over every labeled graph on up to seven vertices.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple

from ._bits import bits
from .errors import InvalidMoveError, NDLError


class Graph:
    """Immutable labeled simple graph.

    ``Graph(n, edges)`` validates its input; vertex indices are 0-based and
    every edge is stored as an unordered pair.
    """

    __slots__ = ("_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise NDLError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        for e in edges:
            u, v = e
            if u == v:
                raise NDLError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise NDLError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._adj = tuple(adj)
        self._edges = None

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> Graph:
        """Build a graph from neighbor bitmasks, trusting them to be symmetric and loop-free."""
        g = cls.__new__(cls)
        g._adj = tuple(adj)
        g._edges = None
        return g

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def adj(self) -> tuple[int, ...]:
        """Neighbor bitmask of every vertex."""
        return self._adj

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        if self._edges is None:
            self._edges = frozenset(
                (u, v) for u, m in enumerate(self._adj) for v in bits(m) if v > u
            )
        return self._edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @property
    def edge_count(self) -> int:
        return sum(map(int.bit_count, self._adj)) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return bits(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        """Degrees indexed by vertex (not sorted)."""
        return tuple(map(int.bit_count, self._adj))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Vertex degrees of ``g`` sorted in descending order."""
    return tuple(sorted(map(int.bit_count, g.adj), reverse=True))


def _check_vertices(g: Graph, s: Iterable[int]) -> list[int]:
    vs = sorted(set(s))
    for v in vs:
        if not 0 <= v < g.n:
            raise NDLError(f"vertex {v} out of range for n={g.n}")
    return vs


def _compress(mask: int, order: list[int]) -> int:
    out = 0
    for i, v in enumerate(order):
        if mask >> v & 1:
            out |= 1 << i
    return out


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s``, relabeled 0..|s|-1 in increasing vertex order.

    Returns the subgraph and the index map (new label i -> original vertex).
    """
    order = _check_vertices(g, s)
    adj = g.adj
    return Graph.from_adjacency(_compress(adj[v], order) for v in order), tuple(order)


def delete_vertex(g: Graph, v: int) -> Graph:
    """``g - v`` with the remaining vertices relabeled order-preservingly."""
    if not 0 <= v < g.n:
        raise NDLError(f"vertex {v} out of range for n={g.n}")
    low = (1 << v) - 1
    high = v + 1
    return Graph.from_adjacency(
        [(m & low) | (m >> high << v) for u, m in enumerate(g.adj) if u != v]
    )


def bipartite_subgraph(
    g: Graph, x: Iterable[int], y: Iterable[int]
) -> tuple[Graph, tuple[int, ...]]:
    """Edges of ``g`` with one end in ``x`` and the other in ``y``.

    The result lives on ``x | y`` relabeled in increasing vertex order; the
    second return value maps new labels to original vertices.
    """
    xs = _check_vertices(g, x)
    ys = _check_vertices(g, y)
    if set(xs) & set(ys):
        raise NDLError(f"parts overlap: {sorted(set(xs) & set(ys))}")
    xm = sum(1 << v for v in xs)
    ym = sum(1 << v for v in ys)
    order = sorted(xs + ys)
    adj = g.adj
    new = []
    for v in order:
        other = ym if xm >> v & 1 else xm
        new.append(_compress(adj[v] & other, order))
    return Graph.from_adjacency(new), tuple(order)


class TwoSwitch(NamedTuple):
    """The move {ac, bd} => {ad, bc} on the alternating 4-cycle a, b, c, d."""

    a: int
    b: int
    c: int
    d: int

    @property
    def removed(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return _pair(self.a, self.c), _pair(self.b, self.d)

    @property
    def added(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return _pair(self.a, self.d), _pair(self.b, self.c)

    def inverse(self):
        """The move undoing this one: {ad, bc} => {ac, bd}."""
        return type(self)(self.a, self.b, self.d, self.c)

    def canonical(self):
        """Lexicographically least tuple describing the same move.

        (a,b,c,d), (b,a,d,c), (c,d,a,b) and (d,c,b,a) remove and add the
        same edge pairs.
        """
        a, b, c, d = self
        return type(self)(*min((a, b, c, d), (b, a, d, c), (c, d, a, b), (d, c, b, a)))

    def problem(self, g: Graph) -> str | None:
        """Why the move is invalid against ``g``, or None if it is valid."""
        a, b, c, d = self
        if len({a, b, c, d}) != 4:
            return f"vertices {tuple(self)} are not distinct"
        if not all(0 <= v < g.n for v in self):
            return f"vertex out of range for n={g.n}"
        adj = g.adj
        if not adj[a] >> c & 1:
            return f"{a}{c} is not an edge"
        if not adj[b] >> d & 1:
            return f"{b}{d} is not an edge"
        if adj[a] >> d & 1:
            return f"{a}{d} is already an edge"
        if adj[b] >> c & 1:
            return f"{b}{c} is already an edge"
        return None

    def is_valid(self, g: Graph) -> bool:
        return self.problem(g) is None


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _switch_adj(adj: tuple[int, ...], m: TwoSwitch) -> list[int]:
    a, b, c, d = m
    new = list(adj)
    new[a] ^= (1 << c) | (1 << d)
    new[b] ^= (1 << d) | (1 << c)
    new[c] ^= (1 << a) | (1 << b)
    new[d] ^= (1 << b) | (1 << a)
    return new


def apply_two_switch(g: Graph, m: TwoSwitch) -> Graph:
    """Return ``g`` with edges ac, bd replaced by ad, bc."""
    why = TwoSwitch.problem(m, g)
    if why is not None:
        raise InvalidMoveError(f"invalid 2-switch {tuple(m)}: {why}")
    return Graph.from_adjacency(_switch_adj(g.adj, m))


def enumerate_two_switches(g: Graph) -> list[TwoSwitch]:
    """Every valid 2-switch on ``g``, one canonical tuple per move, sorted."""
    adj = g.adj
    edges = g.sorted_edges()
    out = set()
    for i, (p, q) in enumerate(edges):
        for r, s in edges[i + 1 :]:
            if r == p or r == q or s == p or s == q:
                continue
            # add pr, qs
            if not (adj[p] >> r & 1 or adj[q] >> s & 1):
                out.add(TwoSwitch(p, s, q, r).canonical())
            # add ps, qr
            if not (adj[p] >> s & 1 or adj[q] >> r & 1):
                out.add(TwoSwitch(p, r, q, s).canonical())
    return sorted(out)


@lru_cache(maxsize=None)
def pair_order(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs in column-wise upper-triangle order: (0,1), (0,2), (1,2), (0,3), ...

    This is the bit order of graph6 and of the oracle's edge masks.
    """
    return tuple((i, j) for j in range(1, n) for i in range(j))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph.from_adjacency(full ^ (1 << v) for v in range(n))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise NDLError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))
