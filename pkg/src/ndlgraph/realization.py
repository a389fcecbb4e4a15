"""Canonical realizations, neighborhood steering and N-switch sequences.

Every realization of a labeled NDL can be driven to one canonical graph by
N-switches: inside each degree class the class subgraph is steered to the
canonical realization of its degree list, and between two classes the
crossing edges are steered to the canonical bipartite realization.  Two
realizations are then joined by going to the canonical graph from one and
retracing the other's moves backwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from ._bits import bits, mask_of
from .errors import DegreeMismatchError, InvalidMoveError, NDLError, NDLMismatchError, NotGraphicError
from .graph import Graph, TwoSwitch, _switch_adj, enumerate_two_switches
from .graphicality import erdos_gallai, gale_ryser, graphicality_failures
from .tableau import Tableau, derive, ndl_of


class NSwitch(TwoSwitch):
    """A 2-switch {ac, bd} => {ad, bc} with deg(a) = deg(b) and deg(c) = deg(d)."""

    __slots__ = ()

    def problem(self, g: Graph) -> str | None:
        why = TwoSwitch.problem(self, g)
        if why is not None:
            return why
        return _degree_problem(self, g)

    def is_valid(self, g: Graph) -> bool:
        return self.problem(g) is None


def _degree_problem(m: TwoSwitch, g: Graph) -> str | None:
    a, b, c, d = m
    adj = g.adj
    if adj[a].bit_count() != adj[b].bit_count():
        return f"deg({a}) != deg({b})"
    if adj[c].bit_count() != adj[d].bit_count():
        return f"deg({c}) != deg({d})"
    return None


def apply_n_switch(g: Graph, m: TwoSwitch) -> Graph:
    """Apply an N-switch; the labeled NDL of the result equals that of ``g``.

    Raises :class:`InvalidMoveError` for a bad edge pattern and
    :class:`DegreeMismatchError` when only the degree equalities fail.
    """
    why = TwoSwitch.problem(m, g)
    if why is not None:
        raise InvalidMoveError(f"invalid N-switch {tuple(m)}: {why}")
    why = _degree_problem(m, g)
    if why is not None:
        raise DegreeMismatchError(f"2-switch {tuple(m)} is not an N-switch: {why}")
    return Graph.from_adjacency(_switch_adj(g.adj, m))


def enumerate_n_switches(g: Graph) -> list[NSwitch]:
    deg = g.degrees()
    return [
        NSwitch(*m)
        for m in enumerate_two_switches(g)
        if deg[m.a] == deg[m.b] and deg[m.c] == deg[m.d]
    ]


@dataclass(frozen=True)
class SwitchPath:
    """N-switches listed in application order."""

    moves: tuple[NSwitch, ...] = ()

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[NSwitch]:
        return iter(self.moves)

    def graphs(self, g: Graph) -> Iterator[Graph]:
        """Yield ``g`` followed by the graph after each move."""
        yield g
        for m in self.moves:
            g = apply_n_switch(g, m)
            yield g

    def apply(self, g: Graph) -> Graph:
        for g in self.graphs(g):
            pass
        return g


# canonical realizations ---------------------------------------------------


def _principal_pairs(p: Sequence[int]) -> list[tuple[int, int]]:
    n = len(p)
    res = list(p)
    pairs = []
    for i in range(n):
        want = res[i]
        rest = sorted(range(i + 1, n), key=lambda j: (-res[j], j))[:want]
        if len(rest) < want or (rest and res[rest[-1]] <= 0):
            raise NotGraphicError(f"{tuple(p)} is not graphic")
        for j in rest:
            res[j] -= 1
            pairs.append((i, j))
        res[i] = 0
    return pairs


def canonical_realization(p: Sequence[int]) -> Graph:
    """The graph R(p) in which each vertex, in index order, takes its principal neighborhood.

    ``p[i]`` is the degree of vertex ``i``.  The principal neighborhood of a
    vertex is the first deg(v) of the remaining vertices ordered by residual
    degree (descending) and then index (ascending).
    """
    p = list(p)
    if not erdos_gallai(p):
        raise NotGraphicError(f"{tuple(p)} is not graphic")
    return Graph(len(p), _principal_pairs(p))


def _bipartite_pairs(x: Sequence[int], y: Sequence[int]) -> list[tuple[int, int]]:
    res = list(y)
    q = len(y)
    pairs = []
    for i, want in enumerate(x):
        chosen = sorted(range(q), key=lambda j: (-res[j], j))[:want]
        if len(chosen) < want or (chosen and res[chosen[-1]] <= 0):
            raise NotGraphicError(f"({tuple(x)}; {tuple(y)}) is not bigraphic")
        for j in chosen:
            res[j] -= 1
            pairs.append((i, j))
    return pairs


def canonical_bipartite_realization(x: Sequence[int], y: Sequence[int]) -> Graph:
    """The bipartite graph R(x; y) on X = 0..p-1 and Y = p..p+q-1.

    Each x-vertex in index order is joined to the first x[i] vertices of Y
    ordered by residual degree (descending) and index (ascending).
    """
    x = list(x)
    y = list(y)
    if not gale_ryser(x, y):
        raise NotGraphicError(f"({tuple(x)}; {tuple(y)}) is not bigraphic")
    p = len(x)
    return Graph(p + len(y), ((i, p + j) for i, j in _bipartite_pairs(x, y)))


def realize_ndl(t: Iterable[Iterable[int]]) -> Graph:
    """A labeled graph whose NDL is ``t`` (row i belongs to vertex i).

    Built as the union of R(D^k) on every degree class and R(D^{k,l}) between
    every pair of classes, with the larger degree on the X side.
    """
    t = t if isinstance(t, Tableau) else Tableau(t)
    failures = graphicality_failures(t)
    if failures:
        raise NotGraphicError(f"tableau is not graphic: {', '.join(failures)}", failures)
    dl = derive(t)
    edges = []
    for k, seq in dl.same_deg.items():
        vk = dl.classes[k]
        edges += [(vk[i], vk[j]) for i, j in _principal_pairs(seq)]
    for (k, l), b in dl.cross_deg.items():
        vk, vl = dl.classes[k], dl.classes[l]
        edges += [(vk[i], vl[j]) for i, j in _bipartite_pairs(b.part_x, b.part_y)]
    return Graph(t.n, edges)


# steering -----------------------------------------------------------------


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _steer(adj: list[int], v: int, t: int, s: int, scope: int, moves: list) -> None:
    """Switch in place until N(v) & t == s, appending each move to ``moves``.

    Degrees and the switch partner x are taken within ``scope``.  Each move is
    {ux, wv} => {uv, wx} for some u in s missing from N(v) and some w in
    N(v) & t outside s.
    """
    while True:
        nv = adj[v] & t
        if nv == s:
            return
        u = _lowest(s & ~nv)
        w = _lowest(nv & ~s)
        cand = adj[u] & scope & ~adj[w] & ~(1 << w)
        if not cand:
            raise AssertionError(f"no switch partner for u={u}, w={w}; S is not a top-degree set")
        x = _lowest(cand)
        m = TwoSwitch(u, w, x, v)
        adj[:] = _switch_adj(adj, m)
        moves.append(m)


def _top_set(adj: list[int], t_vertices: Iterable[int], size: int, scope: int) -> int:
    order = sorted(t_vertices, key=lambda u: (-(adj[u] & scope).bit_count(), u))
    return mask_of(order[:size])


def steer_neighborhood(
    g: Graph, v: int, t: Iterable[int], s: Iterable[int]
) -> tuple[Graph, list[TwoSwitch]]:
    """Realization of deg(g) where N(v) restricted to ``t`` is ``s``.

    ``s`` must be a set of |N(v) & t| vertices of ``t`` whose degrees are at
    least those of every other vertex of ``t``.  Neighbors of ``v`` outside
    ``t`` are untouched.  Returns the new graph and the 2-switch transcript.
    """
    n = g.n
    t_set, s_set = set(t), set(s)
    if not all(0 <= u < n for u in t_set | {v}):
        raise NDLError("vertex out of range")
    if v in t_set:
        raise NDLError(f"v={v} must not lie in T")
    if not s_set <= t_set:
        raise NDLError("S must be a subset of T")
    adj = list(g.adj)
    t_mask, s_mask = mask_of(t_set), mask_of(s_set)
    if len(s_set) != (adj[v] & t_mask).bit_count():
        raise NDLError("|S| must equal the number of neighbors of v in T")
    deg = g.degrees()
    rest = t_set - s_set
    if s_set and rest and min(deg[u] for u in s_set) < max(deg[u] for u in rest):
        raise NDLError("S must consist of vertices of highest degree in T")
    moves: list[TwoSwitch] = []
    _steer(adj, v, t_mask, s_mask, (1 << n) - 1, moves)
    return Graph.from_adjacency(adj), moves


def _steer_same_class(adj: list[int], vk: Sequence[int], moves: list) -> None:
    """Drive G[V_k] to R(D^k), vertices of the class taken in index order."""
    active = mask_of(vk)
    for v in vk:
        h = active
        active &= ~(1 << v)
        size = (adj[v] & active).bit_count()
        s = _top_set(adj, bits(active), size, h)
        _steer(adj, v, active, s, h, moves)


def _steer_cross(adj: list[int], vk: Sequence[int], vl: Sequence[int], moves: list) -> None:
    """Drive the V_k--V_l crossing edges to R(D^{k,l}) with V_k as the X side."""
    x_active = mask_of(vk)
    y_mask = mask_of(vl)
    for v in vk:
        size = (adj[v] & y_mask).bit_count()
        s = _top_set(adj, vl, size, x_active)
        _steer(adj, v, y_mask, s, x_active, moves)
        x_active &= ~(1 << v)


@lru_cache(maxsize=65536)
def _canonicalizing_moves(g: Graph) -> tuple[tuple[NSwitch, ...], Graph]:
    adj = list(g.adj)
    deg = g.degrees()
    classes: dict[int, list[int]] = {}
    for v, k in enumerate(deg):
        classes.setdefault(k, []).append(v)
    ks = sorted(classes, reverse=True)
    moves: list[TwoSwitch] = []
    for k in ks:
        _steer_same_class(adj, classes[k], moves)
    for i, k in enumerate(ks):
        for l in ks[i + 1 :]:
            _steer_cross(adj, classes[k], classes[l], moves)
    return tuple(NSwitch(*m) for m in moves), Graph.from_adjacency(adj)


def canonical_form(g: Graph) -> tuple[Graph, SwitchPath]:
    """The canonical realization of ndl_of(g) and the N-switches that reach it from ``g``."""
    moves, target = _canonicalizing_moves(g)
    return target, SwitchPath(moves)


def switch_sequence(g: Graph, h: Graph) -> SwitchPath:
    """N-switches transforming ``g`` into ``h``; both must share a labeled NDL."""
    if g.n != h.n:
        raise NDLMismatchError(f"vertex counts differ: {g.n} != {h.n}")
    if ndl_of(g) != ndl_of(h):
        raise NDLMismatchError("graphs have different labeled NDLs")
    to_canon, _ = _canonicalizing_moves(g)
    from_canon, _ = _canonicalizing_moves(h)
    return SwitchPath(to_canon + tuple(m.inverse() for m in reversed(from_canon)))
