"""Brute-force ground truth for the theorem-level tests.

Everything here enumerates labeled graphs directly and never consults the
graphicality tests, derived lists or canonical constructions it is used to
check.  Sizes are capped; asking for more raises :class:`SizeCapError`.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator, Sequence

from .errors import SizeCapError
from .graph import Graph, apply_two_switch, enumerate_two_switches, pair_order
from .realization import apply_n_switch, enumerate_n_switches
from .tableau import Tableau, ndl_of

MAX_GRAPH_N = 7
MAX_REALIZATION_N = 7
MAX_BIPARTITE_CELLS = 24


def _adjacencies(n: int) -> Iterator[tuple[int, ...]]:
    # The neighbors of vertex n-1 occupy the top n-1 bits of the edge mask,
    # so looping over them outermost reproduces mask counting order.
    if n <= 1:
        yield (0,) * n
        return
    base = list(_adjacencies(n - 1))
    top = 1 << (n - 1)
    for s in range(1 << (n - 1)):
        add = tuple(top if s >> i & 1 else 0 for i in range(n - 1))
        tail = (s,)
        for b in base:
            yield tuple(map(int.__or__, b, add)) + tail


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices, in edge-mask counting order.

    Bit j of the edge mask stands for the j-th pair of :func:`pair_order`.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_GRAPH_N:
        raise SizeCapError(f"enumerate_graphs is capped at n={MAX_GRAPH_N}, got {n}")
    frm = Graph.from_adjacency
    for adj in _adjacencies(n):
        yield frm(adj)


def graph_from_mask(n: int, mask: int) -> Graph:
    return Graph(n, (p for j, p in enumerate(pair_order(n)) if mask >> j & 1))


def mask_of_graph(g: Graph) -> int:
    adj = g.adj
    return sum(1 << j for j, (u, v) in enumerate(pair_order(g.n)) if adj[u] >> v & 1)


def graphs_by_ndl(n: int) -> dict[Tableau, list[Graph]]:
    """Every labeled graph on n vertices grouped by its labeled NDL."""
    out: dict[Tableau, list[Graph]] = {}
    for g in enumerate_graphs(n):
        out.setdefault(ndl_of(g), []).append(g)
    return out


def graphs_by_degrees(n: int) -> dict[tuple[int, ...], list[Graph]]:
    """Every labeled graph on n vertices grouped by its labeled degree tuple."""
    out: dict[tuple[int, ...], list[Graph]] = {}
    for g in enumerate_graphs(n):
        out.setdefault(g.degrees(), []).append(g)
    return out


def degree_tuple_counts(n: int) -> Counter:
    """Number of labeled graphs with each labeled degree tuple."""
    return Counter(g.degrees() for g in enumerate_graphs(n))


def enumerate_labeled_realizations(t: Iterable[Iterable[int]]) -> list[Graph]:
    """All labeled graphs whose NDL equals ``t`` row for row.

    Backtracks over vertices in index order; a vertex may only be joined to
    vertices whose degree still has unused occurrences in its row, and vice
    versa.  Each complete graph is checked against ``ndl_of`` before it is
    accepted.
    """
    t = t if isinstance(t, Tableau) else Tableau(t)
    n = t.n
    if n > MAX_REALIZATION_N:
        raise SizeCapError(f"realization search is capped at n={MAX_REALIZATION_N}, got {n}")
    d = t.degrees
    need = [Counter(row) for row in t]
    res = list(d)
    adj = [0] * n
    out: list[Graph] = []

    def rec(i: int) -> None:
        if i == n:
            g = Graph.from_adjacency(adj)
            if ndl_of(g) == t:
                out.append(g)
            return
        r = res[i]
        cands = [
            j for j in range(i + 1, n) if res[j] > 0 and need[i][d[j]] > 0 and need[j][d[i]] > 0
        ]
        if r > len(cands):
            return
        for combo in combinations(cands, r):
            per = Counter(d[j] for j in combo)
            if any(c > need[i][k] for k, c in per.items()):
                continue
            for j in combo:
                res[j] -= 1
                need[j][d[i]] -= 1
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            rec(i + 1)
            for j in combo:
                res[j] += 1
                need[j][d[i]] += 1
                adj[i] &= ~(1 << j)
                adj[j] &= ~(1 << i)

    rec(0)
    return out


def enumerate_degree_realizations(d: Sequence[int]) -> list[Graph]:
    """All labeled graphs in which vertex i has degree d[i]."""
    n = len(d)
    if n > MAX_REALIZATION_N:
        raise SizeCapError(f"realization search is capped at n={MAX_REALIZATION_N}, got {n}")
    if any(x < 0 for x in d):
        return []
    res = list(d)
    adj = [0] * n
    out: list[Graph] = []

    def rec(i: int) -> None:
        if i == n:
            out.append(Graph.from_adjacency(adj))
            return
        cands = [j for j in range(i + 1, n) if res[j] > 0]
        r = res[i]
        if r > len(cands):
            return
        for combo in combinations(cands, r):
            for j in combo:
                res[j] -= 1
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            rec(i + 1)
            for j in combo:
                res[j] += 1
                adj[i] &= ~(1 << j)
                adj[j] &= ~(1 << i)

    rec(0)
    return out


def enumerate_bipartite_realizations(x: Sequence[int], y: Sequence[int]) -> list[Graph]:
    """All bipartite graphs with X = 0..p-1 of degrees ``x`` and Y = p..p+q-1 of degrees ``y``."""
    p, q = len(x), len(y)
    if p * q > MAX_BIPARTITE_CELLS:
        raise SizeCapError(f"bipartite search is capped at |X||Y| <= {MAX_BIPARTITE_CELLS}")
    if any(v < 0 for v in list(x) + list(y)):
        return []
    res = list(y)
    adj = [0] * (p + q)
    out: list[Graph] = []

    def rec(i: int) -> None:
        if i == p:
            if not any(res):
                out.append(Graph.from_adjacency(adj))
            return
        cands = [j for j in range(q) if res[j] > 0]
        if x[i] > len(cands):
            return
        for combo in combinations(cands, x[i]):
            for j in combo:
                res[j] -= 1
                adj[i] |= 1 << (p + j)
                adj[p + j] |= 1 << i
            rec(i + 1)
            for j in combo:
                res[j] += 1
                adj[i] &= ~(1 << (p + j))
                adj[p + j] &= ~(1 << i)

    rec(0)
    return out


def bipartite_degree_counts(p: int, q: int) -> Counter:
    """Number of bipartite graphs on fixed parts of sizes p, q with each labeled degree pair."""
    if p * q > MAX_BIPARTITE_CELLS:
        raise SizeCapError(f"bipartite scan is capped at |X||Y| <= {MAX_BIPARTITE_CELLS}")
    counts: Counter = Counter()
    rows = range(1 << q)
    row_deg = [r.bit_count() for r in rows]

    def rec(i: int, xs: tuple[int, ...], ycount: tuple[int, ...]) -> None:
        if i == p:
            counts[(xs, ycount)] += 1
            return
        for r in rows:
            rec(i + 1, xs + (row_deg[r],), tuple(c + (r >> j & 1) for j, c in enumerate(ycount)))

    rec(0, (), (0,) * q)
    return counts


@dataclass(frozen=True)
class RealizationSpace:
    """Realizations as nodes, joined when one switch turns one into the other."""

    nodes: tuple[Graph, ...]
    edges: frozenset[tuple[int, int]]
    components: int

    @property
    def connected(self) -> bool:
        return self.components <= 1


def _space(
    nodes: Sequence[Graph],
    moves: Callable[[Graph], Iterable],
    apply: Callable[[Graph, object], Graph],
) -> RealizationSpace:
    index = {g: i for i, g in enumerate(nodes)}
    edges = set()
    nbrs: list[list[int]] = [[] for _ in nodes]
    for i, g in enumerate(nodes):
        for m in moves(g):
            j = index.get(apply(g, m))
            if j is None:
                raise AssertionError(f"switch {tuple(m)} leaves the realization set")
            if i < j:
                edges.add((i, j))
            nbrs[i].append(j)
    seen = [False] * len(nodes)
    comps = 0
    for s in range(len(nodes)):
        if seen[s]:
            continue
        comps += 1
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in nbrs[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
    return RealizationSpace(tuple(nodes), frozenset(edges), comps)


def realization_space(
    t: Iterable[Iterable[int]], realizations: Sequence[Graph] | None = None
) -> RealizationSpace:
    """N-switch graph on the labeled realizations of ``t``.

    ``realizations`` may be passed in when the caller already has them.
    """
    if realizations is None:
        realizations = enumerate_labeled_realizations(t)
    return _space(realizations, enumerate_n_switches, apply_n_switch)


def two_switch_space(realizations: Sequence[Graph]) -> RealizationSpace:
    """2-switch graph on a set of realizations of one labeled degree tuple."""
    return _space(realizations, enumerate_two_switches, apply_two_switch)


def naive_two_switches(g: Graph) -> set[tuple[int, int, int, int]]:
    """Every ordered quadruple (a, b, c, d) that forms a valid 2-switch on ``g``."""
    adj = g.adj
    out = set()
    for a, b, c, d in permutations(range(g.n), 4):
        if adj[a] >> c & 1 and adj[b] >> d & 1 and not adj[a] >> d & 1 and not adj[b] >> c & 1:
            out.add((a, b, c, d))
    return out


def _induced_is_threshold_free(adj: Sequence[int], vs: Sequence[int]) -> bool:
    """No four of ``vs`` induce 2K2, C4 or P4."""
    for quad in combinations(vs, 4):
        qm = sum(1 << v for v in quad)
        degs = sorted((adj[v] & qm).bit_count() for v in quad)
        if degs in ([1, 1, 1, 1], [2, 2, 2, 2], [1, 1, 2, 2]):
            return False
    return True


def _crossing_2k2_free(adj: Sequence[int], xs: Sequence[int], ys: Sequence[int]) -> bool:
    ym = sum(1 << v for v in ys)
    for x1, x2 in combinations(xs, 2):
        n1, n2 = adj[x1] & ym, adj[x2] & ym
        if n1 & ~n2 and n2 & ~n1:
            return False
    return True


def positional_forbidden_free(g: Graph) -> bool:
    """No same-degree class induces 2K2, C4 or P4, and no two classes have a crossing 2K2."""
    adj = g.adj
    classes: dict[int, list[int]] = {}
    for v, m in enumerate(adj):
        classes.setdefault(m.bit_count(), []).append(v)
    ks = sorted(classes)
    if not all(_induced_is_threshold_free(adj, classes[k]) for k in ks):
        return False
    return all(
        _crossing_2k2_free(adj, classes[k], classes[l])
        for i, k in enumerate(ks)
        for l in ks[i + 1 :]
    )


def same_class_threshold_oracle(g: Graph) -> bool:
    """Every G[V_k] is the only labeled realization of its own degree tuple."""
    adj = g.adj
    classes: dict[int, list[int]] = {}
    for v, m in enumerate(adj):
        classes.setdefault(m.bit_count(), []).append(v)
    for vs in classes.values():
        vm = sum(1 << v for v in vs)
        if len(enumerate_degree_realizations([(adj[v] & vm).bit_count() for v in vs])) != 1:
            return False
    return True


def cross_class_difference_oracle(g: Graph) -> bool:
    """Every G[V_k, V_l] is the only bipartitioned realization of its degree lists."""
    adj = g.adj
    classes: dict[int, list[int]] = {}
    for v, m in enumerate(adj):
        classes.setdefault(m.bit_count(), []).append(v)
    ks = sorted(classes, reverse=True)
    for i, k in enumerate(ks):
        for l in ks[i + 1 :]:
            xs, ys = classes[k], classes[l]
            xm, ym = sum(1 << v for v in xs), sum(1 << v for v in ys)
            x = [(adj[v] & ym).bit_count() for v in xs]
            y = [(adj[v] & xm).bit_count() for v in ys]
            if len(enumerate_bipartite_realizations(x, y)) != 1:
                return False
    return True
