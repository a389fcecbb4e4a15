"""Graphicality tests for degree sequences, bipartitioned lists and tableaux.

Partitions are plain tuples of nonnegative integers.  Functions that compare
partitions (conjugates, alpha/beta) drop zero parts first.
"""

from __future__ import annotations

from itertools import accumulate
from typing import Iterable, Sequence

from .errors import InfeasibleTableauError
from .tableau import Tableau, derive, is_feasible

Partition = tuple[int, ...]


def normalize(p: Iterable[int]) -> Partition:
    """Sort descending and drop zeros."""
    return tuple(sorted((x for x in p if x), reverse=True))


def conjugate(p: Iterable[int]) -> Partition:
    """Transpose of the Young diagram: part i counts the parts that are >= i."""
    p = normalize(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def alpha_beta(p: Iterable[int]) -> tuple[Partition, Partition]:
    """Row lengths of the diagram on/right of the diagonal, and column lengths below it."""
    p = normalize(p)
    alpha = tuple(x - i for i, x in enumerate(p) if x > i)
    beta = []
    j = 1
    while True:
        # column j (1-based), rows strictly below row j
        c = sum(1 for x in p[j:] if x >= j)
        if not c:
            break
        beta.append(c)
        j += 1
    return alpha, tuple(beta)


def _sorted_desc(d: Iterable[int]) -> list[int]:
    return sorted(d, reverse=True)


def _m(d: Sequence[int]) -> int:
    """max{i : d_i >= i - 1} for a descending list, 1-based; 0 when empty."""
    m = 0
    for i, x in enumerate(d, start=1):
        if x >= i - 1:
            m = i
    return m


def _eg_slack(d: Sequence[int]) -> list[int]:
    """Right side minus left side of the first m(d) Erdos-Gallai inequalities."""
    prefix = list(accumulate(d))
    out = []
    for k in range(1, _m(d) + 1):
        rhs = k * (k - 1) + sum(min(k, x) for x in d[k:])
        out.append(rhs - prefix[k - 1])
    return out


def erdos_gallai(d: Iterable[int]) -> bool:
    """Whether ``d`` is the degree sequence of a simple graph."""
    d = _sorted_desc(d)
    if not d:
        return True
    if d[-1] < 0 or sum(d) % 2:
        return False
    if d[0] > len(d) - 1:
        return False
    return all(s >= 0 for s in _eg_slack(d))


def merris_graphic(d: Iterable[int]) -> bool:
    """Graphicality via the alpha/beta partial-sum comparison."""
    d = _sorted_desc(d)
    if d and d[-1] < 0:
        return False
    if sum(d) % 2:
        return False
    alpha, beta = alpha_beta(d)
    # beta is padded with zeros; equal totals are not required ((1,1) has alpha=(1), beta=(1)
    # but (1,1,1,1) has alpha=(1), beta=(3))
    pb = list(accumulate(beta + (0,) * max(0, len(alpha) - len(beta))))
    return all(pb[k] >= pa for k, pa in enumerate(accumulate(alpha)))


def gale_ryser(x: Iterable[int], y: Iterable[int]) -> bool:
    """Whether a bipartite graph has part degrees ``x`` and ``y``."""
    x = _sorted_desc(x)
    y = list(y)
    if any(v < 0 for v in x) or any(v < 0 for v in y):
        return False
    if sum(x) != sum(y):
        return False
    total = 0
    for k, xk in enumerate(x, start=1):
        total += xk
        if total > sum(min(k, v) for v in y):
            return False
    return True


def graphicality_failures(t: Iterable[Iterable[int]]) -> list[str]:
    """Names of the derived lists that fail their test, e.g. ``["D^2", "D^{3,1}"]``.

    An infeasible tableau yields ``["infeasible"]``; an empty list means graphic.
    """
    t = t if isinstance(t, Tableau) else Tableau(t)
    if not is_feasible(t):
        return ["infeasible"]
    dl = derive(t)
    bad = [f"D^{k}" for k, seq in dl.same_deg.items() if not erdos_gallai(seq)]
    bad += [
        f"D^{{{k},{l}}}"
        for (k, l), b in dl.cross_deg.items()
        if not gale_ryser(b.part_x, b.part_y)
    ]
    return bad


def is_graphic_ndl(t: Iterable[Iterable[int]]) -> bool:
    """Whether ``t`` is the labeled NDL of some simple graph."""
    try:
        return not graphicality_failures(t)
    except (InfeasibleTableauError, ValueError):
        return False


def satisfies_eg_equality(d: Iterable[int]) -> bool:
    """Graphic with the first m(d) Erdos-Gallai inequalities all tight."""
    d = _sorted_desc(d)
    return erdos_gallai(d) and all(s == 0 for s in _eg_slack(d))


def is_threshold_sequence(d: Iterable[int]) -> bool:
    """Graphic with alpha(d) = beta(d): the sequence has exactly one labeled realization."""
    d = list(d)
    if not erdos_gallai(d):
        return False
    alpha, beta = alpha_beta(d)
    return alpha == beta


def is_difference_pair(x: Iterable[int], y: Iterable[int]) -> bool:
    """Bigraphic with conjugate(x) = y: exactly one bipartitioned realization."""
    x = list(x)
    y = list(y)
    return gale_ryser(x, y) and conjugate(x) == normalize(y)
