"""Acceptance suite: one check per criterion, each exact, each against its time budget.

Run under pytest (a PASS/FAIL line per criterion is printed in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import gc
import random
import sys
import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product
from pathlib import Path
from typing import Callable

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import PENDANT_C4_EDGES, PENDANT_C4_NDL, degree_classes, ndl_classes  # noqa: E402
from ndlgraph import (  # noqa: E402
    BipartitionedList,
    Graph,
    alpha_beta,
    canonical_bipartite_realization,
    canonicalize,
    conjugate,
    deck_of,
    degree_sequence,
    derive,
    enumerate_n_switches,
    erdos_gallai,
    gale_ryser,
    is_difference_pair,
    is_feasible,
    is_graphic_ndl,
    is_ndl_unique_graph,
    is_ndl_unique_tableau,
    is_threshold_sequence,
    merris_graphic,
    ndl_of,
    reconstruct,
    realize_ndl,
    switch_sequence,
)
from ndlgraph import io  # noqa: E402
from ndlgraph.graphicality import normalize, satisfies_eg_equality  # noqa: E402
from ndlgraph.oracle import (  # noqa: E402
    bipartite_degree_counts,
    cross_class_difference_oracle,
    degree_tuple_counts,
    enumerate_graphs,
    enumerate_labeled_realizations,
    graph_from_mask,
    positional_forbidden_free,
    realization_space,
    same_class_threshold_oracle,
    two_switch_space,
)


@dataclass
class Outcome:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float
    budget: float | None

    @property
    def within_budget(self) -> bool:
        return self.budget is None or self.seconds <= self.budget

    @property
    def passed(self) -> bool:
        return self.ok and self.within_budget

    def line(self) -> str:
        budget = f"budget {self.budget:g} s" if self.budget is not None else "no budget"
        tag = "PASS" if self.passed else "FAIL"
        return (
            f"[{tag}] criterion {self.number} ({self.title}): {self.detail}; "
            f"{self.seconds:.2f} s, {budget}"
        )


RESULTS: dict[int, Outcome] = {}


class Checks:
    """Collects named sub-checks; a criterion passes when all of them do."""

    def __init__(self):
        self.failed: list[str] = []
        self.notes: list[str] = []

    def check(self, name: str, ok: bool, note: str = "") -> None:
        if not ok:
            self.failed.append(name)
        elif note:
            self.notes.append(note)

    def summary(self) -> tuple[bool, str]:
        if self.failed:
            return False, "failed: " + "; ".join(self.failed)
        return True, ", ".join(self.notes) if self.notes else "all checks exact"


def partitions(max_len: int, max_part: int):
    for length in range(max_len + 1):
        for c in combinations_with_replacement(range(max_part + 1), length):
            yield tuple(sorted(c, reverse=True))


@lru_cache(maxsize=None)
def tuple_counts(n: int):
    return degree_tuple_counts(n)


@lru_cache(maxsize=None)
def bip_counts(p: int, q: int):
    return bipartite_degree_counts(p, q)


def bipartite_pairs(total: int):
    """Every (x, y, count): x descending, y in any order, |x| + |y| <= total, parts one past the bound."""
    for p in range(total + 1):
        for q in range(total + 1 - p):
            counts = bip_counts(p, q)
            for x in partitions(p, q + 1):
                if len(x) != p:
                    continue
                for y in product(range(p + 2), repeat=q):
                    yield x, y, counts.get((x, y), 0)


# criteria -----------------------------------------------------------------


def criterion_1() -> tuple[bool, str]:
    c = Checks()
    g = Graph(5, PENDANT_C4_EDGES)
    c.check("labeled NDL of the pendant 4-cycle", ndl_of(g) == PENDANT_C4_NDL)
    dl = derive(ndl_of(g))
    c.check("D^1, D^2, D^3", dl.same_deg == {1: (0,), 2: (1, 1, 2), 3: (0,)})
    c.check(
        "D^{2,1}, D^{3,1}, D^{3,2}",
        dl.cross_deg
        == {
            (2, 1): BipartitionedList((0, 0, 0), (0,)),
            (3, 1): BipartitionedList((1,), (1,)),
            (3, 2): BipartitionedList((2,), (1, 1, 0)),
        },
    )
    c.check("alpha/beta of (3,2,2,2,1)", alpha_beta((3, 2, 2, 2, 1)) == ((3, 1), (4, 2)))
    x, y = (2, 1, 1, 3, 1), (1, 2, 3, 2)
    r = canonical_bipartite_realization(x, y)
    p = len(x)
    c.check("x1 ~ {y2, y3}", set(r.neighbors(0)) == {p + 1, p + 2})
    # x2's neighborhood in R minus x1
    c.check("x2 ~ {y3}", set(r.neighbors(1)) == {p + 2})
    c.check("conjugate of (2,2,1)", conjugate((2, 2, 1)) == (3, 2))
    a, b, cc, d, e = range(5)
    left = Graph(5, [(a, cc), (b, d), (cc, d), (e, b), (e, d)])
    right = Graph(5, [(a, d), (b, cc), (cc, d), (e, b), (e, d)])
    c.check(
        "modified pair NDLs",
        canonicalize(ndl_of(left)) == ((2, 2, 2), (3, 2), (3, 2), (3, 1), (2,))
        and canonicalize(ndl_of(right)) == PENDANT_C4_NDL
        and degree_sequence(left) == degree_sequence(right) == (3, 2, 2, 2, 1),
    )
    return c.summary()


def _mutate(rows: list[list[int]], rnd: random.Random, n: int) -> None:
    op = rnd.choice(("bump", "drop", "add", "move"))
    nonempty = [i for i, r in enumerate(rows) if r]
    if op == "bump" and nonempty:
        r = rows[rnd.choice(nonempty)]
        j = rnd.randrange(len(r))
        r[j] = max(0, r[j] + rnd.choice((-1, 1)))
    elif op == "drop" and nonempty:
        r = rows[rnd.choice(nonempty)]
        r.pop(rnd.randrange(len(r)))
    elif op == "move" and nonempty:
        r = rows[rnd.choice(nonempty)]
        rows[rnd.randrange(n)].append(r.pop(rnd.randrange(len(r))))
    else:
        rows[rnd.randrange(n)].append(rnd.randrange(n))


def criterion_2() -> tuple[bool, str]:
    c = Checks()
    graphs = 0
    all_graphic = True
    round_trip = True
    for n in range(7):
        for t, gs in ndl_classes(n).items():
            graphs += len(gs)
            all_graphic &= all(is_graphic_ndl(ndl_of(g)) for g in gs)
            round_trip &= ndl_of(realize_ndl(t)) == t
    tableaux = sum(len(ndl_classes(n)) for n in range(7))
    c.check("every graph NDL is graphic", all_graphic, f"{graphs} graphs graphic")
    c.check("realize round trip", round_trip, f"{tableaux} tableaux round-trip")

    rnd = random.Random(20240607)
    mutants: dict = {}
    kinds = {"infeasible": 0, "feasible": 0}
    graphic_mutants_ok = True
    while len(mutants) < 200:
        n = rnd.randint(2, 5)
        g = graph_from_mask(n, rnd.randrange(1 << (n * (n - 1) // 2)))
        rows = [list(r) for r in ndl_of(g)]
        for _ in range(rnd.randint(1, 2)):
            _mutate(rows, rnd, n)
        t = tuple(tuple(sorted(r, reverse=True)) for r in rows)
        if t in mutants or t == ndl_of(g):
            continue
        if enumerate_labeled_realizations(t):
            # a mutation that happens to stay graphic must be recognized as such
            graphic_mutants_ok &= is_graphic_ndl(t)
            continue
        mutants[t] = is_graphic_ndl(t)
        kinds["feasible" if is_feasible(t) else "infeasible"] += 1
    c.check(
        "mutants rejected",
        not any(mutants.values()),
        f"200 zero-realization mutants rejected ({kinds['infeasible']} infeasible, "
        f"{kinds['feasible']} feasible)",
    )
    c.check("mix of mutant kinds", kinds["feasible"] > 0 and kinds["infeasible"] > 0)
    c.check("graphic mutants accepted", graphic_mutants_ok)
    return c.summary()


def criterion_3() -> tuple[bool, str]:
    c = Checks()
    parts = list(partitions(8, 7))
    c.check(
        "Erdos-Gallai = Merris",
        all(erdos_gallai(d) == merris_graphic(d) for d in parts),
        f"EG = Merris on {len(parts)} partitions",
    )
    checked = 0
    agree = True
    for n in range(8):
        counts = tuple_counts(n)
        for d in partitions(n, 7):
            if len(d) != n:
                continue
            realizable = counts.get(d, 0) > 0
            agree &= erdos_gallai(d) == realizable and merris_graphic(d) == realizable
            checked += 1
    c.check("graphic = oracle nonempty", agree, f"{checked} length-n partitions vs oracle (n <= 7)")
    pairs = 0
    agree = True
    for x, y, count in bipartite_pairs(8):
        agree &= gale_ryser(x, y) == (count > 0)
        pairs += 1
    c.check("Gale-Ryser = oracle nonempty", agree, f"{pairs} bipartite pairs vs oracle")
    return c.summary()


def criterion_4() -> tuple[bool, str]:
    c = Checks()
    seqs = 0
    ok = True
    for n in range(7):
        for gs in degree_classes(n).values():
            ok &= two_switch_space(gs).connected
            seqs += 1
    c.check("2-switch spaces connected", ok, f"{seqs} labeled degree lists connected")
    tabs = 0
    ok = True
    for n in range(7):
        for t, gs in ndl_classes(n).items():
            ok &= realization_space(t, gs).connected
            tabs += 1
    c.check("N-switch spaces connected", ok, f"{tabs} labeled NDLs connected")
    pairs = 0
    ok = True
    for n in range(7):
        for t, gs in ndl_classes(n).items():
            for g in gs:
                for h in gs:
                    inter = list(switch_sequence(g, h).graphs(g))
                    ok &= inter[-1] == h and all(ndl_of(x) == t for x in inter)
                    pairs += 1
    c.check("switch_sequence round trips", ok, f"{pairs} ordered pairs joined")
    return c.summary()


def criterion_5() -> tuple[bool, str]:
    c = Checks()
    graphs = 0
    ok_count = ok_moves = ok_tab = ok_pos = ok_cor = True
    for n in range(7):
        for t, gs in ndl_classes(n).items():
            count = len(enumerate_labeled_realizations(t))
            unique = count == 1
            ok_count &= count == len(gs)
            ok_tab &= is_ndl_unique_tableau(t) == unique
            for g in gs:
                u = is_ndl_unique_graph(g)
                ok_count &= u == unique
                ok_moves &= (not enumerate_n_switches(g)) == unique
                ok_pos &= positional_forbidden_free(g) == u
                ok_cor &= (same_class_threshold_oracle(g) and cross_class_difference_oracle(g)) == u
                graphs += 1
    c.check("unique = oracle count 1", ok_count, f"{graphs} graphs vs oracle counts")
    c.check("unique = no N-switch on every realization", ok_moves)
    c.check("tableau form = graph form", ok_tab)
    c.check("positional forbidden subgraphs", ok_pos)
    c.check("structural oracle form = sequence form", ok_cor)

    checked = 0
    ok = True
    for n in range(8):
        counts = tuple_counts(n)
        for d in partitions(n, 7):
            if len(d) == n:
                ok &= is_threshold_sequence(d) == (counts.get(d, 0) == 1)
                checked += 1
    c.check("threshold = oracle count 1", ok, f"{checked} threshold checks (n <= 7)")
    parts = list(partitions(8, 7))
    c.check(
        "alpha = beta iff EG equality",
        all((alpha_beta(d)[0] == alpha_beta(d)[1]) == satisfies_eg_equality(d) for d in parts if erdos_gallai(d))
        and all(is_threshold_sequence(d) == satisfies_eg_equality(d) for d in parts),
    )

    pairs = 0
    ok4 = ok_conj = ok2 = ok3 = True
    for x, y, count in bipartite_pairs(8):
        pairs += 1
        unique = count == 1
        ok4 &= is_difference_pair(x, y) == unique
        ok_conj &= (conjugate(x) == normalize(y)) == unique
        if count:
            p = len(x)
            ys = sorted(y, reverse=True)
            tight = all(sum(x[:k]) == sum(min(k, v) for v in ys) for k in range(1, p))
            ok3 &= tight == unique
            augmented = [v + p - 1 for v in x] + list(y)
            ok2 &= is_threshold_sequence(augmented) == unique
    c.check("difference pair = bipartite count 1", ok4, f"{pairs} bipartite pairs")
    c.check("conjugate condition = bipartite count 1", ok_conj)
    c.check("Gale-Ryser equalities = bipartite count 1", ok3)
    c.check("augmented threshold = bipartite count 1", ok2)
    return c.summary()


def criterion_6() -> tuple[bool, str]:
    c = Checks()
    total = 0
    ok = True
    for n in range(3, 8):
        for g in enumerate_graphs(n):
            r = reconstruct(deck_of(g))
            ok &= (
                r.edges == g.edge_count
                and r.degrees == degree_sequence(g)
                and r.ndl == canonicalize(ndl_of(g))
            )
            total += 1
    c.check("deck recovers edges, degrees, NDL", ok, f"{total} graphs reconstructed (3 <= n <= 7)")
    return c.summary()


def criterion_7() -> tuple[bool, str]:
    c = Checks()
    total = 0
    ok6 = okel = okjs = True
    for n in range(8):
        for g in enumerate_graphs(n):
            ok6 &= io.read_graph6(io.write_graph6(g)) == g
            okel &= io.read_edge_list(io.write_edge_list(g)) == g
            okjs &= io.read_graph_json(io.write_graph_json(g)) == g
            total += 1
    c.check("graph6", ok6)
    c.check("edge list", okel)
    c.check("JSON", okjs, f"{total} graphs round-trip in all three formats (n <= 7)")
    return c.summary()


CRITERIA: dict[int, tuple[str, Callable[[], tuple[bool, str]], float | None]] = {
    1: ("worked examples", criterion_1, 1.0),
    2: ("NDL graphicality, both directions", criterion_2, 120.0),
    3: ("graphicality test agreement", criterion_3, 60.0),
    4: ("switch connectivity", criterion_4, 300.0),
    5: ("uniqueness characterizations", criterion_5, 300.0),
    6: ("reconstruction from decks", criterion_6, 180.0),
    7: ("serialization round trips", criterion_7, None),
}


def evaluate(number: int) -> Outcome:
    title, fn, budget = CRITERIA[number]
    # keep the collector from rescanning caches left by earlier tests
    gc.collect()
    gc.freeze()
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed criterion, reported like the rest
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    out = Outcome(number, title, ok, detail, time.perf_counter() - start, budget)
    gc.unfreeze()
    RESULTS[number] = out
    print(out.line())
    return out


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    out = evaluate(number)
    assert out.ok, out.detail
    assert out.within_budget, f"took {out.seconds:.1f} s, budget {out.budget} s"


if __name__ == "__main__":
    outcomes = [evaluate(k) for k in sorted(CRITERIA)]
    sys.exit(0 if all(o.passed for o in outcomes) else 1)
