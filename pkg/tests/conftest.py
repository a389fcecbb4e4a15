from __future__ import annotations

import sys
from functools import lru_cache

import pytest

from ndlgraph import Graph, Tableau
from ndlgraph.oracle import graphs_by_degrees, graphs_by_ndl

# Pendant on a 4-cycle.  Vertex 0 is the degree-3 vertex, 1 and 2 its cycle
# neighbors, 3 the opposite cycle vertex and 4 the pendant.
PENDANT_C4_EDGES = [(0, 1), (0, 2), (1, 3), (2, 3), (0, 4)]
PENDANT_C4_NDL = ((2, 2, 1), (3, 2), (3, 2), (2, 2), (3,))

# The same graph lettered a..e along the cycle (ab, bc, cd, da) with e on a.
PENDANT_C4_LETTERED = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]


@pytest.fixture
def pendant_c4() -> Graph:
    return Graph(5, PENDANT_C4_EDGES)


@pytest.fixture
def pendant_c4_ndl() -> Tableau:
    return Tableau(PENDANT_C4_NDL)


@pytest.fixture
def c4() -> Graph:
    return Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@lru_cache(maxsize=None)
def ndl_classes(n: int) -> dict:
    """Labeled NDL -> list of its labeled realizations, from full enumeration."""
    return graphs_by_ndl(n)


@lru_cache(maxsize=None)
def degree_classes(n: int) -> dict:
    return graphs_by_degrees(n)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        terminalreporter.write_line(results[k].line())
