from __future__ import annotations

import pytest

from conftest import ndl_classes
from ndlgraph import (
    Graph,
    NotGraphicError,
    apply_n_switch,
    derive,
    is_ndl_unique_graph,
    is_ndl_unique_tableau,
    ndl_of,
    non_uniqueness_witness,
)
from ndlgraph.graph import complete_graph, cycle_graph
from ndlgraph.oracle import (
    cross_class_difference_oracle,
    positional_forbidden_free,
    same_class_threshold_oracle,
)


class TestTableau:
    def test_pendant_c4(self, pendant_c4_ndl):
        assert is_ndl_unique_tableau(pendant_c4_ndl)

    def test_c4(self):
        assert not is_ndl_unique_tableau([[2, 2]] * 4)

    def test_edgeless(self):
        assert is_ndl_unique_tableau([[], [], []])

    def test_not_graphic(self):
        with pytest.raises(NotGraphicError):
            is_ndl_unique_tableau([[1], [1], [1]])


class TestGraph:
    def test_pendant_c4(self, pendant_c4):
        assert is_ndl_unique_graph(pendant_c4)
        assert non_uniqueness_witness(pendant_c4) is None

    def test_c4(self, c4):
        assert not is_ndl_unique_graph(c4)
        m = non_uniqueness_witness(c4)
        assert m is not None and m.is_valid(c4)
        assert ndl_of(apply_n_switch(c4, m)) == ndl_of(c4)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_complete(self, n):
        assert is_ndl_unique_graph(complete_graph(n))

    def test_edgeless(self):
        assert non_uniqueness_witness(Graph(4)) is None

    def test_c4_inside_unique_graph(self, pendant_c4):
        # the 4-cycle appears as an induced subgraph, yet the whole graph is unique
        assert is_ndl_unique_graph(pendant_c4)
        assert not is_ndl_unique_graph(cycle_graph(4))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_matches_class_size(self, n):
        for t, gs in ndl_classes(n).items():
            unique = len(gs) == 1
            assert is_ndl_unique_tableau(t) == unique
            for g in gs:
                assert is_ndl_unique_graph(g) == unique
                w = non_uniqueness_witness(g)
                assert (w is None) == unique
                if w is not None:
                    assert apply_n_switch(g, w) in gs

    @pytest.mark.parametrize("n", [4, 5])
    def test_structural_forms_agree(self, n):
        for gs in ndl_classes(n).values():
            for g in gs:
                unique = is_ndl_unique_graph(g)
                assert positional_forbidden_free(g) == unique
                assert (same_class_threshold_oracle(g) and cross_class_difference_oracle(g)) == unique


def test_degenerate_classes_are_vacuous():
    # single vertex classes and all-zero crossings
    t = ndl_of(Graph(4, [(0, 1), (1, 2)]))
    dl = derive(t)
    assert dl.same_deg[2] == (0,)
    assert is_ndl_unique_tableau(t)
