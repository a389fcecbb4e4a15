"""Neighborhood degree lists: computation, realization, N-switches, uniqueness and decks."""

from .errors import (
    DegreeMismatchError,
    GraphFormatError,
    InconsistentDeckError,
    InfeasibleTableauError,
    InvalidMoveError,
    NDLError,
    NDLMismatchError,
    NotGraphicError,
    SizeCapError,
)
from .graph import (
    Graph,
    TwoSwitch,
    apply_two_switch,
    bipartite_subgraph,
    degree_sequence,
    enumerate_two_switches,
    induced_subgraph,
)
from .graphicality import (
    alpha_beta,
    conjugate,
    erdos_gallai,
    gale_ryser,
    is_difference_pair,
    is_graphic_ndl,
    is_threshold_sequence,
    merris_graphic,
)
from .realization import (
    NSwitch,
    SwitchPath,
    apply_n_switch,
    canonical_bipartite_realization,
    canonical_realization,
    enumerate_n_switches,
    realize_ndl,
    steer_neighborhood,
    switch_sequence,
)
from .reconstruction import (
    Deck,
    Reconstruction,
    deck_of,
    degrees_from_deck,
    edge_count_from_deck,
    ndl_from_deck,
    reconstruct,
)
from .tableau import (
    BipartitionedList,
    DerivedLists,
    Tableau,
    canonicalize,
    derive,
    is_feasible,
    ndl_entry_sum,
    ndl_equal_labeled,
    ndl_equal_unlabeled,
    ndl_of,
)
from .uniqueness import is_ndl_unique_graph, is_ndl_unique_tableau, non_uniqueness_witness

__version__ = "0.1.0"
