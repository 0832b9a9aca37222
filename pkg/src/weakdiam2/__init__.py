"""Oriented graphs of weak diameter 2 (absolute oriented cliques) with few arcs."""

from .construct import base_clique, build_O, optimal_split, verify_family
from .digraph import (
    OrientedGraph,
    add_arc,
    agree_on_common_neighbors,
    delete_vertex,
    is_absolute_clique,
    is_source,
    merge,
    push,
    sees,
    shrink_clique,
    shrink_step,
    weak_diameter,
)
from .search import SearchConfig, SearchOutcome, f2_exact, lower_bound_seed
from .sequence import bound_fhpz, bound_klss, bound_ks, check_lemma_suite, x, x_alt

__version__ = "0.1.0"
