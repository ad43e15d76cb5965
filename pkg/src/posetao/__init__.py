"""Largest induced cluster subgraphs (ao) of graphs and posets, with extremal constructions."""

from .poset import (
    ChainFamily,
    CoverPair,
    CycleError,
    Poset,
    SimpleGraph,
    comparability_graph,
    cover_graph,
    cover_pairs,
    disjoint_union,
    from_cover_relations,
    height,
    invert,
    is_connected,
    place_above,
    width,
)
from .solver import (
    AoResult,
    NodeLimitExceeded,
    SolverConfig,
    TooLarge,
    ao_bounds,
    ao_brute,
    ao_exact,
    ao_poset,
    is_cluster,
)
from .structure import (
    ShapeWitness,
    central_element,
    find_cover_cycle,
    find_n_shape,
    find_v_shape,
    is_acyclic,
    is_n_free,
    is_v_free,
)

__version__ = "0.1.0"
