"""Exact multiplicative Zagreb indices on bipartite graphs, extremal layer-chain
constructions, and an exhaustive small-order oracle that checks them."""

from .canon import canonical_form, is_isomorphic
from .constructions import (
    ChainSpec,
    ExtremalParams,
    chain_graph,
    closed_form_pi1,
    closed_form_pi2,
    complete_bipartite,
    complete_bipartite_minus_edge,
    path,
    star,
    theorem38_chain,
    theorem38_params,
)
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    LayerPartition,
    bipartition,
    consecutive_layers_complete,
    diameter,
    eccentricity,
    from_edge_list,
    is_connected,
    layer_partition,
    layers_independent,
)
from .indices import ExactRatio, Ordering, compare, log_pi1, log_pi2, m1, m2, pi1, pi2, pi2_edge, pi2_vertex, ratio, ratio_vs_one

__version__ = "0.1.0"
