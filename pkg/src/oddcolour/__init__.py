"""3-colouring dense graphs of large odd girth through a weighted auxiliary graph.

Typical use::

    from oddcolour import gen_cycle, colour_graph
    colouring = colour_graph(gen_cycle(10981), k=5490, t=0)
"""

from __future__ import annotations

from .auxiliary import (
    CenterFamily,
    PropertyReport,
    build_auxiliary,
    effective_t,
    select_centers,
    verify_properties,
)
from .colouring import (
    Colouring,
    LiftReport,
    chromatic_oracle,
    colour_graph,
    lift_to_A,
    three_colour_from_A,
    validate_colouring,
)
from .decomposition import (
    CaseBState,
    Decomposition,
    GrowthMode,
    combine_bipartite_sets,
    cycle_neighbourhood_bound,
    find_B,
    grow_path_in_cycle,
    interior_check,
    iter_decompositions,
    path_neighbourhood_bound,
    validate_decomposition,
)
from .errors import *  # noqa: F403
from .formats import parse_graph, serialize
from .generators import GeneratorSpec, gen_blow_up, gen_cycle, gen_mycielski, gen_random_Hk, generate
from .graph_core import SimpleGraph, closed_neighbourhood, interior, is_connected_induced, set_distance
from .parity import (
    MembershipReport,
    OddCycleWitness,
    check_membership,
    is_bipartite,
    is_weighted_bipartite,
    min_odd_cycle_weight,
    odd_girth,
)
from .weighted import PathWitness, WeightedGraph, lightest_path, subdivide, weighted_ball, weighted_distance

__version__ = "0.1.0"
