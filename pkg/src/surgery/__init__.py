"""Exact Dehn surgery calculus: homology of surgered links, adjacency checks
to S^3, and lens space recognition on linear chains."""

from .adjacency import (
    AdjacencyReport,
    SplitHopfStructure,
    Verdict,
    certify_split_hopf_form,
    check_pair_classification,
    integral_adjacency_check,
    is_integer_homology_sphere,
    necessary_conditions,
)
from .chains import (
    ChainPresentation,
    LensSpace,
    blow_down_chain,
    blow_down_sequence_oracle,
    chain_to_lens,
    dual_slopes_integral,
    lens_equivalent,
    rolfsen_twist,
    slam_dunk,
)
from .enumeration import (
    enumerate_hopf_brunnian_slopes,
    enumerate_pair_solutions,
    enumerate_triple_obstructions,
)
from .homology import AbelianGroup, h1, h1_order, presentation_matrix, smith_normal_form
from .links import Diagram, FramedLink, linking_matrix, parse_pd, sublink
from .slopes import (
    INFINITY,
    Slope,
    cf_chain_evaluate,
    cf_negative_expand,
    make_slope,
    parse_slope,
    slope_distance,
)

__version__ = "0.1.0"
