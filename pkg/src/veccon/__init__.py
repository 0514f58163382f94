"""Solvers for the vector connectivity problem and its free-set variant."""

from .approx import greedy
from .block_solver import (
    complete_solver,
    cycle_solver,
    fsveccon,
    fsveccon_biconnect,
    is_block_cactus,
    solve_block_cactus,
)
from .errors import (
    BlockTypeError,
    InputError,
    ParseError,
    SizeLimitError,
    VecconError,
)
from .fans import CutWitness, Fan, is_k_linked, kappa, validate_cut_witness, validate_fan
from .gadgets import (
    GadgetMapping,
    build_bipartite_gadget,
    build_gadget,
    claim1_family,
    exact_vertex_cover,
    extract_vertex_cover,
    normalize_solution,
    solution_from_cover,
)
from .generators import (
    cubic_catalog,
    gen_block_cactus,
    gen_block_graph,
    gen_random_connected,
    gen_requirements,
)
from .graph import (
    BlockDecomposition,
    Graph,
    block_decomposition,
    induced_subgraph,
    is_connected,
    open_neighborhood,
    structural_checks,
)
from .instance import Instance
from .lowreq import solve_lowreq
from .oracle import (
    ViolatingFamily,
    brute_force_min,
    is_feasible,
    min_hitting_set,
    violating_family,
)

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "BlockTypeError",
    "CutWitness",
    "Fan",
    "GadgetMapping",
    "Graph",
    "InputError",
    "Instance",
    "ParseError",
    "SizeLimitError",
    "VecconError",
    "ViolatingFamily",
    "block_decomposition",
    "brute_force_min",
    "build_bipartite_gadget",
    "build_gadget",
    "claim1_family",
    "complete_solver",
    "cubic_catalog",
    "cycle_solver",
    "exact_vertex_cover",
    "extract_vertex_cover",
    "fsveccon",
    "fsveccon_biconnect",
    "gen_block_cactus",
    "gen_block_graph",
    "gen_random_connected",
    "gen_requirements",
    "greedy",
    "induced_subgraph",
    "is_block_cactus",
    "is_connected",
    "is_feasible",
    "is_k_linked",
    "kappa",
    "min_hitting_set",
    "normalize_solution",
    "open_neighborhood",
    "solution_from_cover",
    "solve_block_cactus",
    "solve_lowreq",
    "structural_checks",
    "validate_cut_witness",
    "validate_fan",
    "violating_family",
]
