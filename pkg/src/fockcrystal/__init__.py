"""Crystal combinatorics of level-l Fock spaces with exact arithmetic."""
from .core import (
    EMPTY,
    INFINITY,
    ConfigurationError,
    LPartition,
    Node,
    OnWallError,
    Partition,
    Residue,
    addable_nodes,
    content,
    lpartitions,
    partitions,
    removable_nodes,
    residue,
)
from .crystal import (
    CherednikOrder,
    CrystalGraph,
    MOrder,
    build_graph,
    e_tilde,
    f_tilde,
    graphs_equivalent,
    highest_weight_vertices,
    jmmo_decompose,
    m_order,
    m_order_reversed,
    permute_components,
    reduced_word,
    z_word,
)
from .symbols import (
    Symbol,
    flip,
    general_symbol,
    match_and_swap,
    phi_bipartition,
    phi_bipartition_inverse,
    phi_infinity_wall,
    psi_single_wall_finite_e,
    r_matrix,
    symbol_of_bipartition,
)
from .walls import Wall, chamber_samples, crossing_path, essential_walls, signature, wall_cross
from .highest_weight import find_e_period, is_highest_weight, reduction_trace
from .cherednik import (
    CherednikParams,
    CherResidue,
    cherednik_order_graph,
    derive_crystal_data,
    essential_wall_test,
    params_compatible,
    psi_color_map,
    sharp_conjugate,
    sharp_params,
    wall_crossing_bijection,
)

__version__ = "0.1.0"
