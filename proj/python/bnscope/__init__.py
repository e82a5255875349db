"""Boolean network analysis: dynamics, interaction graphs and and-net constructions."""

from ._bnscope import (
    AndNet,
    Attractor,
    BooleanNetwork,
    DimensionError,
    LoopError,
    NotAnAndNet,
    ParseError,
    analyze_json,
    attractive_cycles,
    attractors,
    cyclic_example_network,
    fixed_point_free_andnet,
    fixed_points,
    global_graph_edges,
    is_nonexpansive,
    jacobian,
    local_cycles,
    local_graph_edges,
    negative_seed_andnet,
    network_to_andnet,
    padded_cycle_network,
    parse_andnet,
    parse_network,
    pure_antipodal_network,
    random_andnet,
    reduce,
    render_andnet,
    render_network,
    to_bitstring,
    verify_fixed_point_free_construction,
    verify_isometries,
    verify_kernel_free_digraph,
    verify_padded_cycle,
    verify_sign_parity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
