"""Munarini graphs, generalized Pell graphs and their cube polynomials."""

from ._munarini import (
    ConsistencyError,
    Graph,
    InputError,
    MedianClosureError,
    UnsupportedParameter,
    build,
    count_edges,
    cube_census,
    cube_number,
    cube_number_series,
    cube_poly,
    decode_psi,
    distance_cube_poly,
    encode_psi,
    enumerate_pell_strings,
    fib_k,
    graph_from_json,
    is_daisy_cube,
    is_isometric,
    is_median_closed,
    is_pell_string,
    maximal_cube_census,
    maximal_cube_poly,
    run_cli,
    verify,
    weight,
    weight_poly,
)

__all__ = [
    "ConsistencyError",
    "Graph",
    "InputError",
    "MedianClosureError",
    "UnsupportedParameter",
    "build",
    "count_edges",
    "cube_census",
    "cube_number",
    "cube_number_series",
    "cube_poly",
    "decode_psi",
    "distance_cube_poly",
    "encode_psi",
    "enumerate_pell_strings",
    "fib_k",
    "graph_from_json",
    "is_daisy_cube",
    "is_isometric",
    "is_median_closed",
    "is_pell_string",
    "maximal_cube_census",
    "maximal_cube_poly",
    "run_cli",
    "verify",
    "weight",
    "weight_poly",
]
