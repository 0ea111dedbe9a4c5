"""Exact arithmetic for the planar rook monoid and its diagram algebra."""

from prook._core import (
    Diagram,
    Element,
    all_diagrams,
    bratteli_dot,
    center_basis,
    centralizer_dimension,
    character_table,
    character_table_csv,
    chi,
    chi_on_x,
    compose,
    decompose_character,
    diagram_count,
    diagram_from_json,
    edgeless,
    element,
    element_from_json,
    identity,
    irreducibility_dimension,
    is_central,
    p_drop,
    parse_diagram,
    pi,
    regular_trace,
    restriction_blocks,
    rho,
    rho_algebra,
    tensor_multiplicities,
    verify,
    wedderburn,
    wedderburn_inv,
    x_of,
    x_unit,
    __version__,
)

__all__ = [
    "Diagram",
    "Element",
    "all_diagrams",
    "bratteli_dot",
    "center_basis",
    "centralizer_dimension",
    "character_table",
    "character_table_csv",
    "chi",
    "chi_on_x",
    "compose",
    "decompose_character",
    "diagram_count",
    "diagram_from_json",
    "edgeless",
    "element",
    "element_from_json",
    "identity",
    "irreducibility_dimension",
    "is_central",
    "p_drop",
    "parse_diagram",
    "pi",
    "regular_trace",
    "restriction_blocks",
    "rho",
    "rho_algebra",
    "tensor_multiplicities",
    "verify",
    "wedderburn",
    "wedderburn_inv",
    "x_of",
    "x_unit",
    "__version__",
]
