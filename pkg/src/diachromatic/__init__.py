"""Complete acyclic colorings of digraphs: dichromatic, diachromatic and
pseudoachromatic numbers, constructive colorings, dihomomorphisms and
inequality checks."""

from .coloring import (
    Coloring,
    ColoringCertificate,
    InvalidColoring,
    Witness,
    certify,
    chromatic_classes,
    is_acyclic_coloring,
    is_complete_coloring,
    missing_pairs,
)
from .digraph import (
    Digraph,
    adjacent,
    complement,
    condensation,
    converse,
    format_dgr,
    from_arcs,
    induced,
    is_acyclic,
    is_tournament,
    parse_dgr,
    read_dgr,
    remove_arc,
    remove_vertex,
    strong_components,
    underlying_graph_edges,
)
from .solver import (
    SolveResult,
    complete_l_coloring,
    diachromatic_number,
    dichromatic_number,
    greedy_coloring,
    is_k_minimal,
    pseudoachromatic_number,
)

__version__ = "0.1.0"
