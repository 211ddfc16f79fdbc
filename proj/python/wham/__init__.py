"""Weak Hamiltonians, mutations, and four-coloring moduli on planar maps.

The heavy lifting lives in the compiled ``_wham`` extension; this package
re-exports its surface.
"""

from ._wham import (
    ChromaticCliqueSet,
    ChromaticGraph,
    FaceColoring,
    FaceCorrespondence,
    MapDocument,
    PlanarMap,
    WeakHamiltonian,
    WeakHamiltonianGraph,
    WhamError,
    all_mutations,
    blowup,
    build_chromatic_graph,
    build_map,
    build_wh_graph,
    canonical_coloring,
    clique_to_coloring,
    coloring_to_clique,
    complement,
    cycle_decomposition,
    emit_map_document,
    enumerate_colorings,
    export_dot_chromatic,
    export_dot_coloring,
    export_dot_map,
    export_dot_wh_graph,
    find_chromatic_cliques,
    four_coloring_from_pair,
    generate,
    graph_iso,
    is_mutation_pair,
    is_proper,
    is_weak_hamiltonian,
    make_weak_hamiltonian,
    map_from_neighbor_lists,
    mutate,
    parse_map_document,
    parse_planar_code,
    perfect_matchings,
    pull_back_coloring,
    resolve,
    run_check,
    two_coloring_from_wh,
    validate_structure,
    weak_hamiltonians,
    wh_from_coloring,
    wh_triple_from_coloring,
)

__all__ = [
    "ChromaticCliqueSet",
    "ChromaticGraph",
    "FaceColoring",
    "FaceCorrespondence",
    "MapDocument",
    "PlanarMap",
    "WeakHamiltonian",
    "WeakHamiltonianGraph",
    "WhamError",
    "all_mutations",
    "blowup",
    "build_chromatic_graph",
    "build_map",
    "build_wh_graph",
    "canonical_coloring",
    "clique_to_coloring",
    "coloring_to_clique",
    "complement",
    "cycle_decomposition",
    "emit_map_document",
    "enumerate_colorings",
    "export_dot_chromatic",
    "export_dot_coloring",
    "export_dot_map",
    "export_dot_wh_graph",
    "find_chromatic_cliques",
    "four_coloring_from_pair",
    "generate",
    "graph_iso",
    "is_mutation_pair",
    "is_proper",
    "is_weak_hamiltonian",
    "make_weak_hamiltonian",
    "map_from_neighbor_lists",
    "mutate",
    "parse_map_document",
    "parse_planar_code",
    "perfect_matchings",
    "pull_back_coloring",
    "resolve",
    "run_check",
    "two_coloring_from_wh",
    "validate_structure",
    "weak_hamiltonians",
    "wh_from_coloring",
    "wh_triple_from_coloring",
]

__version__ = "0.1.0"
