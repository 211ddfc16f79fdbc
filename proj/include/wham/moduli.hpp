#pragma once

#include "wham/coloring.hpp"
#include "wham/factors.hpp"
#include "wham/map.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wham {

using WhIndex = std::uint32_t;
using CliqueId = std::uint32_t;

/// The weak Hamiltonian graph: vertices are the weak Hamiltonians of a map
/// in canonical order, edges the mutation pairs (i < j, sorted).
struct WeakHamiltonianGraph {
    std::vector<WeakHamiltonian> vertices;
    std::vector<std::pair<WhIndex, WhIndex>> edges;

    std::size_t degree(WhIndex v) const;
};

/// Chromatic cliques: the 3-vertex cliques {h1, h2, h1^h2} that partition
/// the edge set of the weak Hamiltonian graph. members are sorted triples,
/// listed in sorted order; clique_of_edge is parallel to the graph's edge
/// list; cliques_of_vertex lists, per weak Hamiltonian, the cliques through
/// it (its witness list, of size 2^(N-1)).
struct ChromaticCliqueSet {
    std::vector<std::array<WhIndex, 3>> cliques;
    std::vector<CliqueId> clique_of_edge;
    std::vector<std::vector<CliqueId>> cliques_of_vertex;
};

/// The chromatic graph: one vertex per clique, an edge whenever two cliques
/// share a weak Hamiltonian, annotated with that shared vertex. Since
/// distinct cliques share at most one vertex, simple and multigraph modes
/// produce the same edge list; the flag is recorded for exports.
struct ChromaticGraph {
    std::size_t num_vertices = 0;
    std::vector<std::pair<CliqueId, CliqueId>> edges;
    std::vector<WhIndex> shared_wh;
    bool multigraph = false;
};

/// Per-check outcome of validate_structure / run_check.
struct StructureCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct StructureReport {
    std::vector<StructureCheck> checks;

    bool all_pass() const;
};

WeakHamiltonianGraph build_wh_graph(const PlanarMap& map, unsigned threads = 1);

/// Locates h1^h2 for every edge and groups the edges into their cliques.
/// MissingThirdVertex / EdgeInTwoCliques indicate a core bug, not bad input.
ChromaticCliqueSet find_chromatic_cliques(const WeakHamiltonianGraph& graph);

ChromaticGraph build_chromatic_graph(const WeakHamiltonianGraph& graph,
                                     const ChromaticCliqueSet& cliques,
                                     bool multigraph = false);

/// The canonical 4-coloring of a chromatic clique (from its two lowest
/// members), and its inverse. Together they are the bijection between
/// cliques and canonical colorings.
FaceColoring clique_to_coloring(const PlanarMap& map, const WeakHamiltonianGraph& graph,
                                const ChromaticCliqueSet& cliques, CliqueId clique);
CliqueId coloring_to_clique(const PlanarMap& map, const WeakHamiltonianGraph& graph,
                            const ChromaticCliqueSet& cliques, const FaceColoring& coloring);

/// Runs every structural law of the weak Hamiltonian graph and its cliques
/// (simplicity, degree = 2^N, third-vertex closure, edge/clique coverage,
/// XOR-zero cliques, membership counts, pairwise overlap <= 1, and the
/// edge <=> union-covers equivalence) and reports per-check results with
/// counterexamples.
StructureReport validate_structure(const WeakHamiltonianGraph& graph,
                                   const ChromaticCliqueSet& cliques);

/// Aggregate check suite for a user map: map invariants, the mutation and
/// moduli laws, both coloring round trips, and the 24-per-clique oracle
/// identity. Cubic-only suites are skipped (and say so) on non-cubic input.
StructureReport run_check(const PlanarMap& map, unsigned threads = 1);

/// Tiny simple-graph view for exact isomorphism checks.
struct SmallGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

SmallGraph cycle_graph(std::size_t n);
SmallGraph path_graph(std::size_t n);
SmallGraph complete_graph(std::size_t n);
SmallGraph to_small_graph(const WeakHamiltonianGraph& graph);
SmallGraph to_small_graph(const ChromaticGraph& graph);
/// Underlying simple graph of a map (parallel edges collapsed).
SmallGraph underlying_simple_graph(const PlanarMap& map);

/// Exact isomorphism for graphs with at most 12 vertices, by degree-refined
/// exhaustive search. Throws TooLarge above that.
bool graph_iso_small(const SmallGraph& g1, const SmallGraph& g2);

} // namespace wham
