#pragma once

#include "wham/coloring.hpp"
#include "wham/map.hpp"
#include "wham/moduli.hpp"
#include "wham/mutation.hpp"
#include "wham/resolution.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wham {

/// The map interchange document: UTF-8 JSON text with fields num_darts and
/// vertex_rotations (and an optional name). emit(parse(text)) == text for
/// documents produced by emit_map_document.
struct MapDocument {
    std::optional<std::string> name;
    std::size_t num_darts = 0;
    std::vector<std::vector<Dart>> vertex_rotations;

    PlanarMap to_map() const { return PlanarMap::build(vertex_rotations); }
};

/// Parses and validates (schema errors raise ParseError, then build_map
/// errors apply).
MapDocument parse_map_document(std::string_view text);
std::string emit_map_document(const MapDocument& doc);
MapDocument document_from_map(const PlanarMap& map, std::optional<std::string> name = {});

/// Builds a map from per-vertex counterclockwise neighbor lists. Repeated
/// neighbors (parallel edges) are paired in reverse occurrence order: the
/// i-th occurrence of v around u matches the (m-1-i)-th occurrence of u
/// around v, the planar-consistent convention for nested parallels.
PlanarMap map_from_neighbor_lists(const std::vector<std::vector<VertexId>>& ccw_neighbors);

/// Standard binary planar code: ">>planar_code<<" header, then per graph a
/// vertex-count byte followed by zero-terminated 1-based neighbor lists in
/// clockwise order. Lists are reversed on read to match the
/// counterclockwise sigma convention. Throws BadHeader, TruncatedRecord,
/// ParseError, plus build_map errors per entry.
std::vector<PlanarMap> parse_planar_code(std::string_view bytes);

/// Per-entry tolerant variant used for batch validation: failed entries
/// carry their error text instead of a map. Header and truncation errors
/// still throw.
struct CorpusEntry {
    std::string provenance;
    std::optional<PlanarMap> map;
    std::string error;
};
std::vector<CorpusEntry> parse_planar_code_entries(std::string_view bytes,
                                                   std::string_view provenance_prefix);

/// Canonical embeddings of the named maps: "tetrahedron", "prism" (n >= 3),
/// "k23", "theta", "octahedron". Throws UnknownGenerator / BadParameter.
PlanarMap generate(const std::string& name, int n = 0);

/// Deterministic DOT text. When a weak Hamiltonian overlay is supplied its
/// edges are bold and the complement dashed.
std::string export_dot_map(const PlanarMap& map, const WeakHamiltonian* overlay = nullptr);
/// Chromatic cliques, when given, are rendered as grey-filled clusters (one
/// per clique, holding its three edges).
std::string export_dot_wh_graph(const WeakHamiltonianGraph& graph,
                                const ChromaticCliqueSet* cliques = nullptr);
std::string export_dot_chromatic(const ChromaticGraph& graph);
/// Map drawing with one box node per face carrying its color.
std::string export_dot_coloring(const PlanarMap& map, const FaceColoring& coloring);

// JSON export/import surfaces used by the CLI and Python bindings. All
// exports are byte-stable.
std::string export_json_wh_list(const std::vector<WeakHamiltonian>& whs,
                                std::optional<std::string> map_name = {});
std::string export_json_wh(const WeakHamiltonian& h, std::optional<std::size_t> index = {});
std::string export_json_wh_graph(const WeakHamiltonianGraph& graph,
                                 const ChromaticCliqueSet* cliques = nullptr);
/// coloring_table, when given, records the canonical coloring of each clique
/// (the clique <-> coloring bijection, one entry per chromatic vertex).
std::string export_json_chromatic(const ChromaticGraph& graph,
                                  const ChromaticCliqueSet& cliques,
                                  const std::vector<FaceColoring>* coloring_table = nullptr);
std::string export_json_coloring(const FaceColoring& coloring);
std::string export_json_colorings(const std::vector<FaceColoring>& colorings, bool canonical);
std::string export_json_correspondence(const FaceCorrespondence& corr);
std::string export_json_report(const StructureReport& report);

/// Reads a coloring from either a single-coloring document
/// ({"palette_size", "colors"}) or an oracle document ({"colorings": [...]})
/// with an index into the list.
FaceColoring parse_coloring_document(std::string_view text, std::size_t index = 0);

} // namespace wham
