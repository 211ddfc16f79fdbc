#pragma once

// Deterministic test corpora: cubic bridgeless planar maps generated by
// H-expansions from small seeds, degree >= 4 maps (wheels, bipyramids),
// and a planar-code encoder so the corpus can be pushed through the
// production ingest path.

#include "wham/map.hpp"

#include <string>
#include <vector>

namespace wham::testing {

// subdivide the edges of darts a and b (which must lie on a common face and
// on distinct edges) and join the two new vertices across that face;
// preserves cubic, planar, bridgeless
PlanarMap h_expand(const PlanarMap& map, Dart a, Dart b);

// >= min_count distinct cubic bridgeless maps with at most max_vertices
// vertices, simple ones only (safe for planar-code round trips)
std::vector<PlanarMap> make_cubic_corpus(std::size_t min_count, std::size_t max_vertices);

PlanarMap make_wheel(int n);     // hub of degree n, cubic rim; V = n+1
PlanarMap make_bipyramid(int n); // two hubs of degree n, degree-4 rim; V = n+2

// >= 20 valid maps that all contain a vertex of degree >= 4
std::vector<PlanarMap> make_degree4_corpus();

// test-side encoder (clockwise lists, 1-based, zero-terminated)
std::string encode_planar_code(const std::vector<PlanarMap>& maps);

bool is_simple(const PlanarMap& map);

} // namespace wham::testing
