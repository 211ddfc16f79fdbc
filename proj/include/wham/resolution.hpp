#pragma once

#include "wham/coloring.hpp"
#include "wham/map.hpp"

#include <vector>

namespace wham {

/// Tracks faces across blowups: forward[f] is the face of the resolved map
/// that face f of the original deformed into; new_faces are the cycle faces
/// created by blowups. forward is injective, and every resolved face is in
/// exactly one of the two.
struct FaceCorrespondence {
    std::vector<FaceId> forward;
    std::vector<FaceId> new_faces;
};

struct ResolutionResult {
    PlanarMap map;
    FaceCorrespondence correspondence;
};

/// Replaces a vertex of degree d >= 3 by a d-cycle of degree-3 vertices, one
/// per incident edge, joined in rotation order. V grows by d-1, E by d, F
/// by 1. The blown-up vertex's id is reused by the first cycle vertex; the
/// remaining cycle vertices and the new darts are appended after existing
/// ids. Throws NoSuchVertex, DegreeTooLow (degree < 3).
ResolutionResult blowup(const PlanarMap& map, VertexId vertex);

/// Successive blowup at every vertex of degree >= 4 (lowest id first) until
/// the map is cubic. Requires minimum degree >= 3 (DegreeTooLow otherwise).
/// Already-cubic maps return an identity correspondence.
ResolutionResult resolve(const PlanarMap& map);

/// Pulls a coloring of the resolved map back along the correspondence:
/// color(F) = coloring(forward[F]). Throws IncompleteCorrespondence when the
/// coloring does not cover forward's image.
FaceColoring pull_back_coloring(const FaceColoring& coloring, const FaceCorrespondence& corr);

} // namespace wham
