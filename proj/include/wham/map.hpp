#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wham {

using Dart = std::uint32_t;
using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using FaceId = std::uint32_t;

/// Face orbits of phi(d) = sigma(alpha(d)). Each cycle starts at its
/// minimal dart and faces are numbered in order of that minimal dart,
/// so repeated computation is byte-identical.
struct FaceSet {
    std::vector<std::vector<Dart>> faces;
    std::vector<FaceId> face_of; // indexed by dart
};

/// The two faces incident to an edge: side0 borders dart 2e, side1 borders
/// dart 2e+1. On a valid (bridgeless) map side0 != side1.
struct EdgeFaces {
    FaceId side0;
    FaceId side1;
};

/// A bridgeless map on the sphere, stored as a rotation system:
/// darts 0..2E-1, alpha(d) = d^1 (so edge id = d/2), and per-vertex
/// counterclockwise rotations that define sigma. Immutable after build();
/// faces and the dual adjacency are computed once during validation.
class PlanarMap {
public:
    /// Validates everything: dart indices, no loops, connectivity,
    /// Euler count V-E+F = 2, bridgelessness. Throws Error with kinds
    /// DanglingDart, LoopEdge, Disconnected, NonSphere, Bridge.
    static PlanarMap build(std::vector<std::vector<Dart>> vertex_rotations);

    std::size_t num_darts() const { return sigma_.size(); }
    std::size_t num_edges() const { return sigma_.size() / 2; }
    std::size_t num_vertices() const { return rotations_.size(); }
    std::size_t num_faces() const { return faces_.faces.size(); }

    Dart alpha(Dart d) const { return d ^ 1; }
    Dart sigma(Dart d) const { return sigma_[d]; }
    Dart phi(Dart d) const { return sigma_[d ^ 1]; }

    VertexId vertex_of(Dart d) const { return vertex_of_[d]; }
    EdgeId edge_of(Dart d) const { return d >> 1; }

    const std::vector<std::vector<Dart>>& vertex_rotations() const { return rotations_; }
    std::span<const Dart> rotation(VertexId v) const { return rotations_[v]; }
    std::size_t degree(VertexId v) const { return rotations_[v].size(); }

    bool is_cubic() const;

    const FaceSet& faces() const { return faces_; }
    FaceId face_of(Dart d) const { return faces_.face_of[d]; }

    /// One record per edge; multi-adjacency is preserved (two faces may
    /// share several edges, each contributing its own record).
    const std::vector<EdgeFaces>& dual_adjacency() const { return dual_; }

    /// Endpoint at dart 2e (side 0) or 2e+1 (side 1).
    VertexId edge_endpoint(EdgeId e, int side) const { return vertex_of_[2 * e + side]; }

private:
    PlanarMap() = default;

    std::vector<std::vector<Dart>> rotations_;
    std::vector<Dart> sigma_;
    std::vector<VertexId> vertex_of_;
    FaceSet faces_;
    std::vector<EdgeFaces> dual_;
};

} // namespace wham
