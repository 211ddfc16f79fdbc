#include "wham/resolution.hpp"

#include "wham/error.hpp"

#include <string>
#include <vector>

namespace wham {

ResolutionResult blowup(const PlanarMap& map, VertexId vertex) {
    if (vertex >= map.num_vertices())
        raise(ErrorKind::NoSuchVertex, "vertex " + std::to_string(vertex) + " does not exist");
    const std::size_t d = map.degree(vertex);
    if (d < 3)
        raise(ErrorKind::DegreeTooLow,
              "blowup of a degree-" + std::to_string(d) + " vertex is undefined");

    const std::size_t E = map.num_edges();
    const std::size_t V = map.num_vertices();
    auto rotations = map.vertex_rotations();

    // cycle vertex w_k keeps the original dart t_k; w_0 reuses the old
    // vertex slot, w_1..w_{d-1} are appended. Cycle edge k joins w_k to
    // w_{k+1} with the even dart at w_k.
    std::vector<Dart> ts(rotations[vertex].begin(), rotations[vertex].end());
    rotations.resize(V + d - 1);
    for (std::size_t k = 0; k < d; ++k) {
        Dart toward_next = static_cast<Dart>(2 * (E + k));
        Dart toward_prev = static_cast<Dart>(2 * (E + (k + d - 1) % d) + 1);
        std::vector<Dart> rot = {ts[k], toward_next, toward_prev};
        if (k == 0)
            rotations[vertex] = std::move(rot);
        else
            rotations[V + k - 1] = std::move(rot);
    }

    ResolutionResult result{PlanarMap::build(std::move(rotations)), {}};

    // old faces keep at least one of their darts; the remaining faces of
    // the new map are the blowup cycle (exactly one)
    result.correspondence.forward.resize(map.num_faces());
    std::vector<char> hit(result.map.num_faces(), 0);
    for (FaceId f = 0; f < map.num_faces(); ++f) {
        FaceId nf = result.map.face_of(map.faces().faces[f][0]);
        result.correspondence.forward[f] = nf;
        hit[nf] = 1;
    }
    for (FaceId nf = 0; nf < result.map.num_faces(); ++nf)
        if (!hit[nf]) result.correspondence.new_faces.push_back(nf);
    return result;
}

ResolutionResult resolve(const PlanarMap& map) {
    for (VertexId v = 0; v < map.num_vertices(); ++v)
        if (map.degree(v) < 3)
            raise(ErrorKind::DegreeTooLow, "vertex " + std::to_string(v) + " has degree " +
                                               std::to_string(map.degree(v)) + " < 3");

    ResolutionResult result{map, {}};
    result.correspondence.forward.resize(map.num_faces());
    for (FaceId f = 0; f < map.num_faces(); ++f) result.correspondence.forward[f] = f;

    while (true) {
        VertexId target = static_cast<VertexId>(result.map.num_vertices());
        for (VertexId v = 0; v < result.map.num_vertices(); ++v)
            if (result.map.degree(v) >= 4) {
                target = v;
                break;
            }
        if (target == result.map.num_vertices()) break;

        ResolutionResult step = blowup(result.map, target);
        for (FaceId& f : result.correspondence.forward) f = step.correspondence.forward[f];
        for (FaceId& f : result.correspondence.new_faces) f = step.correspondence.forward[f];
        result.correspondence.new_faces.insert(result.correspondence.new_faces.end(),
                                               step.correspondence.new_faces.begin(),
                                               step.correspondence.new_faces.end());
        result.map = std::move(step.map);
    }
    return result;
}

FaceColoring pull_back_coloring(const FaceColoring& coloring, const FaceCorrespondence& corr) {
    FaceColoring out;
    out.palette_size = coloring.palette_size;
    out.color_of.reserve(corr.forward.size());
    for (FaceId f = 0; f < corr.forward.size(); ++f) {
        FaceId resolved = corr.forward[f];
        if (resolved >= coloring.color_of.size())
            raise(ErrorKind::IncompleteCorrespondence,
                  "coloring has no entry for resolved face " + std::to_string(resolved));
        out.color_of.push_back(coloring.color_of[resolved]);
    }
    return out;
}

} // namespace wham
