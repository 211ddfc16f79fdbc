#include "corpus.hpp"

#include "wham/error.hpp"
#include "wham/io.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace wham::testing {

PlanarMap h_expand(const PlanarMap& map, Dart a, Dart b) {
    if (map.face_of(a) != map.face_of(b))
        raise(ErrorKind::BadParameter, "darts are not on a common face");
    if (map.edge_of(a) == map.edge_of(b))
        raise(ErrorKind::BadParameter, "darts lie on the same edge");

    const Dart a_back = map.alpha(a);
    const Dart b_back = map.alpha(b);
    const VertexId v = map.vertex_of(a_back);
    const VertexId q = map.vertex_of(b_back);
    const std::size_t E = map.num_edges();

    // edge of a becomes u--x (keeping darts a, a_back), the stub x--v gets
    // darts 2E (at x) and 2E+1 (at v, in a_back's old slot); likewise p--y
    // and y--q with darts 2E+2, 2E+3; the join x--y gets 2E+4, 2E+5
    auto rotations = map.vertex_rotations();
    std::replace(rotations[v].begin(), rotations[v].end(), a_back, static_cast<Dart>(2 * E + 1));
    std::replace(rotations[q].begin(), rotations[q].end(), b_back, static_cast<Dart>(2 * E + 3));
    // the face lies to the right of each of its darts, so the rotation at a
    // new vertex reads (forward, backward, into the face)
    rotations.push_back({static_cast<Dart>(2 * E), a_back, static_cast<Dart>(2 * E + 4)});
    rotations.push_back({static_cast<Dart>(2 * E + 2), b_back, static_cast<Dart>(2 * E + 5)});
    return PlanarMap::build(std::move(rotations));
}

std::vector<PlanarMap> make_cubic_corpus(std::size_t min_count, std::size_t max_vertices) {
    std::vector<PlanarMap> corpus;
    std::set<std::string> seen;
    std::deque<PlanarMap> frontier;

    auto push = [&](PlanarMap m) {
        std::string key = emit_map_document(document_from_map(m));
        if (!seen.insert(key).second) return;
        corpus.push_back(m);
        if (m.num_vertices() + 2 <= max_vertices) frontier.push_back(std::move(m));
    };

    push(generate("tetrahedron"));
    for (int n = 3; n <= 6; ++n) push(generate("prism", n));

    while (!frontier.empty() && corpus.size() < min_count + 10) {
        PlanarMap m = std::move(frontier.front());
        frontier.pop_front();
        std::size_t produced = 0;
        for (FaceId f = 0; f < m.num_faces() && produced < 8; ++f) {
            const auto& cycle = m.faces().faces[f];
            for (std::size_t i = 0; i < cycle.size() && produced < 8; ++i)
                for (std::size_t j = i + 1; j < cycle.size() && produced < 8; ++j) {
                    if (m.edge_of(cycle[i]) == m.edge_of(cycle[j])) continue;
                    push(h_expand(m, cycle[i], cycle[j]));
                    ++produced;
                }
        }
    }
    return corpus;
}

PlanarMap make_wheel(int n) {
    std::vector<std::vector<VertexId>> nbrs(n + 1);
    for (int k = 0; k < n; ++k)
        nbrs[k] = {static_cast<VertexId>((k + 1) % n), static_cast<VertexId>(n),
                   static_cast<VertexId>((k + n - 1) % n)};
    for (int k = 0; k < n; ++k) nbrs[n].push_back(static_cast<VertexId>(k));
    return map_from_neighbor_lists(nbrs);
}

PlanarMap make_bipyramid(int n) {
    const VertexId inner = static_cast<VertexId>(n);
    const VertexId outer = static_cast<VertexId>(n + 1);
    std::vector<std::vector<VertexId>> nbrs(n + 2);
    for (int k = 0; k < n; ++k)
        nbrs[k] = {outer, static_cast<VertexId>((k + 1) % n), inner,
                   static_cast<VertexId>((k + n - 1) % n)};
    for (int k = 0; k < n; ++k) nbrs[inner].push_back(static_cast<VertexId>(k));
    nbrs[outer].push_back(0);
    for (int k = n - 1; k >= 1; --k) nbrs[outer].push_back(static_cast<VertexId>(k));
    return map_from_neighbor_lists(nbrs);
}

std::vector<PlanarMap> make_degree4_corpus() {
    std::vector<PlanarMap> out;
    for (int n = 4; n <= 13; ++n) out.push_back(make_wheel(n));
    for (int n = 3; n <= 12; ++n) out.push_back(make_bipyramid(n));
    out.push_back(generate("octahedron"));
    return out;
}

std::string encode_planar_code(const std::vector<PlanarMap>& maps) {
    std::string out = ">>planar_code<<";
    for (const PlanarMap& m : maps) {
        out.push_back(static_cast<char>(m.num_vertices()));
        for (VertexId v = 0; v < m.num_vertices(); ++v) {
            auto rot = m.rotation(v);
            for (auto it = rot.rbegin(); it != rot.rend(); ++it)
                out.push_back(static_cast<char>(m.vertex_of(m.alpha(*it)) + 1));
            out.push_back('\0');
        }
    }
    return out;
}

bool is_simple(const PlanarMap& map) {
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (EdgeId e = 0; e < map.num_edges(); ++e) {
        VertexId a = map.edge_endpoint(e, 0), b = map.edge_endpoint(e, 1);
        if (!pairs.insert({std::min(a, b), std::max(a, b)}).second) return false;
    }
    return true;
}

} // namespace wham::testing
