#include "wham/coloring.hpp"

#include "wham/error.hpp"

#include <algorithm>
#include <string>

namespace wham {

FaceColoring two_coloring_from_wh(const PlanarMap& map, const WeakHamiltonian& h) {
    const std::size_t num_faces = map.num_faces();
    std::vector<int> parity(num_faces, -1);
    parity[0] = 0;
    std::vector<FaceId> queue = {0};

    // dual adjacency with a flip flag on the edges of h
    std::vector<std::vector<std::pair<FaceId, bool>>> adj(num_faces);
    for (EdgeId e = 0; e < map.num_edges(); ++e) {
        const EdgeFaces& ef = map.dual_adjacency()[e];
        bool flip = h.edges.test(e);
        adj[ef.side0].push_back({ef.side1, flip});
        adj[ef.side1].push_back({ef.side0, flip});
    }
    while (!queue.empty()) {
        FaceId f = queue.back();
        queue.pop_back();
        for (auto [g, flip] : adj[f]) {
            int want = flip ? 1 - parity[f] : parity[f];
            if (parity[g] == -1) {
                parity[g] = want;
                queue.push_back(g);
            } else if (parity[g] != want) {
                raise(ErrorKind::ParityInconsistency,
                      "parity clash between faces " + std::to_string(f) + " and " +
                          std::to_string(g));
            }
        }
    }

    FaceColoring coloring;
    coloring.palette_size = 2;
    coloring.color_of.resize(num_faces);
    for (FaceId f = 0; f < num_faces; ++f) coloring.color_of[f] = parity[f] + 1;
    return coloring;
}

FaceColoring four_coloring_from_pair(const PlanarMap& map, const WeakHamiltonian& h1,
                                     const WeakHamiltonian& h2, Gamma gamma) {
    if (!(h1.edges | h2.edges).is_full())
        raise(ErrorKind::NotCoveringPair,
              "the two weak Hamiltonians do not cover every edge");
    FaceColoring phi1 = two_coloring_from_wh(map, h1);
    FaceColoring phi2 = two_coloring_from_wh(map, h2);
    FaceColoring out;
    out.palette_size = 4;
    out.color_of.resize(map.num_faces());
    for (FaceId f = 0; f < map.num_faces(); ++f)
        out.color_of[f] = gamma(phi1.color_of[f], phi2.color_of[f]);
    return out;
}

namespace {

// 1 if the color sits in the pair containing color 1, else 2
int side_of(int color, PairPartition partition) {
    int partner = static_cast<int>(partition) + 1;
    return (color == 1 || color == partner) ? 1 : 2;
}

} // namespace

WeakHamiltonian wh_from_coloring(const PlanarMap& map, const FaceColoring& coloring,
                                 PairPartition partition) {
    if (!map.is_cubic())
        raise(ErrorKind::NotCubic, "coloring-to-weak-Hamiltonian needs a cubic map");
    if (coloring.palette_size != 4)
        raise(ErrorKind::BadParameter, "expected a 4-coloring, got palette "
                                           + std::to_string(coloring.palette_size));
    if (!is_proper(map, coloring))
        raise(ErrorKind::ImproperColoring, "coloring is not proper");

    EdgeSubset h(map.num_edges());
    for (EdgeId e = 0; e < map.num_edges(); ++e) {
        const EdgeFaces& ef = map.dual_adjacency()[e];
        if (side_of(coloring.color_of[ef.side0], partition) !=
            side_of(coloring.color_of[ef.side1], partition))
            h.set(e);
    }
    return make_weak_hamiltonian(map, h);
}

std::array<WeakHamiltonian, 3> wh_triple_from_coloring(const PlanarMap& map,
                                                       const FaceColoring& coloring) {
    return {wh_from_coloring(map, coloring, PairPartition::PairedWith2),
            wh_from_coloring(map, coloring, PairPartition::PairedWith3),
            wh_from_coloring(map, coloring, PairPartition::PairedWith4)};
}

bool is_proper(const PlanarMap& map, const FaceColoring& coloring) {
    if (coloring.color_of.size() != map.num_faces()) return false;
    for (const EdgeFaces& ef : map.dual_adjacency())
        if (coloring.color_of[ef.side0] == coloring.color_of[ef.side1]) return false;
    return true;
}

std::vector<FaceColoring> enumerate_colorings_bruteforce(const PlanarMap& map, int palette,
                                                         bool canonical_only,
                                                         std::size_t max_count) {
    const std::size_t num_faces = map.num_faces();

    // earlier-id dual neighbors per face, deduplicated
    std::vector<std::vector<FaceId>> earlier(num_faces);
    for (const EdgeFaces& ef : map.dual_adjacency()) {
        FaceId lo = std::min(ef.side0, ef.side1);
        FaceId hi = std::max(ef.side0, ef.side1);
        earlier[hi].push_back(lo);
    }
    for (auto& list : earlier) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    std::vector<FaceColoring> out;
    std::vector<int> colors(num_faces, 0);

    auto backtrack = [&](auto&& self, FaceId f, int max_used) -> bool {
        if (f == num_faces) {
            out.push_back({palette, colors});
            return max_count != 0 && out.size() >= max_count;
        }
        int limit = canonical_only ? std::min(palette, max_used + 1) : palette;
        for (int c = 1; c <= limit; ++c) {
            bool ok = true;
            for (FaceId g : earlier[f])
                if (colors[g] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            colors[f] = c;
            if (self(self, f + 1, std::max(max_used, c))) return true;
        }
        colors[f] = 0;
        return false;
    };
    backtrack(backtrack, 0, 0);
    return out;
}

FaceColoring canonical_coloring(const FaceColoring& coloring) {
    FaceColoring out;
    out.palette_size = coloring.palette_size;
    out.color_of.resize(coloring.color_of.size());
    std::vector<int> rename(coloring.palette_size + 1, 0);
    int next = 0;
    for (std::size_t f = 0; f < coloring.color_of.size(); ++f) {
        int c = coloring.color_of[f];
        if (rename[c] == 0) rename[c] = ++next;
        out.color_of[f] = rename[c];
    }
    return out;
}

} // namespace wham
