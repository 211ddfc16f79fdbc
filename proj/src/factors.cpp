#include "wham/factors.hpp"

#include "wham/error.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <string>

namespace wham {

EdgeSubset complement(const PlanarMap& map, const EdgeSubset& s) {
    if (s.size() != map.num_edges())
        raise(ErrorKind::BadParameter, "edge subset size does not match the map");
    return s.complemented();
}

namespace {

struct OtherEnd {
    EdgeId edge;
    VertexId vertex;
};

// incident edges per vertex, in rotation order
std::vector<std::vector<OtherEnd>> incidence(const PlanarMap& map) {
    std::vector<std::vector<OtherEnd>> inc(map.num_vertices());
    for (VertexId v = 0; v < map.num_vertices(); ++v) {
        inc[v].reserve(map.degree(v));
        for (Dart d : map.rotation(v))
            inc[v].push_back({map.edge_of(d), map.vertex_of(map.alpha(d))});
    }
    return inc;
}

void match_recurse(const std::vector<std::vector<OtherEnd>>& inc, std::vector<char>& covered,
                   VertexId from, std::vector<EdgeId>& chosen, std::size_t num_edges,
                   std::vector<EdgeSubset>& out) {
    VertexId v = from;
    while (v < covered.size() && covered[v]) ++v;
    if (v == covered.size()) {
        EdgeSubset m(num_edges);
        for (EdgeId e : chosen) m.set(e);
        out.push_back(std::move(m));
        return;
    }
    covered[v] = 1;
    for (const OtherEnd& oe : inc[v]) {
        if (covered[oe.vertex]) continue;
        covered[oe.vertex] = 1;
        chosen.push_back(oe.edge);
        match_recurse(inc, covered, v + 1, chosen, num_edges, out);
        chosen.pop_back();
        covered[oe.vertex] = 0;
    }
    covered[v] = 0;
}

} // namespace

std::vector<EdgeSubset> perfect_matchings(const PlanarMap& map, unsigned threads) {
    if (!map.is_cubic()) raise(ErrorKind::NotCubic, "perfect matching enumeration needs a cubic map");
    std::vector<EdgeSubset> out;
    if (map.num_vertices() % 2 != 0) return out;

    auto inc = incidence(map);
    if (threads > 1 && map.num_vertices() > 2) {
        // branch the root vertex's choices concurrently; merge in branch order
        std::vector<std::future<std::vector<EdgeSubset>>> futures;
        for (const OtherEnd& oe : inc[0]) {
            futures.push_back(std::async(std::launch::async, [&, oe] {
                std::vector<EdgeSubset> part;
                if (oe.vertex == 0) return part;
                std::vector<char> covered(map.num_vertices(), 0);
                covered[0] = covered[oe.vertex] = 1;
                std::vector<EdgeId> chosen = {oe.edge};
                match_recurse(inc, covered, 1, chosen, map.num_edges(), part);
                return part;
            }));
        }
        for (auto& f : futures) {
            auto part = f.get();
            out.insert(out.end(), part.begin(), part.end());
        }
    } else {
        std::vector<char> covered(map.num_vertices(), 0);
        std::vector<EdgeId> chosen;
        match_recurse(inc, covered, 0, chosen, map.num_edges(), out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<EdgeId>> cycle_decomposition(const PlanarMap& map, const EdgeSubset& s) {
    if (s.size() != map.num_edges())
        raise(ErrorKind::BadParameter, "edge subset size does not match the map");

    // chosen edges per vertex; every touched vertex must have exactly 2
    std::vector<std::array<EdgeId, 2>> at(map.num_vertices());
    std::vector<std::uint8_t> deg(map.num_vertices(), 0);
    for (EdgeId e : s.to_vector()) {
        for (int side = 0; side < 2; ++side) {
            VertexId v = map.edge_endpoint(e, side);
            if (deg[v] == 2)
                raise(ErrorKind::NotTwoRegular,
                      "vertex " + std::to_string(v) + " has more than 2 chosen edges");
            at[v][deg[v]++] = e;
        }
    }
    for (VertexId v = 0; v < map.num_vertices(); ++v)
        if (deg[v] == 1)
            raise(ErrorKind::NotTwoRegular,
                  "vertex " + std::to_string(v) + " has exactly 1 chosen edge");

    auto walk = [&](EdgeId start, VertexId toward) {
        std::vector<EdgeId> cycle = {start};
        VertexId v = toward;
        EdgeId prev = start;
        while (true) {
            EdgeId next = (at[v][0] == prev) ? at[v][1] : at[v][0];
            if (next == start) break;
            cycle.push_back(next);
            VertexId a = map.edge_endpoint(next, 0);
            VertexId b = map.edge_endpoint(next, 1);
            v = (a == v) ? b : a;
            prev = next;
        }
        return cycle;
    };

    std::vector<std::vector<EdgeId>> cycles;
    std::vector<char> used(map.num_edges(), 0);
    for (EdgeId e : s.to_vector()) {
        if (used[e]) continue;
        auto c0 = walk(e, map.edge_endpoint(e, 0));
        auto c1 = walk(e, map.edge_endpoint(e, 1));
        auto& best = (c1 < c0) ? c1 : c0;
        for (EdgeId ce : best) used[ce] = 1;
        cycles.push_back(std::move(best));
    }
    return cycles;
}

bool is_weak_hamiltonian(const PlanarMap& map, const EdgeSubset& s) {
    if (s.size() != map.num_edges()) return false;
    std::vector<std::uint8_t> deg(map.num_vertices(), 0);
    for (EdgeId e : s.to_vector()) {
        for (int side = 0; side < 2; ++side) {
            VertexId v = map.edge_endpoint(e, side);
            if (++deg[v] > 2) return false;
        }
    }
    for (VertexId v = 0; v < map.num_vertices(); ++v)
        if (deg[v] != 2) return false;
    for (const auto& cycle : cycle_decomposition(map, s))
        if (cycle.size() % 2 != 0) return false;
    return true;
}

WeakHamiltonian make_weak_hamiltonian(const PlanarMap& map, const EdgeSubset& s) {
    std::vector<std::uint8_t> deg(map.num_vertices(), 0);
    for (EdgeId e : s.to_vector()) {
        ++deg[map.edge_endpoint(e, 0)];
        ++deg[map.edge_endpoint(e, 1)];
    }
    for (VertexId v = 0; v < map.num_vertices(); ++v)
        if (deg[v] != 2)
            raise(ErrorKind::NotTwoRegular,
                  "not a 2-factor: vertex " + std::to_string(v) + " has degree " +
                      std::to_string(deg[v]));
    WeakHamiltonian h;
    h.edges = s;
    h.cycles = cycle_decomposition(map, s);
    h.cycle_lengths.reserve(h.cycles.size());
    for (const auto& cycle : h.cycles) {
        if (cycle.size() % 2 != 0)
            raise(ErrorKind::OddCycle,
                  "2-factor has a cycle of odd length " + std::to_string(cycle.size()));
        h.cycle_lengths.push_back(cycle.size());
    }
    return h;
}

std::vector<WeakHamiltonian> enumerate_weak_hamiltonians(const PlanarMap& map, unsigned threads) {
    // an even-cycle 2-factor covers an even number of vertices, so odd |V|
    // short-circuits before the cubic requirement applies
    if (map.num_vertices() % 2 != 0) return {};
    if (!map.is_cubic()) raise(ErrorKind::NotCubic, "weak Hamiltonian enumeration needs a cubic map");

    std::vector<WeakHamiltonian> out;
    for (const EdgeSubset& matching : perfect_matchings(map, threads)) {
        EdgeSubset candidate = matching.complemented();
        auto cycles = cycle_decomposition(map, candidate);
        bool all_even = true;
        for (const auto& cycle : cycles)
            if (cycle.size() % 2 != 0) {
                all_even = false;
                break;
            }
        if (!all_even) continue;
        WeakHamiltonian h;
        h.edges = std::move(candidate);
        h.cycle_lengths.reserve(cycles.size());
        for (const auto& cycle : cycles) h.cycle_lengths.push_back(cycle.size());
        h.cycles = std::move(cycles);
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wham
