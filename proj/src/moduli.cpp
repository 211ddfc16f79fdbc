#include "wham/moduli.hpp"

#include "wham/error.hpp"
#include "wham/mutation.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <map>
#include <string>

namespace wham {

std::size_t WeakHamiltonianGraph::degree(WhIndex v) const {
    std::size_t d = 0;
    for (const auto& [a, b] : edges)
        if (a == v || b == v) ++d;
    return d;
}

bool StructureReport::all_pass() const {
    for (const auto& check : checks)
        if (!check.pass) return false;
    return true;
}

WeakHamiltonianGraph build_wh_graph(const PlanarMap& map, unsigned threads) {
    WeakHamiltonianGraph g;
    g.vertices = enumerate_weak_hamiltonians(map, threads);
    const std::size_t n = g.vertices.size();

    auto edges_for_range = [&](std::size_t begin, std::size_t end) {
        std::vector<std::pair<WhIndex, WhIndex>> part;
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if ((g.vertices[i].edges | g.vertices[j].edges).is_full())
                    part.emplace_back(static_cast<WhIndex>(i), static_cast<WhIndex>(j));
        return part;
    };

    if (threads > 1 && n > 8) {
        std::vector<std::future<std::vector<std::pair<WhIndex, WhIndex>>>> futures;
        std::size_t chunk = (n + threads - 1) / threads;
        for (std::size_t begin = 0; begin < n; begin += chunk)
            futures.push_back(std::async(std::launch::async, edges_for_range, begin,
                                         std::min(begin + chunk, n)));
        for (auto& f : futures) {
            auto part = f.get();
            g.edges.insert(g.edges.end(), part.begin(), part.end());
        }
    } else {
        g.edges = edges_for_range(0, n);
    }
    // ranges are emitted in ascending i, so the list is already sorted
    return g;
}

ChromaticCliqueSet find_chromatic_cliques(const WeakHamiltonianGraph& graph) {
    ChromaticCliqueSet out;
    const auto& vs = graph.vertices;

    auto locate = [&](const EdgeSubset& edges) -> WhIndex {
        auto it = std::lower_bound(vs.begin(), vs.end(), edges,
                                   [](const WeakHamiltonian& h, const EdgeSubset& e) {
                                       return h.edges < e;
                                   });
        if (it == vs.end() || !(it->edges == edges)) return static_cast<WhIndex>(vs.size());
        return static_cast<WhIndex>(it - vs.begin());
    };

    std::map<std::array<WhIndex, 3>, std::vector<std::size_t>> triples;
    for (std::size_t idx = 0; idx < graph.edges.size(); ++idx) {
        auto [i, j] = graph.edges[idx];
        WhIndex k = locate(vs[i].edges ^ vs[j].edges);
        if (k == vs.size())
            raise(ErrorKind::MissingThirdVertex,
                  "h" + std::to_string(i) + " xor h" + std::to_string(j) +
                      " is not an enumerated weak Hamiltonian");
        std::array<WhIndex, 3> triple = {i, j, k};
        std::sort(triple.begin(), triple.end());
        triples[triple].push_back(idx);
    }

    out.cliques.reserve(triples.size());
    out.clique_of_edge.assign(graph.edges.size(), 0);
    std::vector<char> covered(graph.edges.size(), 0);
    for (const auto& [triple, edge_ids] : triples) {
        CliqueId id = static_cast<CliqueId>(out.cliques.size());
        out.cliques.push_back(triple);
        for (std::size_t idx : edge_ids) {
            if (covered[idx])
                raise(ErrorKind::EdgeInTwoCliques,
                      "edge " + std::to_string(idx) + " assigned to two cliques");
            covered[idx] = 1;
            out.clique_of_edge[idx] = id;
        }
    }

    out.cliques_of_vertex.assign(vs.size(), {});
    for (CliqueId c = 0; c < out.cliques.size(); ++c)
        for (WhIndex v : out.cliques[c]) out.cliques_of_vertex[v].push_back(c);
    return out;
}

ChromaticGraph build_chromatic_graph(const WeakHamiltonianGraph& graph,
                                     const ChromaticCliqueSet& cliques, bool multigraph) {
    ChromaticGraph chi;
    chi.num_vertices = cliques.cliques.size();
    chi.multigraph = multigraph;

    std::map<std::pair<CliqueId, CliqueId>, std::vector<WhIndex>> shared;
    for (WhIndex v = 0; v < cliques.cliques_of_vertex.size(); ++v) {
        const auto& through = cliques.cliques_of_vertex[v];
        for (std::size_t a = 0; a < through.size(); ++a)
            for (std::size_t b = a + 1; b < through.size(); ++b)
                shared[{through[a], through[b]}].push_back(v);
    }
    for (const auto& [pair, witnesses] : shared) {
        if (witnesses.size() > 1)
            raise(ErrorKind::OverlapTooLarge,
                  "cliques " + std::to_string(pair.first) + " and " + std::to_string(pair.second) +
                      " share " + std::to_string(witnesses.size()) + " vertices");
        chi.edges.push_back(pair);
        chi.shared_wh.push_back(witnesses.front());
    }
    (void)graph;
    return chi;
}

FaceColoring clique_to_coloring(const PlanarMap& map, const WeakHamiltonianGraph& graph,
                                const ChromaticCliqueSet& cliques, CliqueId clique) {
    if (clique >= cliques.cliques.size())
        raise(ErrorKind::UnknownClique, "clique " + std::to_string(clique) + " does not exist");
    const auto& members = cliques.cliques[clique];
    FaceColoring phi = four_coloring_from_pair(map, graph.vertices[members[0]],
                                               graph.vertices[members[1]]);
    return canonical_coloring(phi);
}

CliqueId coloring_to_clique(const PlanarMap& map, const WeakHamiltonianGraph& graph,
                            const ChromaticCliqueSet& cliques, const FaceColoring& coloring) {
    auto triple = wh_triple_from_coloring(map, coloring);

    const auto& vs = graph.vertices;
    std::array<WhIndex, 3> ids;
    for (int i = 0; i < 3; ++i) {
        auto it = std::lower_bound(vs.begin(), vs.end(), triple[i]);
        if (it == vs.end() || !(*it == triple[i]))
            raise(ErrorKind::UnknownClique,
                  "coloring's weak Hamiltonian triple is not among the graph's vertices");
        ids[i] = static_cast<WhIndex>(it - vs.begin());
    }
    std::sort(ids.begin(), ids.end());
    auto it = std::find(cliques.cliques.begin(), cliques.cliques.end(), ids);
    if (it == cliques.cliques.end())
        raise(ErrorKind::UnknownClique, "weak Hamiltonian triple is not a chromatic clique");
    return static_cast<CliqueId>(it - cliques.cliques.begin());
}

namespace {

void add_check(StructureReport& report, const std::string& name, bool pass,
               const std::string& detail = "") {
    report.checks.push_back({name, pass, detail});
}

} // namespace

StructureReport validate_structure(const WeakHamiltonianGraph& graph,
                                   const ChromaticCliqueSet& cliques) {
    StructureReport report;
    const auto& vs = graph.vertices;
    const std::size_t n = vs.size();

    // simple, sorted, loop-free edge list
    {
        bool ok = true;
        std::string detail;
        for (std::size_t idx = 0; idx < graph.edges.size() && ok; ++idx) {
            auto [a, b] = graph.edges[idx];
            if (a >= b || b >= n) {
                ok = false;
                detail = "bad edge at index " + std::to_string(idx);
            }
            if (idx > 0 && !(graph.edges[idx - 1] < graph.edges[idx])) {
                ok = false;
                detail = "edge list not strictly sorted at index " + std::to_string(idx);
            }
        }
        add_check(report, "simple_sorted_edges", ok, detail);
    }

    // adjacency iff the union covers every edge
    {
        bool ok = true;
        std::string detail;
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (auto [a, b] : graph.edges) adj[a][b] = adj[b][a] = 1;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j) {
                bool covers = (vs[i].edges | vs[j].edges).is_full();
                if (covers != static_cast<bool>(adj[i][j])) {
                    ok = false;
                    detail = "pair (h" + std::to_string(i) + ", h" + std::to_string(j) +
                             "): union covers=" + std::to_string(covers) +
                             " but edge=" + std::to_string(adj[i][j]);
                }
            }
        add_check(report, "edge_iff_union_covers", ok, detail);
    }

    // degree law: deg(h) = 2^N
    {
        bool ok = true;
        std::string detail;
        std::vector<std::size_t> deg(n, 0);
        for (auto [a, b] : graph.edges) {
            ++deg[a];
            ++deg[b];
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t expected = std::size_t(1) << vs[i].num_cycles();
            if (deg[i] != expected) {
                ok = false;
                detail = "h" + std::to_string(i) + " has degree " + std::to_string(deg[i]) +
                         ", expected 2^" + std::to_string(vs[i].num_cycles());
                break;
            }
        }
        add_check(report, "degree_is_2_pow_cycles", ok, detail);
    }

    // third vertex: h1 ^ h2 is a vertex adjacent to both
    {
        bool ok = true;
        std::string detail;
        for (auto [a, b] : graph.edges) {
            EdgeSubset x = vs[a].edges ^ vs[b].edges;
            auto it = std::lower_bound(vs.begin(), vs.end(), x,
                                       [](const WeakHamiltonian& h, const EdgeSubset& e) {
                                           return h.edges < e;
                                       });
            if (it == vs.end() || !(it->edges == x) ||
                !(it->edges | vs[a].edges).is_full() || !(it->edges | vs[b].edges).is_full()) {
                ok = false;
                detail = "edge (h" + std::to_string(a) + ", h" + std::to_string(b) +
                         ") lacks its xor third vertex";
                break;
            }
        }
        add_check(report, "third_vertex_closure", ok, detail);
    }

    // every edge in exactly one clique, and cliques' own edges exist
    {
        bool ok = cliques.clique_of_edge.size() == graph.edges.size();
        std::string detail = ok ? "" : "clique_of_edge does not cover the edge list";
        std::map<std::pair<WhIndex, WhIndex>, std::size_t> edge_index;
        for (std::size_t idx = 0; idx < graph.edges.size(); ++idx)
            edge_index[graph.edges[idx]] = idx;
        for (CliqueId c = 0; c < cliques.cliques.size() && ok; ++c) {
            const auto& t = cliques.cliques[c];
            const std::pair<WhIndex, WhIndex> pairs[3] = {
                {t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
            for (const auto& p : pairs) {
                auto it = edge_index.find(p);
                if (it == edge_index.end() || cliques.clique_of_edge[it->second] != c) {
                    ok = false;
                    detail = "clique " + std::to_string(c) + " edge (h" + std::to_string(p.first) +
                             ", h" + std::to_string(p.second) + ") missing or assigned elsewhere";
                    break;
                }
            }
        }
        if (ok && 3 * cliques.cliques.size() != graph.edges.size()) {
            ok = false;
            detail = "3 x " + std::to_string(cliques.cliques.size()) +
                     " cliques != " + std::to_string(graph.edges.size()) + " edges";
        }
        add_check(report, "edges_partition_into_cliques", ok, detail);
    }

    // clique members xor to zero
    {
        bool ok = true;
        std::string detail;
        for (CliqueId c = 0; c < cliques.cliques.size(); ++c) {
            const auto& t = cliques.cliques[c];
            if (!(vs[t[0]].edges ^ vs[t[1]].edges ^ vs[t[2]].edges).empty_set()) {
                ok = false;
                detail = "clique " + std::to_string(c) + " does not xor to zero";
                break;
            }
        }
        add_check(report, "cliques_xor_zero", ok, detail);
    }

    // membership count: h lies in exactly 2^(N-1) cliques
    {
        bool ok = cliques.cliques_of_vertex.size() == n;
        std::string detail = ok ? "" : "cliques_of_vertex has wrong length";
        for (std::size_t i = 0; i < n && ok; ++i) {
            std::size_t expected = std::size_t(1) << (vs[i].num_cycles() - 1);
            if (cliques.cliques_of_vertex[i].size() != expected) {
                ok = false;
                detail = "h" + std::to_string(i) + " lies in " +
                         std::to_string(cliques.cliques_of_vertex[i].size()) +
                         " cliques, expected 2^" + std::to_string(vs[i].num_cycles() - 1);
            }
        }
        add_check(report, "membership_is_2_pow_cycles_minus_1", ok, detail);
    }

    // distinct cliques share at most one vertex
    {
        bool ok = true;
        std::string detail;
        for (CliqueId a = 0; a < cliques.cliques.size() && ok; ++a)
            for (CliqueId b = a + 1; b < cliques.cliques.size() && ok; ++b) {
                int common = 0;
                for (WhIndex x : cliques.cliques[a])
                    for (WhIndex y : cliques.cliques[b])
                        if (x == y) ++common;
                if (common > 1) {
                    ok = false;
                    detail = "cliques " + std::to_string(a) + " and " + std::to_string(b) +
                             " share " + std::to_string(common) + " vertices";
                }
            }
        add_check(report, "clique_overlap_at_most_one", ok, detail);
    }

    return report;
}

StructureReport run_check(const PlanarMap& map, unsigned threads) {
    StructureReport report;

    add_check(report, "euler_genus_zero",
              map.num_vertices() - map.num_edges() + map.num_faces() == 2);
    {
        bool ok = true;
        for (EdgeId e = 0; e < map.num_edges(); ++e)
            if (map.face_of(2 * e) == map.face_of(2 * e + 1)) ok = false;
        add_check(report, "bridgeless", ok);
    }

    if (!map.is_cubic() || map.num_vertices() % 2 != 0) {
        add_check(report, "cubic_suites", true,
                  "skipped: map is not cubic with an even vertex count");
        return report;
    }

    auto whs = enumerate_weak_hamiltonians(map, threads);
    {
        bool ok = true;
        for (std::size_t i = 0; i < whs.size(); ++i) {
            if (!is_weak_hamiltonian(map, whs[i].edges)) ok = false;
            if (i > 0 && !(whs[i - 1].edges < whs[i].edges)) ok = false;
        }
        add_check(report, "enumeration_valid_sorted_unique", ok,
                  std::to_string(whs.size()) + " weak Hamiltonians");
    }

    // mutation laws: 2^N distinct mutations, unions cover, symmetry, the
    // xor triple identity
    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < whs.size() && ok; ++i) {
            auto muts = all_mutations(map, whs[i]);
            if (muts.size() != (std::size_t(1) << whs[i].num_cycles())) {
                ok = false;
                detail = "h" + std::to_string(i) + ": wrong mutation count";
            }
            for (std::size_t a = 0; a + 1 < muts.size() && ok; ++a)
                if (!(muts[a].edges < muts[a + 1].edges)) {
                    ok = false;
                    detail = "h" + std::to_string(i) + ": mutations not distinct";
                }
            for (const auto& m : muts) {
                if (!(whs[i].edges | m.edges).is_full()) {
                    ok = false;
                    detail = "h" + std::to_string(i) + ": union does not cover";
                }
                if (!is_mutation_pair(map, m, whs[i])) {
                    ok = false;
                    detail = "h" + std::to_string(i) + ": mutation not symmetric";
                }
            }
            std::size_t n_cycles = whs[i].num_cycles();
            for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n_cycles) && ok; ++bits) {
                MatchingSelection sel{bits, n_cycles};
                auto mu = mutate(map, whs[i], sel);
                auto mu_flip = mutate(map, whs[i], sel.flipped());
                if (!((whs[i].edges ^ mu.edges) == mu_flip.edges)) {
                    ok = false;
                    detail = "h" + std::to_string(i) + ": xor triple identity fails";
                }
            }
        }
        add_check(report, "mutation_laws", ok, detail);
    }

    auto graph = build_wh_graph(map, threads);
    auto cliques = find_chromatic_cliques(graph);
    for (auto& check : validate_structure(graph, cliques).checks)
        report.checks.push_back(std::move(check));

    // round trip A: a mutation pair's 4-coloring recovers {h1, h2, h1^h2}
    {
        bool ok = true;
        std::string detail;
        for (auto [i, j] : graph.edges) {
            FaceColoring phi = four_coloring_from_pair(map, graph.vertices[i], graph.vertices[j]);
            auto triple = wh_triple_from_coloring(map, phi);
            EdgeSubset expected_third = graph.vertices[i].edges ^ graph.vertices[j].edges;
            std::vector<EdgeSubset> got = {triple[0].edges, triple[1].edges, triple[2].edges};
            std::vector<EdgeSubset> want = {graph.vertices[i].edges, graph.vertices[j].edges,
                                            expected_third};
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            if (!(got == want)) {
                ok = false;
                detail = "edge (h" + std::to_string(i) + ", h" + std::to_string(j) + ")";
                break;
            }
        }
        add_check(report, "round_trip_pair_to_coloring_to_triple", ok, detail);
    }

    // round trip B: clique -> coloring -> clique is the identity
    {
        bool ok = true;
        std::string detail;
        for (CliqueId c = 0; c < cliques.cliques.size(); ++c) {
            FaceColoring phi = clique_to_coloring(map, graph, cliques, c);
            if (coloring_to_clique(map, graph, cliques, phi) != c) {
                ok = false;
                detail = "clique " + std::to_string(c);
                break;
            }
        }
        add_check(report, "round_trip_clique_coloring_bijection", ok, detail);
    }

    // oracle identities: labeled colorings = 24 x cliques; existence matches
    {
        auto colorings = enumerate_colorings_bruteforce(map, 4);
        bool count_ok = colorings.size() == 24 * cliques.cliques.size();
        add_check(report, "labeled_colorings_24_per_clique", count_ok,
                  std::to_string(colorings.size()) + " labeled vs " +
                      std::to_string(cliques.cliques.size()) + " cliques");
        add_check(report, "existence_equivalence", whs.empty() == colorings.empty());
    }

    return report;
}

SmallGraph cycle_graph(std::size_t n) {
    SmallGraph g{n, {}};
    for (std::size_t i = 0; i < n; ++i)
        g.edges.emplace_back(static_cast<std::uint32_t>(i),
                             static_cast<std::uint32_t>((i + 1) % n));
    return g;
}

SmallGraph path_graph(std::size_t n) {
    SmallGraph g{n, {}};
    for (std::size_t i = 0; i + 1 < n; ++i)
        g.edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1));
    return g;
}

SmallGraph complete_graph(std::size_t n) {
    SmallGraph g{n, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    return g;
}

SmallGraph to_small_graph(const WeakHamiltonianGraph& graph) {
    return {graph.vertices.size(), graph.edges};
}

SmallGraph to_small_graph(const ChromaticGraph& graph) {
    return {graph.num_vertices, graph.edges};
}

SmallGraph underlying_simple_graph(const PlanarMap& map) {
    SmallGraph g{map.num_vertices(), {}};
    for (EdgeId e = 0; e < map.num_edges(); ++e) {
        std::uint32_t a = map.edge_endpoint(e, 0);
        std::uint32_t b = map.edge_endpoint(e, 1);
        g.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

bool graph_iso_small(const SmallGraph& g1, const SmallGraph& g2) {
    constexpr std::size_t limit = 12;
    if (g1.n > limit || g2.n > limit)
        raise(ErrorKind::TooLarge, "isomorphism check is limited to 12 vertices");
    if (g1.n != g2.n || g1.edges.size() != g2.edges.size()) return false;
    const std::size_t n = g1.n;

    auto adjacency = [n](const SmallGraph& g) {
        std::vector<std::uint16_t> adj(n, 0);
        for (auto [a, b] : g.edges) {
            adj[a] |= std::uint16_t(1) << b;
            adj[b] |= std::uint16_t(1) << a;
        }
        return adj;
    };
    auto adj1 = adjacency(g1);
    auto adj2 = adjacency(g2);

    auto degrees = [n](const std::vector<std::uint16_t>& adj) {
        std::vector<int> deg(n);
        for (std::size_t i = 0; i < n; ++i) deg[i] = std::popcount(adj[i]);
        return deg;
    };
    auto deg1 = degrees(adj1);
    auto deg2 = degrees(adj2);
    {
        auto s1 = deg1, s2 = deg2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return false;
    }

    std::vector<int> image(n, -1);
    std::uint16_t used = 0;
    auto backtrack = [&](auto&& self, std::size_t v) -> bool {
        if (v == n) return true;
        for (std::size_t w = 0; w < n; ++w) {
            if (used & (std::uint16_t(1) << w)) continue;
            if (deg1[v] != deg2[w]) continue;
            bool ok = true;
            for (std::size_t u = 0; u < v; ++u) {
                bool e1 = adj1[v] & (std::uint16_t(1) << u);
                bool e2 = adj2[w] & (std::uint16_t(1) << image[u]);
                if (e1 != e2) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = static_cast<int>(w);
            used |= std::uint16_t(1) << w;
            if (self(self, v + 1)) return true;
            used &= ~(std::uint16_t(1) << w);
            image[v] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

} // namespace wham
