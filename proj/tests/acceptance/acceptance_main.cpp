// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.

#include "../support/corpus.hpp"
#include "../support/oracles.hpp"
#include "wham/error.hpp"
#include "wham/io.hpp"
#include "wham/moduli.hpp"
#include "wham/mutation.hpp"
#include "wham/resolution.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace wham;
using namespace wham::testing;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string command = std::string(WHAM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) out.append(buffer, n);
    return {WEXITSTATUS(pclose(pipe)), out};
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("wham_acceptance_" + name);
}

int failures = 0;

void criterion(int number, const std::string& description, double budget_seconds,
               const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
        problem = body();
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && budget_seconds > 0 && seconds > budget_seconds)
        problem = "exceeded time budget (" + std::to_string(seconds) + " s > " +
                  std::to_string(budget_seconds) + " s)";
    char line[512];
    std::snprintf(line, sizeof(line), "[%s] criterion %d: %s (%.2f s)%s%s",
                  problem.empty() ? "PASS" : "FAIL", number, description.c_str(), seconds,
                  problem.empty() ? "" : " -- ", problem.c_str());
    std::cout << line << "\n";
    if (!problem.empty()) ++failures;
}

// the shared corpus for criteria 5 and 6: planar-code ingest plus generators
std::vector<PlanarMap> acceptance_corpus() {
    auto generated = make_cubic_corpus(100, 14);
    auto pc_path = temp_file("corpus.pc");
    std::ofstream(pc_path, std::ios::binary) << encode_planar_code(generated);

    std::ifstream in(pc_path, std::ios::binary);
    std::stringstream bytes;
    bytes << in.rdbuf();
    auto corpus = parse_planar_code(bytes.str());

    corpus.push_back(generate("theta"));
    for (int n = 3; n <= 7; ++n) corpus.push_back(generate("prism", n));
    corpus.push_back(generate("tetrahedron"));
    return corpus;
}

} // namespace

int main() {
    criterion(1, "chromatic graph of prism 5 is the 5-cycle", 1.0, []() -> std::string {
        auto map_path = temp_file("p5.json");
        if (run_cli("gen prism 5 -o " + map_path.string()).exit_code != 0)
            return "gen prism 5 failed";
        auto chi = run_cli("chromatic " + map_path.string());
        if (chi.exit_code != 0) return "chromatic failed";
        auto j = json::parse(chi.out);
        if (j["num_vertices"] != 5) return "expected 5 vertices";
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
        for (const auto& e : j["edges"]) edges.push_back({e[0], e[1]});
        if (!graph_iso_small({5, edges}, cycle_graph(5))) return "not isomorphic to C5";
        return "";
    });

    criterion(2, "weak Hamiltonian graph of prism 4: 9 vertices, 12 edges, "
                 "degrees {2x6, 4x3}, 4 cliques, 96 = 24 x 4 colorings",
              1.0, []() -> std::string {
        auto p4 = generate("prism", 4);
        auto graph = build_wh_graph(p4);
        if (graph.vertices.size() != 9) return "expected 9 vertices";
        if (graph.edges.size() != 12) return "expected 12 edges";
        std::multiset<std::size_t> degrees;
        for (WhIndex i = 0; i < graph.vertices.size(); ++i) degrees.insert(graph.degree(i));
        if (degrees != std::multiset<std::size_t>{2, 2, 2, 2, 2, 2, 4, 4, 4})
            return "wrong degree multiset";
        auto cliques = find_chromatic_cliques(graph);
        if (cliques.cliques.size() != 4) return "expected 4 chromatic cliques";
        auto colorings = enumerate_colorings_bruteforce(p4, 4);
        if (colorings.size() != 96) return "expected 96 labeled colorings";
        if (colorings.size() != 24 * cliques.cliques.size()) return "24 x cliques identity fails";
        return "";
    });

    criterion(3, "K4 baseline: 3 weak Hamiltonians, d(K4) = K3, 1 clique, "
                 "single-vertex chromatic graph, 24 colorings",
              1.0, []() -> std::string {
        auto k4 = generate("tetrahedron");
        auto whs = enumerate_weak_hamiltonians(k4);
        if (whs.size() != 3) return "expected 3 weak Hamiltonians";
        auto graph = build_wh_graph(k4);
        if (!graph_iso_small(to_small_graph(graph), complete_graph(3)))
            return "d(K4) is not K3";
        auto cliques = find_chromatic_cliques(graph);
        if (cliques.cliques.size() != 1) return "expected 1 clique";
        auto chi = build_chromatic_graph(graph, cliques);
        if (chi.num_vertices != 1 || !chi.edges.empty())
            return "chromatic graph is not a single vertex";
        if (enumerate_colorings_bruteforce(k4, 4).size() != 24) return "expected 24 colorings";
        return "";
    });

    criterion(4, "K2,3 and odd-vertex maps have no weak Hamiltonians", 0.0, []() -> std::string {
        auto k23_path = temp_file("k23.json");
        if (run_cli("gen k23 -o " + k23_path.string()).exit_code != 0) return "gen k23 failed";
        auto wh = run_cli("wh " + k23_path.string());
        if (wh.exit_code != 0) return "wh on k23 exited nonzero";
        if (json::parse(wh.out)["count"] != 0) return "k23 weak Hamiltonian list not empty";

        auto wheel_path = temp_file("wheel4.json");
        std::ofstream(wheel_path) << emit_map_document(document_from_map(make_wheel(4), "wheel_4"));
        auto wheel_wh = run_cli("wh " + wheel_path.string());
        if (wheel_wh.exit_code != 0) return "wh on the 5-vertex wheel exited nonzero";
        if (json::parse(wheel_wh.out)["count"] != 0) return "wheel list not empty";
        return "";
    });

    auto corpus = acceptance_corpus();

    criterion(5, "existence equivalence (weak Hamiltonian exists <=> 4-coloring exists) over " +
                     std::to_string(corpus.size()) + " corpus maps",
              60.0, [&]() -> std::string {
        if (corpus.size() < 100) return "corpus smaller than 100 maps";
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& map = corpus[i];
            if (map.num_vertices() > 14) return "corpus map too large";
            bool has_wh = !enumerate_weak_hamiltonians(map).empty();
            bool has_coloring = !enumerate_colorings_bruteforce(map, 4, false, 1).empty();
            if (has_wh != has_coloring)
                return "equivalence fails on corpus map " + std::to_string(i);
        }
        return "";
    });

    criterion(6, "mutation, moduli, bijection, and round-trip laws over the same corpus", 0.0,
              [&]() -> std::string {
        const std::set<std::string> required = {
            "mutation_laws",          "third_vertex_closure",
            "degree_is_2_pow_cycles", "edges_partition_into_cliques",
            "labeled_colorings_24_per_clique", "round_trip_pair_to_coloring_to_triple",
            "round_trip_clique_coloring_bijection"};
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            auto report = run_check(corpus[i]);
            std::set<std::string> seen;
            for (const auto& check : report.checks) {
                seen.insert(check.name);
                if (!check.pass)
                    return check.name + " fails on corpus map " + std::to_string(i) +
                           (check.detail.empty() ? "" : " (" + check.detail + ")");
            }
            for (const auto& name : required)
                if (!seen.count(name)) return "check suite missing " + name;
        }
        return "";
    });

    criterion(7, "resolution: cubic output, Euler bookkeeping, proper pull-backs on 21 maps",
              0.0, []() -> std::string {
        auto degree4 = make_degree4_corpus();
        if (degree4.size() < 20) return "degree-4 corpus smaller than 20";
        for (std::size_t i = 0; i < degree4.size(); ++i) {
            const auto& map = degree4[i];
            // per-blowup Euler bookkeeping, lowest >= 4 vertex first
            PlanarMap cur = map;
            while (true) {
                VertexId target = static_cast<VertexId>(cur.num_vertices());
                for (VertexId v = 0; v < cur.num_vertices(); ++v)
                    if (cur.degree(v) >= 4) {
                        target = v;
                        break;
                    }
                if (target == cur.num_vertices()) break;
                std::size_t d = cur.degree(target);
                auto step = blowup(cur, target);
                if (step.map.num_vertices() != cur.num_vertices() + d - 1 ||
                    step.map.num_edges() != cur.num_edges() + d ||
                    step.map.num_faces() != cur.num_faces() + 1)
                    return "Euler bookkeeping fails on map " + std::to_string(i);
                cur = std::move(step.map);
            }
            auto [resolved, corr] = resolve(map);
            if (!resolved.is_cubic()) return "resolution of map " + std::to_string(i) + " not cubic";
            auto colorings = enumerate_colorings_bruteforce(resolved, 4, true, 3);
            if (colorings.empty()) return "no oracle coloring for map " + std::to_string(i);
            for (const auto& phi : colorings) {
                auto pulled = pull_back_coloring(phi, corr);
                if (!is_proper(map, pulled) || !oracle_is_proper(map, pulled))
                    return "pull-back not proper on map " + std::to_string(i);
            }
        }
        return "";
    });

    criterion(8, "CLI exports are byte-identical across parallelism settings", 0.0,
              []() -> std::string {
        auto map_path = temp_file("det.json");
        if (run_cli("gen prism 5 -o " + map_path.string()).exit_code != 0) return "gen failed";
        const std::vector<std::string> commands = {
            "wh " + map_path.string(),
            "moduli " + map_path.string() + " --with-cliques",
            "chromatic " + map_path.string(),
            "oracle " + map_path.string() + " --canonical",
            "faces " + map_path.string(),
        };
        for (const auto& command : commands) {
            auto a = run_cli(command + " --threads 1");
            auto b = run_cli(command + " --threads 4");
            auto c = run_cli(command + " --threads 1");
            if (a.exit_code != 0 || b.exit_code != 0 || c.exit_code != 0)
                return "command failed: " + command;
            if (a.out != b.out || a.out != c.out) return "output differs for: " + command;
        }
        // DOT files too
        auto dot1 = temp_file("d1.dot"), dot2 = temp_file("d2.dot");
        run_cli("moduli " + map_path.string() + " --with-cliques --dot " + dot1.string() +
                " --threads 1");
        run_cli("moduli " + map_path.string() + " --with-cliques --dot " + dot2.string() +
                " --threads 4");
        std::ifstream f1(dot1), f2(dot2);
        std::stringstream s1, s2;
        s1 << f1.rdbuf();
        s2 << f2.rdbuf();
        if (s1.str().empty() || s1.str() != s2.str()) return "DOT export differs across threads";
        return "";
    });

    if (failures == 0)
        std::cout << "all acceptance criteria passed\n";
    else
        std::cout << failures << " acceptance criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}
