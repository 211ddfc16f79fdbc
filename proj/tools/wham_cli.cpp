// wham: weak Hamiltonians, mutations, and coloring moduli on planar maps.
//
// Every subcommand reads map documents (JSON rotation systems); `validate`
// also ingests binary planar-code corpora. Errors leave as JSON on stderr
// with a nonzero exit code so batch runs need no scraping.

#include "wham/error.hpp"
#include "wham/io.hpp"
#include "wham/moduli.hpp"
#include "wham/mutation.hpp"
#include "wham/resolution.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace wham;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorKind::ParseError, "cannot write '" + path + "'");
    out << content;
}

bool looks_like_planar_code(const std::string& content) {
    return content.rfind(">>planar_code<<", 0) == 0;
}

MapDocument load_document(const std::string& path) {
    std::string content = read_file(path);
    if (looks_like_planar_code(content))
        raise(ErrorKind::ParseError,
              "'" + path + "' is a planar-code corpus; this command takes a map document "
              "(use `validate` for planar-code files)");
    return parse_map_document(content);
}

WeakHamiltonian wh_at(const PlanarMap& map, const std::vector<WeakHamiltonian>& whs,
                      std::size_t index) {
    (void)map;
    if (index >= whs.size())
        raise(ErrorKind::BadParameter, "weak Hamiltonian index " + std::to_string(index) +
                                           " out of range (have " + std::to_string(whs.size()) +
                                           ")");
    return whs[index];
}

std::size_t index_in(const std::vector<WeakHamiltonian>& whs, const WeakHamiltonian& h) {
    for (std::size_t i = 0; i < whs.size(); ++i)
        if (whs[i].edges == h.edges) return i;
    return whs.size();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak Hamiltonians, mutations, and four-coloring moduli of planar maps"};
    app.require_subcommand(1);

    unsigned threads = 1;
    app.add_option("--threads", threads, "worker threads for enumeration and graph building")
        ->capture_default_str();

    std::string in_path, out_path, coloring_path, gen_name, selection = "";
    std::size_t wh_index = 0, coloring_index = 0;
    int gen_n = 0, partition = 1, colors = 4;
    bool with_cliques = false, multigraph = false, canonical = false;
    std::string dot_path;

    auto* validate = app.add_subcommand("validate", "validate a map document or planar-code file");
    validate->add_option("file", in_path)->required();

    auto* faces_cmd = app.add_subcommand("faces", "list face cycles");
    faces_cmd->add_option("file", in_path)->required();

    auto* resolve_cmd = app.add_subcommand("resolve", "blow up all vertices of degree >= 4");
    resolve_cmd->add_option("file", in_path)->required();
    resolve_cmd->add_option("-o,--output", out_path, "resolved map document")->required();
    resolve_cmd->add_option("--correspondence", coloring_path, "face correspondence JSON");

    auto* wh_cmd = app.add_subcommand("wh", "enumerate weak Hamiltonians");
    wh_cmd->add_option("file", in_path)->required();
    bool wh_json = false;
    wh_cmd->add_flag("--json", wh_json, "JSON output (the default)");
    wh_cmd->add_option("--dot", dot_path, "write a DOT overlay of one weak Hamiltonian");
    wh_cmd->add_option("--index", wh_index, "which weak Hamiltonian the overlay shows");

    auto* mutate_cmd = app.add_subcommand("mutate", "apply a mutation selection");
    mutate_cmd->add_option("file", in_path)->required();
    mutate_cmd->add_option("--wh", wh_index, "weak Hamiltonian index")->required();
    mutate_cmd->add_option("--selection", selection, "per-cycle bitmask, e.g. 01")->required();

    auto* moduli_cmd = app.add_subcommand("moduli", "build the weak Hamiltonian graph");
    moduli_cmd->add_option("file", in_path)->required();
    moduli_cmd->add_option("--dot", dot_path, "write DOT");
    moduli_cmd->add_flag("--with-cliques", with_cliques, "annotate chromatic cliques");

    auto* chromatic_cmd = app.add_subcommand("chromatic", "build the chromatic graph");
    chromatic_cmd->add_option("file", in_path)->required();
    chromatic_cmd->add_flag("--multigraph", multigraph, "report multigraph semantics");
    chromatic_cmd->add_option("--dot", dot_path, "write DOT");

    auto* color_cmd = app.add_subcommand("color", "4-coloring from a weak Hamiltonian and a mutation");
    color_cmd->add_option("file", in_path)->required();
    color_cmd->add_option("--wh", wh_index, "weak Hamiltonian index")->required();
    color_cmd->add_option("--selection", selection, "mutation selection bitmask")->required();
    color_cmd->add_option("--dot", dot_path, "write a face-label DOT overlay");

    auto* from_coloring = app.add_subcommand("from-coloring", "weak Hamiltonian from a 4-coloring");
    from_coloring->add_option("file", in_path)->required();
    from_coloring->add_option("--coloring", coloring_path, "coloring JSON file")->required();
    from_coloring->add_option("--index", coloring_index, "index into a colorings list");
    from_coloring->add_option("--partition", partition, "pair partition 1..3")
        ->check(CLI::Range(1, 3));

    auto* oracle_cmd = app.add_subcommand("oracle", "enumerate proper colorings by brute force");
    oracle_cmd->add_option("file", in_path)->required();
    oracle_cmd->add_option("--colors", colors, "palette size")->capture_default_str();
    oracle_cmd->add_flag("--canonical", canonical, "one coloring per relabeling orbit");

    auto* check_cmd = app.add_subcommand("check", "run the full invariant suite");
    check_cmd->add_option("file", in_path)->required();

    auto* gen_cmd = app.add_subcommand("gen", "emit a built-in map");
    gen_cmd->add_option("name", gen_name, "tetrahedron | prism | k23 | theta | octahedron")
        ->required();
    gen_cmd->add_option("n", gen_n, "parameter (prism size)");
    gen_cmd->add_option("-o,--output", out_path, "output file (stdout if omitted)");

    // let --threads appear after the subcommand too
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) {
            std::string content = read_file(in_path);
            if (looks_like_planar_code(content)) {
                auto entries = parse_planar_code_entries(content, in_path);
                bool all_ok = true;
                nlohmann::json j = nlohmann::json::array();
                for (const auto& entry : entries) {
                    nlohmann::json e;
                    e["provenance"] = entry.provenance;
                    e["valid"] = entry.map.has_value();
                    if (entry.map) {
                        e["num_vertices"] = entry.map->num_vertices();
                        e["num_edges"] = entry.map->num_edges();
                        e["num_faces"] = entry.map->num_faces();
                    } else {
                        e["error"] = entry.error;
                        all_ok = false;
                    }
                    j.push_back(std::move(e));
                }
                std::cout << j.dump(2) << "\n";
                return all_ok ? 0 : 1;
            }
            auto doc = parse_map_document(content);
            auto map = doc.to_map();
            nlohmann::json j;
            if (doc.name) j["name"] = *doc.name;
            j["valid"] = true;
            j["num_vertices"] = map.num_vertices();
            j["num_edges"] = map.num_edges();
            j["num_faces"] = map.num_faces();
            j["cubic"] = map.is_cubic();
            std::cout << j.dump(2) << "\n";
        } else if (*faces_cmd) {
            auto map = load_document(in_path).to_map();
            nlohmann::json j;
            j["count"] = map.num_faces();
            j["faces"] = map.faces().faces;
            std::cout << j.dump(2) << "\n";
        } else if (*resolve_cmd) {
            auto doc = load_document(in_path);
            auto result = resolve(doc.to_map());
            std::string name = doc.name ? *doc.name + "_resolved" : "resolved";
            write_file(out_path, emit_map_document(document_from_map(result.map, name)));
            if (!coloring_path.empty())
                write_file(coloring_path, export_json_correspondence(result.correspondence));
            nlohmann::json j;
            j["output"] = out_path;
            j["num_vertices"] = result.map.num_vertices();
            j["num_edges"] = result.map.num_edges();
            j["num_faces"] = result.map.num_faces();
            j["new_faces"] = result.correspondence.new_faces.size();
            std::cout << j.dump(2) << "\n";
        } else if (*wh_cmd) {
            auto doc = load_document(in_path);
            auto map = doc.to_map();
            auto whs = enumerate_weak_hamiltonians(map, threads);
            if (!dot_path.empty()) {
                auto overlay = wh_at(map, whs, wh_index);
                write_file(dot_path, export_dot_map(map, &overlay));
            }
            std::cout << export_json_wh_list(whs, doc.name);
        } else if (*mutate_cmd) {
            auto map = load_document(in_path).to_map();
            auto whs = enumerate_weak_hamiltonians(map, threads);
            auto h = wh_at(map, whs, wh_index);
            auto result = mutate(map, h, MatchingSelection::from_string(selection));
            std::cout << export_json_wh(result, index_in(whs, result));
        } else if (*moduli_cmd) {
            auto map = load_document(in_path).to_map();
            auto graph = build_wh_graph(map, threads);
            if (with_cliques || !dot_path.empty()) {
                auto cliques = find_chromatic_cliques(graph);
                if (!dot_path.empty())
                    write_file(dot_path,
                               export_dot_wh_graph(graph, with_cliques ? &cliques : nullptr));
                std::cout << export_json_wh_graph(graph, with_cliques ? &cliques : nullptr);
            } else {
                std::cout << export_json_wh_graph(graph);
            }
        } else if (*chromatic_cmd) {
            auto map = load_document(in_path).to_map();
            auto graph = build_wh_graph(map, threads);
            auto cliques = find_chromatic_cliques(graph);
            auto chi = build_chromatic_graph(graph, cliques, multigraph);
            std::vector<FaceColoring> table;
            for (CliqueId c = 0; c < cliques.cliques.size(); ++c)
                table.push_back(clique_to_coloring(map, graph, cliques, c));
            if (!dot_path.empty()) write_file(dot_path, export_dot_chromatic(chi));
            std::cout << export_json_chromatic(chi, cliques, &table);
        } else if (*color_cmd) {
            auto map = load_document(in_path).to_map();
            auto whs = enumerate_weak_hamiltonians(map, threads);
            auto h = wh_at(map, whs, wh_index);
            auto partner = mutate(map, h, MatchingSelection::from_string(selection));
            auto phi = four_coloring_from_pair(map, h, partner);
            if (!dot_path.empty()) write_file(dot_path, export_dot_coloring(map, phi));
            std::cout << export_json_coloring(phi);
        } else if (*from_coloring) {
            auto map = load_document(in_path).to_map();
            auto phi = parse_coloring_document(read_file(coloring_path), coloring_index);
            auto h = wh_from_coloring(map, phi, static_cast<PairPartition>(partition));
            auto whs = enumerate_weak_hamiltonians(map, threads);
            std::cout << export_json_wh(h, index_in(whs, h));
        } else if (*oracle_cmd) {
            auto map = load_document(in_path).to_map();
            auto colorings = enumerate_colorings_bruteforce(map, colors, canonical);
            std::cout << export_json_colorings(colorings, canonical);
        } else if (*check_cmd) {
            auto map = load_document(in_path).to_map();
            auto report = run_check(map, threads);
            for (const auto& check : report.checks)
                std::cout << (check.pass ? "ok   " : "FAIL ") << check.name
                          << (check.detail.empty() ? "" : "  [" + check.detail + "]") << "\n";
            std::cout << (report.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
            return report.all_pass() ? 0 : 1;
        } else if (*gen_cmd) {
            auto map = generate(gen_name, gen_n);
            std::string name = gen_name;
            if (gen_name == "prism") name += "_" + std::to_string(gen_n);
            std::string text = emit_map_document(document_from_map(map, name));
            if (out_path.empty())
                std::cout << text;
            else
                write_file(out_path, text);
        }
    } catch (const Error& e) {
        nlohmann::json err;
        err["error"] = std::string(error_kind_name(e.kind()));
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        nlohmann::json err;
        err["error"] = "Internal";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 0;
}
