#include "wham/io.hpp"

#include "wham/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

namespace wham {

using nlohmann::json;

namespace {

const char* planar_code_header = ">>planar_code<<";

json wh_json(const WeakHamiltonian& h) {
    json j;
    j["edges"] = h.edges.to_vector();
    j["cycles"] = h.cycles;
    j["cycle_lengths"] = h.cycle_lengths;
    return j;
}

} // namespace

MapDocument parse_map_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        raise(ErrorKind::ParseError, e.what());
    }
    if (!j.is_object()) raise(ErrorKind::ParseError, "document is not a JSON object");
    if (!j.contains("num_darts") || !j["num_darts"].is_number_unsigned())
        raise(ErrorKind::ParseError, "missing or invalid field 'num_darts'");
    if (!j.contains("vertex_rotations") || !j["vertex_rotations"].is_array())
        raise(ErrorKind::ParseError, "missing or invalid field 'vertex_rotations'");

    MapDocument doc;
    doc.num_darts = j["num_darts"].get<std::size_t>();
    if (doc.num_darts % 2 != 0) raise(ErrorKind::ParseError, "num_darts must be even");
    if (j.contains("name")) {
        if (!j["name"].is_string()) raise(ErrorKind::ParseError, "field 'name' must be a string");
        doc.name = j["name"].get<std::string>();
    }

    std::size_t total = 0;
    for (const auto& rot : j["vertex_rotations"]) {
        if (!rot.is_array()) raise(ErrorKind::ParseError, "vertex_rotations entries must be arrays");
        std::vector<Dart> darts;
        for (const auto& d : rot) {
            if (!d.is_number_unsigned())
                raise(ErrorKind::ParseError, "dart ids must be non-negative integers");
            darts.push_back(d.get<Dart>());
        }
        total += darts.size();
        doc.vertex_rotations.push_back(std::move(darts));
    }
    if (total != doc.num_darts)
        raise(ErrorKind::ParseError, "rotations list " + std::to_string(total) +
                                         " darts but num_darts is " +
                                         std::to_string(doc.num_darts));
    std::vector<char> seen(doc.num_darts, 0);
    for (const auto& rot : doc.vertex_rotations)
        for (Dart d : rot) {
            if (d >= doc.num_darts)
                raise(ErrorKind::ParseError,
                      "dart " + std::to_string(d) + " out of range 0.." +
                          std::to_string(doc.num_darts - 1));
            if (seen[d])
                raise(ErrorKind::ParseError, "dart " + std::to_string(d) + " appears twice");
            seen[d] = 1;
        }
    doc.to_map(); // validate the map itself; build_map errors propagate
    return doc;
}

std::string emit_map_document(const MapDocument& doc) {
    json j;
    if (doc.name) j["name"] = *doc.name;
    j["num_darts"] = doc.num_darts;
    j["vertex_rotations"] = doc.vertex_rotations;
    return j.dump(2) + "\n";
}

MapDocument document_from_map(const PlanarMap& map, std::optional<std::string> name) {
    MapDocument doc;
    doc.name = std::move(name);
    doc.num_darts = map.num_darts();
    doc.vertex_rotations = map.vertex_rotations();
    return doc;
}

PlanarMap map_from_neighbor_lists(const std::vector<std::vector<VertexId>>& ccw_neighbors) {
    const std::size_t nv = ccw_neighbors.size();

    // occurrence positions per ordered pair (u, v)
    std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> positions;
    for (VertexId u = 0; u < nv; ++u)
        for (std::size_t p = 0; p < ccw_neighbors[u].size(); ++p) {
            VertexId v = ccw_neighbors[u][p];
            if (v >= nv)
                raise(ErrorKind::ParseError,
                      "neighbor " + std::to_string(v) + " out of range at vertex " +
                          std::to_string(u));
            if (v == u)
                raise(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(u));
            positions[{u, v}].push_back(p);
        }
    for (const auto& [pair, occs] : positions) {
        auto it = positions.find({pair.second, pair.first});
        if (it == positions.end() || it->second.size() != occs.size())
            raise(ErrorKind::ParseError,
                  "adjacency between " + std::to_string(pair.first) + " and " +
                      std::to_string(pair.second) + " is not symmetric");
    }

    // assign darts; parallel edges pair in reverse occurrence order
    std::vector<std::vector<Dart>> rotations(nv);
    for (VertexId u = 0; u < nv; ++u)
        rotations[u].assign(ccw_neighbors[u].size(), static_cast<Dart>(-1));

    Dart next_dart = 0;
    for (VertexId u = 0; u < nv; ++u) {
        const auto& nbrs = ccw_neighbors[u];
        for (std::size_t p = 0; p < nbrs.size(); ++p) {
            if (rotations[u][p] != static_cast<Dart>(-1)) continue;
            VertexId v = nbrs[p];
            const auto& occ_u = positions[{u, v}];
            const auto& occ_v = positions[{v, u}];
            std::size_t k = static_cast<std::size_t>(
                std::find(occ_u.begin(), occ_u.end(), p) - occ_u.begin());
            std::size_t partner_pos = occ_v[occ_u.size() - 1 - k];
            rotations[u][p] = next_dart;
            rotations[v][partner_pos] = next_dart + 1;
            next_dart += 2;
        }
    }
    return PlanarMap::build(std::move(rotations));
}

namespace {

struct PlanarCodeReader {
    std::string_view bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }
    unsigned char next() { return static_cast<unsigned char>(bytes[pos++]); }
};

std::vector<std::vector<VertexId>> read_planar_code_record(PlanarCodeReader& reader) {
    unsigned n = reader.next();
    if (n == 0) raise(ErrorKind::ParseError, "graph with zero vertices in planar code");
    std::vector<std::vector<VertexId>> neighbors(n);
    for (unsigned v = 0; v < n; ++v) {
        while (true) {
            if (reader.eof())
                raise(ErrorKind::TruncatedRecord,
                      "input ends inside the neighbor list of vertex " + std::to_string(v));
            unsigned char b = reader.next();
            if (b == 0) break;
            if (b > n)
                raise(ErrorKind::ParseError, "neighbor " + std::to_string(int(b)) +
                                                 " out of range in a " + std::to_string(n) +
                                                 "-vertex graph");
            neighbors[v].push_back(static_cast<VertexId>(b - 1));
        }
        // lists come in clockwise order; sigma is counterclockwise
        std::reverse(neighbors[v].begin(), neighbors[v].end());
    }
    return neighbors;
}

} // namespace

std::vector<PlanarMap> parse_planar_code(std::string_view bytes) {
    PlanarCodeReader reader{bytes};
    std::string_view header(planar_code_header);
    if (bytes.substr(0, header.size()) != header)
        raise(ErrorKind::BadHeader, "expected '>>planar_code<<' header");
    reader.pos = header.size();

    std::vector<PlanarMap> maps;
    while (!reader.eof())
        maps.push_back(map_from_neighbor_lists(read_planar_code_record(reader)));
    return maps;
}

std::vector<CorpusEntry> parse_planar_code_entries(std::string_view bytes,
                                                   std::string_view provenance_prefix) {
    PlanarCodeReader reader{bytes};
    std::string_view header(planar_code_header);
    if (bytes.substr(0, header.size()) != header)
        raise(ErrorKind::BadHeader, "expected '>>planar_code<<' header");
    reader.pos = header.size();

    std::vector<CorpusEntry> entries;
    std::size_t index = 0;
    while (!reader.eof()) {
        auto neighbors = read_planar_code_record(reader);
        CorpusEntry entry;
        entry.provenance = std::string(provenance_prefix) + "#" + std::to_string(index++);
        try {
            entry.map = map_from_neighbor_lists(neighbors);
        } catch (const Error& e) {
            entry.error = e.what();
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

namespace {

PlanarMap make_tetrahedron() {
    return map_from_neighbor_lists({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}});
}

// outer ring 0..n-1, inner ring n..2n-1, rung k joins k and n+k
PlanarMap make_prism(int n) {
    if (n < 3) raise(ErrorKind::BadParameter, "prism needs n >= 3");
    std::vector<std::vector<VertexId>> nbrs(2 * n);
    for (int k = 0; k < n; ++k) {
        int next = (k + 1) % n, prev = (k + n - 1) % n;
        nbrs[k] = {static_cast<VertexId>(next), static_cast<VertexId>(n + k),
                   static_cast<VertexId>(prev)};
        nbrs[n + k] = {static_cast<VertexId>(k), static_cast<VertexId>(n + next),
                       static_cast<VertexId>(n + prev)};
    }
    return map_from_neighbor_lists(nbrs);
}

PlanarMap make_k23() {
    return map_from_neighbor_lists({{2, 3, 4}, {4, 3, 2}, {0, 1}, {0, 1}, {0, 1}});
}

PlanarMap make_theta() {
    return map_from_neighbor_lists({{1, 1, 1}, {0, 0, 0}});
}

PlanarMap make_octahedron() {
    return map_from_neighbor_lists({{1, 5, 4, 2},
                                    {2, 3, 5, 0},
                                    {0, 4, 3, 1},
                                    {4, 5, 1, 2},
                                    {5, 3, 2, 0},
                                    {3, 4, 0, 1}});
}

} // namespace

PlanarMap generate(const std::string& name, int n) {
    if (name == "tetrahedron") return make_tetrahedron();
    if (name == "prism") return make_prism(n);
    if (name == "k23") return make_k23();
    if (name == "theta") return make_theta();
    if (name == "octahedron") return make_octahedron();
    raise(ErrorKind::UnknownGenerator, "unknown generator '" + name + "'");
}

std::string export_dot_map(const PlanarMap& map, const WeakHamiltonian* overlay) {
    std::ostringstream out;
    out << "graph map {\n";
    out << "  node [shape=circle];\n";
    for (VertexId v = 0; v < map.num_vertices(); ++v) out << "  " << v << ";\n";
    for (EdgeId e = 0; e < map.num_edges(); ++e) {
        out << "  " << map.edge_endpoint(e, 0) << " -- " << map.edge_endpoint(e, 1)
            << " [label=\"e" << e << "\"";
        if (overlay) out << ", style=" << (overlay->edges.test(e) ? "bold" : "dashed");
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_dot_wh_graph(const WeakHamiltonianGraph& graph,
                                const ChromaticCliqueSet* cliques) {
    std::ostringstream out;
    out << "graph wh_graph {\n";
    for (WhIndex i = 0; i < graph.vertices.size(); ++i)
        out << "  h" << i << " [label=\"h" << i << " N=" << graph.vertices[i].num_cycles()
            << "\"];\n";
    if (cliques) {
        for (CliqueId c = 0; c < cliques->cliques.size(); ++c) {
            out << "  subgraph cluster_" << c << " {\n";
            out << "    style=filled;\n";
            out << "    color=lightgrey;\n";
            for (std::size_t idx = 0; idx < graph.edges.size(); ++idx)
                if (cliques->clique_of_edge[idx] == c)
                    out << "    h" << graph.edges[idx].first << " -- h"
                        << graph.edges[idx].second << ";\n";
            out << "  }\n";
        }
    } else {
        for (const auto& [a, b] : graph.edges) out << "  h" << a << " -- h" << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_dot_chromatic(const ChromaticGraph& graph) {
    std::ostringstream out;
    out << "graph chromatic {\n";
    for (std::size_t c = 0; c < graph.num_vertices; ++c) out << "  c" << c << ";\n";
    for (std::size_t i = 0; i < graph.edges.size(); ++i)
        out << "  c" << graph.edges[i].first << " -- c" << graph.edges[i].second
            << " [label=\"h" << graph.shared_wh[i] << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string export_dot_coloring(const PlanarMap& map, const FaceColoring& coloring) {
    std::ostringstream out;
    out << "graph map {\n";
    out << "  node [shape=circle];\n";
    for (VertexId v = 0; v < map.num_vertices(); ++v) out << "  " << v << ";\n";
    for (FaceId f = 0; f < map.num_faces() && f < coloring.color_of.size(); ++f)
        out << "  f" << f << " [shape=box, label=\"f" << f << "=" << coloring.color_of[f]
            << "\"];\n";
    for (EdgeId e = 0; e < map.num_edges(); ++e)
        out << "  " << map.edge_endpoint(e, 0) << " -- " << map.edge_endpoint(e, 1)
            << " [label=\"e" << e << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string export_json_wh_list(const std::vector<WeakHamiltonian>& whs,
                                std::optional<std::string> map_name) {
    json j;
    if (map_name) j["map"] = *map_name;
    j["count"] = whs.size();
    j["weak_hamiltonians"] = json::array();
    for (std::size_t i = 0; i < whs.size(); ++i) {
        json w = wh_json(whs[i]);
        w["index"] = i;
        j["weak_hamiltonians"].push_back(std::move(w));
    }
    return j.dump(2) + "\n";
}

std::string export_json_wh(const WeakHamiltonian& h, std::optional<std::size_t> index) {
    json j = wh_json(h);
    if (index) j["index"] = *index;
    return j.dump(2) + "\n";
}

std::string export_json_wh_graph(const WeakHamiltonianGraph& graph,
                                 const ChromaticCliqueSet* cliques) {
    json j;
    j["num_vertices"] = graph.vertices.size();
    j["vertices"] = json::array();
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        json w = wh_json(graph.vertices[i]);
        w["index"] = i;
        j["vertices"].push_back(std::move(w));
    }
    j["edges"] = graph.edges;
    if (cliques) {
        j["cliques"] = cliques->cliques;
        j["clique_of_edge"] = cliques->clique_of_edge;
    }
    return j.dump(2) + "\n";
}

std::string export_json_chromatic(const ChromaticGraph& graph,
                                  const ChromaticCliqueSet& cliques,
                                  const std::vector<FaceColoring>* coloring_table) {
    json j;
    j["num_vertices"] = graph.num_vertices;
    j["cliques"] = cliques.cliques;
    j["edges"] = graph.edges;
    j["shared_wh"] = graph.shared_wh;
    j["multigraph"] = graph.multigraph;
    if (coloring_table) {
        j["colorings"] = json::array();
        for (const auto& phi : *coloring_table) j["colorings"].push_back(phi.color_of);
    }
    return j.dump(2) + "\n";
}

std::string export_json_coloring(const FaceColoring& coloring) {
    json j;
    j["palette_size"] = coloring.palette_size;
    j["colors"] = coloring.color_of;
    return j.dump(2) + "\n";
}

std::string export_json_colorings(const std::vector<FaceColoring>& colorings, bool canonical) {
    json j;
    j["count"] = colorings.size();
    j["canonical"] = canonical;
    j["palette_size"] = colorings.empty() ? 0 : colorings.front().palette_size;
    j["colorings"] = json::array();
    for (const auto& c : colorings) j["colorings"].push_back(c.color_of);
    return j.dump(2) + "\n";
}

std::string export_json_correspondence(const FaceCorrespondence& corr) {
    json j;
    j["forward"] = json::array();
    for (FaceId f = 0; f < corr.forward.size(); ++f)
        j["forward"].push_back(json::array({f, corr.forward[f]}));
    j["new_faces"] = corr.new_faces;
    return j.dump(2) + "\n";
}

std::string export_json_report(const StructureReport& report) {
    json j;
    j["all_pass"] = report.all_pass();
    j["checks"] = json::array();
    for (const auto& check : report.checks) {
        json c;
        c["name"] = check.name;
        c["pass"] = check.pass;
        c["detail"] = check.detail;
        j["checks"].push_back(std::move(c));
    }
    return j.dump(2) + "\n";
}

FaceColoring parse_coloring_document(std::string_view text, std::size_t index) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        raise(ErrorKind::ParseError, e.what());
    }
    if (!j.is_object()) raise(ErrorKind::ParseError, "coloring document is not a JSON object");
    if (!j.contains("palette_size") || !j["palette_size"].is_number_unsigned())
        raise(ErrorKind::ParseError, "missing or invalid field 'palette_size'");

    FaceColoring coloring;
    coloring.palette_size = j["palette_size"].get<int>();
    if (j.contains("colors")) {
        coloring.color_of = j["colors"].get<std::vector<int>>();
    } else if (j.contains("colorings")) {
        const auto& list = j["colorings"];
        if (!list.is_array() || index >= list.size())
            raise(ErrorKind::ParseError,
                  "coloring index " + std::to_string(index) + " out of range");
        coloring.color_of = list[index].get<std::vector<int>>();
    } else {
        raise(ErrorKind::ParseError, "expected field 'colors' or 'colorings'");
    }
    return coloring;
}

} // namespace wham
