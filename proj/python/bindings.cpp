// Python bindings for the wham core. Edge subsets cross the boundary as
// sorted lists of edge ids; everything else maps onto small value classes.

#include "wham/error.hpp"
#include "wham/io.hpp"
#include "wham/moduli.hpp"
#include "wham/mutation.hpp"
#include "wham/resolution.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace wham;

namespace {

EdgeSubset subset_from_list(const PlanarMap& map, const std::vector<EdgeId>& edges) {
    EdgeSubset s(map.num_edges());
    for (EdgeId e : edges) {
        if (e >= map.num_edges())
            raise(ErrorKind::BadParameter, "edge id " + std::to_string(e) + " out of range");
        s.set(e);
    }
    return s;
}

PairPartition partition_from_int(int p) {
    if (p < 1 || p > 3) raise(ErrorKind::BadParameter, "partition must be 1, 2, or 3");
    return static_cast<PairPartition>(p);
}

std::vector<std::tuple<std::string, bool, std::string>> report_tuples(const StructureReport& r) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& check : r.checks) out.emplace_back(check.name, check.pass, check.detail);
    return out;
}

} // namespace

PYBIND11_MODULE(_wham, m) {
    m.doc() = "weak Hamiltonians, mutations, and four-coloring moduli on planar maps";

    py::register_exception<Error>(m, "WhamError");

    py::class_<PlanarMap>(m, "PlanarMap")
        .def_property_readonly("num_vertices", &PlanarMap::num_vertices)
        .def_property_readonly("num_edges", &PlanarMap::num_edges)
        .def_property_readonly("num_faces", &PlanarMap::num_faces)
        .def_property_readonly("num_darts", &PlanarMap::num_darts)
        .def("is_cubic", &PlanarMap::is_cubic)
        .def("degree", &PlanarMap::degree, py::arg("vertex"))
        .def("vertex_rotations", &PlanarMap::vertex_rotations)
        .def("faces", [](const PlanarMap& map) { return map.faces().faces; })
        .def("dual_adjacency",
             [](const PlanarMap& map) {
                 std::vector<std::pair<FaceId, FaceId>> out;
                 for (const auto& ef : map.dual_adjacency()) out.push_back({ef.side0, ef.side1});
                 return out;
             })
        .def("edge_endpoints",
             [](const PlanarMap& map, EdgeId e) {
                 if (e >= map.num_edges()) raise(ErrorKind::BadParameter, "edge out of range");
                 return std::make_pair(map.edge_endpoint(e, 0), map.edge_endpoint(e, 1));
             },
             py::arg("edge"))
        .def("__repr__", [](const PlanarMap& map) {
            return "PlanarMap(V=" + std::to_string(map.num_vertices()) +
                   ", E=" + std::to_string(map.num_edges()) +
                   ", F=" + std::to_string(map.num_faces()) + ")";
        });

    py::class_<WeakHamiltonian>(m, "WeakHamiltonian")
        .def_property_readonly("edges",
                               [](const WeakHamiltonian& h) { return h.edges.to_vector(); })
        .def_readonly("cycles", &WeakHamiltonian::cycles)
        .def_readonly("cycle_lengths", &WeakHamiltonian::cycle_lengths)
        .def_property_readonly("num_cycles", &WeakHamiltonian::num_cycles)
        .def("__eq__", [](const WeakHamiltonian& a, const WeakHamiltonian& b) { return a == b; })
        .def("__repr__", [](const WeakHamiltonian& h) {
            return "WeakHamiltonian(cycles=" + std::to_string(h.num_cycles()) + ")";
        });

    py::class_<FaceColoring>(m, "FaceColoring")
        .def(py::init([](int palette_size, std::vector<int> colors) {
                 return FaceColoring{palette_size, std::move(colors)};
             }),
             py::arg("palette_size"), py::arg("colors"))
        .def_readonly("palette_size", &FaceColoring::palette_size)
        .def_property_readonly("colors", [](const FaceColoring& c) { return c.color_of; })
        .def("__eq__", [](const FaceColoring& a, const FaceColoring& b) { return a == b; })
        .def("__repr__", [](const FaceColoring& c) {
            return "FaceColoring(palette=" + std::to_string(c.palette_size) +
                   ", faces=" + std::to_string(c.color_of.size()) + ")";
        });

    py::class_<FaceCorrespondence>(m, "FaceCorrespondence")
        .def_readonly("forward", &FaceCorrespondence::forward)
        .def_readonly("new_faces", &FaceCorrespondence::new_faces);

    py::class_<WeakHamiltonianGraph>(m, "WeakHamiltonianGraph")
        .def_readonly("vertices", &WeakHamiltonianGraph::vertices)
        .def_readonly("edges", &WeakHamiltonianGraph::edges)
        .def("degree", &WeakHamiltonianGraph::degree, py::arg("vertex"))
        .def_property_readonly("num_vertices",
                               [](const WeakHamiltonianGraph& g) { return g.vertices.size(); });

    py::class_<ChromaticCliqueSet>(m, "ChromaticCliqueSet")
        .def_readonly("cliques", &ChromaticCliqueSet::cliques)
        .def_readonly("clique_of_edge", &ChromaticCliqueSet::clique_of_edge)
        .def_readonly("cliques_of_vertex", &ChromaticCliqueSet::cliques_of_vertex);

    py::class_<ChromaticGraph>(m, "ChromaticGraph")
        .def_readonly("num_vertices", &ChromaticGraph::num_vertices)
        .def_readonly("edges", &ChromaticGraph::edges)
        .def_readonly("shared_wh", &ChromaticGraph::shared_wh)
        .def_readonly("multigraph", &ChromaticGraph::multigraph);

    py::class_<MapDocument>(m, "MapDocument")
        .def_property_readonly("name",
                               [](const MapDocument& d) { return d.name.value_or(""); })
        .def_readonly("num_darts", &MapDocument::num_darts)
        .def_readonly("vertex_rotations", &MapDocument::vertex_rotations)
        .def("to_map", &MapDocument::to_map);

    // construction and io
    m.def("build_map", &PlanarMap::build, py::arg("vertex_rotations"),
          "Build and validate a map from per-vertex dart rotations.");
    m.def("map_from_neighbor_lists", &map_from_neighbor_lists, py::arg("ccw_neighbors"));
    m.def("generate", &generate, py::arg("name"), py::arg("n") = 0,
          "Built-in maps: tetrahedron, prism (n >= 3), k23, theta, octahedron.");
    m.def("parse_map_document", &parse_map_document, py::arg("text"));
    m.def(
        "emit_map_document",
        [](const PlanarMap& map, const std::string& name) {
            return emit_map_document(document_from_map(
                map, name.empty() ? std::optional<std::string>{} : std::optional<std::string>{name}));
        },
        py::arg("map"), py::arg("name") = "");
    m.def(
        "parse_planar_code",
        [](const py::bytes& data) { return parse_planar_code(std::string(data)); },
        py::arg("data"));

    // factors
    m.def(
        "perfect_matchings",
        [](const PlanarMap& map, unsigned threads) {
            std::vector<std::vector<EdgeId>> out;
            for (const auto& s : perfect_matchings(map, threads)) out.push_back(s.to_vector());
            return out;
        },
        py::arg("map"), py::arg("threads") = 1);
    m.def("weak_hamiltonians", &enumerate_weak_hamiltonians, py::arg("map"),
          py::arg("threads") = 1);
    m.def(
        "complement",
        [](const PlanarMap& map, const std::vector<EdgeId>& edges) {
            return complement(map, subset_from_list(map, edges)).to_vector();
        },
        py::arg("map"), py::arg("edges"));
    m.def(
        "cycle_decomposition",
        [](const PlanarMap& map, const std::vector<EdgeId>& edges) {
            return cycle_decomposition(map, subset_from_list(map, edges));
        },
        py::arg("map"), py::arg("edges"));
    m.def(
        "is_weak_hamiltonian",
        [](const PlanarMap& map, const std::vector<EdgeId>& edges) {
            return is_weak_hamiltonian(map, subset_from_list(map, edges));
        },
        py::arg("map"), py::arg("edges"));
    m.def(
        "make_weak_hamiltonian",
        [](const PlanarMap& map, const std::vector<EdgeId>& edges) {
            return make_weak_hamiltonian(map, subset_from_list(map, edges));
        },
        py::arg("map"), py::arg("edges"));

    // mutation
    m.def(
        "mutate",
        [](const PlanarMap& map, const WeakHamiltonian& h, const std::string& selection) {
            return mutate(map, h, MatchingSelection::from_string(selection));
        },
        py::arg("map"), py::arg("wh"), py::arg("selection"));
    m.def("all_mutations", &all_mutations, py::arg("map"), py::arg("wh"));
    m.def("is_mutation_pair", &is_mutation_pair, py::arg("map"), py::arg("h1"), py::arg("h2"));

    // coloring
    m.def("two_coloring_from_wh", &two_coloring_from_wh, py::arg("map"), py::arg("wh"));
    m.def(
        "four_coloring_from_pair",
        [](const PlanarMap& map, const WeakHamiltonian& h1, const WeakHamiltonian& h2) {
            return four_coloring_from_pair(map, h1, h2);
        },
        py::arg("map"), py::arg("h1"), py::arg("h2"));
    m.def(
        "wh_from_coloring",
        [](const PlanarMap& map, const FaceColoring& phi, int partition) {
            return wh_from_coloring(map, phi, partition_from_int(partition));
        },
        py::arg("map"), py::arg("coloring"), py::arg("partition"));
    m.def("wh_triple_from_coloring", &wh_triple_from_coloring, py::arg("map"),
          py::arg("coloring"));
    m.def("is_proper", &is_proper, py::arg("map"), py::arg("coloring"));
    m.def("enumerate_colorings", &enumerate_colorings_bruteforce, py::arg("map"),
          py::arg("palette") = 4, py::arg("canonical_only") = false, py::arg("max_count") = 0);
    m.def("canonical_coloring", &canonical_coloring, py::arg("coloring"));

    // resolution
    m.def(
        "blowup",
        [](const PlanarMap& map, VertexId v) {
            auto r = blowup(map, v);
            return std::make_pair(std::move(r.map), std::move(r.correspondence));
        },
        py::arg("map"), py::arg("vertex"));
    m.def(
        "resolve",
        [](const PlanarMap& map) {
            auto r = resolve(map);
            return std::make_pair(std::move(r.map), std::move(r.correspondence));
        },
        py::arg("map"));
    m.def("pull_back_coloring", &pull_back_coloring, py::arg("coloring"),
          py::arg("correspondence"));

    // moduli
    m.def("build_wh_graph", &build_wh_graph, py::arg("map"), py::arg("threads") = 1);
    m.def("find_chromatic_cliques", &find_chromatic_cliques, py::arg("graph"));
    m.def("build_chromatic_graph", &build_chromatic_graph, py::arg("graph"), py::arg("cliques"),
          py::arg("multigraph") = false);
    m.def("clique_to_coloring", &clique_to_coloring, py::arg("map"), py::arg("graph"),
          py::arg("cliques"), py::arg("clique"));
    m.def("coloring_to_clique", &coloring_to_clique, py::arg("map"), py::arg("graph"),
          py::arg("cliques"), py::arg("coloring"));
    m.def(
        "validate_structure",
        [](const WeakHamiltonianGraph& g, const ChromaticCliqueSet& c) {
            return report_tuples(validate_structure(g, c));
        },
        py::arg("graph"), py::arg("cliques"));
    m.def(
        "run_check",
        [](const PlanarMap& map, unsigned threads) { return report_tuples(run_check(map, threads)); },
        py::arg("map"), py::arg("threads") = 1);
    m.def(
        "graph_iso",
        [](std::size_t n1, std::vector<std::pair<std::uint32_t, std::uint32_t>> e1,
           std::size_t n2, std::vector<std::pair<std::uint32_t, std::uint32_t>> e2) {
            return graph_iso_small({n1, std::move(e1)}, {n2, std::move(e2)});
        },
        py::arg("n1"), py::arg("edges1"), py::arg("n2"), py::arg("edges2"),
        "Exact isomorphism for graphs with at most 12 vertices.");

    // exports
    m.def(
        "export_dot_map",
        [](const PlanarMap& map, const WeakHamiltonian* overlay) {
            return export_dot_map(map, overlay);
        },
        py::arg("map"), py::arg("overlay") = nullptr);
    m.def(
        "export_dot_wh_graph",
        [](const WeakHamiltonianGraph& g, const ChromaticCliqueSet* cliques) {
            return export_dot_wh_graph(g, cliques);
        },
        py::arg("graph"), py::arg("cliques") = nullptr);
    m.def("export_dot_chromatic", &export_dot_chromatic, py::arg("graph"));
    m.def("export_dot_coloring", &export_dot_coloring, py::arg("map"), py::arg("coloring"));
}
