#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/corpus.hpp"
#include "wham/error.hpp"
#include "wham/io.hpp"
#include "wham/moduli.hpp"

#include <string>

using namespace wham;
using namespace wham::testing;

namespace {

int count_lines_with(const std::string& text, const std::string& needle) {
    int count = 0;
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

} // namespace

TEST_CASE("map documents round trip byte for byte") {
    for (const char* name : {"tetrahedron", "k23", "theta", "octahedron"}) {
        auto doc = document_from_map(generate(name), name);
        std::string text = emit_map_document(doc);
        auto parsed = parse_map_document(text);
        CHECK(emit_map_document(parsed) == text);
        CHECK(parsed.name == doc.name);
        CHECK(parsed.vertex_rotations == doc.vertex_rotations);
    }
    for (int n = 3; n <= 7; ++n) {
        auto doc = document_from_map(generate("prism", n));
        CHECK(emit_map_document(parse_map_document(emit_map_document(doc))) ==
              emit_map_document(doc));
    }
}

TEST_CASE("a hand-written K4 document has 4 faces") {
    std::string text = R"({
      "num_darts": 12,
      "vertex_rotations": [[0, 2, 4], [6, 8, 1], [5, 10, 7], [3, 9, 11]]
    })";
    auto doc = parse_map_document(text);
    auto map = doc.to_map();
    CHECK(map.num_faces() == 4);
    CHECK(map.is_cubic());
}

TEST_CASE("malformed documents raise ParseError") {
    auto expect_parse_error = [](const std::string& text) {
        try {
            parse_map_document(text);
            FAIL("expected ParseError for: ", text);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ParseError);
        }
    };
    expect_parse_error("not json");
    expect_parse_error(R"({"vertex_rotations": []})");
    expect_parse_error(R"({"num_darts": 3, "vertex_rotations": [[0, 1, 2]]})"); // odd
    expect_parse_error(R"({"num_darts": 4, "vertex_rotations": [[0, 1], [1, 2]]})"); // dup dart
    expect_parse_error(R"({"num_darts": 4, "vertex_rotations": [[0, 1]]})"); // count mismatch
}

TEST_CASE("planar code: hand-encoded K4 decodes to the tetrahedron") {
    // clockwise 1-based lists of the tetrahedron embedding
    std::string bytes = ">>planar_code<<";
    const unsigned char payload[] = {4, 3, 4, 2, 0, 1, 4, 3, 0, 2, 4, 1, 0, 3, 2, 1, 0};
    bytes.append(reinterpret_cast<const char*>(payload), sizeof(payload));
    auto maps = parse_planar_code(bytes);
    REQUIRE(maps.size() == 1);
    CHECK(maps[0].num_vertices() == 4);
    CHECK(maps[0].num_faces() == 4);
    CHECK(maps[0].is_cubic());
    CHECK(graph_iso_small(underlying_simple_graph(maps[0]),
                          underlying_simple_graph(generate("tetrahedron"))));
}

TEST_CASE("planar code header and truncation errors") {
    try {
        parse_planar_code("planar_code");
        FAIL("expected BadHeader");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadHeader);
    }
    CHECK(parse_planar_code(">>planar_code<<").empty()); // empty body

    std::string truncated = ">>planar_code<<";
    const unsigned char payload[] = {4, 3, 4, 2, 0, 1, 4};
    truncated.append(reinterpret_cast<const char*>(payload), sizeof(payload));
    try {
        parse_planar_code(truncated);
        FAIL("expected TruncatedRecord");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TruncatedRecord);
    }

    std::string zero = ">>planar_code<<";
    zero.push_back('\0');
    try {
        parse_planar_code(zero);
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
    }

    // neighbor id beyond the vertex count
    std::string bad_neighbor = ">>planar_code<<";
    const unsigned char payload2[] = {2, 9, 0, 1, 0};
    bad_neighbor.append(reinterpret_cast<const char*>(payload2), sizeof(payload2));
    try {
        parse_planar_code(bad_neighbor);
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
    }
}

TEST_CASE("planar code round trips the whole corpus at the neighbor-list level") {
    auto corpus = make_cubic_corpus(60, 12);
    auto bytes = encode_planar_code(corpus);
    auto parsed = parse_planar_code(bytes);
    REQUIRE(parsed.size() == corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(parsed[i].num_vertices() == corpus[i].num_vertices());
        CHECK(parsed[i].num_edges() == corpus[i].num_edges());
        CHECK(parsed[i].num_faces() == corpus[i].num_faces());
    }
    // re-encoding the parse reproduces the bytes
    CHECK(encode_planar_code(parsed) == bytes);
}

TEST_CASE("planar code handles the theta multigraph") {
    auto bytes = encode_planar_code({generate("theta")});
    auto maps = parse_planar_code(bytes);
    REQUIRE(maps.size() == 1);
    CHECK(maps[0].num_vertices() == 2);
    CHECK(maps[0].num_edges() == 3);
    CHECK(maps[0].num_faces() == 3);
}

TEST_CASE("tolerant batch ingest reports per-entry errors") {
    std::string bytes = ">>planar_code<<";
    // good K4, then K4 with one rotation reversed (not a sphere)
    const unsigned char good[] = {4, 3, 4, 2, 0, 1, 4, 3, 0, 2, 4, 1, 0, 3, 2, 1, 0};
    const unsigned char bad[] = {4, 2, 4, 3, 0, 1, 4, 3, 0, 2, 4, 1, 0, 3, 2, 1, 0};
    bytes.append(reinterpret_cast<const char*>(good), sizeof(good));
    bytes.append(reinterpret_cast<const char*>(bad), sizeof(bad));
    auto entries = parse_planar_code_entries(bytes, "test");
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].map.has_value());
    CHECK(entries[0].error.empty());
    CHECK_FALSE(entries[1].map.has_value());
    CHECK(entries[1].error.find("NonSphere") != std::string::npos);
    CHECK(entries[0].provenance == "test#0");
}

TEST_CASE("generator parameters are validated") {
    CHECK_THROWS_AS(generate("dodecahedron"), Error);
    try {
        generate("prism", 2);
        FAIL("expected BadParameter");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadParameter);
    }
}

TEST_CASE("asymmetric neighbor lists are rejected") {
    try {
        map_from_neighbor_lists({{1, 1}, {0}});
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
    }
}

TEST_CASE("DOT export of a map counts nodes and edges") {
    auto p4 = generate("prism", 4);
    auto dot = export_dot_map(p4);
    CHECK(count_lines_with(dot, ";\n") == 8 + 12 + 1); // nodes, edges, node style line
    CHECK(count_lines_with(dot, " -- ") == 12);
    // overlay styles split bold/dashed by membership
    auto whs = enumerate_weak_hamiltonians(p4);
    auto overlay = export_dot_map(p4, &whs[0]);
    CHECK(count_lines_with(overlay, "style=bold") == 8);
    CHECK(count_lines_with(overlay, "style=dashed") == 4);
    CHECK(export_dot_map(p4) == dot); // deterministic
}

TEST_CASE("DOT export of the moduli graphs") {
    auto k4 = generate("tetrahedron");
    auto g = build_wh_graph(k4);
    auto cliques = find_chromatic_cliques(g);
    auto dot = export_dot_wh_graph(g, &cliques);
    CHECK(count_lines_with(dot, "[label=\"h") == 3);
    CHECK(count_lines_with(dot, " -- ") == 3);
    CHECK(count_lines_with(dot, "subgraph cluster_") == 1);
    CHECK(count_lines_with(dot, "color=lightgrey") == 1);

    auto p5 = generate("prism", 5);
    auto g5 = build_wh_graph(p5);
    auto c5 = find_chromatic_cliques(g5);
    auto chi = build_chromatic_graph(g5, c5);
    auto chi_dot = export_dot_chromatic(chi);
    CHECK(count_lines_with(chi_dot, "  c") == 5 + 5); // 5 nodes + 5 edge lines
    CHECK(count_lines_with(chi_dot, " -- ") == 5);
}

TEST_CASE("coloring DOT overlay labels every face") {
    auto k4 = generate("tetrahedron");
    auto phi = enumerate_colorings_bruteforce(k4, 4, true).front();
    auto dot = export_dot_coloring(k4, phi);
    CHECK(count_lines_with(dot, "shape=box") == 4);
    CHECK(count_lines_with(dot, " -- ") == 6);
}

TEST_CASE("the chromatic JSON carries the clique-coloring table") {
    auto p4 = generate("prism", 4);
    auto g = build_wh_graph(p4);
    auto cliques = find_chromatic_cliques(g);
    auto chi = build_chromatic_graph(g, cliques);
    std::vector<FaceColoring> table;
    for (CliqueId c = 0; c < cliques.cliques.size(); ++c)
        table.push_back(clique_to_coloring(p4, g, cliques, c));
    auto text = export_json_chromatic(chi, cliques, &table);
    CHECK(count_lines_with(text, "\"colorings\"") == 1);
    // one canonical coloring per clique, each a proper 4-coloring
    for (const auto& phi : table) {
        CHECK(is_proper(p4, phi));
        CHECK(canonical_coloring(phi) == phi);
    }
}

TEST_CASE("coloring documents round trip, including oracle lists") {
    auto k4 = generate("tetrahedron");
    auto colorings = enumerate_colorings_bruteforce(k4, 4, true);
    auto single = export_json_coloring(colorings[0]);
    auto parsed = parse_coloring_document(single);
    CHECK(parsed == colorings[0]);

    auto list = export_json_colorings(enumerate_colorings_bruteforce(k4, 4), false);
    auto third = parse_coloring_document(list, 2);
    CHECK(third.color_of == enumerate_colorings_bruteforce(k4, 4)[2].color_of);
    CHECK_THROWS_AS(parse_coloring_document(list, 1000), Error);
    CHECK_THROWS_AS(parse_coloring_document("{}"), Error);
}

TEST_CASE("exports are byte-stable across repeated calls") {
    auto p5 = generate("prism", 5);
    auto g = build_wh_graph(p5);
    auto cliques = find_chromatic_cliques(g);
    auto chi = build_chromatic_graph(g, cliques);
    CHECK(export_json_wh_graph(g, &cliques) == export_json_wh_graph(g, &cliques));
    CHECK(export_json_chromatic(chi, cliques) == export_json_chromatic(chi, cliques));
    CHECK(export_dot_wh_graph(g, &cliques) == export_dot_wh_graph(g, &cliques));
    CHECK(export_json_wh_list(enumerate_weak_hamiltonians(p5), "prism_5") ==
          export_json_wh_list(enumerate_weak_hamiltonians(p5), "prism_5"));
}
