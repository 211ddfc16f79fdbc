"""Smoke tests for the python bindings."""

import pytest

import wham


def test_generate_and_counts():
    p4 = wham.generate("prism", 4)
    assert p4.num_vertices == 8
    assert p4.num_edges == 12
    assert p4.num_faces == 6
    assert p4.is_cubic()


def test_weak_hamiltonian_counts():
    assert len(wham.weak_hamiltonians(wham.generate("tetrahedron"))) == 3
    assert len(wham.weak_hamiltonians(wham.generate("prism", 4))) == 9
    assert len(wham.weak_hamiltonians(wham.generate("prism", 5))) == 10
    assert wham.weak_hamiltonians(wham.generate("k23")) == []


def test_mutation_round_trip():
    k4 = wham.generate("tetrahedron")
    whs = wham.weak_hamiltonians(k4)
    mutated = wham.mutate(k4, whs[0], "0")
    assert wham.is_mutation_pair(k4, whs[0], mutated)
    assert sorted(set(whs[0].edges) | set(mutated.edges)) == list(range(k4.num_edges))


def test_coloring_equivalence():
    p4 = wham.generate("prism", 4)
    whs = wham.weak_hamiltonians(p4)
    partner = wham.all_mutations(p4, whs[0])[0]
    phi = wham.four_coloring_from_pair(p4, whs[0], partner)
    assert wham.is_proper(p4, phi)
    triple = wham.wh_triple_from_coloring(p4, phi)
    assert {tuple(h.edges) for h in triple} >= {tuple(whs[0].edges), tuple(partner.edges)}


def test_oracle_counts():
    assert len(wham.enumerate_colorings(wham.generate("tetrahedron"), 4)) == 24
    assert len(wham.enumerate_colorings(wham.generate("prism", 4), 4)) == 96


def test_moduli_and_chromatic_graph():
    p5 = wham.generate("prism", 5)
    graph = wham.build_wh_graph(p5)
    assert graph.num_vertices == 10
    cliques = wham.find_chromatic_cliques(graph)
    assert len(cliques.cliques) == 5
    chi = wham.build_chromatic_graph(graph, cliques)
    cycle5 = [(i, (i + 1) % 5) for i in range(5)]
    assert wham.graph_iso(chi.num_vertices, chi.edges, 5, cycle5)


def test_resolution():
    octa = wham.generate("octahedron")
    resolved, corr = wham.resolve(octa)
    assert resolved.num_vertices == 24
    assert resolved.is_cubic()
    assert len(corr.new_faces) == 6
    phi = wham.enumerate_colorings(resolved, 4, True, 1)[0]
    pulled = wham.pull_back_coloring(phi, corr)
    assert wham.is_proper(octa, pulled)


def test_document_round_trip():
    p4 = wham.generate("prism", 4)
    text = wham.emit_map_document(p4, "prism_4")
    doc = wham.parse_map_document(text)
    assert doc.name == "prism_4"
    assert wham.emit_map_document(doc.to_map(), doc.name) == text


def test_run_check_green():
    report = wham.run_check(wham.generate("prism", 4))
    assert all(ok for _, ok, _ in report)


def test_errors_are_typed():
    with pytest.raises(wham.WhamError):
        wham.weak_hamiltonians(wham.generate("octahedron"))  # even but not cubic
    with pytest.raises(wham.WhamError):
        wham.generate("prism", 2)
