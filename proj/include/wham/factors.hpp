#pragma once

#include "wham/edge_subset.hpp"
#include "wham/map.hpp"

#include <vector>

namespace wham {

/// A 2-factor all of whose cycles are even, together with its cycle
/// decomposition (cached because mutation and moduli walk it repeatedly).
struct WeakHamiltonian {
    EdgeSubset edges;
    std::vector<std::vector<EdgeId>> cycles;
    std::vector<std::size_t> cycle_lengths;

    std::size_t num_cycles() const { return cycles.size(); }

    bool operator==(const WeakHamiltonian& other) const { return edges == other.edges; }
    bool operator<(const WeakHamiltonian& other) const { return edges < other.edges; }
};

/// Set complement within F2^|E|. On a cubic map this sends 2-factors to
/// perfect matchings and back.
EdgeSubset complement(const PlanarMap& map, const EdgeSubset& s);

/// All perfect matchings of a cubic map, lexicographically sorted.
/// Branch and bound: repeatedly pick the lowest-id uncovered vertex and
/// branch over its (at most 3) incident edges. With threads > 1 the
/// top-level branches run concurrently; output order does not depend on
/// scheduling.
std::vector<EdgeSubset> perfect_matchings(const PlanarMap& map, unsigned threads = 1);

/// Cycles of a 2-regular edge subset. Each cycle starts at its lowest edge
/// id and runs in the direction whose edge-id sequence is lexicographically
/// smaller; cycles are listed by ascending lowest edge id.
std::vector<std::vector<EdgeId>> cycle_decomposition(const PlanarMap& map, const EdgeSubset& s);

/// True iff s is a 2-factor with all cycle lengths even.
bool is_weak_hamiltonian(const PlanarMap& map, const EdgeSubset& s);

/// Builds the cached cycle decomposition; throws NotTwoRegular / OddCycle
/// when s is not a weak Hamiltonian.
WeakHamiltonian make_weak_hamiltonian(const PlanarMap& map, const EdgeSubset& s);

/// Complements of all perfect matchings, filtered by the even-cycle
/// condition, canonically sorted. Returns empty immediately when |V| is
/// odd; throws NotCubic otherwise if the map is not cubic.
std::vector<WeakHamiltonian> enumerate_weak_hamiltonians(const PlanarMap& map, unsigned threads = 1);

} // namespace wham
