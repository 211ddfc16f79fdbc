#pragma once

#include "wham/factors.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wham {

/// Per-cycle choice of one of the two alternating perfect matchings of an
/// even cycle. Bit i (0 = first matching, 1 = second) refers to cycle i of
/// the weak Hamiltonian's canonical cycle order.
struct MatchingSelection {
    std::uint64_t bits = 0;
    std::size_t num_cycles = 0;

    bool picks_second(std::size_t cycle) const { return (bits >> cycle) & 1u; }

    MatchingSelection flipped() const {
        MatchingSelection s{~bits, num_cycles};
        if (num_cycles < 64) s.bits &= (std::uint64_t(1) << num_cycles) - 1;
        return s;
    }

    /// "01" style string, character i = cycle i. Throws BadParameter on
    /// anything but 0/1 characters or length > 64.
    static MatchingSelection from_string(const std::string& text);
    std::string to_string() const;
};

/// The two complementary perfect matchings of an even cycle, as subsets of
/// the host map's edge space. The matching containing the lowest edge id
/// comes first. Throws OddCycle.
std::pair<EdgeSubset, EdgeSubset> cycle_matchings(const PlanarMap& map,
                                                  const std::vector<EdgeId>& cycle);

/// The mutation of h: the complement of h united with the selected matching
/// of each cycle. The result is validated as a weak Hamiltonian (which also
/// keeps exercising the fact that mutations always are). Throws
/// SelectionLengthMismatch.
WeakHamiltonian mutate(const PlanarMap& map, const WeakHamiltonian& h, MatchingSelection sel);

/// All 2^N mutations of h, canonically sorted.
std::vector<WeakHamiltonian> all_mutations(const PlanarMap& map, const WeakHamiltonian& h);

/// True iff h2 is a mutation of h1, i.e. h1 and h2 together cover every edge.
bool is_mutation_pair(const PlanarMap& map, const WeakHamiltonian& h1, const WeakHamiltonian& h2);

} // namespace wham
