#include "wham/mutation.hpp"

#include "wham/error.hpp"

#include <algorithm>
#include <string>

namespace wham {

MatchingSelection MatchingSelection::from_string(const std::string& text) {
    if (text.size() > 64)
        raise(ErrorKind::BadParameter, "selection bitmask longer than 64 cycles");
    MatchingSelection sel{0, text.size()};
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            sel.bits |= std::uint64_t(1) << i;
        else if (text[i] != '0')
            raise(ErrorKind::BadParameter,
                  "selection bitmask must contain only 0 and 1, got '" + text + "'");
    }
    return sel;
}

std::string MatchingSelection::to_string() const {
    std::string out(num_cycles, '0');
    for (std::size_t i = 0; i < num_cycles; ++i)
        if (picks_second(i)) out[i] = '1';
    return out;
}

std::pair<EdgeSubset, EdgeSubset> cycle_matchings(const PlanarMap& map,
                                                  const std::vector<EdgeId>& cycle) {
    if (cycle.size() % 2 != 0)
        raise(ErrorKind::OddCycle,
              "cycle of length " + std::to_string(cycle.size()) + " has no perfect matching");
    EdgeSubset first(map.num_edges());
    EdgeSubset second(map.num_edges());
    for (std::size_t i = 0; i < cycle.size(); ++i)
        (i % 2 == 0 ? first : second).set(cycle[i]);
    EdgeId lowest = *std::min_element(cycle.begin(), cycle.end());
    if (!first.test(lowest)) std::swap(first, second);
    return {std::move(first), std::move(second)};
}

WeakHamiltonian mutate(const PlanarMap& map, const WeakHamiltonian& h, MatchingSelection sel) {
    if (sel.num_cycles != h.num_cycles())
        raise(ErrorKind::SelectionLengthMismatch,
              "selection has " + std::to_string(sel.num_cycles) + " bits, weak Hamiltonian has " +
                  std::to_string(h.num_cycles()) + " cycles");
    EdgeSubset result = h.edges.complemented();
    for (std::size_t i = 0; i < h.cycles.size(); ++i) {
        auto [first, second] = cycle_matchings(map, h.cycles[i]);
        result = result | (sel.picks_second(i) ? second : first);
    }
    // guaranteed to be a weak Hamiltonian; validating doubles as a running
    // check of that fact
    return make_weak_hamiltonian(map, result);
}

std::vector<WeakHamiltonian> all_mutations(const PlanarMap& map, const WeakHamiltonian& h) {
    std::size_t n = h.num_cycles();
    if (n > 62)
        raise(ErrorKind::TooLarge,
              "2^" + std::to_string(n) + " mutations exceed the enumerable range");
    std::vector<WeakHamiltonian> out;
    out.reserve(std::size_t(1) << n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits)
        out.push_back(mutate(map, h, MatchingSelection{bits, n}));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_mutation_pair(const PlanarMap& map, const WeakHamiltonian& h1,
                      const WeakHamiltonian& h2) {
    (void)map;
    return (h1.edges | h2.edges).is_full();
}

} // namespace wham
