#pragma once

#include "wham/factors.hpp"
#include "wham/map.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace wham {

/// Total assignment of colors 1..palette_size to faces. Properness is a
/// predicate, not an invariant: improper colorings are representable so the
/// oracle and negative tests can exist.
struct FaceColoring {
    int palette_size = 0;
    std::vector<int> color_of; // indexed by face id

    bool operator==(const FaceColoring& other) const {
        return palette_size == other.palette_size && color_of == other.color_of;
    }
};

/// One of the three unordered partitions of {1,2,3,4} into two pairs,
/// identified by the partner of color 1.
enum class PairPartition : int {
    PairedWith2 = 1, // {1,2} | {3,4}
    PairedWith3 = 2, // {1,3} | {2,4}
    PairedWith4 = 3, // {1,4} | {2,3}
};

inline constexpr std::array<PairPartition, 3> all_pair_partitions = {
    PairPartition::PairedWith2, PairPartition::PairedWith3, PairPartition::PairedWith4};

/// Bijection J2 x J2 -> J4, as a lookup table indexed by (c1-1)*2 + (c2-1).
/// The canonical choice maps (1,1),(1,2),(2,1),(2,2) to 1,2,3,4.
struct Gamma {
    std::array<int, 4> table = {1, 2, 3, 4};
    int operator()(int c1, int c2) const { return table[(c1 - 1) * 2 + (c2 - 1)]; }
};

/// 2-coloring whose colors differ across an edge exactly when the edge lies
/// in h. Computed by parity propagation over the dual adjacency (the
/// combinatorial form of the inside/outside parity sum); face 0 gets
/// color 1. A parity clash on a non-tree dual edge is impossible on genus-0
/// input and throws ParityInconsistency as an internal invariant break.
FaceColoring two_coloring_from_wh(const PlanarMap& map, const WeakHamiltonian& h);

/// The 4-coloring gamma(phi1(F), phi2(F)) from a weak Hamiltonian and one of
/// its mutations. Throws NotCoveringPair when h1 and h2 do not cover every
/// edge.
FaceColoring four_coloring_from_pair(const PlanarMap& map, const WeakHamiltonian& h1,
                                     const WeakHamiltonian& h2, Gamma gamma = {});

/// The weak Hamiltonian of a proper 4-coloring and a pair partition: the
/// edges across which the induced 2-valued function changes. Throws
/// ImproperColoring (and NotCubic for non-cubic maps).
WeakHamiltonian wh_from_coloring(const PlanarMap& map, const FaceColoring& coloring,
                                 PairPartition partition);

/// wh_from_coloring for all three pair partitions. The results are distinct,
/// pairwise mutations, and XOR to zero.
std::array<WeakHamiltonian, 3> wh_triple_from_coloring(const PlanarMap& map,
                                                       const FaceColoring& coloring);

/// True iff colors differ across every edge.
bool is_proper(const PlanarMap& map, const FaceColoring& coloring);

/// All proper colorings with palette 1..palette, by backtracking over the
/// dual adjacency in face-id order; output is lexicographic in the color
/// vectors. canonical_only restricts to first-occurrence-normalized
/// representatives (one per relabeling orbit). max_count > 0 stops early
/// after that many colorings.
std::vector<FaceColoring> enumerate_colorings_bruteforce(const PlanarMap& map, int palette,
                                                         bool canonical_only = false,
                                                         std::size_t max_count = 0);

/// Lexicographically smallest member of the color-relabeling orbit: colors
/// renamed by first occurrence over faces in id order.
FaceColoring canonical_coloring(const FaceColoring& coloring);

} // namespace wham
