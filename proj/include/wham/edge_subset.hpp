#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace wham {

using EdgeId = std::uint32_t;

/// Indicator vector over the edge set of a map: an element of F2^|E|.
/// XOR is addition, complement() is the set complement within the full
/// edge set. Ordering is lexicographic on the indicator string with
/// edge 0 first (absent < present), which is the canonical order used
/// everywhere weak Hamiltonians or matchings get sorted.
class EdgeSubset {
public:
    EdgeSubset() = default;
    explicit EdgeSubset(std::size_t num_edges)
        : size_(num_edges), words_((num_edges + 63) / 64, 0) {}

    static EdgeSubset of(std::size_t num_edges, std::initializer_list<EdgeId> edges) {
        EdgeSubset s(num_edges);
        for (EdgeId e : edges) s.set(e);
        return s;
    }

    std::size_t size() const { return size_; }

    bool test(EdgeId e) const {
        return (words_[e >> 6] >> (e & 63)) & 1u;
    }

    void set(EdgeId e, bool value = true) {
        if (value)
            words_[e >> 6] |= std::uint64_t(1) << (e & 63);
        else
            words_[e >> 6] &= ~(std::uint64_t(1) << (e & 63));
    }

    std::size_t count() const;

    bool empty_set() const;
    bool is_full() const { return count() == size_; }

    EdgeSubset complemented() const;

    EdgeSubset operator^(const EdgeSubset& other) const;
    EdgeSubset operator|(const EdgeSubset& other) const;
    EdgeSubset operator&(const EdgeSubset& other) const;

    bool operator==(const EdgeSubset& other) const {
        return size_ == other.size_ && words_ == other.words_;
    }
    bool operator!=(const EdgeSubset& other) const { return !(*this == other); }

    /// Lexicographic on the indicator vector, lowest edge id first.
    bool operator<(const EdgeSubset& other) const;

    std::vector<EdgeId> to_vector() const;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace wham
