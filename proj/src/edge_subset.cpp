#include "wham/edge_subset.hpp"

#include <bit>

namespace wham {

std::size_t EdgeSubset::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool EdgeSubset::empty_set() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

EdgeSubset EdgeSubset::complemented() const {
    EdgeSubset out(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    // clear bits past the end
    if (size_ % 64 != 0 && !out.words_.empty())
        out.words_.back() &= (std::uint64_t(1) << (size_ % 64)) - 1;
    return out;
}

EdgeSubset EdgeSubset::operator^(const EdgeSubset& other) const {
    EdgeSubset out(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] ^ other.words_[i];
    return out;
}

EdgeSubset EdgeSubset::operator|(const EdgeSubset& other) const {
    EdgeSubset out(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | other.words_[i];
    return out;
}

EdgeSubset EdgeSubset::operator&(const EdgeSubset& other) const {
    EdgeSubset out(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
    return out;
}

bool EdgeSubset::operator<(const EdgeSubset& other) const {
    if (size_ != other.size_) return size_ < other.size_;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t diff = words_[i] ^ other.words_[i];
        if (diff) {
            // lowest differing edge decides; the side without it is smaller
            std::uint64_t lowest = diff & (~diff + 1);
            return (words_[i] & lowest) == 0;
        }
    }
    return false;
}

std::vector<EdgeId> EdgeSubset::to_vector() const {
    std::vector<EdgeId> out;
    out.reserve(count());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            unsigned bit = std::countr_zero(w);
            out.push_back(static_cast<EdgeId>(i * 64 + bit));
            w &= w - 1;
        }
    }
    return out;
}

} // namespace wham
