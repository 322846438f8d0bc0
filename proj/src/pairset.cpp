#include "simsup/pairset.hpp"

#include <bit>
#include <stdexcept>

namespace simsup {

StatePairSet StatePairSet::full(int num_spec, int num_plant) {
    StatePairSet z(num_spec, num_plant);
    for (int q = 0; q < num_spec; ++q)
        for (int x = 0; x < num_plant; ++x) z.insert(q, x);
    return z;
}

std::size_t StatePairSet::size() const {
    std::size_t n = 0;
    for (std::uint64_t w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool StatePairSet::row_nonempty(int q) const {
    for (int x = 0; x < nx_; ++x)
        if (contains(q, x)) return true;
    return false;
}

std::vector<int> StatePairSet::spec_projection() const {
    std::vector<int> out;
    for (int q = 0; q < nq_; ++q)
        if (row_nonempty(q)) out.push_back(q);
    return out;
}

std::vector<std::pair<int, int>> StatePairSet::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int q = 0; q < nq_; ++q)
        for (int x = 0; x < nx_; ++x)
            if (contains(q, x)) out.emplace_back(q, x);
    return out;
}

StatePairSet StatePairSet::intersect(const StatePairSet& o) const {
    if (!same_universe(o)) throw std::invalid_argument("pair set universe mismatch");
    StatePairSet out = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] &= o.bits_[i];
    return out;
}

bool StatePairSet::subset_of(const StatePairSet& o) const {
    if (!same_universe(o)) throw std::invalid_argument("pair set universe mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~o.bits_[i]) return false;
    return true;
}

}  // namespace simsup
