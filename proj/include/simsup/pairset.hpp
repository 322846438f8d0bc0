#ifndef SIMSUP_PAIRSET_HPP
#define SIMSUP_PAIRSET_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace simsup {

/// A subset Z of Q x X, the lattice element the synthesis operators
/// transform. The universe is positional: row q ranges over the spec's
/// canonical state order, column x over the plant's.
class StatePairSet {
public:
    StatePairSet() = default;
    StatePairSet(int num_spec, int num_plant)
        : nq_(num_spec), nx_(num_plant), bits_(word_count(num_spec, num_plant), 0) {}

    static StatePairSet full(int num_spec, int num_plant);

    int num_spec() const { return nq_; }
    int num_plant() const { return nx_; }
    bool same_universe(const StatePairSet& o) const { return nq_ == o.nq_ && nx_ == o.nx_; }

    bool contains(int q, int x) const {
        if (q < 0 || x < 0) return false;
        std::size_t i = index(q, x);
        return (bits_[i >> 6] >> (i & 63)) & 1u;
    }
    void insert(int q, int x) {
        std::size_t i = index(q, x);
        bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void erase(int q, int x) {
        std::size_t i = index(q, x);
        bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void remove_spec_row(int q) {
        for (int x = 0; x < nx_; ++x) erase(q, x);
    }

    std::size_t size() const;
    bool empty() const { return size() == 0; }
    bool row_nonempty(int q) const;
    /// Sorted spec states with at least one pair present (the Q-projection).
    std::vector<int> spec_projection() const;
    std::vector<std::pair<int, int>> pairs() const;

    StatePairSet intersect(const StatePairSet& o) const;
    bool subset_of(const StatePairSet& o) const;

    bool operator==(const StatePairSet&) const = default;

private:
    static std::size_t word_count(int nq, int nx) {
        return (static_cast<std::size_t>(nq) * static_cast<std::size_t>(nx) + 63) / 64;
    }
    std::size_t index(int q, int x) const {
        return static_cast<std::size_t>(q) * static_cast<std::size_t>(nx_) + static_cast<std::size_t>(x);
    }

    int nq_ = 0;
    int nx_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace simsup

#endif  // SIMSUP_PAIRSET_HPP
