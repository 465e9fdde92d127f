#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hgiant/errors.hpp"

namespace hgiant {

// Exact binomial coefficient in 64 bits; throws CapacityError instead of wrapping.
// Returns 0 when b > a.
std::uint64_t binom_checked(std::uint64_t a, std::uint64_t b);

// Dense cache of binom(a, b) for a <= n_max, b <= k_max, built by the Pascal
// identity with checked additions. Entries past the 64-bit range are stored as
// a sentinel and reading one throws CapacityError.
class BinomialTable {
public:
    BinomialTable(std::uint64_t n_max, std::uint32_t k_max);

    std::uint64_t operator()(std::uint64_t a, std::uint64_t b) const;

    std::uint64_t n_max() const { return n_max_; }
    std::uint32_t k_max() const { return k_max_; }

    static constexpr std::uint64_t kOverflow = UINT64_MAX;

private:
    std::uint64_t n_max_;
    std::uint32_t k_max_;
    std::vector<std::uint64_t> cells_; // (n_max+1) x (k_max+1), row-major
};

// Colexicographic rank of a strictly increasing r-subset of {0,...,n-1}:
//   rank(a_1 < ... < a_r) = sum_i binom(a_i, i)   (i = 1..r).
// This is the one canonical ordering used for every vertex subset in the
// project. Throws InvalidInputError on unsorted or duplicate input.
std::uint64_t colex_rank(std::span<const std::uint32_t> set, const BinomialTable& bt);

// Inverse of colex_rank; writes the subset (ascending) into `out` (size r).
void colex_unrank(std::uint64_t rank, std::uint32_t r, const BinomialTable& bt,
                  std::span<std::uint32_t> out);

// Advances `set` to its colex successor among r-subsets of {0,...,n-1}.
// Returns false (set untouched) when `set` is already the last one.
bool colex_next(std::span<std::uint32_t> set, std::uint32_t n);

// All r-subsets of {0,...,k-1} in colex order, as index patterns. Used to
// enumerate the j-sub-sets of a k-set without re-deriving combinations.
std::vector<std::vector<std::uint32_t>> subset_index_patterns(std::uint32_t k, std::uint32_t r);

// Stream of the binom(n-j, k-j) k-sets containing a fixed j-set J, emitted in
// colex order of the complement (k-j)-set. Because J is shared, this coincides
// with global colex order restricted to supersets of J, which is what the
// exploration algorithms need for "smallest unqueried edge containing x".
// Supports O(r log n) skip-ahead by unranking the complement.
class SupersetStream {
public:
    SupersetStream(std::span<const std::uint32_t> jset, std::uint64_t n, std::uint32_t k,
                   const BinomialTable& bt);

    std::uint64_t size() const { return size_; }
    // Index of the next element to be emitted, in [0, size()].
    std::uint64_t position() const { return pos_; }
    std::uint64_t remaining() const { return size_ - pos_; }

    // Emits the next k-set (ascending vertices) into `out`; false if exhausted.
    bool next(std::span<std::uint32_t> out);

    // Skips g elements without emitting them.
    void skip(std::uint64_t g);

private:
    void emit(std::span<std::uint32_t> out) const;
    std::uint32_t ground(std::uint32_t idx) const; // idx-th element of {0..n-1} \ J

    const BinomialTable* bt_;
    std::vector<std::uint32_t> jset_;
    std::uint64_t n_;
    std::uint32_t k_;
    std::uint64_t size_;
    std::uint64_t pos_ = 0;
    std::vector<std::uint32_t> comb_; // complement combination over {0..n-j-1}
    bool comb_valid_ = false;         // comb_ matches pos_ (invalidated by skip)
};

} // namespace hgiant
