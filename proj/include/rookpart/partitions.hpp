#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rookpart/errors.hpp"

namespace rookpart {

// Restricted growth function word: a_1 = 1 and a_i <= 1 + max of the prefix.
using Rgf = std::vector<int>;

bool is_valid_rgf(const Rgf& word);

// A set partition of [n] kept in standard form: blocks ordered by increasing
// minima, elements increasing within each block.  n = 0 is the trivial
// partition with no blocks.  Immutable after construction.
class SetPartition {
public:
    SetPartition() = default;  // trivial partition

    // Standardizes raw blocks; rejects overlaps and gaps.
    static SetPartition normalize(std::vector<std::vector<int>> raw_blocks);
    static SetPartition from_rgf(const Rgf& word);

    // Accepts digit shorthand ("136|2459|78", n <= 9), comma form
    // ("1,3,6|2,4,5,9|7,8"), or "()" for the trivial partition.
    static SetPartition parse(const std::string& text);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    bool trivial() const { return n_ == 0; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    Rgf to_rgf() const;

    // Blocks translated by +m (the raw block set of pi+m, not a SetPartition).
    std::vector<std::vector<int>> shift(int m) const;

    // Digit shorthand for n <= 9, comma form otherwise, "()" when trivial.
    std::string to_string() const;

    bool operator==(const SetPartition&) const = default;
    std::strong_ordering operator<=>(const SetPartition& other) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

// All of Pi_n in RGF-lexicographic order; size is the n-th Bell number.
std::vector<SetPartition> enumerate_partitions(int n);

// pi|sigma: blocks of pi followed by the blocks of sigma shifted by |pi|.
SetPartition slash(const SetPartition& pi, const SetPartition& sigma);

// pi∘sigma: the partition whose RGF is the concatenation of the operands'.
SetPartition split(const SetPartition& pi, const SetPartition& sigma);

// Positions m, 1 <= m < n, where the partition separates as a slash product
// of a partition of [m] and one of [n-m].  Ascending.
std::vector<int> slash_cuts(const SetPartition& pi);

// Positions m where the RGF suffix a_{m+1}..a_n is itself a valid RGF.
std::vector<int> split_cuts(const SetPartition& pi);

// Nontrivial and admitting no slash (resp. split) decomposition.  The
// trivial partition is neither, by convention.
bool is_atomic(const SetPartition& pi);
bool is_unsplitable(const SetPartition& pi);

// Unique factorization into atomic (resp. unsplitable) factors, leftmost
// cuts first.  Rejects the trivial partition.
std::vector<SetPartition> atomic_factor(const SetPartition& pi);
std::vector<SetPartition> unsplitable_factor(const SetPartition& pi);

// Refinement order: true iff every block of pi lies inside a block of sigma.
bool coarser_eq(const SetPartition& sigma, const SetPartition& pi);

}  // namespace rookpart
