#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rookpart/errors.hpp"
#include "rookpart/partitions.hpp"

namespace rookpart {

struct Cell {
    int row;
    int col;
    auto operator<=>(const Cell&) const = default;
};

// A rook placement on the upper-triangular board T_board, stored sparsely.
// board = -1 is the unit rook (no cells); board = 0 is the empty rook on T_0.
class RookPlacement {
public:
    RookPlacement() = default;  // unit rook
    RookPlacement(int board, std::vector<Cell> ones);

    static RookPlacement unit() { return RookPlacement(); }

    int board() const { return board_; }
    bool is_unit() const { return board_ == -1; }
    const std::vector<Cell>& ones() const { return ones_; }

    // Canonical interchange form: {"board": n, "ones": [[i,j],...]}, cells
    // sorted lexicographically.
    std::string to_json() const;
    static RookPlacement from_json(const std::string& text);

    // Rows top to bottom, '1'/'.' cells, board x board.
    std::string to_grid() const;

    bool operator==(const RookPlacement&) const = default;
    auto operator<=>(const RookPlacement&) const = default;

private:
    int board_ = -1;
    std::vector<Cell> ones_;
};

struct PermutationMatrix {
    // column_of[i-1] is the column of the one in row i.
    std::vector<int> column_of;
    bool operator==(const PermutationMatrix&) const = default;
};

// (R_pi)_{i,j} = 1 exactly when i and j+1 are adjacent in a block of pi.
RookPlacement partition_to_rook(const SetPartition& pi);

// Inverse of partition_to_rook; the unit rook maps to the trivial partition.
SetPartition rook_to_partition(const RookPlacement& rook);

// Extended direct sum R ⊕ (0) ⊕ S; the unit rook is a two-sided identity.
RookPlacement edsum(const RookPlacement& lhs, const RookPlacement& rhs);

// All m such that R = edsum(R', R'') with R' on a board of size m-1.
// Empty exactly when rook_to_partition(R) is atomic.
std::vector<int> slash_decompositions(const RookPlacement& rook);

// Linear-time criterion from the extension construction: with zero rows
// i_1<...<i_r and zero columns j_1<...<j_r, extendable iff i_k > j_k for
// every k.  Rejects the unit rook.
bool is_extendable(const RookPlacement& rook);

// Completes R to a permutation matrix by pairing zero rows with zero columns
// in increasing order.  Throws NotExtendable with the violating pair.
PermutationMatrix extend(const RookPlacement& rook);

// Exhaustive oracle over all board! permutation matrices; board <= 8.
bool is_extendable_bruteforce(const RookPlacement& rook);

// Every rook placement R ⊆ T_board.
std::vector<RookPlacement> enumerate_rooks(int board);

// Formal integer combinations of rooks; no zero coefficients stored.
class RookAlgebraElement {
public:
    RookAlgebraElement() = default;  // zero
    static RookAlgebraElement basis(const RookPlacement& rook, std::int64_t coeff = 1);
    static RookAlgebraElement one() { return basis(RookPlacement::unit()); }

    const std::map<RookPlacement, std::int64_t>& terms() const { return terms_; }
    void add(const RookPlacement& rook, std::int64_t coeff);

    bool operator==(const RookAlgebraElement&) const = default;

private:
    std::map<RookPlacement, std::int64_t> terms_;
};

// Bilinear extension of edsum; the unit rook term is the identity.
RookAlgebraElement rook_product(const RookAlgebraElement& u, const RookAlgebraElement& v);

}  // namespace rookpart
