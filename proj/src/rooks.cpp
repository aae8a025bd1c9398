#include "rookpart/rooks.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace rookpart {

RookPlacement::RookPlacement(int board, std::vector<Cell> ones)
    : board_(board), ones_(std::move(ones)) {
    if (board_ < -1) throw std::invalid_argument("board size below -1");
    if (board_ == -1 && !ones_.empty())
        throw std::invalid_argument("unit rook admits no cells");
    std::sort(ones_.begin(), ones_.end());
    std::vector<char> row_used(board_ + 1, 0), col_used(board_ + 1, 0);
    for (const Cell& c : ones_) {
        if (c.row < 1 || c.col < c.row || c.col > board_)
            throw std::invalid_argument("cell (" + std::to_string(c.row) + "," +
                                        std::to_string(c.col) + ") outside T_" +
                                        std::to_string(board_));
        if (row_used[c.row] || col_used[c.col])
            throw std::invalid_argument("two rooks share a row or column");
        row_used[c.row] = col_used[c.col] = 1;
    }
}

std::string RookPlacement::to_json() const {
    nlohmann::ordered_json j;
    j["board"] = board_;
    j["ones"] = nlohmann::json::array();
    for (const Cell& c : ones_) j["ones"].push_back({c.row, c.col});
    return j.dump();
}

RookPlacement RookPlacement::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int board = j.at("board").get<int>();
    std::vector<Cell> ones;
    for (const auto& pair : j.at("ones"))
        ones.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
    return RookPlacement(board, std::move(ones));
}

std::string RookPlacement::to_grid() const {
    std::ostringstream out;
    for (int i = 1; i <= board_; ++i) {
        for (int j = 1; j <= board_; ++j) {
            bool one = std::binary_search(ones_.begin(), ones_.end(), Cell{i, j});
            out << (one ? '1' : '.');
        }
        out << '\n';
    }
    return out.str();
}

RookPlacement partition_to_rook(const SetPartition& pi) {
    if (pi.trivial()) return RookPlacement::unit();
    std::vector<Cell> ones;
    for (const auto& block : pi.blocks())
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
            ones.push_back({block[i], block[i + 1] - 1});
    return RookPlacement(pi.n() - 1, std::move(ones));
}

SetPartition rook_to_partition(const RookPlacement& rook) {
    if (rook.is_unit()) return SetPartition();
    int n = rook.board() + 1;
    // Union-find over [n] by the adjacency i ~ j+1 for each one at (i, j).
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Cell& c : rook.ones()) parent[find(c.col + 1)] = find(c.row);
    std::vector<std::vector<int>> groups(n + 1);
    for (int e = 1; e <= n; ++e) groups[find(e)].push_back(e);
    std::vector<std::vector<int>> blocks;
    for (auto& g : groups)
        if (!g.empty()) blocks.push_back(std::move(g));
    return SetPartition::normalize(std::move(blocks));
}

RookPlacement edsum(const RookPlacement& lhs, const RookPlacement& rhs) {
    if (lhs.is_unit()) return rhs;
    if (rhs.is_unit()) return lhs;
    int offset = lhs.board() + 1;
    std::vector<Cell> ones = lhs.ones();
    for (const Cell& c : rhs.ones()) ones.push_back({c.row + offset, c.col + offset});
    return RookPlacement(lhs.board() + rhs.board() + 1, std::move(ones));
}

std::vector<int> slash_decompositions(const RookPlacement& rook) {
    if (rook.is_unit()) throw UnitRookError("unit rook has no board to cut");
    return slash_cuts(rook_to_partition(rook));
}

namespace {

// Ascending indices of zero rows and zero columns within the board.
std::pair<std::vector<int>, std::vector<int>> zero_lines(const RookPlacement& rook) {
    int n = rook.board();
    std::vector<char> row_used(n + 1, 0), col_used(n + 1, 0);
    for (const Cell& c : rook.ones()) row_used[c.row] = col_used[c.col] = 1;
    std::vector<int> rows, cols;
    for (int i = 1; i <= n; ++i) {
        if (!row_used[i]) rows.push_back(i);
        if (!col_used[i]) cols.push_back(i);
    }
    // One 1 per used row and column, so the counts agree.
    if (rows.size() != cols.size())
        throw std::logic_error("zero row/column count mismatch");
    return {std::move(rows), std::move(cols)};
}

}  // namespace

bool is_extendable(const RookPlacement& rook) {
    if (rook.is_unit())
        throw UnitRookError("extendability is undefined for the unit rook");
    auto [rows, cols] = zero_lines(rook);
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (rows[k] <= cols[k]) return false;
    return true;
}

PermutationMatrix extend(const RookPlacement& rook) {
    if (rook.is_unit())
        throw UnitRookError("extendability is undefined for the unit rook");
    auto [rows, cols] = zero_lines(rook);
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (rows[k] <= cols[k]) throw NotExtendable(rows[k], cols[k]);
    PermutationMatrix p;
    p.column_of.resize(rook.board());
    for (const Cell& c : rook.ones()) p.column_of[c.row - 1] = c.col;
    for (std::size_t k = 0; k < rows.size(); ++k) p.column_of[rows[k] - 1] = cols[k];
    return p;
}

bool is_extendable_bruteforce(const RookPlacement& rook) {
    if (rook.is_unit())
        throw UnitRookError("extendability is undefined for the unit rook");
    int n = rook.board();
    if (n > 8) throw BoardTooLarge("factorial search capped at board 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool agrees = true;
        for (int i = 1; i <= n && agrees; ++i) {
            for (int j = i; j <= n && agrees; ++j) {
                bool p_one = perm[i - 1] == j;
                bool r_one = std::binary_search(rook.ones().begin(), rook.ones().end(),
                                                Cell{i, j});
                if (p_one != r_one) agrees = false;
            }
        }
        if (agrees) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<RookPlacement> enumerate_rooks(int board) {
    std::vector<RookPlacement> out;
    std::vector<Cell> ones;
    std::vector<char> col_used(board + 1, 0);
    auto rec = [&](auto&& self, int row) -> void {
        if (row > board) {
            out.emplace_back(board, ones);
            return;
        }
        self(self, row + 1);  // row left empty
        for (int j = row; j <= board; ++j) {
            if (col_used[j]) continue;
            col_used[j] = 1;
            ones.push_back({row, j});
            self(self, row + 1);
            ones.pop_back();
            col_used[j] = 0;
        }
    };
    rec(rec, 1);
    return out;
}

RookAlgebraElement RookAlgebraElement::basis(const RookPlacement& rook,
                                             std::int64_t coeff) {
    RookAlgebraElement e;
    e.add(rook, coeff);
    return e;
}

void RookAlgebraElement::add(const RookPlacement& rook, std::int64_t coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(rook);
    if (it == terms_.end()) {
        terms_.emplace(rook, coeff);
    } else if ((it->second += coeff) == 0) {
        terms_.erase(it);
    }
}

RookAlgebraElement rook_product(const RookAlgebraElement& u, const RookAlgebraElement& v) {
    RookAlgebraElement out;
    for (const auto& [r, a] : u.terms())
        for (const auto& [s, b] : v.terms()) out.add(edsum(r, s), a * b);
    return out;
}

}  // namespace rookpart
