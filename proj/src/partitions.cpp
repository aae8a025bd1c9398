#include "rookpart/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rookpart {

bool is_valid_rgf(const Rgf& word) {
    int running_max = 0;
    for (int a : word) {
        if (a < 1 || a > running_max + 1) return false;
        running_max = std::max(running_max, a);
    }
    return true;
}

SetPartition SetPartition::normalize(std::vector<std::vector<int>> raw_blocks) {
    std::erase_if(raw_blocks, [](const std::vector<int>& b) { return b.empty(); });
    int n = 0;
    for (auto& block : raw_blocks) {
        std::sort(block.begin(), block.end());
        n += static_cast<int>(block.size());
    }
    std::sort(raw_blocks.begin(), raw_blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<char> seen(n + 1, 0);
    for (const auto& block : raw_blocks) {
        for (int e : block) {
            if (e < 1 || e > n)
                throw GapError("element " + std::to_string(e) + " outside [1," +
                               std::to_string(n) + "]");
            if (seen[e])
                throw OverlapError("element " + std::to_string(e) + " appears in two blocks");
            seen[e] = 1;
        }
    }
    // Disjoint, in range, and total size n: the union is exactly [n].
    SetPartition pi;
    pi.n_ = n;
    pi.blocks_ = std::move(raw_blocks);
    return pi;
}

SetPartition SetPartition::from_rgf(const Rgf& word) {
    if (!is_valid_rgf(word)) throw InvalidRgf("word violates the growth conditions");
    int block_count = word.empty() ? 0 : *std::max_element(word.begin(), word.end());
    SetPartition pi;
    pi.n_ = static_cast<int>(word.size());
    pi.blocks_.resize(block_count);
    for (int i = 0; i < pi.n_; ++i) pi.blocks_[word[i] - 1].push_back(i + 1);
    return pi;
}

Rgf SetPartition::to_rgf() const {
    Rgf word(n_);
    for (int j = 0; j < block_count(); ++j)
        for (int e : blocks_[j]) word[e - 1] = j + 1;
    return word;
}

std::vector<std::vector<int>> SetPartition::shift(int m) const {
    std::vector<std::vector<int>> shifted = blocks_;
    for (auto& block : shifted)
        for (int& e : block) e += m;
    return shifted;
}

std::string SetPartition::to_string() const {
    if (trivial()) return "()";
    std::ostringstream out;
    bool digits = n_ <= 9;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b > 0) out << '|';
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i > 0 && !digits) out << ',';
            out << blocks_[b][i];
        }
    }
    return out.str();
}

SetPartition SetPartition::parse(const std::string& text) {
    if (text == "()") return SetPartition();
    if (text.empty()) throw ParseError("empty partition literal", 0);
    bool comma_form = text.find(',') != std::string::npos;
    std::vector<std::vector<int>> blocks(1);
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (c == '|') {
            if (blocks.back().empty()) throw ParseError("empty block", pos);
            blocks.emplace_back();
            ++pos;
        } else if (c == ',') {
            ++pos;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (comma_form) {
                std::size_t end = pos;
                while (end < text.size() &&
                       std::isdigit(static_cast<unsigned char>(text[end])))
                    ++end;
                blocks.back().push_back(std::stoi(text.substr(pos, end - pos)));
                pos = end;
            } else {
                if (c == '0') throw ParseError("element 0 is not allowed", pos);
                blocks.back().push_back(c - '0');
                ++pos;
            }
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
    }
    if (blocks.back().empty()) throw ParseError("empty block", text.size() - 1);
    try {
        return normalize(std::move(blocks));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

std::strong_ordering SetPartition::operator<=>(const SetPartition& other) const {
    if (auto cmp = n_ <=> other.n_; cmp != 0) return cmp;
    return to_rgf() <=> other.to_rgf();
}

std::vector<SetPartition> enumerate_partitions(int n) {
    std::vector<SetPartition> out;
    Rgf word(n);
    // Depth-first over positions yields RGF-lexicographic order.
    auto rec = [&](auto&& self, int pos, int running_max) -> void {
        if (pos == n) {
            out.push_back(SetPartition::from_rgf(word));
            return;
        }
        for (int a = 1; a <= running_max + 1; ++a) {
            word[pos] = a;
            self(self, pos + 1, std::max(running_max, a));
        }
    };
    rec(rec, 0, 0);
    return out;
}

SetPartition slash(const SetPartition& pi, const SetPartition& sigma) {
    std::vector<std::vector<int>> blocks = pi.blocks();
    auto shifted = sigma.shift(pi.n());
    blocks.insert(blocks.end(), shifted.begin(), shifted.end());
    return SetPartition::normalize(std::move(blocks));
}

SetPartition split(const SetPartition& pi, const SetPartition& sigma) {
    Rgf word = pi.to_rgf();
    Rgf tail = sigma.to_rgf();
    word.insert(word.end(), tail.begin(), tail.end());
    return SetPartition::from_rgf(word);
}

std::vector<int> slash_cuts(const SetPartition& pi) {
    std::vector<int> cuts;
    for (int m = 1; m < pi.n(); ++m) {
        bool separates = true;
        for (const auto& block : pi.blocks()) {
            if (block.front() <= m && block.back() > m) {
                separates = false;
                break;
            }
        }
        if (separates) cuts.push_back(m);
    }
    return cuts;
}

std::vector<int> split_cuts(const SetPartition& pi) {
    Rgf word = pi.to_rgf();
    std::vector<int> cuts;
    for (int m = 1; m < pi.n(); ++m) {
        if (is_valid_rgf(Rgf(word.begin() + m, word.end()))) cuts.push_back(m);
    }
    return cuts;
}

bool is_atomic(const SetPartition& pi) {
    return !pi.trivial() && slash_cuts(pi).empty();
}

bool is_unsplitable(const SetPartition& pi) {
    return !pi.trivial() && split_cuts(pi).empty();
}

namespace {

// Restrict blocks to the interval (lo, hi] and re-anchor at 1.
SetPartition slash_segment(const SetPartition& pi, int lo, int hi) {
    std::vector<std::vector<int>> blocks;
    for (const auto& block : pi.blocks()) {
        if (block.front() > lo && block.back() <= hi) {
            std::vector<int> shifted;
            for (int e : block) shifted.push_back(e - lo);
            blocks.push_back(std::move(shifted));
        }
    }
    return SetPartition::normalize(std::move(blocks));
}

}  // namespace

std::vector<SetPartition> atomic_factor(const SetPartition& pi) {
    if (pi.trivial()) throw TrivialInput("trivial partition has no atomic factorization");
    std::vector<int> cuts = slash_cuts(pi);
    cuts.push_back(pi.n());
    std::vector<SetPartition> factors;
    int lo = 0;
    for (int hi : cuts) {
        factors.push_back(slash_segment(pi, lo, hi));
        lo = hi;
    }
    return factors;
}

std::vector<SetPartition> unsplitable_factor(const SetPartition& pi) {
    if (pi.trivial())
        throw TrivialInput("trivial partition has no unsplitable factorization");
    Rgf word = pi.to_rgf();
    std::vector<int> cuts = split_cuts(pi);
    cuts.push_back(pi.n());
    std::vector<SetPartition> factors;
    int lo = 0;
    for (int hi : cuts) {
        factors.push_back(SetPartition::from_rgf(Rgf(word.begin() + lo, word.begin() + hi)));
        lo = hi;
    }
    return factors;
}

bool coarser_eq(const SetPartition& sigma, const SetPartition& pi) {
    if (sigma.n() != pi.n())
        throw SizeMismatch("partitions of [" + std::to_string(sigma.n()) + "] and [" +
                           std::to_string(pi.n()) + "] are incomparable");
    Rgf sigma_word = sigma.to_rgf();
    for (const auto& block : pi.blocks()) {
        int target = sigma_word[block.front() - 1];
        for (int e : block)
            if (sigma_word[e - 1] != target) return false;
    }
    return true;
}

}  // namespace rookpart
