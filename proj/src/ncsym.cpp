#include "rookpart/ncsym.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace rookpart {

SetPartition type_partition(const Monomial& mono) {
    Rgf word(mono.size());
    std::vector<int> label_of_index;  // first-occurrence relabeling
    for (std::size_t pos = 0; pos < mono.size(); ++pos) {
        auto it = std::find(label_of_index.begin(), label_of_index.end(), mono[pos]);
        if (it == label_of_index.end()) {
            label_of_index.push_back(mono[pos]);
            word[pos] = static_cast<int>(label_of_index.size());
        } else {
            word[pos] = static_cast<int>(it - label_of_index.begin()) + 1;
        }
    }
    return SetPartition::from_rgf(word);
}

void NcPolynomial::add(const Monomial& mono, std::int64_t coeff) {
    if (coeff == 0) return;
    for (int idx : mono)
        if (idx < 1 || idx > k_)
            throw std::invalid_argument("variable index " + std::to_string(idx) +
                                        " outside [1," + std::to_string(k_) + "]");
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
    } else if ((it->second += coeff) == 0) {
        terms_.erase(it);
    }
}

std::string NcPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        if (first) {
            if (coeff < 0) out << "-";
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        std::int64_t mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1 || mono.empty()) out << mag;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (i > 0 || mag != 1) out << '*';
            out << 'x' << mono[i];
        }
        first = false;
    }
    return out.str();
}

std::string NcPolynomial::to_json() const {
    nlohmann::ordered_json j;
    j["k"] = k_;
    j["terms"] = nlohmann::json::array();
    for (const auto& [mono, coeff] : terms_) {
        nlohmann::ordered_json term;
        term["indices"] = mono;
        term["coeff"] = coeff;
        j["terms"].push_back(std::move(term));
    }
    return j.dump();
}

namespace {

// Applies each assignment of variable values to blocks, emitting the induced
// monomial.  Injective assignments give m_pi, arbitrary ones give p_pi.
template <bool Injective>
NcPolynomial expand(const SetPartition& pi, int k) {
    NcPolynomial out(k);
    int b = pi.block_count();
    Rgf word = pi.to_rgf();
    std::vector<int> value_of_block(b);
    std::vector<char> used(k + 1, 0);
    auto rec = [&](auto&& self, int block) -> void {
        if (block == b) {
            Monomial mono(pi.n());
            for (int pos = 0; pos < pi.n(); ++pos)
                mono[pos] = value_of_block[word[pos] - 1];
            out.add(mono, 1);
            return;
        }
        for (int v = 1; v <= k; ++v) {
            if (Injective && used[v]) continue;
            used[v] = 1;
            value_of_block[block] = v;
            self(self, block + 1);
            used[v] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

NcPolynomial expand_m(const SetPartition& pi, int k) { return expand<true>(pi, k); }

NcPolynomial expand_p(const SetPartition& pi, int k) { return expand<false>(pi, k); }

NcPolynomial multiply_nc(const NcPolynomial& f, const NcPolynomial& g) {
    if (f.k() != g.k())
        throw VariableCountMismatch("operands truncate to " + std::to_string(f.k()) +
                                    " and " + std::to_string(g.k()) + " variables");
    NcPolynomial out(f.k());
    for (const auto& [mf, cf] : f.terms()) {
        for (const auto& [mg, cg] : g.terms()) {
            Monomial mono = mf;
            mono.insert(mono.end(), mg.begin(), mg.end());
            out.add(mono, cf * cg);
        }
    }
    return out;
}

NcPolynomial permute_variables(const NcPolynomial& f, const std::vector<int>& g) {
    if (static_cast<int>(g.size()) != f.k())
        throw std::invalid_argument("permutation size differs from variable count");
    std::vector<int> inverse(f.k() + 1);
    for (int i = 1; i <= f.k(); ++i) inverse[g[i - 1]] = i;
    NcPolynomial out(f.k());
    for (const auto& [mono, coeff] : f.terms()) {
        Monomial image(mono.size());
        for (std::size_t pos = 0; pos < mono.size(); ++pos)
            image[pos] = inverse[mono[pos]];
        out.add(image, coeff);
    }
    return out;
}

NCSymElement NCSymElement::basis_element(Basis basis, const SetPartition& pi,
                                         std::int64_t coeff) {
    NCSymElement e(basis);
    e.add(pi, coeff);
    return e;
}

void NCSymElement::add(const SetPartition& pi, std::int64_t coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(pi);
    if (it == terms_.end()) {
        terms_.emplace(pi, coeff);
    } else if ((it->second += coeff) == 0) {
        terms_.erase(it);
    }
}

std::string NCSymElement::to_string() const {
    if (terms_.empty()) return "0";
    const char* tag = basis_ == Basis::p ? "p" : "m";
    std::ostringstream out;
    bool first = true;
    for (const auto& [pi, coeff] : terms_) {
        if (first) {
            if (coeff < 0) out << "-";
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        std::int64_t mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1) out << mag << "*";
        out << tag << "[" << pi.to_string() << "]";
        first = false;
    }
    return out.str();
}

NCSymElement product_p(const NCSymElement& u, const NCSymElement& v) {
    if (u.basis() != Basis::p || v.basis() != Basis::p)
        throw BasisMismatch("product_p requires both operands in the p basis");
    NCSymElement out(Basis::p);
    for (const auto& [pi, a] : u.terms())
        for (const auto& [sigma, b] : v.terms()) out.add(slash(pi, sigma), a * b);
    return out;
}

namespace {

std::vector<SetPartition> canonical_order(int n) {
    std::vector<SetPartition> order = enumerate_partitions(n);
    // Decreasing block count, ties RGF-lex; enumeration is already RGF-lex,
    // and stable_sort keeps it inside each block-count class.
    std::stable_sort(order.begin(), order.end(),
                     [](const SetPartition& a, const SetPartition& b) {
                         return a.block_count() > b.block_count();
                     });
    return order;
}

}  // namespace

BasisMatrix zeta_matrix(int n) {
    BasisMatrix zeta;
    zeta.n = n;
    zeta.order = canonical_order(n);
    std::size_t size = zeta.order.size();
    zeta.entries.assign(size, std::vector<std::int64_t>(size, 0));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            if (coarser_eq(zeta.order[j], zeta.order[i])) zeta.entries[i][j] = 1;
    return zeta;
}

BasisMatrix mu_matrix(int n) {
    BasisMatrix zeta = zeta_matrix(n);
    std::size_t size = zeta.order.size();
    BasisMatrix mu;
    mu.n = n;
    mu.order = zeta.order;
    mu.entries.assign(size, std::vector<std::int64_t>(size, 0));
    // Back-substitution on the unit upper-triangular system, row by row.
    for (std::size_t i = 0; i < size; ++i) {
        mu.entries[i][i] = 1;
        for (std::size_t j = i + 1; j < size; ++j) {
            std::int64_t acc = 0;
            for (std::size_t l = i; l < j; ++l)
                acc += mu.entries[i][l] * zeta.entries[l][j];
            mu.entries[i][j] = -acc;
        }
    }
    return mu;
}

NCSymElement to_basis(const NCSymElement& u, Basis target) {
    if (u.basis() == target) return u;
    NCSymElement out(target);
    std::map<int, BasisMatrix> cache;
    for (const auto& [pi, coeff] : u.terms()) {
        auto it = cache.find(pi.n());
        if (it == cache.end()) {
            BasisMatrix matrix =
                target == Basis::m ? zeta_matrix(pi.n()) : mu_matrix(pi.n());
            it = cache.emplace(pi.n(), std::move(matrix)).first;
        }
        const BasisMatrix& matrix = it->second;
        std::size_t row =
            std::find(matrix.order.begin(), matrix.order.end(), pi) - matrix.order.begin();
        for (std::size_t j = 0; j < matrix.order.size(); ++j)
            out.add(matrix.order[j], coeff * matrix.entries[row][j]);
    }
    return out;
}

RookAlgebraElement rook_image(const NCSymElement& u) {
    if (u.basis() != Basis::p)
        throw BasisMismatch("rook_image is defined on the p basis");
    RookAlgebraElement out;
    for (const auto& [pi, coeff] : u.terms()) out.add(partition_to_rook(pi), coeff);
    return out;
}

}  // namespace rookpart
