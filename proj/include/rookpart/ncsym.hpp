#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rookpart/errors.hpp"
#include "rookpart/partitions.hpp"
#include "rookpart/rooks.hpp"

namespace rookpart {

// Word over variable indices; order significant, variables do not commute.
using Monomial = std::vector<int>;

// Partition of positions by equal index value.
SetPartition type_partition(const Monomial& mono);

// Finitely supported integer combination of monomials in k noncommuting
// variables.  No zero coefficients stored; terms in lexicographic order.
class NcPolynomial {
public:
    explicit NcPolynomial(int k) : k_(k) {}

    int k() const { return k_; }
    const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
    void add(const Monomial& mono, std::int64_t coeff);
    bool is_zero() const { return terms_.empty(); }

    // Terms as "x1*x2*x1", constants as bare integers.
    std::string to_string() const;
    // {"k": k, "terms": [{"indices": [...], "coeff": c}, ...]}
    std::string to_json() const;

    bool operator==(const NcPolynomial&) const = default;

private:
    int k_;
    std::map<Monomial, std::int64_t> terms_;
};

// m_pi truncated to k variables: sum over monomials with type exactly pi.
NcPolynomial expand_m(const SetPartition& pi, int k);

// p_pi truncated to k variables: sum over monomials with type coarser-or-
// equal to pi.
NcPolynomial expand_p(const SetPartition& pi, int k);

// Concatenation product, extended bilinearly.
NcPolynomial multiply_nc(const NcPolynomial& f, const NcPolynomial& g);

// Relabels indices positionwise by g^{-1}; g given as the image sequence
// g[i-1] = g(i) on [k].
NcPolynomial permute_variables(const NcPolynomial& f, const std::vector<int>& g);

enum class Basis { p, m };

// Formal integer combination of set partitions tagged with a basis.
// Partitions of mixed sizes are allowed (the algebra is graded).
class NCSymElement {
public:
    explicit NCSymElement(Basis basis) : basis_(basis) {}
    static NCSymElement basis_element(Basis basis, const SetPartition& pi,
                                      std::int64_t coeff = 1);
    // The empty-partition p-basis term, identity for product_p.
    static NCSymElement one() { return basis_element(Basis::p, SetPartition()); }

    Basis basis() const { return basis_; }
    const std::map<SetPartition, std::int64_t>& terms() const { return terms_; }
    void add(const SetPartition& pi, std::int64_t coeff);

    std::string to_string() const;

    bool operator==(const NCSymElement&) const = default;

private:
    Basis basis_;
    std::map<SetPartition, std::int64_t> terms_;
};

// Bilinear extension of the slash product on p-basis indices.
NCSymElement product_p(const NCSymElement& u, const NCSymElement& v);

// Change of basis matrix for degree n, in the canonical order (decreasing
// block count, ties RGF-lex) that makes zeta unit upper-triangular.
struct BasisMatrix {
    int n;
    std::vector<SetPartition> order;
    std::vector<std::vector<std::int64_t>> entries;
};

// Entry (pi, sigma) = [sigma >= pi]; expresses p rows in m columns.
BasisMatrix zeta_matrix(int n);

// Exact integer inverse of zeta_matrix(n) by back-substitution.
BasisMatrix mu_matrix(int n);

// Degree-by-degree change of basis; p->m uses zeta rows, m->p uses mu rows.
NCSymElement to_basis(const NCSymElement& u, Basis target);

// p_pi -> R_pi extended linearly; requires the p tag.
RookAlgebraElement rook_image(const NCSymElement& u);

}  // namespace rookpart
