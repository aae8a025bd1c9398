#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rookpart {

// Outcome of one exhaustive suite.  Failures carry reproducible
// counterexamples in canonical text form, capped at 100.
struct VerificationReport {
    std::string suite;
    int n_lo = 0;
    int n_hi = 0;
    std::int64_t checked = 0;
    std::vector<std::string> failures;
    std::int64_t elapsed_ms = 0;

    bool passed() const { return failures.empty(); }
    std::string to_json() const;
};

struct CountRow {
    int n;
    std::int64_t bell;
    std::int64_t atomic;
    std::int64_t extendable;
    std::int64_t unsplitable;
};

struct CountTable {
    std::vector<CountRow> rows;
    std::string to_json() const;
    std::string to_text() const;
};

// E_n = A_n: extendability of R_pi vs atomicity of pi over all nontrivial
// pi in Pi_n, n <= max_n; cross-checked against the brute-force oracle on
// small boards.
VerificationReport verify_theorem1(int max_n);

// Every rook on T_n with a one at (1, n) is extendable, n <= max_board.
VerificationReport verify_corollary(int max_board);

// Exact counts by exhaustive predicate evaluation; atomic = extendable =
// unsplitable on every row.
CountTable count_table(int max_n);

// p_{pi|sigma} = p_pi p_sigma as truncated polynomials, all size sums up to
// max_total_degree at k = size sum.
VerificationReport verify_eq2(int max_total_degree);

// rook_image intertwines product_p with rook_product on all basis pairs of
// total size <= max_size, and is injective on bases per degree.
VerificationReport verify_isomorphism(int max_size);

// Unique atomic and unique unsplitable factorizations for every nontrivial
// pi in Pi_n, n <= max_n, confirmed by exhaustive cut-subset search.
VerificationReport verify_free_factorization(int max_n);

}  // namespace rookpart
