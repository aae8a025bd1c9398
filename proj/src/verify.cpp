#include "rookpart/verify.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"
#include "rookpart/ncsym.hpp"
#include "rookpart/partitions.hpp"
#include "rookpart/rooks.hpp"

namespace rookpart {

namespace {

constexpr std::size_t kFailureCap = 100;

class SuiteRun {
public:
    SuiteRun(std::string name, int lo, int hi)
        : start_(std::chrono::steady_clock::now()) {
        report_.suite = std::move(name);
        report_.n_lo = lo;
        report_.n_hi = hi;
    }

    void check(bool ok, const std::string& counterexample) {
        ++report_.checked;
        if (!ok && report_.failures.size() < kFailureCap)
            report_.failures.push_back(counterexample);
    }

    VerificationReport finish() {
        auto elapsed = std::chrono::steady_clock::now() - start_;
        report_.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        return std::move(report_);
    }

private:
    VerificationReport report_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["n_range"] = {n_lo, n_hi};
    j["checked"] = checked;
    j["failures"] = failures;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

std::string CountTable::to_json() const {
    nlohmann::ordered_json j = nlohmann::json::array();
    for (const CountRow& row : rows) {
        nlohmann::ordered_json r;
        r["n"] = row.n;
        r["bell"] = row.bell;
        r["atomic"] = row.atomic;
        r["extendable"] = row.extendable;
        r["unsplitable"] = row.unsplitable;
        j.push_back(std::move(r));
    }
    return j.dump();
}

std::string CountTable::to_text() const {
    std::ostringstream out;
    out << "n\tbell\tatomic\textendable\tunsplitable\n";
    for (const CountRow& row : rows)
        out << row.n << '\t' << row.bell << '\t' << row.atomic << '\t'
            << row.extendable << '\t' << row.unsplitable << '\n';
    return out.str();
}

VerificationReport verify_theorem1(int max_n) {
    // n = 0 excluded: the trivial partition is neither atomic nor extendable
    // by convention.
    SuiteRun run("theorem1", 1, max_n);
    for (int n = 1; n <= max_n; ++n) {
        for (const SetPartition& pi : enumerate_partitions(n)) {
            RookPlacement rook = partition_to_rook(pi);
            bool extendable = is_extendable(rook);
            run.check(extendable == is_atomic(pi),
                      "criterion/atomic mismatch at " + pi.to_string());
            if (rook.board() <= 6)
                run.check(extendable == is_extendable_bruteforce(rook),
                          "criterion/bruteforce mismatch at " + pi.to_string());
        }
    }
    return run.finish();
}

VerificationReport verify_corollary(int max_board) {
    SuiteRun run("corollary", 1, max_board);
    for (int n = 1; n <= max_board; ++n) {
        for (const RookPlacement& rook : enumerate_rooks(n)) {
            bool corner = false;
            for (const Cell& c : rook.ones())
                if (c.row == 1 && c.col == n) corner = true;
            if (!corner) continue;
            run.check(is_extendable(rook), "non-extendable corner rook " + rook.to_json());
        }
    }
    return run.finish();
}

CountTable count_table(int max_n) {
    CountTable table;
    for (int n = 1; n <= max_n; ++n) {
        CountRow row{n, 0, 0, 0, 0};
        for (const SetPartition& pi : enumerate_partitions(n)) {
            ++row.bell;
            if (is_atomic(pi)) ++row.atomic;
            if (is_extendable(partition_to_rook(pi))) ++row.extendable;
            if (is_unsplitable(pi)) ++row.unsplitable;
        }
        table.rows.push_back(row);
    }
    return table;
}

VerificationReport verify_eq2(int max_total_degree) {
    SuiteRun run("eq2", 2, max_total_degree);
    for (int a = 0; a <= max_total_degree; ++a) {
        for (int b = 0; a + b <= max_total_degree; ++b) {
            int k = std::max(a + b, 1);
            for (const SetPartition& pi : enumerate_partitions(a)) {
                NcPolynomial lhs_a = expand_p(pi, k);
                for (const SetPartition& sigma : enumerate_partitions(b)) {
                    bool ok = multiply_nc(lhs_a, expand_p(sigma, k)) ==
                              expand_p(slash(pi, sigma), k);
                    run.check(ok, "p_{pi|sigma} != p_pi p_sigma at (" + pi.to_string() +
                                      ", " + sigma.to_string() + ")");
                }
            }
        }
    }
    return run.finish();
}

VerificationReport verify_isomorphism(int max_size) {
    SuiteRun run("isomorphism", 0, max_size);
    // Injectivity on bases per degree: the rook images must be distinct.
    for (int n = 0; n <= max_size; ++n) {
        std::map<RookPlacement, SetPartition> images;
        for (const SetPartition& pi : enumerate_partitions(n)) {
            auto [it, inserted] = images.emplace(partition_to_rook(pi), pi);
            run.check(inserted, "rook image collision at " + pi.to_string() + " and " +
                                    it->second.to_string());
        }
    }
    for (int a = 0; a <= max_size; ++a) {
        for (int b = 0; a + b <= max_size; ++b) {
            for (const SetPartition& pi : enumerate_partitions(a)) {
                auto u = NCSymElement::basis_element(Basis::p, pi);
                for (const SetPartition& sigma : enumerate_partitions(b)) {
                    auto v = NCSymElement::basis_element(Basis::p, sigma);
                    bool ok = rook_image(product_p(u, v)) ==
                              rook_product(rook_image(u), rook_image(v));
                    run.check(ok, "intertwining fails at (" + pi.to_string() + ", " +
                                      sigma.to_string() + ")");
                }
            }
        }
    }
    return run.finish();
}

namespace {

// Counts the cut subsets that factor pi into all-atomic (or all-unsplitable)
// segments, exhaustively over subsets of the valid cut positions.
template <typename Cuts, typename Segment, typename Predicate>
int count_factorizations(const SetPartition& pi, Cuts&& cuts, Segment&& segment,
                         Predicate&& predicate) {
    std::vector<int> valid = cuts(pi);
    int count = 0;
    for (std::uint32_t mask = 0; mask < (1u << valid.size()); ++mask) {
        int lo = 0;
        bool all = true;
        for (std::size_t c = 0; c <= valid.size() && all; ++c) {
            int hi = c < valid.size() ? valid[c] : pi.n();
            if (c < valid.size() && !(mask & (1u << c))) continue;
            if (!predicate(segment(pi, lo, hi))) all = false;
            lo = hi;
        }
        if (all) ++count;
    }
    return count;
}

SetPartition slash_piece(const SetPartition& pi, int lo, int hi) {
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

SetPartition split_piece(const SetPartition& pi, int lo, int hi) {
    Rgf word = pi.to_rgf();
    return SetPartition::from_rgf(Rgf(word.begin() + lo, word.begin() + hi));
}

}  // namespace

VerificationReport verify_free_factorization(int max_n) {
    SuiteRun run("free_factorization", 1, max_n);
    for (int n = 1; n <= max_n; ++n) {
        for (const SetPartition& pi : enumerate_partitions(n)) {
            auto atoms = atomic_factor(pi);
            bool ok = true;
            SetPartition rebuilt;
            for (const SetPartition& f : atoms) {
                if (!is_atomic(f)) ok = false;
                rebuilt = slash(rebuilt, f);
            }
            if (rebuilt != pi) ok = false;
            if (count_factorizations(pi, slash_cuts, slash_piece, is_atomic) != 1)
                ok = false;
            run.check(ok, "atomic factorization not unique at " + pi.to_string());

            auto pieces = unsplitable_factor(pi);
            ok = true;
            rebuilt = SetPartition();
            for (const SetPartition& f : pieces) {
                if (!is_unsplitable(f)) ok = false;
                rebuilt = split(rebuilt, f);
            }
            if (rebuilt != pi) ok = false;
            if (count_factorizations(pi, split_cuts, split_piece, is_unsplitable) != 1)
                ok = false;
            run.check(ok, "unsplitable factorization not unique at " + pi.to_string());
        }
    }
    return run.finish();
}

}  // namespace rookpart
