#include <algorithm>
#include <cctype>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rookpart/ncsym.hpp"
#include "rookpart/partitions.hpp"
#include "rookpart/rooks.hpp"
#include "rookpart/verify.hpp"

namespace {

using namespace rookpart;

// Exit codes: 0 success, 1 semantic failure with certificate, 2 usage/parse.
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

Rgf parse_rgf(const std::string& text) {
    Rgf word;
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t end = text.find(',', pos);
            if (end == std::string::npos) end = text.size();
            word.push_back(std::stoi(text.substr(pos, end - pos)));
            pos = end + 1;
        }
    } else {
        for (std::size_t pos = 0; pos < text.size(); ++pos) {
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected a digit in the RGF word", pos);
            word.push_back(text[pos] - '0');
        }
    }
    if (!is_valid_rgf(word)) throw InvalidRgf("word violates the growth conditions");
    return word;
}

std::string render_rgf(const Rgf& word) {
    bool digits = std::all_of(word.begin(), word.end(), [](int a) { return a <= 9; });
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0 && !digits) out += ',';
        out += std::to_string(word[i]);
    }
    return out;
}

SetPartition parse_as(const std::string& value, const std::string& format) {
    if (format == "partition") return SetPartition::parse(value);
    if (format == "rgf") return SetPartition::from_rgf(parse_rgf(value));
    return rook_to_partition(RookPlacement::from_json(value));
}

std::string render_as(const SetPartition& pi, const std::string& format) {
    if (format == "partition") return pi.to_string();
    if (format == "rgf") return render_rgf(pi.to_rgf());
    return partition_to_rook(pi).to_json();
}

int cmd_enumerate(int n, const std::string& filter, bool json) {
    std::vector<std::string> rendered;
    for (const SetPartition& pi : enumerate_partitions(n)) {
        bool keep = filter == "all" ||
                    (filter == "atomic" && is_atomic(pi)) ||
                    (filter == "unsplitable" && is_unsplitable(pi)) ||
                    (filter == "extendable" && !pi.trivial() &&
                     is_extendable(partition_to_rook(pi)));
        if (keep) rendered.push_back(pi.to_string());
    }
    if (json) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["filter"] = filter;
        j["partitions"] = rendered;
        j["count"] = rendered.size();
        std::cout << j.dump() << '\n';
    } else {
        for (const std::string& s : rendered) std::cout << s << '\n';
        std::cout << "count " << rendered.size() << '\n';
    }
    return 0;
}

int cmd_convert(const std::string& value, const std::string& from, const std::string& to,
                bool json) {
    std::string out = render_as(parse_as(value, from), to);
    if (json && to != "rook") {
        std::cout << nlohmann::json(out).dump() << '\n';
    } else {
        std::cout << out << '\n';
    }
    return 0;
}

int cmd_product(const std::string& op, const std::string& a, const std::string& b,
                bool json) {
    if (op == "edsum") {
        std::cout << edsum(RookPlacement::from_json(a), RookPlacement::from_json(b)).to_json()
                  << '\n';
        return 0;
    }
    SetPartition pi = SetPartition::parse(a);
    SetPartition sigma = SetPartition::parse(b);
    SetPartition result = op == "slash" ? slash(pi, sigma) : split(pi, sigma);
    if (json) {
        std::cout << nlohmann::json(result.to_string()).dump() << '\n';
    } else {
        std::cout << result.to_string() << '\n';
    }
    return 0;
}

int cmd_factor(const std::string& op, const std::string& value, bool json) {
    SetPartition pi = SetPartition::parse(value);
    std::vector<SetPartition> factors =
        op == "atomic" ? atomic_factor(pi) : unsplitable_factor(pi);
    if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const SetPartition& f : factors) j.push_back(f.to_string());
        std::cout << j.dump() << '\n';
    } else {
        for (const SetPartition& f : factors) std::cout << f.to_string() << '\n';
    }
    return 0;
}

int cmd_extend(const std::string& value, bool json) {
    RookPlacement rook = RookPlacement::from_json(value);
    try {
        PermutationMatrix p = extend(rook);
        if (json) {
            nlohmann::ordered_json j;
            j["size"] = p.column_of.size();
            j["column_of"] = p.column_of;
            std::cout << j.dump() << '\n';
        } else {
            for (std::size_t i = 0; i < p.column_of.size(); ++i)
                std::cout << (i ? " " : "") << p.column_of[i];
            std::cout << '\n';
        }
        return 0;
    } catch (const NotExtendable& e) {
        if (json) {
            nlohmann::ordered_json j;
            j["error"] = "not_extendable";
            j["certificate"] = {{"row", e.row}, {"col", e.col}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "not extendable: zero row " << e.row << " <= zero column "
                      << e.col << '\n';
        }
        return kExitFail;
    }
}

int cmd_expand(const std::string& basis, int k, const std::string& value, bool json) {
    SetPartition pi = SetPartition::parse(value);
    NcPolynomial poly = basis == "p" ? expand_p(pi, k) : expand_m(pi, k);
    if (json) {
        std::cout << poly.to_json() << '\n';
    } else {
        std::cout << poly.to_string() << '\n'
                  << "terms " << poly.terms().size() << '\n';
    }
    return 0;
}

int cmd_basis_matrix(const std::string& which, int n, bool json) {
    BasisMatrix matrix = which == "zeta" ? zeta_matrix(n) : mu_matrix(n);
    if (json) {
        nlohmann::ordered_json j;
        j["n"] = matrix.n;
        j["order"] = nlohmann::json::array();
        for (const SetPartition& pi : matrix.order) j["order"].push_back(pi.to_string());
        j["entries"] = matrix.entries;
        std::cout << j.dump() << '\n';
    } else {
        for (const auto& row : matrix.entries) {
            for (std::size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? " " : "") << row[j];
            std::cout << '\n';
        }
    }
    return 0;
}

int cmd_count(int max_n, bool json) {
    CountTable table = count_table(max_n);
    std::cout << (json ? table.to_json() + "\n" : table.to_text());
    for (const CountRow& row : table.rows)
        if (row.atomic != row.extendable || row.atomic != row.unsplitable)
            return kExitFail;
    return 0;
}

int cmd_verify(const std::string& suite, int max, bool json) {
    if (suite == "counts") return cmd_count(max, json);
    VerificationReport report;
    if (suite == "thm1") {
        report = verify_theorem1(max);
    } else if (suite == "corollary") {
        report = verify_corollary(max);
    } else if (suite == "eq2") {
        report = verify_eq2(max);
    } else if (suite == "iso") {
        report = verify_isomorphism(max);
    } else {
        report = verify_free_factorization(max);
    }
    std::cout << report.to_json() << '\n';
    if (!json) {
        std::cerr << report.suite << ": checked " << report.checked << ", "
                  << report.failures.size() << " failures, " << report.elapsed_ms
                  << " ms\n";
    }
    return report.passed() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Set partitions, rook placements on triangular boards, and NCSym"};
    app.require_subcommand(1);
    bool json = false;

    int n = 0;
    std::string filter = "all";
    auto* enumerate = app.add_subcommand("enumerate", "list partitions of [n]");
    enumerate->add_option("--n", n, "ground-set size")->required()->check(CLI::Range(0, 12));
    enumerate->add_option("--filter", filter)
        ->check(CLI::IsMember({"all", "atomic", "extendable", "unsplitable"}));

    std::string value, from = "partition", to = "partition";
    auto* convert = app.add_subcommand("convert", "convert between partition, rgf, rook");
    convert->add_option("value", value)->required();
    convert->add_option("--from", from)
        ->required()
        ->check(CLI::IsMember({"partition", "rgf", "rook"}));
    convert->add_option("--to", to)
        ->required()
        ->check(CLI::IsMember({"partition", "rgf", "rook"}));

    std::string op, lhs, rhs;
    auto* product = app.add_subcommand("product", "slash, split, or edsum product");
    product->add_option("--op", op)
        ->required()
        ->check(CLI::IsMember({"slash", "split", "edsum"}));
    product->add_option("a", lhs)->required();
    product->add_option("b", rhs)->required();

    std::string factor_op, factor_value;
    auto* factor = app.add_subcommand("factor", "atomic or unsplitable factorization");
    factor->add_option("--op", factor_op)
        ->required()
        ->check(CLI::IsMember({"atomic", "unsplitable"}));
    factor->add_option("value", factor_value)->required();

    std::string rook_value;
    auto* extend_cmd = app.add_subcommand("extend", "complete a rook to a permutation");
    extend_cmd->add_option("rook", rook_value)->required();

    std::string basis = "p";
    int k = 1;
    std::string expand_value;
    auto* expand = app.add_subcommand("expand", "truncated p or m expansion");
    expand->add_option("--basis", basis)->required()->check(CLI::IsMember({"p", "m"}));
    expand->add_option("--k", k, "number of variables")->required()->check(CLI::Range(1, 16));
    expand->add_option("value", expand_value)->required();

    std::string matrix_op = "zeta";
    int matrix_n = 1;
    auto* basis_matrix = app.add_subcommand("basis-matrix", "print zeta or mu for degree n");
    basis_matrix->add_option("--op", matrix_op)->check(CLI::IsMember({"zeta", "mu"}));
    basis_matrix->add_option("--n", matrix_n)->required()->check(CLI::Range(1, 8));

    std::string suite;
    int max = 0;
    auto* verify = app.add_subcommand("verify", "run an exhaustive verification suite");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"thm1", "corollary", "eq2", "iso", "factorization", "counts"}));
    verify->add_option("--max", max)->required()->check(CLI::Range(1, 12));

    int count_max = 0;
    auto* count = app.add_subcommand("count", "bell/atomic/extendable/unsplitable table");
    count->add_option("--max", count_max)->required()->check(CLI::Range(1, 12));

    for (CLI::App* sub : {enumerate, convert, product, factor, extend_cmd, expand,
                          basis_matrix, verify, count})
        sub->add_flag("--json", json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(n, filter, json);
        if (*convert) return cmd_convert(value, from, to, json);
        if (*product) return cmd_product(op, lhs, rhs, json);
        if (*factor) return cmd_factor(factor_op, factor_value, json);
        if (*extend_cmd) return cmd_extend(rook_value, json);
        if (*expand) return cmd_expand(basis, k, expand_value, json);
        if (*basis_matrix) return cmd_basis_matrix(matrix_op, matrix_n, json);
        if (*verify) return cmd_verify(suite, max, json);
        if (*count) return cmd_count(count_max, json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
