// kdiag: construct, verify, and exhaustively search k-diagonal magic squares.
//
// Exit codes (stable contract): 0 success/pass, 1 usage or parse error,
// 2 nonexistence, 3 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kdiag/kdiag.hpp"

using namespace kdiag;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_nonexistent = 2;
constexpr int exit_verify_failed = 3;

long long env_node_budget() {
    const char* raw = std::getenv("KDIAG_NODE_BUDGET");
    if (!raw) return default_node_budget;
    try {
        const long long v = std::stoll(raw);
        if (v < 1) throw std::invalid_argument("nonpositive");
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError("KDIAG_NODE_BUDGET", "must be a positive integer");
    }
}

std::string render(const SparseSquare& s, const std::string& format) {
    if (format == "json") return encode_json(s) + "\n";
    if (format == "csv") return encode_csv(s);
    return render_ascii(s);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SparseSquare decode_any(const std::string& text, const std::string& format) {
    if (format == "json") return decode_json(text);
    if (format == "csv") return decode_csv(text);
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return decode_json(text);
    return decode_csv(text);
}

void print_check(const char* label, const CheckResult& check) {
    std::cout << label << (check.ok ? "ok" : "FAIL");
    if (!check.ok) std::cout << " (" << check.detail << ")";
    std::cout << "\n";
}

int run_verify(const std::string& path, const std::string& format) {
    SparseSquare s = decode_any(read_input(path), format);
    const VerificationReport rep = verify(s);
    print_check("order:      ", rep.order_ok);
    print_check("values:     ", rep.value_set_ok);
    print_check("row count:  ", rep.row_count_ok);
    print_check("col count:  ", rep.col_count_ok);
    print_check("row sums:   ", rep.row_sum_ok);
    print_check("col sums:   ", rep.col_sum_ok);
    if (rep.band) {
        std::cout << "band:       ok (start " << rep.band->start << ", width " << rep.band->width
                  << ")\n";
    } else {
        print_check("band:       ", rep.band_ok);
    }
    if (rep.magic_sum) std::cout << "magic sum:  " << *rep.magic_sum << "\n";
    std::cout << (rep.passed() ? "PASS" : "FAIL") << "\n";
    return rep.passed() ? exit_ok : exit_verify_failed;
}

int run_generate(int n, int k, bool normalize, const std::string& format) {
    const GenerateResult result = generate(n, k);
    if (std::holds_alternative<Nonexistence>(result)) {
        std::cerr << "no " << k << "-diagonal magic square of order " << n
                  << " exists: " << describe(std::get<Nonexistence>(result).reason) << "\n";
        return exit_nonexistent;
    }
    SparseSquare s = std::get<SparseSquare>(result);
    if (normalize) s = normalize_band(s);
    std::cout << render(s, format);
    return exit_ok;
}

int run_exists(int n, int k, bool with_oracle, std::optional<long long> budget) {
    const bool closed = exists(n, k);
    if (closed)
        std::cout << "yes\n";
    else
        std::cout << "no: " << describe(nonexistence_reason(n, k).reason) << "\n";

    if (with_oracle) {
        const auto brute = exists_bruteforce(n, k, budget.value_or(env_node_budget()));
        if (!brute) {
            std::cout << "oracle: inconclusive (node budget exhausted)\n";
        } else if (*brute != closed) {
            std::cout << "oracle: DISAGREES with the closed form\n";
            return exit_verify_failed;
        } else {
            std::cout << "oracle: confirmed (" << (*brute ? "found a witness" : "search exhausted")
                      << ")\n";
        }
    }
    return closed ? exit_ok : exit_nonexistent;
}

int run_search(int n, int k, std::optional<long long> limit, std::optional<long long> budget,
               const std::string& format) {
    const SearchOutcome out = search({n, k, limit, budget.value_or(env_node_budget())});
    for (std::size_t i = 0; i < out.solutions.size(); ++i) {
        std::cout << "solution " << (i + 1) << ":\n" << render(out.solutions[i], format);
    }
    std::cout << "solutions: " << out.solutions.size() << "\n"
              << "nodes visited: " << out.nodes_visited << "\n"
              << "exhausted: " << (out.exhausted ? "yes" : "no") << "\n";
    if (!out.solutions.empty()) return exit_ok;
    return out.exhausted ? exit_nonexistent : exit_ok;
}

int run_sweep(int max_n) {
    int pass = 0, fail = 0;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k) {
            const bool closed = exists(n, k);
            const GenerateResult result = generate(n, k);
            const bool got = std::holds_alternative<SparseSquare>(result);
            bool ok = got == closed;
            std::cout << "n=" << n << " k=" << k << " exists=" << (closed ? "yes" : "no");
            if (got) {
                const bool verified = verify(std::get<SparseSquare>(result)).passed();
                ok = ok && verified;
                std::cout << " verified=" << (verified ? "pass" : "fail");
            } else {
                std::cout << " reason=" << describe(std::get<Nonexistence>(result).reason);
            }
            std::cout << (ok ? " PASS" : " FAIL") << "\n";
            ++(ok ? pass : fail);
        }
    std::cout << "sweep: " << (pass + fail) << " pairs, " << pass << " PASS, " << fail
              << " FAIL\n";
    return fail == 0 ? exit_ok : exit_verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, verify, and exhaustively search k-diagonal magic squares"};
    app.require_subcommand(1);
    int rc = exit_ok;

    // generate
    auto* gen = app.add_subcommand("generate", "construct the canonical square for (n, k)");
    int gen_n = 0, gen_k = 0;
    bool gen_normalize = false;
    std::string gen_format = "ascii";
    gen->add_option("--n", gen_n, "order of the square")->required()->check(CLI::Range(1, 1000000));
    gen->add_option("--k", gen_k, "filled cells per row and column")
        ->required()
        ->check(CLI::Range(1, 1000000));
    gen->add_flag("--normalize", gen_normalize, "column-shift the band to start at diagonal 0");
    gen->add_option("--format", gen_format, "output format")
        ->check(CLI::IsMember({"ascii", "json", "csv"}));
    gen->callback([&] { rc = run_generate(gen_n, gen_k, gen_normalize, gen_format); });

    // verify
    auto* ver = app.add_subcommand("verify", "check a candidate square from a file or stdin");
    std::string ver_input = "-";
    std::string ver_format = "auto";
    ver->add_option("input", ver_input, "path to a JSON or CSV square document, or - for stdin");
    ver->add_option("--format", ver_format, "input format")
        ->check(CLI::IsMember({"auto", "json", "csv"}));
    ver->callback([&] { rc = run_verify(ver_input, ver_format); });

    // exists
    auto* exi = app.add_subcommand("exists", "existence query for (n, k)");
    int exi_n = 0, exi_k = 0;
    bool exi_oracle = false;
    std::optional<long long> exi_budget;
    exi->add_option("--n", exi_n)->required()->check(CLI::Range(1, 1000000));
    exi->add_option("--k", exi_k)->required()->check(CLI::Range(1, 1000000));
    exi->add_flag("--oracle", exi_oracle, "confirm by exhaustive search (small n only)");
    exi->add_option("--budget", exi_budget, "oracle node budget (or env KDIAG_NODE_BUDGET)")
        ->check(CLI::PositiveNumber);
    exi->callback([&] { rc = run_exists(exi_n, exi_k, exi_oracle, exi_budget); });

    // search
    auto* sea = app.add_subcommand("search", "exhaustive backtracking search over band start 0");
    int sea_n = 0, sea_k = 0;
    std::optional<long long> sea_limit, sea_budget;
    std::string sea_format = "ascii";
    sea->add_option("--n", sea_n)->required()->check(CLI::Range(1, 64));
    sea->add_option("--k", sea_k)->required()->check(CLI::Range(1, 64));
    sea->add_option("--limit", sea_limit, "stop after this many solutions")
        ->check(CLI::PositiveNumber);
    sea->add_option("--budget", sea_budget, "node budget (or env KDIAG_NODE_BUDGET)")
        ->check(CLI::PositiveNumber);
    sea->add_option("--format", sea_format, "solution format")
        ->check(CLI::IsMember({"ascii", "json", "csv"}));
    sea->callback([&] { rc = run_search(sea_n, sea_k, sea_limit, sea_budget, sea_format); });

    // sweep
    auto* swe = app.add_subcommand("sweep", "generate+verify every (n, k) up to an order bound");
    int swe_max = 30;
    swe->add_option("--max-n", swe_max, "largest order to cover")->check(CLI::Range(1, 100));
    swe->callback([&] { rc = run_sweep(swe_max); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return rc;
}
