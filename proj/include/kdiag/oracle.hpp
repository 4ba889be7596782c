#pragma once

#include <utility>

#include "kdiag/compose.hpp"

// Exhaustive backtracking search for k-diagonal magic squares at small
// (n, k): the independent ground truth the closed-form existence predicate
// and the constructions are checked against. The band is fixed at start 0
// without loss of generality, since any k-diagonal magic square column-shifts
// onto it (see shift in compose.hpp). Practical for kn up to about 16.

namespace kdiag {

inline constexpr long long default_node_budget = 100'000'000;

struct SearchConfig {
    int n = 1;
    int k = 1;
    std::optional<long long> solution_limit;  // stop after this many solutions
    std::optional<long long> node_budget;     // default_node_budget when absent
};

struct SearchOutcome {
    std::vector<SparseSquare> solutions;  // in canonical (ascending-value) order
    bool exhausted = false;               // search space fully covered
    long long nodes_visited = 0;          // attempted value placements
};

/// The kn cells of the band starting at diagonal 0, row-major: row i holds
/// columns i, i+1, ..., i+k-1 (mod n). Row-major order closes each row after
/// k placements and, thanks to the wraparound, retires columns steadily, so
/// line-sum pruning bites early.
inline std::vector<Cell> band_cells(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("band_cells: need 1 <= k <= n");
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(n) * k);
    for (int i = 0; i < n; ++i)
        for (int d = 0; d < k; ++d) cells.push_back({i, (i + d) % n});
    return cells;
}

namespace detail {

/// Depth-first assignment of the values {0..kn-1} to the band cells, values
/// tried in ascending order. With `bound_pruning` on, a line is discarded as
/// soon as it is overfull or underfull: a completed line must hit the magic
/// sum exactly, and a partial line's sum plus the smallest/largest unused
/// values must still bracket it. With it off the tree is walked bare and
/// every leaf is checked whole, which exists so tests can compare solution
/// counts between the two modes.
inline SearchOutcome run_search(const SearchConfig& cfg, bool bound_pruning) {
    const int n = cfg.n;
    const int k = cfg.k;
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("search: need 1 <= k <= n");
    if (cfg.solution_limit && *cfg.solution_limit < 1)
        throw std::invalid_argument("search: solution limit must be positive");
    if (cfg.node_budget && *cfg.node_budget < 1)
        throw std::invalid_argument("search: node budget must be positive");

    SearchOutcome out;
    const auto target = magic_sum(n, k);
    if (!target) {  // n even with k odd: nothing to search
        out.exhausted = true;
        return out;
    }
    const Value S = *target;
    const long long budget = cfg.node_budget.value_or(default_node_budget);
    const long long limit = cfg.solution_limit.value_or(-1);

    const std::vector<Cell> cells = band_cells(n, k);
    const int total = n * k;
    std::vector<char> used(total, 0);
    std::vector<Value> chosen(total, 0);
    std::vector<Value> rsum(n, 0), csum(n, 0);
    std::vector<int> rleft(n, k), cleft(n, k);
    bool truncated = false;

    auto line_open = [&](Value partial, int left) {
        // partial sum plus the `left` smallest/largest unused values must
        // bracket the magic sum
        Value lo = partial, hi = partial;
        int got = 0;
        for (int v = 0; v < total && got < left; ++v)
            if (!used[v]) {
                lo += v;
                ++got;
            }
        got = 0;
        for (int v = total - 1; v >= 0 && got < left; --v)
            if (!used[v]) {
                hi += v;
                ++got;
            }
        return lo <= S && S <= hi;
    };

    auto emit = [&]() {
        SparseSquare sq(n, k);
        for (int t = 0; t < total; ++t) sq.set(cells[t], chosen[t]);
        if (!verify(sq).passed())  // solutions are checked, not assumed
            throw std::logic_error("search: emitted square fails verification");
        out.solutions.push_back(std::move(sq));
    };

    // returns false when the search must stop (budget or solution limit)
    auto rec = [&](auto&& self, int t) -> bool {
        if (t == total) {
            if (!bound_pruning)
                for (int i = 0; i < n; ++i)
                    if (rsum[i] != S || csum[i] != S) return true;
            emit();
            return limit < 0 || static_cast<long long>(out.solutions.size()) < limit;
        }
        const auto [r, c] = cells[t];
        for (Value v = 0; v < total; ++v) {
            if (used[v]) continue;
            if (out.nodes_visited == budget) {
                truncated = true;
                return false;
            }
            ++out.nodes_visited;
            used[v] = 1;
            chosen[t] = v;
            rsum[r] += v;
            csum[c] += v;
            --rleft[r];
            --cleft[c];
            bool viable = true;
            if (bound_pruning) {
                viable = (rleft[r] == 0 ? rsum[r] == S : line_open(rsum[r], rleft[r])) &&
                         (cleft[c] == 0 ? csum[c] == S : line_open(csum[c], cleft[c]));
            }
            const bool keep_going = !viable || self(self, t + 1);
            used[v] = 0;
            rsum[r] -= v;
            csum[c] -= v;
            ++rleft[r];
            ++cleft[c];
            if (!keep_going) return false;
        }
        return true;
    };

    const bool completed = rec(rec, 0);
    out.exhausted = completed && !truncated;
    return out;
}

}  // namespace detail

inline SearchOutcome search(const SearchConfig& cfg) { return detail::run_search(cfg, true); }

/// true once any solution is found, false only after exhausting the space,
/// nullopt when the node budget ran out first.
inline std::optional<bool> exists_bruteforce(int n, int k,
                                             long long node_budget = default_node_budget) {
    SearchConfig cfg{n, k, 1, node_budget};
    const SearchOutcome out = search(cfg);
    if (!out.solutions.empty()) return true;
    if (out.exhausted) return false;
    return std::nullopt;
}

struct CrossCheckEntry {
    int n = 0;
    int k = 0;
    bool closed_form = false;
    std::optional<bool> oracle;  // nullopt = inconclusive (budget hit)
};

/// Compares the closed-form existence predicate against brute force on every
/// (n, k) with k <= n <= max_n, plus the k=2 outlier (6, 2). Returns the
/// pairs that disagree; an inconclusive search is reported as a disagreement
/// rather than skipped.
inline std::vector<CrossCheckEntry> cross_check(int max_n) {
    if (max_n < 1) throw std::invalid_argument("cross_check: max_n must be positive");
    std::vector<std::pair<int, int>> pairs;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k) pairs.emplace_back(n, k);
    if (max_n < 6) pairs.emplace_back(6, 2);

    std::vector<CrossCheckEntry> disagreements;
    for (const auto& [n, k] : pairs) {
        const bool closed = exists(n, k);
        const std::optional<bool> brute = exists_bruteforce(n, k);
        if (!brute || *brute != closed) disagreements.push_back({n, k, closed, brute});
    }
    return disagreements;
}

}  // namespace kdiag
