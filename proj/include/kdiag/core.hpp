#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Core data model for k-diagonal magic squares: an n-by-n grid with exactly
// k filled cells per row and per column, holding each value in {0,...,kn-1}
// once, with all filled cells on k cyclically consecutive diagonals.
//
// Diagonal index convention used throughout: d(i, j) = (j - i) mod n, so the
// main diagonal is d = 0 and "broken" diagonals wrap around the grid.

namespace kdiag {

using Value = long long;

/// A (row, column) coordinate in an n-by-n grid, both 0-based.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// `width` cyclically consecutive diagonals of Z_modulus, beginning at `start`.
struct DiagonalBand {
    int modulus = 1;
    int start = 0;
    int width = 1;

    bool contains(int d) const {
        int rel = d - start;
        rel %= modulus;
        if (rel < 0) rel += modulus;
        return rel < width;
    }

    bool operator==(const DiagonalBand&) const = default;
};

/// Diagonal index of a cell: (col - row) mod n, in [0, n).
inline int diagonal_index(Cell c, int n) {
    if (n < 1) throw std::invalid_argument("diagonal_index: order must be positive");
    if (c.row < 0 || c.row >= n || c.col < 0 || c.col >= n)
        throw std::invalid_argument("diagonal_index: cell outside the grid");
    int d = (c.col - c.row) % n;
    return d < 0 ? d + n : d;
}

/// Common row/column sum k(kn-1)/2, or nullopt when k(kn-1) is odd
/// (n even with k odd), in which case no such square can exist.
inline std::optional<Value> magic_sum(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("magic_sum: need 1 <= k <= n");
    const Value t = static_cast<Value>(k) * (static_cast<Value>(k) * n - 1);
    if (t % 2 != 0) return std::nullopt;
    return t / 2;
}

/// A partially filled n-by-n square: a finite map from cells to values.
/// `k` records the intended fill count per line; whether the contents
/// actually satisfy the k-diagonal magic-square definition is decided by
/// verify(), so arbitrary candidates can be represented and diagnosed.
class SparseSquare {
public:
    SparseSquare(int n, int k) : n_(n), k_(k) {
        if (n < 1) throw std::invalid_argument("SparseSquare: order must be positive");
        if (k < 0) throw std::invalid_argument("SparseSquare: fill count must be nonnegative");
    }

    int order() const { return n_; }
    int k() const { return k_; }
    const std::map<Cell, Value>& entries() const { return entries_; }

    std::optional<Value> at(Cell c) const {
        auto it = entries_.find(c);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    /// Inserts a value. Writing into an occupied cell is a construction bug,
    /// not a data error, and aborts with a diagnostic.
    void set(Cell c, Value v) {
        if (c.row < 0 || c.row >= n_ || c.col < 0 || c.col >= n_)
            throw std::invalid_argument("SparseSquare::set: cell outside the grid");
        auto [it, inserted] = entries_.emplace(c, v);
        if (!inserted) {
            std::ostringstream os;
            os << "SparseSquare::set: cell (" << c.row << ", " << c.col
               << ") already holds " << it->second;
            throw std::logic_error(os.str());
        }
    }

    bool operator==(const SparseSquare&) const = default;

private:
    int n_;
    int k_;
    std::map<Cell, Value> entries_;
};

inline std::vector<Value> row_sums(const SparseSquare& s) {
    std::vector<Value> sums(s.order(), 0);
    for (const auto& [c, v] : s.entries()) sums[c.row] += v;
    return sums;
}

inline std::vector<Value> col_sums(const SparseSquare& s) {
    std::vector<Value> sums(s.order(), 0);
    for (const auto& [c, v] : s.entries()) sums[c.col] += v;
    return sums;
}

/// Result of scanning a square's occupied diagonals. `occupied` is the sorted
/// set of occupied diagonal indices; `band` is present only when that set is
/// a single cyclic run of length exactly k. A full square (k = n) reports the
/// canonical start 0.
struct BandScan {
    std::optional<DiagonalBand> band;
    std::vector<int> occupied;
};

namespace detail {

/// Start of the unique cyclic run covering `sorted` in Z_n, or nullopt when
/// the set is not one consecutive run. Pre: sorted, distinct, nonempty, and
/// not all of Z_n.
inline std::optional<int> run_start(const std::vector<int>& sorted, int n) {
    int start = -1;
    int runs = 0;
    for (int d : sorted) {
        int prev = (d + n - 1) % n;
        if (!std::binary_search(sorted.begin(), sorted.end(), prev)) {
            ++runs;
            start = d;
        }
    }
    if (runs != 1) return std::nullopt;
    return start;
}

}  // namespace detail

inline BandScan occupied_band(const SparseSquare& s) {
    const int n = s.order();
    BandScan scan;
    std::vector<char> seen(n, 0);
    for (const auto& [c, v] : s.entries()) seen[diagonal_index(c, n)] = 1;
    for (int d = 0; d < n; ++d)
        if (seen[d]) scan.occupied.push_back(d);

    const int width = static_cast<int>(scan.occupied.size());
    if (width != s.k() || width == 0) return scan;
    if (width == n) {
        scan.band = DiagonalBand{n, 0, n};
        return scan;
    }
    if (auto start = detail::run_start(scan.occupied, n))
        scan.band = DiagonalBand{n, *start, width};
    return scan;
}

/// One verification check: pass/fail plus a counterexample when failed.
struct CheckResult {
    bool ok = true;
    std::string detail;
};

/// Outcome of the seven independent checks of the k-diagonal magic-square
/// definition. `magic_sum` is absent when k(kn-1) is odd; `band` is absent
/// unless the band check passed.
struct VerificationReport {
    CheckResult order_ok;
    CheckResult value_set_ok;
    CheckResult row_count_ok;
    CheckResult col_count_ok;
    CheckResult row_sum_ok;
    CheckResult col_sum_ok;
    CheckResult band_ok;
    std::optional<Value> magic_sum;
    std::optional<DiagonalBand> band;

    bool passed() const {
        return order_ok.ok && value_set_ok.ok && row_count_ok.ok && col_count_ok.ok &&
               row_sum_ok.ok && col_sum_ok.ok && band_ok.ok;
    }
};

namespace detail {

inline CheckResult fail(std::string msg) { return CheckResult{false, std::move(msg)}; }

inline std::string join_diagonals(const std::vector<int>& ds) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < ds.size(); ++i) os << (i ? "," : "") << ds[i];
    os << "}";
    return os.str();
}

}  // namespace detail

/// Evaluates all seven checks independently (no short-circuiting), so a
/// report can name every way a candidate fails at once.
inline VerificationReport verify(const SparseSquare& s) {
    VerificationReport rep;
    const int n = s.order();
    const Value k = s.k();
    const Value target_count = k * n;

    if (k < 1 || k > n) {
        std::ostringstream os;
        os << "k=" << k << " outside [1, n=" << n << "]";
        rep.order_ok = detail::fail(os.str());
    }

    // value set must be exactly {0, ..., kn-1}
    {
        std::map<Value, int> freq;
        for (const auto& [c, v] : s.entries()) ++freq[v];
        for (const auto& [v, count] : freq) {
            if (v < 0 || v >= target_count) {
                std::ostringstream os;
                os << "value " << v << " outside [0, " << target_count << ")";
                rep.value_set_ok = detail::fail(os.str());
                break;
            }
            if (count > 1) {
                std::ostringstream os;
                os << "duplicate value " << v;
                rep.value_set_ok = detail::fail(os.str());
                break;
            }
        }
        if (rep.value_set_ok.ok && static_cast<Value>(s.entries().size()) != target_count) {
            std::ostringstream os;
            os << "expected " << target_count << " values, found " << s.entries().size();
            rep.value_set_ok = detail::fail(os.str());
        }
    }

    std::vector<Value> rsum(n, 0), csum(n, 0);
    std::vector<Value> rcount(n, 0), ccount(n, 0);
    for (const auto& [c, v] : s.entries()) {
        rsum[c.row] += v;
        csum[c.col] += v;
        ++rcount[c.row];
        ++ccount[c.col];
    }
    for (int i = 0; i < n && rep.row_count_ok.ok; ++i)
        if (rcount[i] != k) {
            std::ostringstream os;
            os << "row " << i << " has " << rcount[i] << " filled cells, expected " << k;
            rep.row_count_ok = detail::fail(os.str());
        }
    for (int j = 0; j < n && rep.col_count_ok.ok; ++j)
        if (ccount[j] != k) {
            std::ostringstream os;
            os << "column " << j << " has " << ccount[j] << " filled cells, expected " << k;
            rep.col_count_ok = detail::fail(os.str());
        }

    // line sums against k(kn-1)/2; computed inline so candidates with k
    // outside [1, n] still get a parity diagnosis instead of a throw
    const Value twice_sum = k * (k * static_cast<Value>(n) - 1);
    if (twice_sum % 2 != 0) {
        std::ostringstream os;
        os << "no integer magic sum: k(kn-1)=" << twice_sum << " is odd";
        rep.row_sum_ok = detail::fail(os.str());
        rep.col_sum_ok = detail::fail(os.str());
    } else {
        const Value target = twice_sum / 2;
        rep.magic_sum = target;
        for (int i = 0; i < n && rep.row_sum_ok.ok; ++i)
            if (rsum[i] != target) {
                std::ostringstream os;
                os << "row " << i << " sums to " << rsum[i] << ", expected " << target;
                rep.row_sum_ok = detail::fail(os.str());
            }
        for (int j = 0; j < n && rep.col_sum_ok.ok; ++j)
            if (csum[j] != target) {
                std::ostringstream os;
                os << "column " << j << " sums to " << csum[j] << ", expected " << target;
                rep.col_sum_ok = detail::fail(os.str());
            }
    }

    BandScan scan = occupied_band(s);
    if (scan.band) {
        rep.band = scan.band;
    } else {
        std::ostringstream os;
        os << "occupied diagonals " << detail::join_diagonals(scan.occupied)
           << " do not form one run of width k=" << k;
        rep.band_ok = detail::fail(os.str());
    }

    return rep;
}

}  // namespace kdiag
