#pragma once

#include <set>
#include <variant>

#include "kdiag/constructions.hpp"

// Assembly of k-diagonal magic squares for arbitrary feasible (n, k): cyclic
// shifts and value offsets preserve the magic property, two squares on
// adjacent disjoint bands superimpose into one wider square, and every
// feasible k decomposes into base widths (3/4/5 for odd n, 4/6 for even n).

namespace kdiag {

/// Cyclic translate: every entry (i, j) moves to (i+dr, j+dc) mod n. Row
/// shifts permute rows and column shifts permute columns, so every line sum
/// survives; the band start moves by (dc - dr) mod n.
inline SparseSquare shift(const SparseSquare& s, int dr, int dc) {
    const int n = s.order();
    SparseSquare out(n, s.k());
    for (const auto& [c, v] : s.entries())
        out.set({detail::wrap(c.row + dr, n), detail::wrap(c.col + dc, n)}, v);
    return out;
}

/// A square whose values have all been raised by a constant. Its value set
/// {m, ..., kn-1+m} deliberately breaks the SparseSquare invariant, so it is
/// a separate transient type: produced by add_offset, consumed by
/// superimpose, never serialized.
class OffsetSquare {
public:
    int order() const { return n_; }
    int k() const { return k_; }
    Value offset() const { return m_; }
    const std::map<Cell, Value>& entries() const { return entries_; }

private:
    friend OffsetSquare add_offset(const SparseSquare&, Value);
    OffsetSquare(int n, int k, Value m) : n_(n), k_(k), m_(m) {}

    int n_;
    int k_;
    Value m_;
    std::map<Cell, Value> entries_;
};

/// Raises every value by m. Every row and column of the result sums to
/// k*m + k(nk-1)/2.
inline OffsetSquare add_offset(const SparseSquare& s, Value m) {
    OffsetSquare out(s.order(), s.k(), m);
    for (const auto& [c, v] : s.entries()) out.entries_.emplace(c, v + m);
    return out;
}

inline std::vector<Value> row_sums(const OffsetSquare& s) {
    std::vector<Value> sums(s.order(), 0);
    for (const auto& [c, v] : s.entries()) sums[c.row] += v;
    return sums;
}

inline std::vector<Value> col_sums(const OffsetSquare& s) {
    std::vector<Value> sums(s.order(), 0);
    for (const auto& [c, v] : s.entries()) sums[c.col] += v;
    return sums;
}

/// Merges an l-diagonal square `a` and an m-diagonal square `b` of the same
/// order whose bands are disjoint and jointly consecutive: `a`'s entries are
/// kept as-is, `b`'s values are raised by l*n, and the result is an
/// (l+m)-diagonal magic square. Pre: both inputs verify.
inline SparseSquare superimpose(const SparseSquare& a, const SparseSquare& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("superimpose: order mismatch");
    const int n = a.order();
    const int combined = a.k() + b.k();
    if (combined > n)
        throw std::invalid_argument("superimpose: combined fill count exceeds the order");
    for (const auto& [c, v] : b.entries())
        if (a.at(c)) {
            std::ostringstream os;
            os << "superimpose: cell (" << c.row << ", " << c.col << ") is filled in both squares";
            throw std::invalid_argument(os.str());
        }

    std::set<int> joint;
    for (const auto& [c, v] : a.entries()) joint.insert(diagonal_index(c, n));
    for (const auto& [c, v] : b.entries()) joint.insert(diagonal_index(c, n));
    const std::vector<int> occupied(joint.begin(), joint.end());
    const bool one_run =
        static_cast<int>(occupied.size()) == combined &&
        (combined == n || detail::run_start(occupied, n).has_value());
    if (!one_run) {
        std::ostringstream os;
        os << "superimpose: occupied diagonals " << detail::join_diagonals(occupied)
           << " do not form one run of width " << combined;
        throw std::invalid_argument(os.str());
    }

    SparseSquare out(n, combined);
    for (const auto& [c, v] : a.entries()) out.set(c, v);
    const OffsetSquare lifted = add_offset(b, static_cast<Value>(a.k()) * n);
    for (const auto& [c, v] : lifted.entries()) out.set(c, v);
    return out;
}

/// Existence of a k-diagonal magic square of order n: exactly when n = k = 1,
/// or 3 <= k <= n with n odd or k even.
inline bool exists(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("exists: n and k must be positive");
    if (n == 1 && k == 1) return true;
    return 3 <= k && k <= n && (n % 2 == 1 || k % 2 == 0);
}

enum class NonexistenceReason {
    KBelowMinimum,  // k < 3 with n > 1: no such square
    KExceedsOrder,  // k > n: more filled cells per line than columns
    ParityConflict, // n even, k odd: magic sum k(kn-1)/2 is not an integer
};

struct Nonexistence {
    NonexistenceReason reason;
};

inline const char* describe(NonexistenceReason r) {
    switch (r) {
        case NonexistenceReason::KBelowMinimum: return "k must be at least 3 (or n = k = 1)";
        case NonexistenceReason::KExceedsOrder: return "k cannot exceed the order n";
        case NonexistenceReason::ParityConflict:
            return "n even with k odd leaves no integer magic sum k(kn-1)/2";
    }
    return "unknown";
}

/// Classifies why (n, k) is infeasible. Pre: exists(n, k) is false.
inline Nonexistence nonexistence_reason(int n, int k) {
    if (exists(n, k)) throw std::invalid_argument("nonexistence_reason: (n, k) is feasible");
    if (k > n) return {NonexistenceReason::KExceedsOrder};
    if (k < 3) return {NonexistenceReason::KBelowMinimum};
    return {NonexistenceReason::ParityConflict};
}

/// An ordered list of base widths (3/4/5/6, or the lone 1) summing to k.
using Decomposition = std::vector<int>;

/// Canonical decomposition of k into base widths, largest part first:
/// for odd n, k mod 3 picks all 3s, one 4 plus 3s, or one 5 plus 3s; for
/// even n (k even), k mod 4 picks all 4s or one 6 plus 4s. n = k = 1 gives
/// [1]. Every part satisfies its base construction's precondition.
inline Decomposition decompose_k(int n, int k) {
    if (!exists(n, k)) throw std::invalid_argument("decompose_k: no such square exists");
    if (n == 1) return {1};
    Decomposition parts;
    if (n % 2 == 1) {
        switch (k % 3) {
            case 1: parts.push_back(4); k -= 4; break;
            case 2: parts.push_back(5); k -= 5; break;
        }
        parts.insert(parts.end(), k / 3, 3);
    } else {
        if (k % 4 != 0) {
            parts.push_back(6);
            k -= 6;
        }
        parts.insert(parts.end(), k / 4, 4);
    }
    return parts;
}

/// Column-shifts a verified square so its band starts at diagonal 0.
inline SparseSquare normalize_band(const SparseSquare& s) {
    BandScan scan = occupied_band(s);
    if (!scan.band)
        throw std::invalid_argument("normalize_band: occupied diagonals do not form a band");
    return shift(s, 0, (s.order() - scan.band->start) % s.order());
}

using GenerateResult = std::variant<SparseSquare, Nonexistence>;

namespace detail {

inline SparseSquare base_construction(int part, int n) {
    switch (part) {
        case 1: return construct_trivial();
        case 3: return construct_k3(n);
        case 4: return construct_k4(n);
        case 5: return construct_k5(n);
        case 6: return construct_k6(n);
    }
    throw std::logic_error("base_construction: unsupported part width");
}

}  // namespace detail

/// Builds the canonical k-diagonal magic square of order n, or reports why
/// none exists. Base squares from the canonical decomposition are normalized,
/// column-shifted so their bands stack left-to-right from diagonal 0, and
/// folded with superimpose; the result always has band {0, ..., k-1} and is
/// deterministic.
inline GenerateResult generate(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("generate: n and k must be positive");
    if (!exists(n, k)) return nonexistence_reason(n, k);

    const Decomposition parts = decompose_k(n, k);
    SparseSquare acc = normalize_band(detail::base_construction(parts[0], n));
    int placed = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        SparseSquare next = normalize_band(detail::base_construction(parts[i], n));
        acc = superimpose(acc, shift(next, 0, placed));
        placed += parts[i];
    }
    return acc;
}

}  // namespace kdiag
