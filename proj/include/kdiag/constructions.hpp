#pragma once

#include "kdiag/core.hpp"

// Direct constructions for k = 3, 4, 5, 6 (plus the trivial order-1 square).
// Each fills k diagonal families of an empty order-n square with closed-form
// triples (row, col, value); row and column indices are reduced mod n, so
// the diagonals wrap. Wider squares are assembled from these in compose.hpp.

namespace kdiag {

namespace detail {

inline int wrap(int x, int n) {
    int r = x % n;
    return r < 0 ? r + n : r;
}

/// Exact halving; an odd numerator means a transcription error in a
/// construction formula, so fail loudly instead of truncating.
inline Value half(Value x) {
    if (x % 2 != 0) throw std::logic_error("construction formula produced an odd numerator");
    return x / 2;
}

}  // namespace detail

/// The order-1 square holding the single entry 0; magic sum 0.
inline SparseSquare construct_trivial() {
    SparseSquare s(1, 1);
    s.set({0, 0}, 0);
    return s;
}

/// 3 filled diagonals {n-3, n-2, n-1}; requires n odd, n >= 3. Magic sum
/// 3(3n-1)/2. Diagonal n-3 holds {0..n-1}, n-2 holds {2n..3n-1}, n-1 holds
/// {n..2n-1}.
inline SparseSquare construct_k3(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("construct_k3: order must be odd and at least 3");
    SparseSquare s(n, 3);
    auto put = [&](int i, int j, Value e) { s.set({detail::wrap(i, n), detail::wrap(j, n)}, e); };

    // diagonal n-3, split by row parity
    for (int i = 0; i <= (n - 1) / 2; ++i) put(2 * i, n + 2 * i - 3, detail::half(n - 2 * i - 1));
    for (int i = 0; i <= (n - 3) / 2; ++i) put(2 * i + 1, n + 2 * i - 2, n - i - 1);
    // diagonal n-2
    for (int i = 0; i < n; ++i) put(i, n + i - 2, 2LL * n + i);
    // diagonal n-1, split by row parity
    for (int i = 0; i <= (n - 1) / 2; ++i) put(2 * i, n + 2 * i - 1, 2LL * n - i - 1);
    for (int i = 0; i <= (n - 3) / 2; ++i) put(2 * i + 1, 2 * i, detail::half(3LL * n - 2 * i - 3));

    if (s.entries().size() != static_cast<std::size_t>(3 * n))
        throw std::logic_error("construct_k3: diagonal families did not fill 3n cells");
    return s;
}

/// 4 filled diagonals {1, 2, 3, 4} (mod n); requires n >= 4. Magic sum 8n-2.
inline SparseSquare construct_k4(int n) {
    if (n < 4) throw std::invalid_argument("construct_k4: order must be at least 4");
    SparseSquare s(n, 4);
    auto put = [&](int i, int j, Value e) { s.set({detail::wrap(i, n), detail::wrap(j, n)}, e); };

    for (int i = 0; i < n; ++i) put(i, i + 1, i);                       // diagonal 1: 0..n-1
    for (int i = 0; i < n; ++i) put(i, i + 2, 4LL * n - i - 1);         // diagonal 2: 3n..4n-1
    for (int i = 0; i < n; ++i) put(n + i - 2, i + 1, 3LL * n - i - 1); // diagonal 3: 2n..3n-1
    for (int i = 0; i < n; ++i) put(n + i - 2, i + 2, 1LL * n + i);     // diagonal 4: n..2n-1

    if (s.entries().size() != static_cast<std::size_t>(4 * n))
        throw std::logic_error("construct_k4: diagonal families did not fill 4n cells");
    return s;
}

/// 5 filled diagonals {1..5}; requires n odd, n >= 5. Magic sum 5(5n-1)/2.
/// Diagonal d holds exactly {n(d-1)..nd-1}. Diagonals 2 and 4 are each split
/// into two index-parity families; the family bounds are the most fragile
/// part of the formula table, so the cell counts are asserted per diagonal.
inline SparseSquare construct_k5(int n) {
    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("construct_k5: order must be odd and at least 5");
    SparseSquare s(n, 5);
    auto put = [&](int i, int j, Value e) { s.set({detail::wrap(i, n), detail::wrap(j, n)}, e); };
    auto expect_filled = [&](int count, const char* which) {
        if (s.entries().size() != static_cast<std::size_t>(count)) {
            std::ostringstream os;
            os << "construct_k5: " << which << " family counts are off at n=" << n;
            throw std::logic_error(os.str());
        }
    };

    // diagonal 1: 0..n-1
    for (int i = 0; i < n; ++i) put(i, i + 1, i);
    // diagonal 2: n..2n-1, split families of (n+1)/2 and (n-1)/2 cells
    for (int i = 0; i <= (n - 1) / 2; ++i) put(n + 2 * i - 1, 2 * i + 1, 2LL * n - i - 1);
    for (int i = 0; i <= (n - 3) / 2; ++i) put(2 * i, 2 * i + 2, detail::half(3LL * n - 3) - i);
    expect_filled(2 * n, "diagonal 2");
    // diagonal 3: 2n..3n-1
    for (int i = 0; i < n; ++i) put(i, i + 3, 3LL * n - i - 1);
    // diagonal 4: 3n..4n-1, split like diagonal 2
    for (int i = 0; i <= (n - 1) / 2; ++i) put(n + 2 * i - 2, 2 * i + 2, 4LL * n - i - 1);
    for (int i = 0; i <= (n - 3) / 2; ++i) put(n + 2 * i - 1, 2 * i + 3, detail::half(7LL * n - 3) - i);
    expect_filled(4 * n, "diagonal 4");
    // diagonal 5: 4n..5n-1
    for (int i = 0; i < n; ++i) put(n + i - 2, i + 3, 4LL * n + i);
    expect_filled(5 * n, "diagonal 5");
    return s;
}

/// 6 filled diagonals {1..6} (mod n); requires n >= 6. Magic sum 18n-3.
/// Diagonals 1-4 hold {n(d-1)..nd-1}; diagonal 5 holds the even values
/// {4n, 4n+2, ..., 6n-2} and diagonal 6 the odd values {4n+1, ..., 6n-1}.
inline SparseSquare construct_k6(int n) {
    if (n < 6) throw std::invalid_argument("construct_k6: order must be at least 6");
    SparseSquare s(n, 6);
    auto put = [&](int i, int j, Value e) { s.set({detail::wrap(i, n), detail::wrap(j, n)}, e); };

    for (int i = 0; i < n; ++i) put(i, i + 1, i);
    for (int i = 0; i < n; ++i) put(n - 1 + i, i + 1, 2LL * n - 1 - i);
    for (int i = 0; i < n; ++i) put(i, i + 3, 2LL * n + i);
    for (int i = 0; i < n; ++i) put(n - 1 + i, i + 3, 4LL * n - 1 - i);
    for (int i = 0; i < n; ++i) put(i, i + 5, 6LL * n - 2 - 2 * i);
    for (int i = 0; i < n; ++i) put(n - 1 + i, i + 5, 4LL * n + 1 + 2 * i);

    if (s.entries().size() != static_cast<std::size_t>(6 * n))
        throw std::logic_error("construct_k6: diagonal families did not fill 6n cells");
    return s;
}

}  // namespace kdiag
