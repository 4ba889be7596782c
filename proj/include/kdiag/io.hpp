#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string_view>

#include <json.hpp>

#include "kdiag/core.hpp"

// Serialization for candidate and generated squares. Empty cells are
// structural (0 is a legal entry), so both formats list or mark filled cells
// explicitly instead of writing dense zero-filled matrices:
//
//   JSON  {"n": 9, "k": 3, "cells": [{"row": 0, "col": 6, "value": 4}, ...]}
//   CSV   header line "n=<n>,k=<k>", then n rows of n comma-separated
//         fields, an empty field being an empty cell
//
// Values are plain decimal with no padding, and cells are ordered by
// (row, col), so encoding is byte-deterministic. Decoding rejects anything
// structurally unrepresentable (bad syntax, duplicate cells, cells outside
// the grid) with ParseError; violations of the magic-square definition
// itself are verify()'s job, so e.g. k > n or a wrong value set decode fine
// and fail verification instead.

namespace kdiag {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// practical ceilings on external input: verification allocates O(n) per line
// direction, and capping |value| at the largest legal entry for the largest
// order (kn-1 < 10^12) keeps every line sum inside 64 bits
inline constexpr int max_decoded_order = 1'000'000;
inline constexpr Value max_decoded_value = 1'000'000'000'000LL;

inline int require_int(const nlohmann::json& j, const char* field, long long lo, long long hi) {
    if (!j.contains(field) || !j.at(field).is_number_integer()) {
        std::ostringstream os;
        os << "missing or non-integer field \"" << field << "\"";
        throw ParseError(os.str());
    }
    const long long v = j.at(field).get<long long>();
    if (v < lo || v > hi) {
        std::ostringstream os;
        os << "field \"" << field << "\" value " << v << " outside [" << lo << ", " << hi << "]";
        throw ParseError(os.str());
    }
    return static_cast<int>(v);
}

inline Value parse_value(std::string_view text, int row, int col) {
    Value v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        std::ostringstream os;
        os << "cell (" << row << ", " << col << "): not an integer: \""
           << std::string(text) << "\"";
        throw ParseError(os.str());
    }
    if (v < -max_decoded_value || v > max_decoded_value) {
        std::ostringstream os;
        os << "cell (" << row << ", " << col << "): value " << v << " out of range";
        throw ParseError(os.str());
    }
    return v;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace detail

inline std::string encode_json(const SparseSquare& s) {
    nlohmann::json doc;
    doc["n"] = s.order();
    doc["k"] = s.k();
    doc["cells"] = nlohmann::json::array();
    for (const auto& [c, v] : s.entries())
        doc["cells"].push_back({{"row", c.row}, {"col", c.col}, {"value", v}});
    return doc.dump();
}

inline SparseSquare decode_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level is not an object");
    const int n = detail::require_int(doc, "n", 1, detail::max_decoded_order);
    const int k = detail::require_int(doc, "k", 0, std::numeric_limits<int>::max());
    if (!doc.contains("cells") || !doc.at("cells").is_array())
        throw ParseError("missing or non-array field \"cells\"");

    SparseSquare s(n, k);
    for (const auto& rec : doc.at("cells")) {
        if (!rec.is_object()) throw ParseError("cell record is not an object");
        const int row = detail::require_int(rec, "row", 0, n - 1);
        const int col = detail::require_int(rec, "col", 0, n - 1);
        if (!rec.contains("value") || !rec.at("value").is_number_integer())
            throw ParseError("missing or non-integer field \"value\"");
        const Value v = rec.at("value").get<Value>();
        if (v < -detail::max_decoded_value || v > detail::max_decoded_value) {
            std::ostringstream os;
            os << "cell (" << row << ", " << col << "): value " << v << " out of range";
            throw ParseError(os.str());
        }
        if (s.at({row, col})) {
            std::ostringstream os;
            os << "duplicate cell (" << row << ", " << col << ")";
            throw ParseError(os.str());
        }
        s.set({row, col}, v);
    }
    return s;
}

inline std::string encode_csv(const SparseSquare& s) {
    const int n = s.order();
    std::ostringstream os;
    os << "n=" << n << ",k=" << s.k() << "\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) os << ",";
            if (auto v = s.at({i, j})) os << *v;
        }
        os << "\n";
    }
    return os.str();
}

inline SparseSquare decode_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty input");

    int n = 0, k = 0;
    {
        const std::string_view header = detail::trim(line);
        int consumed = -1;
        if (std::sscanf(std::string(header).c_str(), "n=%d,k=%d%n", &n, &k, &consumed) != 2 ||
            consumed != static_cast<int>(header.size()))
            throw ParseError("header must be \"n=<n>,k=<k>\", got \"" + std::string(header) + "\"");
    }
    if (n < 1 || n > detail::max_decoded_order) throw ParseError("order out of range");
    if (k < 0) throw ParseError("fill count must be nonnegative");

    SparseSquare s(n, k);
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line)) {
            std::ostringstream os;
            os << "expected " << n << " rows, got " << i;
            throw ParseError(os.str());
        }
        std::vector<std::string_view> fields;
        std::string_view rest = detail::trim(line);
        while (true) {
            const std::size_t comma = rest.find(',');
            if (comma == std::string_view::npos) {
                fields.push_back(detail::trim(rest));
                break;
            }
            fields.push_back(detail::trim(rest.substr(0, comma)));
            rest.remove_prefix(comma + 1);
        }
        if (static_cast<int>(fields.size()) != n) {
            std::ostringstream os;
            os << "row " << i << ": expected " << n << " fields, got " << fields.size();
            throw ParseError(os.str());
        }
        for (int j = 0; j < n; ++j)
            if (!fields[j].empty()) s.set({i, j}, detail::parse_value(fields[j], i, j));
    }
    while (std::getline(in, line))
        if (!detail::trim(line).empty()) throw ParseError("trailing content after the grid");
    return s;
}

/// Plain grid, one row per line: every cell rendered right-aligned in the
/// width of kn-1, empty cells as spaces, fields separated by one space.
inline std::string render_ascii(const SparseSquare& s) {
    const int n = s.order();
    std::size_t width = std::to_string(std::max<Value>(static_cast<Value>(s.k()) * n - 1, 0)).size();
    for (const auto& [c, v] : s.entries()) width = std::max(width, std::to_string(v).size());

    std::ostringstream os;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) os << ' ';
            if (auto v = s.at({i, j})) {
                const std::string digits = std::to_string(*v);
                os << std::string(width - digits.size(), ' ') << digits;
            } else {
                os << std::string(width, ' ');
            }
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace kdiag
