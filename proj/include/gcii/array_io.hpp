#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "gcii/codec.hpp"

namespace gcii {

namespace detail {

inline std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) lines.push_back(line);
    while (!lines.empty() && trimmed(lines.back()).empty()) lines.pop_back();
    return lines;
}

}  // namespace detail

/// Parses an array file: one line per array row, comma-separated tokens, each
/// a field element ("0", "1", "a", "a^k", or a decimal value) or "E" for an
/// erased cell. Throws ParseError with 1-based line/column positions.
inline ArrayWord parse_array(const std::string& text, const Field& field, int expect_rows = -1,
                             int expect_cols = -1) {
    const std::vector<std::string> lines = detail::split_lines(text);
    if (lines.empty()) throw ParseError("array file is empty");

    std::vector<std::vector<std::string>> tokens;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::vector<std::string> row;
        std::stringstream ss(lines[li]);
        std::string tok;
        while (std::getline(ss, tok, ',')) row.push_back(detail::trimmed(tok));
        if (row.empty()) throw ParseError("empty array row", li + 1, 1);
        tokens.push_back(std::move(row));
    }

    const int rows = static_cast<int>(tokens.size());
    const int cols = static_cast<int>(tokens[0].size());
    if (expect_rows > 0 && rows != expect_rows)
        throw ParseError("expected " + std::to_string(expect_rows) + " rows, found " + std::to_string(rows));
    if (expect_cols > 0 && cols != expect_cols)
        throw ParseError("expected " + std::to_string(expect_cols) + " columns, found " +
                         std::to_string(tokens[0].size()), 1, 1);

    ArrayWord word(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(tokens[static_cast<std::size_t>(r)].size()) != cols)
            throw ParseError("ragged row: expected " + std::to_string(cols) + " tokens",
                             static_cast<std::size_t>(r) + 1, tokens[static_cast<std::size_t>(r)].size());
        for (int c = 0; c < cols; ++c) {
            const std::string& tok = tokens[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (tok == "E") {
                word.erasures.set(r, c);
                continue;
            }
            try {
                word.set(r, c, field.parse(tok));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), static_cast<std::size_t>(r) + 1, static_cast<std::size_t>(c) + 1);
            }
        }
    }
    return word;
}

/// Writes an array in the same grammar; erased cells come out as "E".
inline std::string format_array(const ArrayWord& word, const Field& field, Notation notation) {
    std::string out;
    for (int r = 0; r < word.rows(); ++r) {
        for (int c = 0; c < word.cols(); ++c) {
            if (c) out += ',';
            out += word.erasures.at(r, c) ? "E" : field.format(word.at(r, c), notation);
        }
        out += '\n';
    }
    return out;
}

/// Parses a 0/1 grid with the array-file layout.
inline ErasurePattern parse_mask(const std::string& text, int expect_rows = -1, int expect_cols = -1) {
    const std::vector<std::string> lines = detail::split_lines(text);
    if (lines.empty()) throw ParseError("mask file is empty");
    std::vector<std::vector<int>> grid;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::vector<int> row;
        std::stringstream ss(lines[li]);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            const std::string t = detail::trimmed(tok);
            if (t == "0")
                row.push_back(0);
            else if (t == "1")
                row.push_back(1);
            else
                throw ParseError("mask token must be 0 or 1, got '" + t + "'", li + 1, row.size() + 1);
        }
        grid.push_back(std::move(row));
    }
    const int rows = static_cast<int>(grid.size());
    const int cols = static_cast<int>(grid[0].size());
    if (expect_rows > 0 && rows != expect_rows)
        throw ParseError("expected " + std::to_string(expect_rows) + " mask rows");
    if (expect_cols > 0 && cols != expect_cols)
        throw ParseError("expected " + std::to_string(expect_cols) + " mask columns");
    ErasurePattern mask(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(grid[static_cast<std::size_t>(r)].size()) != cols)
            throw ParseError("ragged mask row", static_cast<std::size_t>(r) + 1, 1);
        for (int c = 0; c < cols; ++c)
            if (grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) mask.set(r, c);
    }
    return mask;
}

inline std::string format_mask(const ErasurePattern& mask) {
    std::string out;
    for (int r = 0; r < mask.rows(); ++r) {
        for (int c = 0; c < mask.cols(); ++c) {
            if (c) out += ',';
            out += mask.at(r, c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

/// Parses a flat symbol list (data files): tokens separated by commas,
/// spaces or newlines.
inline std::vector<gf> parse_symbols(const std::string& text, const Field& field) {
    std::vector<gf> out;
    const std::vector<std::string> lines = detail::split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::string normalized = lines[li];
        for (char& ch : normalized)
            if (ch == ',' || ch == '\t') ch = ' ';
        std::istringstream ss(normalized);
        std::string tok;
        std::size_t col = 0;
        while (ss >> tok) {
            ++col;
            try {
                out.push_back(field.parse(tok));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), li + 1, col);
            }
        }
    }
    return out;
}

inline std::string format_symbols(std::span<const gf> symbols, const Field& field, Notation notation) {
    std::string out;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i) out += ',';
        out += field.format(symbols[i], notation);
    }
    out += '\n';
    return out;
}

/// Matrix dump, one line per row, comma-separated.
inline std::string format_matrix(const Matrix& m, Notation notation) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ',';
            out += m.field()->format(m(r, c), notation);
        }
        out += '\n';
    }
    return out;
}

}  // namespace gcii
