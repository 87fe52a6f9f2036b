#pragma once

#include <string>
#include <vector>

#include "gcii/array_io.hpp"
#include "gcii/codec.hpp"
#include "gcii/matrix.hpp"

namespace gcii_test {

inline gcii::FieldPtr gf8() {
    static gcii::FieldPtr f = gcii::field_new(3, 0xB);
    return f;
}

inline gcii::Matrix from_tokens(const gcii::FieldPtr& f, const std::vector<std::vector<std::string>>& rows) {
    gcii::Matrix m(f, rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m(r, c) = f->parse(rows[r][c]);
    return m;
}

// Expected parity-check matrices over GF(8), one line per row, transcribed
// from the reference displays. Power tokens only; zeros written as 0.
inline const char* golden_h_11_33 =
    "1,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0\n"
    "0,0,0,0,0,1,1,1,1,1,0,0,0,0,0,0,0,0,0,0\n"
    "0,0,0,0,0,0,0,0,0,0,1,1,1,1,1,0,0,0,0,0\n"
    "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1,1,1,1\n"
    "a^4,a^3,a^2,a,1,a^4,a^3,a^2,a,1,a^4,a^3,a^2,a,1,a^4,a^3,a^2,a,1\n"
    "a^8,a^6,a^4,a^2,1,a^8,a^6,a^4,a^2,1,a^8,a^6,a^4,a^2,1,a^8,a^6,a^4,a^2,1\n"
    "a^4,a^3,a^2,a,1,a^3,a^2,a,1,a^-1,a^2,a,1,a^-1,a^-2,a,1,a^-1,a^-2,a^-3\n"
    "a^8,a^6,a^4,a^2,1,a^7,a^5,a^3,a,a^-1,a^6,a^4,a^2,1,a^-2,a^5,a^3,a,a^-1,a^-3\n";

inline const char* golden_h_22_33 =
    "1,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0\n"
    "a^4,a^3,a^2,a,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0\n"
    "0,0,0,0,0,1,1,1,1,1,0,0,0,0,0,0,0,0,0,0\n"
    "0,0,0,0,0,a^4,a^3,a^2,a,1,0,0,0,0,0,0,0,0,0,0\n"
    "0,0,0,0,0,0,0,0,0,0,1,1,1,1,1,0,0,0,0,0\n"
    "0,0,0,0,0,0,0,0,0,0,a^4,a^3,a^2,a,1,0,0,0,0,0\n"
    "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1,1,1,1\n"
    "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,a^4,a^3,a^2,a,1\n"
    "a^8,a^6,a^4,a^2,1,a^8,a^6,a^4,a^2,1,a^8,a^6,a^4,a^2,1,a^8,a^6,a^4,a^2,1\n"
    "a^8,a^6,a^4,a^2,1,a^7,a^5,a^3,a,a^-1,a^6,a^4,a^2,1,a^-2,a^5,a^3,a,a^-1,a^-3\n";

inline const char* golden_h_22_44 =
    "1,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0\n"
    "a^4,a^3,a^2,a,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0\n"
    "0,0,0,0,0,1,1,1,1,1,0,0,0,0,0,0,0,0,0,0\n"
    "0,0,0,0,0,a^4,a^3,a^2,a,1,0,0,0,0,0,0,0,0,0,0\n"
    "0,0,0,0,0,0,0,0,0,0,1,1,1,1,1,0,0,0,0,0\n"
    "0,0,0,0,0,0,0,0,0,0,a^4,a^3,a^2,a,1,0,0,0,0,0\n"
    "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1,1,1,1\n"
    "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,a^4,a^3,a^2,a,1\n"
    "a^8,a^6,a^4,a^2,1,a^8,a^6,a^4,a^2,1,a^8,a^6,a^4,a^2,1,a^8,a^6,a^4,a^2,1\n"
    "a^12,a^9,a^6,a^3,1,a^12,a^9,a^6,a^3,1,a^12,a^9,a^6,a^3,1,a^12,a^9,a^6,a^3,1\n"
    "a^8,a^6,a^4,a^2,1,a^7,a^5,a^3,a,a^-1,a^6,a^4,a^2,1,a^-2,a^5,a^3,a,a^-1,a^-3\n"
    "a^12,a^9,a^6,a^3,1,a^11,a^8,a^5,a^2,a^-1,a^10,a^7,a^4,a,a^-2,a^9,a^6,a^3,1,a^-3\n";

inline const char* golden_h_11_23 =
    "1,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0\n"
    "0,0,0,0,0,1,1,1,1,1,0,0,0,0,0,0,0,0,0,0\n"
    "0,0,0,0,0,0,0,0,0,0,1,1,1,1,1,0,0,0,0,0\n"
    "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1,1,1,1\n"
    "a^4,a^3,a^2,a,1,a^4,a^3,a^2,a,1,a^4,a^3,a^2,a,1,a^4,a^3,a^2,a,1\n"
    "a^8,a^6,a^4,a^2,1,a^8,a^6,a^4,a^2,1,a^8,a^6,a^4,a^2,1,a^8,a^6,a^4,a^2,1\n"
    "a^4,a^3,a^2,a,1,a^3,a^2,a,1,a^-1,a^2,a,1,a^-1,a^-2,a,1,a^-1,a^-2,a^-3\n";

inline const char* golden_h_12_23 =
    "1,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0\n"
    "0,0,0,0,0,1,1,1,1,1,0,0,0,0,0,0,0,0,0,0\n"
    "0,0,0,0,0,0,0,0,0,0,1,1,1,1,1,0,0,0,0,0\n"
    "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1,1,1,1\n"
    "a^4,a^3,a^2,a,1,a^4,a^3,a^2,a,1,a^4,a^3,a^2,a,1,a^4,a^3,a^2,a,1\n"
    "a^8,a^6,a^4,a^2,1,a^8,a^6,a^4,a^2,1,a^8,a^6,a^4,a^2,1,a^8,a^6,a^4,a^2,1\n"
    "a^4,a^3,a^2,a,1,a^3,a^2,a,1,a^-1,a^2,a,1,a^-1,a^-2,a,1,a^-1,a^-2,a^-3\n"
    "a^4,a^3,a^2,a,1,a^2,a,1,a^-1,a^-2,1,a^-1,a^-2,a^-3,a^-4,a^-2,a^-3,a^-4,a^-5,a^-6\n";

inline gcii::Matrix matrix_from_text(const gcii::FieldPtr& f, const std::string& text) {
    const gcii::ArrayWord w = gcii::parse_array(text, *f);
    gcii::Matrix m(f, static_cast<std::size_t>(w.rows()), static_cast<std::size_t>(w.cols()));
    for (int r = 0; r < w.rows(); ++r)
        for (int c = 0; c < w.cols(); ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = w.at(r, c);
    return m;
}

// Received and decoded 4x5 arrays of the worked decode over GF(8).
inline const char* example_received =
    "E,a^3,1,E,0\n"
    "a^6,E,E,E,E\n"
    "a^6,E,a^5,E,1\n"
    "a^4,0,a,E,a^3\n";

inline const char* example_decoded =
    "a^5,a^3,1,a^6,0\n"
    "a^6,0,a^3,1,a^5\n"
    "a^6,a^5,a^5,a^2,1\n"
    "a^4,0,a,a^5,a^3\n";

}  // namespace gcii_test
