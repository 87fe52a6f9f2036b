#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "gcii/codec.hpp"

namespace gcii {

/// Outcome of a direct linear-system solve over the full parity-check
/// matrix. solvable iff the erased columns are linearly independent.
struct OracleReport {
    bool solvable = false;
    std::vector<int> coords;   // erased cell indices, row-major
    std::vector<gf> solution;  // recovered values in coords order (when solvable)
};

/// Solves the erasures of a received word straight from the full check
/// matrix: the erased columns of H against the word's syndrome, by Gaussian
/// elimination on the (possibly overdetermined) system.
inline OracleReport brute_solve(const GcCode& code, const ArrayWord& word) {
    if (word.rows() != code.m() || word.cols() != code.n()) throw ShapeMismatch("word shape does not match code");
    const Field& f = *code.field();
    OracleReport report;
    report.coords = word.erasures.erased_coords();
    const std::size_t e = report.coords.size();

    std::vector<gf> received = word.grid;
    for (int coord : report.coords) received[static_cast<std::size_t>(coord)] = 0;
    std::vector<gf> synd = code.h().multiply(received);
    if (e == 0) {
        report.solvable = true;
        return report;
    }

    // augmented system [H_E | s], eliminated column by column
    const Matrix sub = code.h().columns(report.coords);
    const std::size_t rows = sub.rows();
    Matrix m = sub;
    std::vector<gf> b = synd;
    std::vector<std::size_t> pivot_rows;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < e && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m(pivot, c) == 0) ++pivot;
        if (pivot == rows) return report;  // dependent columns: not uniquely solvable
        if (pivot != rank) {
            for (std::size_t j = 0; j < e; ++j) std::swap(m(rank, j), m(pivot, j));
            std::swap(b[rank], b[pivot]);
        }
        const gf inv = f.inv(m(rank, c));
        for (std::size_t j = 0; j < e; ++j) m(rank, j) = f.mul(m(rank, j), inv);
        b[rank] = f.mul(b[rank], inv);
        for (std::size_t q = 0; q < rows; ++q) {
            if (q == rank) continue;
            const gf coef = m(q, c);
            if (coef == 0) continue;
            for (std::size_t j = c; j < e; ++j) m(q, j) ^= f.mul(coef, m(rank, j));
            b[q] ^= f.mul(coef, b[rank]);
        }
        ++rank;
    }
    if (rank < e) return report;
    for (std::size_t q = rank; q < rows; ++q)
        if (b[q] != 0) return report;  // inconsistent: word is not a punctured codeword

    report.solvable = true;
    report.solution.assign(e, 0);
    for (std::size_t i = 0; i < e; ++i) report.solution[i] = b[i];
    return report;
}

struct DistanceResult {
    std::optional<int> distance;       // empty when no dependency within the cap
    std::vector<int> witness_columns;  // first dependent column set found
};

/// Exhaustive minimum distance: the smallest w <= cap for which some w
/// columns of H are linearly dependent. Subsets are visited in lexicographic
/// order with an incremental elimination state, so the first witness found is
/// deterministic.
inline DistanceResult min_distance_search(const GcCode& code, int cap) {
    const Field& f = *code.field();
    const Matrix& h = code.h();
    const int cols = static_cast<int>(h.cols());
    const std::size_t rows = h.rows();

    // basis rows kept in echelon form; pivot_col[i] is the pivot of basis[i]
    std::vector<std::vector<gf>> basis;
    std::vector<std::size_t> pivot_cols;
    std::vector<int> chosen;

    auto reduce = [&](std::vector<gf>& v) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const gf c = v[pivot_cols[i]];
            if (c == 0) continue;
            const std::vector<gf>& b = basis[i];
            for (std::size_t j = 0; j < rows; ++j)
                if (b[j] != 0) v[j] ^= f.mul(c, b[j]);
        }
    };

    DistanceResult result;
    // depth-first over column subsets of exact size w; every proper prefix is
    // independent because smaller weights were exhausted first
    std::function<bool(int, int)> extend = [&](int start, int remaining) -> bool {
        for (int c = start; c <= cols - remaining; ++c) {
            std::vector<gf> v(rows);
            for (std::size_t i = 0; i < rows; ++i) v[i] = h(i, static_cast<std::size_t>(c));
            reduce(v);
            std::size_t pivot = 0;
            while (pivot < rows && v[pivot] == 0) ++pivot;
            if (pivot == rows) {
                if (remaining == 1) {
                    chosen.push_back(c);
                    return true;
                }
                continue;  // dependent early; handled at the smaller weight
            }
            if (remaining == 1) continue;
            const gf inv = f.inv(v[pivot]);
            for (std::size_t j = 0; j < rows; ++j) v[j] = f.mul(v[j], inv);
            basis.push_back(std::move(v));
            pivot_cols.push_back(pivot);
            chosen.push_back(c);
            if (extend(c + 1, remaining - 1)) return true;
            chosen.pop_back();
            basis.pop_back();
            pivot_cols.pop_back();
        }
        return false;
    };

    for (int w = 1; w <= cap; ++w) {
        basis.clear();
        pivot_cols.clear();
        chosen.clear();
        if (extend(0, w)) {
            result.distance = w;
            result.witness_columns = chosen;
            return result;
        }
    }
    return result;
}

/// A nonzero codeword of weight exactly (shat(i+1) + 1)(u_i + 1): a full
/// weight row word from the level's RS code, replicated across the first
/// shat(i+1) + 1 rows with coefficients from a full weight word of the
/// length-(shat(i+1) + 1) inverse-power Vandermonde code.
inline std::vector<gf> witness_codeword(const GcCode& code, int level_index) {
    const LevelProfile& p = code.profile();
    if (level_index < 0 || level_index >= p.t()) throw OutOfRange("level index out of range");
    const FieldPtr& field = code.field();
    const int n = code.n();
    const int u = p.level(level_index).u;
    const int s = p.shat(level_index + 1);  // replicated across s + 1 rows

    // weight-(u + 1) row word: 1-dim kernel of H(u, n; 0) on the first u + 1
    // columns; MDS forces full support
    std::vector<gf> row_word(static_cast<std::size_t>(n), 0);
    {
        const Matrix check = vandermonde_h(field, u, n, 0);
        std::vector<int> support(static_cast<std::size_t>(u) + 1);
        std::iota(support.begin(), support.end(), 0);
        const Matrix sub = check.columns(support);  // u x (u + 1)
        // fix last coordinate to 1, solve the square system for the rest
        Matrix a(field, static_cast<std::size_t>(u), static_cast<std::size_t>(u));
        std::vector<gf> rhs(static_cast<std::size_t>(u));
        for (int i = 0; i < u; ++i) {
            for (int j = 0; j < u; ++j) a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = sub(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            rhs[static_cast<std::size_t>(i)] = sub(static_cast<std::size_t>(i), static_cast<std::size_t>(u));
        }
        const std::vector<gf> head = solve_square(a, rhs);
        for (int j = 0; j < u; ++j) row_word[static_cast<std::size_t>(j)] = head[static_cast<std::size_t>(j)];
        row_word[static_cast<std::size_t>(u)] = 1;
    }

    // weight-(s + 1) coefficient word checked by Hhat(s, s + 1; 0)
    std::vector<gf> coeffs(static_cast<std::size_t>(s) + 1, 1);
    if (s > 0) {
        const Matrix check = vandermonde_hhat(field, s, s + 1, 0);
        Matrix a(field, static_cast<std::size_t>(s), static_cast<std::size_t>(s));
        std::vector<gf> rhs(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) {
            for (int j = 0; j < s; ++j) a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = check(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            rhs[static_cast<std::size_t>(i)] = check(static_cast<std::size_t>(i), static_cast<std::size_t>(s));
        }
        const std::vector<gf> head = solve_square(a, rhs);
        for (int j = 0; j < s; ++j) coeffs[static_cast<std::size_t>(j)] = head[static_cast<std::size_t>(j)];
    }

    std::vector<gf> word(static_cast<std::size_t>(code.m()) * n, 0);
    for (int r = 0; r <= s; ++r)
        for (int c = 0; c < n; ++c)
            word[static_cast<std::size_t>(r) * n + c] = field->mul(coeffs[static_cast<std::size_t>(r)], row_word[static_cast<std::size_t>(c)]);
    return word;
}

enum class DecodeOutcome : int {
    Recovered = 0,  // decoder returned the original codeword
    Rejected = 1,   // decoder declared the pattern uncorrectable
    Mismatch = 2    // decoder returned a different array
};

/// One row of the exhaustive classification: how often each combination of
/// (theorem verdict, oracle solvability, decoder outcome) occurred.
struct CapabilityTable {
    std::uint64_t total = 0;
    std::uint64_t counterexamples = 0;  // theorem-correctable patterns the pipeline failed
    std::map<std::array<int, 3>, std::uint64_t> classes;

    std::uint64_t count(bool theorem, bool oracle, DecodeOutcome outcome) const {
        auto it = classes.find({theorem ? 1 : 0, oracle ? 1 : 0, static_cast<int>(outcome)});
        return it == classes.end() ? 0 : it->second;
    }
};

/// Number of erasure patterns of weight 0..wmax over cells positions,
/// saturating at 2^64 - 1.
inline std::uint64_t pattern_count_up_to(int cells, int wmax) {
    std::uint64_t total = 0;
    for (int w = 0; w <= wmax && w <= cells; ++w) {
        std::uint64_t c = 1;
        for (int i = 0; i < w; ++i) {
            const std::uint64_t num = static_cast<std::uint64_t>(cells - i);
            if (c > UINT64_MAX / num) return UINT64_MAX;
            c = c * num / (static_cast<std::uint64_t>(i) + 1);
        }
        if (total > UINT64_MAX - c) return UINT64_MAX;
        total += c;
    }
    return total;
}

/// Classifies every erasure pattern of weight up to r: theorem verdict,
/// oracle solvability, and the decoder's outcome on a random codeword erased
/// by the pattern. Throws BudgetExceeded when the pattern count is above
/// budget. Deterministic for a fixed seed.
inline CapabilityTable exhaustive_capability(const GcCode& code, std::uint64_t budget = 5'000'000,
                                             std::uint32_t seed = 1) {
    const int cells = code.m() * code.n();
    const int r = code.r();
    const std::uint64_t patterns = pattern_count_up_to(cells, r);
    if (patterns > budget)
        throw BudgetExceeded("sweep needs " + std::to_string(patterns) + " patterns, budget is " +
                             std::to_string(budget));

    Codec codec(code);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> symbol(0, code.field()->order());
    CapabilityTable table;

    std::vector<int> cols;
    std::function<void(int, int)> visit = [&](int start, int remaining) {
        if (remaining == 0) {
            ErasurePattern pattern(code.m(), code.n());
            for (int coord : cols) pattern.set(coord / code.n(), coord % code.n());
            const bool theorem = correctable_by_theorem(pattern, code.profile());

            std::vector<gf> data(static_cast<std::size_t>(code.k()));
            for (gf& d : data) d = static_cast<gf>(symbol(rng));
            const ArrayWord codeword = codec.encode(data);
            const ArrayWord received = codeword.erased(pattern);

            const OracleReport oracle = brute_solve(code, received);
            const std::optional<ArrayWord> decoded = codec.decode(received);
            DecodeOutcome outcome = DecodeOutcome::Rejected;
            if (decoded) outcome = (decoded->grid == codeword.grid) ? DecodeOutcome::Recovered : DecodeOutcome::Mismatch;

            ++table.total;
            ++table.classes[{theorem ? 1 : 0, oracle.solvable ? 1 : 0, static_cast<int>(outcome)}];
            bool oracle_matches = oracle.solvable;
            if (oracle.solvable) {
                for (std::size_t i = 0; i < oracle.coords.size(); ++i)
                    if (oracle.solution[i] != codeword.grid[static_cast<std::size_t>(oracle.coords[i])])
                        oracle_matches = false;
            }
            if (theorem && !(oracle_matches && outcome == DecodeOutcome::Recovered)) ++table.counterexamples;
            return;
        }
        for (int c = start; c <= cells - remaining; ++c) {
            cols.push_back(c);
            visit(c + 1, remaining - 1);
            cols.pop_back();
        }
    };
    for (int w = 0; w <= r; ++w) visit(0, w);
    return table;
}

}  // namespace gcii
