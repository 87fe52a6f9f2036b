#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "gcii/code.hpp"

namespace gcii {

/// An m x n symbol array with a per-cell erasure mask. Masked cells hold 0.
struct ArrayWord {
    ArrayWord() = default;
    ArrayWord(int rows, int cols)
        : grid(static_cast<std::size_t>(rows) * cols, 0), erasures(rows, cols) {}

    int rows() const { return erasures.rows(); }
    int cols() const { return erasures.cols(); }

    gf at(int r, int c) const { return grid[static_cast<std::size_t>(r) * cols() + c]; }
    void set(int r, int c, gf v) { grid[static_cast<std::size_t>(r) * cols() + c] = v; }

    /// Copy with additional erasures applied; erased cells are zeroed.
    ArrayWord erased(const ErasurePattern& pattern) const {
        if (pattern.rows() != rows() || pattern.cols() != cols()) throw ShapeMismatch("erasure pattern shape");
        ArrayWord out = *this;
        for (int r = 0; r < rows(); ++r)
            for (int c = 0; c < cols(); ++c)
                if (pattern.at(r, c) || erasures.at(r, c)) {
                    out.erasures.set(r, c);
                    out.set(r, c, 0);
                }
        return out;
    }

    bool operator==(const ArrayWord&) const = default;

    std::vector<gf> grid;
    ErasurePattern erasures;
};

/// Row permutation sigma with its inverse: inverse[j] = i_j, sigma(i_j) = j.
struct RowPermutation {
    std::vector<int> sigma;    // sigma[i] = destination of source row i
    std::vector<int> inverse;  // inverse[j] = source row placed at j

    static RowPermutation identity(int m) {
        RowPermutation p;
        p.sigma.resize(static_cast<std::size_t>(m));
        std::iota(p.sigma.begin(), p.sigma.end(), 0);
        p.inverse = p.sigma;
        return p;
    }

    static RowPermutation from_sigma(std::vector<int> sigma) {
        RowPermutation p;
        p.inverse.assign(sigma.size(), -1);
        for (std::size_t i = 0; i < sigma.size(); ++i) p.inverse[static_cast<std::size_t>(sigma[i])] = static_cast<int>(i);
        p.sigma = std::move(sigma);
        return p;
    }

    int m() const { return static_cast<int>(sigma.size()); }
    bool is_identity() const {
        for (std::size_t i = 0; i < sigma.size(); ++i)
            if (sigma[i] != static_cast<int>(i)) return false;
        return true;
    }
};

/// Stable permutation putting per-row erasure counts into non-increasing
/// order; rows with equal counts keep their relative order.
inline RowPermutation sort_rows(const ErasurePattern& pattern) {
    const std::vector<int> counts = pattern.row_counts();
    std::vector<int> order(counts.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&counts](int a, int b) { return counts[static_cast<std::size_t>(a)] > counts[static_cast<std::size_t>(b)]; });
    // order[j] = source row landing at sorted position j
    RowPermutation p;
    p.inverse = order;
    p.sigma.assign(order.size(), 0);
    for (std::size_t j = 0; j < order.size(); ++j) p.sigma[static_cast<std::size_t>(order[j])] = static_cast<int>(j);
    return p;
}

/// Solve schedule for one array row of the permuted word.
struct RowPlan {
    int syndrome_offset;  // first syndrome index assigned to this row
    int syndrome_count;   // u_0 local rows plus this row's band rows, if any
    int local_rows;       // leading rows of the group confined to this block
    int budget;           // largest erasure count this row can absorb
    Matrix local_check;   // H(budget, n; 0); its leading e rows solve e erasures
};

/// The permuted, triangularized parity-check arrangement: per array row of
/// the sorted word, its local rows followed by its band row scaled by the
/// gamma coefficients. Block column j is zero in every band belonging to an
/// earlier array row, so rows can be solved back to front.
struct PseudoTriangularH {
    Matrix matrix;  // r x mn
    RowPermutation sigma;
    Matrix gammas;  // upper unit triangular, shat(1) x m (0 x m when t = 1)
    std::vector<RowPlan> row_plan;
};

/// Builds the decoding arrangement for a given row permutation: forms the
/// shat(1) x m inverse-power Vandermonde in the permuted row points, reduces
/// it to upper unit triangular form, and expands each reduced row back into a
/// band of the full check matrix.
inline PseudoTriangularH triangularize(const GcCode& code, const RowPermutation& sigma) {
    const LevelProfile& p = code.profile();
    const FieldPtr& field = code.field();
    const int m = p.m(), n = code.n(), u0 = p.level(0).u, s1 = p.shat(1);
    if (sigma.m() != m) throw ShapeMismatch("permutation size does not match code");

    PseudoTriangularH out;
    out.sigma = sigma;
    if (s1 > 0) {
        Matrix perm_points(field, static_cast<std::size_t>(s1), static_cast<std::size_t>(m));
        for (int q = 0; q < s1; ++q)
            for (int j = 0; j < m; ++j)
                perm_points(static_cast<std::size_t>(q), static_cast<std::size_t>(j)) =
                    field->alpha_pow(-static_cast<long long>(sigma.inverse[static_cast<std::size_t>(j)]) * q);
        out.gammas = row_reduce_to_upper_unit(perm_points).reduced;
    } else {
        out.gammas = Matrix(field, 0, static_cast<std::size_t>(m));
    }

    out.matrix = Matrix(field, static_cast<std::size_t>(p.r()), static_cast<std::size_t>(m) * n);
    out.row_plan.reserve(static_cast<std::size_t>(m));
    int row = 0;
    for (int j = 0; j < m; ++j) {
        const int budget = p.budget_of_sorted_row(j);
        RowPlan plan;
        plan.syndrome_offset = row;
        plan.local_rows = u0;
        plan.budget = budget;
        plan.local_check = vandermonde_h(field, budget, n, 0);
        // local rows: H(u_0, n; 0) in block j only
        for (int e = 0; e < u0; ++e, ++row)
            for (int c = 0; c < n; ++c)
                out.matrix(static_cast<std::size_t>(row), static_cast<std::size_t>(j) * n + c) =
                    field->alpha_pow(static_cast<long long>(n - 1 - c) * e);
        // band rows: gamma(j, j') scaled copies of H(budget - u_0, n; u_0)
        if (j < s1) {
            for (int e = 0; e < budget - u0; ++e, ++row)
                for (int jp = j; jp < m; ++jp) {
                    const gf g = out.gammas(static_cast<std::size_t>(j), static_cast<std::size_t>(jp));
                    if (g == 0) continue;
                    for (int c = 0; c < n; ++c)
                        out.matrix(static_cast<std::size_t>(row), static_cast<std::size_t>(jp) * n + c) =
                            field->mul(g, field->alpha_pow(static_cast<long long>(n - 1 - c) * (u0 + e)));
                }
        }
        plan.syndrome_count = row - plan.syndrome_offset;
        out.row_plan.push_back(std::move(plan));
    }
    return out;
}

/// Syndromes of the received word with respect to the triangularized
/// arrangement; rows are permuted by sigma first and erased cells count as 0.
/// Block columns left of each row group are zero by construction, so the
/// products skip them.
inline std::vector<gf> syndromes(const ArrayWord& word, const PseudoTriangularH& pth) {
    const int m = pth.sigma.m();
    const int n = word.cols();
    if (word.rows() != m || static_cast<std::size_t>(m) * n != pth.matrix.cols())
        throw ShapeMismatch("word shape does not match decoding matrix");
    const Field& f = *pth.matrix.field();
    std::vector<gf> permuted(static_cast<std::size_t>(m) * n);
    for (int j = 0; j < m; ++j) {
        const int src = pth.sigma.inverse[static_cast<std::size_t>(j)];
        for (int c = 0; c < n; ++c)
            permuted[static_cast<std::size_t>(j) * n + c] = word.erasures.at(src, c) ? gf(0) : word.at(src, c);
    }
    std::vector<gf> out(pth.matrix.rows(), 0);
    for (int j = 0; j < m; ++j) {
        const RowPlan& plan = pth.row_plan[static_cast<std::size_t>(j)];
        for (int k = 0; k < plan.syndrome_count; ++k) {
            const std::size_t row = static_cast<std::size_t>(plan.syndrome_offset + k);
            const std::size_t first = static_cast<std::size_t>(j) * n;
            // local rows span block j only, band rows also the blocks right of it
            const std::size_t last = (k < plan.local_rows) ? first + n : pth.matrix.cols();
            gf acc = 0;
            for (std::size_t c = first; c < last; ++c) {
                const gf h = pth.matrix(row, c);
                if (h != 0 && permuted[c] != 0) acc ^= f.mul(h, permuted[c]);
            }
            out[row] = acc;
        }
    }
    return out;
}

/// Recovers the erased values of one row: the leading |erased_cols| rows of
/// the row's local check, restricted to the erased columns, solved against
/// that row's leading syndromes. Returned values follow erased_cols order.
inline std::vector<gf> solve_row(const Matrix& local_check, std::span<const int> erased_cols,
                                 std::span<const gf> synd) {
    const std::size_t e = erased_cols.size();
    if (e == 0) return {};
    if (synd.size() < e) throw ShapeMismatch("not enough syndromes for row solve");
    Matrix system(local_check.field(), e, e);
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j)
            system(i, j) = local_check(i, static_cast<std::size_t>(erased_cols[j]));
    return solve_square(system, synd.first(e));
}

/// Folds freshly recovered values of sorted row row_index into all syndromes
/// of earlier rows. Syndromes whose matrix entries at those cells are zero
/// are untouched.
inline void update_syndromes(std::vector<gf>& synd, const PseudoTriangularH& pth, int row_index,
                             std::span<const int> erased_cols, std::span<const gf> values) {
    const Field& f = *pth.matrix.field();
    const int n = static_cast<int>(pth.matrix.cols()) / pth.sigma.m();
    const int pending = pth.row_plan[static_cast<std::size_t>(row_index)].syndrome_offset;
    for (int k = 0; k < pending; ++k)
        for (std::size_t i = 0; i < erased_cols.size(); ++i) {
            const gf h = pth.matrix(static_cast<std::size_t>(k),
                                    static_cast<std::size_t>(row_index) * n + erased_cols[i]);
            if (h != 0 && values[i] != 0) synd[static_cast<std::size_t>(k)] ^= f.mul(h, values[i]);
        }
}

/// Marks the default parity cells: sorted descending budgets, top row first,
/// each row's parities in its last cells. The sorting permutation for this
/// placement is the identity.
inline ErasurePattern default_parity_placement(const GcCode& code) {
    const std::vector<int> budgets = code.profile().descending_budgets();
    ErasurePattern placement(code.m(), code.n());
    for (int r = 0; r < code.m(); ++r)
        for (int c = code.n() - budgets[static_cast<std::size_t>(r)]; c < code.n(); ++c)
            placement.set(r, c);
    return placement;
}

/// Erasure decoder and systematic encoder for one code. Holds the per-sigma
/// cache of triangularized matrices; the identity instance is built up front
/// since encoding with the default placement always uses it. Safe for
/// concurrent decode/encode calls.
class Codec {
  public:
    explicit Codec(const GcCode& code) : code_(&code) {
        cache_[RowPermutation::identity(code.m()).sigma] =
            std::make_shared<const PseudoTriangularH>(triangularize(code, RowPermutation::identity(code.m())));
    }

    const GcCode& code() const { return *code_; }

    std::shared_ptr<const PseudoTriangularH> pseudo_triangular(const RowPermutation& sigma) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(sigma.sigma);
        if (it != cache_.end()) return it->second;
        auto pth = std::make_shared<const PseudoTriangularH>(triangularize(*code_, sigma));
        cache_.emplace(sigma.sigma, pth);
        return pth;
    }

    /// Algorithm: sort rows by erasure count, check budgets, solve rows back
    /// to front with syndrome updates between solves, unpermute. Returns
    /// nullopt when the sorted-budget condition fails or, with verify set,
    /// when the result has a nonzero syndrome against the full check matrix.
    std::optional<ArrayWord> decode(const ArrayWord& received, bool verify = true) const {
        return decode_with(received, sort_rows(received.erasures), verify);
    }

    /// decode with a caller-chosen permutation; sigma must order the row
    /// erasure counts non-increasingly. All such permutations give the same
    /// result, so this exists for callers that precompute sigma and for
    /// checking that tie-breaking does not matter.
    std::optional<ArrayWord> decode_with(const ArrayWord& received, const RowPermutation& sigma,
                                         bool verify = true) const {
        const GcCode& code = *code_;
        if (received.rows() != code.m() || received.cols() != code.n())
            throw ShapeMismatch("received array shape does not match code");
        const std::vector<int> counts = received.erasures.row_counts();
        for (int j = 0; j + 1 < code.m(); ++j)
            if (counts[static_cast<std::size_t>(sigma.inverse[static_cast<std::size_t>(j)])] <
                counts[static_cast<std::size_t>(sigma.inverse[static_cast<std::size_t>(j) + 1])])
                throw NotNonDecreasing("row erasure counts are not non-increasing under sigma");
        const LevelProfile& p = code.profile();
        for (int j = 0; j < code.m(); ++j)
            if (counts[static_cast<std::size_t>(sigma.inverse[static_cast<std::size_t>(j)])] > p.budget_of_sorted_row(j))
                return std::nullopt;  // uncorrectable: budget exceeded in sorted order

        const auto pth = pseudo_triangular(sigma);
        std::vector<gf> synd = syndromes(received, *pth);

        ArrayWord result = received;
        for (int j = code.m() - 1; j >= 0; --j) {
            const int src = sigma.inverse[static_cast<std::size_t>(j)];
            const std::vector<int> cols = received.erasures.erased_in_row(src);
            if (cols.empty()) continue;
            const RowPlan& plan = pth->row_plan[static_cast<std::size_t>(j)];
            const std::vector<gf> values =
                solve_row(plan.local_check, cols,
                          std::span<const gf>(synd).subspan(static_cast<std::size_t>(plan.syndrome_offset),
                                                            static_cast<std::size_t>(plan.syndrome_count)));
            update_syndromes(synd, *pth, j, cols, values);
            for (std::size_t i = 0; i < cols.size(); ++i) {
                result.set(src, cols[i], values[i]);
                result.erasures.set(src, cols[i], false);
            }
        }

        if (verify) {
            const std::vector<gf> full = code.h().multiply(result.grid);
            for (gf s : full)
                if (s != 0) return std::nullopt;  // residual syndrome: reject
        }
        return result;
    }

    /// Systematic encoding as erasure decoding: data fills the non-parity
    /// cells row-major, parity cells start erased and are solved for.
    ArrayWord encode(std::span<const gf> data, const ErasurePattern& placement) const {
        const GcCode& code = *code_;
        if (placement.rows() != code.m() || placement.cols() != code.n())
            throw ShapeMismatch("placement shape does not match code");
        if (placement.count() != code.r())
            throw InvalidPlacement("placement must mark exactly r = " + std::to_string(code.r()) + " parity cells");
        if (!correctable_by_theorem(placement, code.profile()))
            throw InvalidPlacement("parity placement exceeds the code's erasure budgets");
        if (data.size() != static_cast<std::size_t>(code.k()))
            throw ShapeMismatch("expected k = " + std::to_string(code.k()) + " data symbols");

        ArrayWord word(code.m(), code.n());
        std::size_t next = 0;
        for (int r = 0; r < code.m(); ++r)
            for (int c = 0; c < code.n(); ++c) {
                if (placement.at(r, c))
                    word.erasures.set(r, c);
                else
                    word.set(r, c, data[next++]);
            }
        auto result = decode(word, /*verify=*/false);
        // placements pass the budget check by construction
        return *result;
    }

    ArrayWord encode(std::span<const gf> data) const { return encode(data, default_parity_placement(*code_)); }

  private:
    const GcCode* code_;
    mutable std::mutex mu_;
    mutable std::map<std::vector<int>, std::shared_ptr<const PseudoTriangularH>> cache_;
};

}  // namespace gcii
