#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "gcii/matrix.hpp"

namespace gcii {

struct Level {
    int s;  // number of array rows at this level
    int u;  // erasure budget per such row
    bool operator==(const Level&) const = default;
};

/// The t-level structure of a code: levels with strictly increasing budgets
/// u_0 < u_1 < ... < u_{t-1}, level i covering s_i rows. Derives the array
/// height m, the suffix sums s_hat and the total parity count r.
class LevelProfile {
  public:
    /// Groups a non-decreasing length-m budget vector into levels. Runs of
    /// equal budgets merge into a single level.
    static LevelProfile from_u_vector(const std::vector<int>& u, int n) {
        if (u.empty()) throw OutOfRange("profile needs at least one row");
        std::vector<Level> levels;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] < 1 || u[i] > n - 1)
                throw OutOfRange("budget u[" + std::to_string(i) + "] = " + std::to_string(u[i]) +
                                 " outside 1.." + std::to_string(n - 1));
            if (i > 0 && u[i] < u[i - 1]) throw NotNonDecreasing("budget vector must be non-decreasing");
            if (!levels.empty() && levels.back().u == u[i])
                ++levels.back().s;
            else
                levels.push_back({1, u[i]});
        }
        return LevelProfile(std::move(levels));
    }

    static LevelProfile from_levels(std::vector<Level> levels, int n) {
        std::vector<int> u;
        for (const Level& lv : levels) {
            if (lv.s < 1) throw OutOfRange("level multiplicity must be >= 1");
            u.insert(u.end(), static_cast<std::size_t>(lv.s), lv.u);
        }
        return from_u_vector(u, n);
    }

    int t() const { return static_cast<int>(levels_.size()); }
    const std::vector<Level>& levels() const { return levels_; }
    const Level& level(int i) const { return levels_[static_cast<std::size_t>(i)]; }
    int m() const { return m_; }
    /// Total parity symbols, sum of u_i * s_i.
    int r() const { return r_; }
    /// Suffix sum of level multiplicities; shat(0) = m, shat(t) = 0.
    int shat(int i) const { return shat_[static_cast<std::size_t>(i)]; }

    /// Level covering sorted row j (rows ordered by non-increasing erasure
    /// count): the unique i with shat(i+1) <= j < shat(i).
    int level_of_sorted_row(int j) const {
        if (j < 0 || j >= m()) throw OutOfRange("sorted row index out of range");
        for (int i = t() - 1; i >= 0; --i)
            if (j < shat(i)) return i;
        throw OutOfRange("sorted row index out of range");
    }

    /// Erasure budget of sorted row j.
    int budget_of_sorted_row(int j) const { return level(level_of_sorted_row(j)).u; }

    /// Budgets by sorted row: u_{t-1} repeated s_{t-1} times, down to u_0.
    std::vector<int> descending_budgets() const {
        std::vector<int> out;
        for (int i = t() - 1; i >= 0; --i)
            out.insert(out.end(), static_cast<std::size_t>(level(i).s), level(i).u);
        return out;
    }

    /// The non-decreasing length-m budget vector.
    std::vector<int> u_vector() const {
        std::vector<int> out;
        for (const Level& lv : levels_) out.insert(out.end(), static_cast<std::size_t>(lv.s), lv.u);
        return out;
    }

    bool operator==(const LevelProfile&) const = default;

  private:
    explicit LevelProfile(std::vector<Level> levels) : levels_(std::move(levels)) {
        m_ = 0;
        r_ = 0;
        for (const Level& lv : levels_) {
            m_ += lv.s;
            r_ += lv.s * lv.u;
        }
        shat_.assign(levels_.size() + 1, 0);
        for (int i = t() - 1; i >= 0; --i)
            shat_[static_cast<std::size_t>(i)] = shat_[static_cast<std::size_t>(i) + 1] + levels_[static_cast<std::size_t>(i)].s;
    }

    std::vector<Level> levels_;
    int m_ = 0;
    int r_ = 0;
    std::vector<int> shat_;
};

/// Per-cell erasure mask over an m x n array.
class ErasurePattern {
  public:
    ErasurePattern() : rows_(0), cols_(0) {}
    ErasurePattern(int rows, int cols)
        : rows_(rows), cols_(cols), mask_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool at(int r, int c) const { return mask_[idx(r, c)] != 0; }
    void set(int r, int c, bool erased = true) { mask_[idx(r, c)] = erased ? 1 : 0; }

    int count() const { return static_cast<int>(std::count(mask_.begin(), mask_.end(), 1)); }

    std::vector<int> row_counts() const {
        std::vector<int> counts(static_cast<std::size_t>(rows_), 0);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (at(r, c)) ++counts[static_cast<std::size_t>(r)];
        return counts;
    }

    std::vector<int> erased_in_row(int r) const {
        std::vector<int> cols;
        for (int c = 0; c < cols_; ++c)
            if (at(r, c)) cols.push_back(c);
        return cols;
    }

    /// Linear cell indices (row-major) of all erased cells.
    std::vector<int> erased_coords() const {
        std::vector<int> coords;
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (at(r, c)) coords.push_back(r * cols_ + c);
        return coords;
    }

    bool operator==(const ErasurePattern&) const = default;

  private:
    std::size_t idx(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ShapeMismatch("erasure cell out of range");
        return static_cast<std::size_t>(r) * cols_ + c;
    }

    int rows_, cols_;
    std::vector<std::uint8_t> mask_;
};

/// A t-level GC code over m x n arrays: the field, the level profile and the
/// r x mn parity-check matrix. Immutable once built.
class GcCode {
  public:
    /// Assembles the parity-check matrix: I_m (x) H(u_0, n; 0) on top, then
    /// for each level i from t-1 down to 1 the band
    /// Hhat(s_i, m; shat(i+1)) (x) H(u_i - u_0, n; u_0).
    static GcCode build(FieldPtr field, int n, LevelProfile profile) {
        const int m = profile.m();
        if (m > n) throw ProfileTooTall("need m <= n, got m = " + std::to_string(m) + ", n = " + std::to_string(n));
        if (n > field->order())
            throw LengthExceedsField("row length " + std::to_string(n) + " exceeds 2^b - 1 = " +
                                     std::to_string(field->order()));
        const int u0 = profile.level(0).u;
        Matrix h = kronecker(Matrix::identity(field, static_cast<std::size_t>(m)), vandermonde_h(field, u0, n, 0));
        for (int i = profile.t() - 1; i >= 1; --i) {
            const Level& lv = profile.level(i);
            h = h.stacked(kronecker(vandermonde_hhat(field, lv.s, m, profile.shat(i + 1)),
                                    vandermonde_h(field, lv.u - u0, n, u0)));
        }
        return GcCode(std::move(field), n, std::move(profile), std::move(h));
    }

    const FieldPtr& field() const { return field_; }
    int n() const { return n_; }
    int m() const { return profile_.m(); }
    const LevelProfile& profile() const { return profile_; }
    const Matrix& h() const { return h_; }
    int r() const { return profile_.r(); }
    /// Code dimension, mn - r.
    int k() const { return m() * n_ - r(); }

  private:
    GcCode(FieldPtr field, int n, LevelProfile profile, Matrix h)
        : field_(std::move(field)), n_(n), profile_(std::move(profile)), h_(std::move(h)) {}

    FieldPtr field_;
    int n_;
    LevelProfile profile_;
    Matrix h_;
};

/// min over levels of (shat(i+1) + 1)(u_i + 1).
inline int min_distance_formula(const GcCode& code) {
    const LevelProfile& p = code.profile();
    int d = std::numeric_limits<int>::max();
    for (int i = 0; i < p.t(); ++i)
        d = std::min(d, (p.shat(i + 1) + 1) * (p.level(i).u + 1));
    return d;
}

/// True iff the pattern's per-row erasure counts, sorted non-increasing, fit
/// under the profile's descending budgets pointwise.
inline bool correctable_by_theorem(const ErasurePattern& pattern, const LevelProfile& profile) {
    if (pattern.rows() != profile.m()) throw ShapeMismatch("pattern height does not match profile");
    std::vector<int> counts = pattern.row_counts();
    std::sort(counts.begin(), counts.end(), std::greater<int>());
    const std::vector<int> budgets = profile.descending_budgets();
    for (std::size_t j = 0; j < counts.size(); ++j)
        if (counts[j] > budgets[j]) return false;
    return true;
}

}  // namespace gcii
