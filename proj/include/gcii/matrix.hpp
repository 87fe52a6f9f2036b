#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gcii/field.hpp"

namespace gcii {

/// Dense row-major matrix over a shared GF(2^b) context. Value type; all
/// operations are pure.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    gf operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    gf& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    std::span<const gf> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
    std::span<gf> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }

    static Matrix identity(FieldPtr field, std::size_t n) {
        Matrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    Matrix multiply(const Matrix& rhs) const {
        require_same_field(rhs);
        if (cols_ != rhs.rows_) throw BadDimensions("matrix product shape mismatch");
        const Field& f = *field_;
        Matrix out(field_, rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const gf aik = (*this)(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    out(i, j) ^= f.mul(aik, rhs(k, j));
            }
        return out;
    }

    std::vector<gf> multiply(std::span<const gf> v) const {
        if (v.size() != cols_) throw BadDimensions("matrix-vector shape mismatch");
        const Field& f = *field_;
        std::vector<gf> out(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            gf acc = 0;
            const gf* row = a_.data() + i * cols_;
            for (std::size_t j = 0; j < cols_; ++j)
                if (row[j] != 0 && v[j] != 0) acc ^= f.mul(row[j], v[j]);
            out[i] = acc;
        }
        return out;
    }

    Matrix scaled(gf c) const {
        Matrix out(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_->mul(a_[i], c);
        return out;
    }

    Matrix columns(std::span<const int> which) const {
        Matrix out(field_, rows_, which.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < which.size(); ++j)
                out(i, j) = (*this)(i, static_cast<std::size_t>(which[j]));
        return out;
    }

    /// Stacks rhs below this matrix.
    Matrix stacked(const Matrix& rhs) const {
        require_same_field(rhs);
        if (cols_ != rhs.cols_) throw BadDimensions("stack requires equal column counts");
        Matrix out(field_, rows_ + rhs.rows_, cols_);
        std::copy(a_.begin(), a_.end(), out.a_.begin());
        std::copy(rhs.a_.begin(), rhs.a_.end(), out.a_.begin() + static_cast<std::ptrdiff_t>(a_.size()));
        return out;
    }

    void require_same_field(const Matrix& other) const {
        if (!field_ || !other.field_ || !field_->same_spec(*other.field_))
            throw FieldMismatch("matrices belong to different fields");
    }

  private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<gf> a_;
};

/// u x n parity-check slice with entry (r, c) = alpha^((n-1-c)(ell+r));
/// column exponents descend left to right, last column all ones.
inline Matrix vandermonde_h(const FieldPtr& field, int u, int n, int ell) {
    if (u < 1 || n < 1 || n > field->order()) throw BadDimensions("vandermonde_h: need 1 <= n <= 2^b - 1 and u >= 1");
    Matrix m(field, static_cast<std::size_t>(u), static_cast<std::size_t>(n));
    for (int r = 0; r < u; ++r)
        for (int c = 0; c < n; ++c)
            m(r, c) = field->alpha_pow(static_cast<long long>(n - 1 - c) * (ell + r));
    return m;
}

/// s x m slice with entry (r, c) = alpha^(-c(ell+r)); first column all ones.
inline Matrix vandermonde_hhat(const FieldPtr& field, int s, int m, int ell) {
    if (s < 1 || m < 1 || m > field->order())
        throw BadDimensions("vandermonde_hhat: need 1 <= m <= 2^b - 1 and s >= 1");
    Matrix out(field, static_cast<std::size_t>(s), static_cast<std::size_t>(m));
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < m; ++c)
            out(r, c) = field->alpha_pow(-static_cast<long long>(c) * (ell + r));
    return out;
}

inline Matrix kronecker(const Matrix& a, const Matrix& b) {
    a.require_same_field(b);
    const Field& f = *a.field();
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const gf aij = a(i, j);
            if (aij == 0) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    out(i * b.rows() + p, j * b.cols() + q) = f.mul(aij, b(p, q));
        }
    return out;
}

struct RowReduction {
    Matrix reduced;    // upper triangular with unit diagonal on the leading square
    Matrix transform;  // transform * input == reduced
};

/// Forward elimination on a full-row-rank matrix (rows <= cols). Pivots run
/// down the leading square only; pivot choice is the first row with a nonzero
/// entry in the current column. Entries right of each unit pivot are left in
/// place, so for the rectangular inputs used here they are the gamma
/// coefficients consumed by the decoder.
inline RowReduction row_reduce_to_upper_unit(const Matrix& input) {
    const Field& f = *input.field();
    const std::size_t rows = input.rows(), cols = input.cols();
    if (rows > cols) throw BadDimensions("row_reduce_to_upper_unit: more rows than columns");
    Matrix m = input;
    Matrix t = Matrix::identity(input.field(), rows);

    auto add_scaled_row = [&f](Matrix& mat, std::size_t dst, std::size_t src, gf c) {
        if (c == 0) return;
        auto d = mat.row(dst);
        auto s = mat.row(src);
        for (std::size_t j = 0; j < d.size(); ++j)
            if (s[j] != 0) d[j] ^= f.mul(c, s[j]);
    };
    auto scale_row = [&f](Matrix& mat, std::size_t r, gf c) {
        for (gf& x : mat.row(r)) x = f.mul(x, c);
    };

    for (std::size_t k = 0; k < rows; ++k) {
        std::size_t pivot = k;
        while (pivot < rows && m(pivot, k) == 0) ++pivot;
        if (pivot == rows) throw RankDeficient("no pivot in column " + std::to_string(k));
        if (pivot != k) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(k, j), m(pivot, j));
            for (std::size_t j = 0; j < rows; ++j) std::swap(t(k, j), t(pivot, j));
        }
        const gf scale = f.inv(m(k, k));
        scale_row(m, k, scale);
        scale_row(t, k, scale);
        for (std::size_t r = k + 1; r < rows; ++r) {
            const gf c = m(r, k);
            add_scaled_row(m, r, k, c);
            add_scaled_row(t, r, k, c);
        }
    }
    return {std::move(m), std::move(t)};
}

/// Unique solution of a square nonsingular system.
inline std::vector<gf> solve_square(const Matrix& a, std::span<const gf> rhs) {
    if (a.rows() != a.cols()) throw BadDimensions("solve_square: matrix not square");
    if (rhs.size() != a.rows()) throw BadDimensions("solve_square: rhs length mismatch");
    const Field& f = *a.field();
    const std::size_t n = a.rows();
    Matrix m = a;
    std::vector<gf> b(rhs.begin(), rhs.end());

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k) == 0) ++pivot;
        if (pivot == n) throw Singular("singular system");
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            std::swap(b[k], b[pivot]);
        }
        const gf inv = f.inv(m(k, k));
        for (std::size_t j = k; j < n; ++j) m(k, j) = f.mul(m(k, j), inv);
        b[k] = f.mul(b[k], inv);
        for (std::size_t r = k + 1; r < n; ++r) {
            const gf c = m(r, k);
            if (c == 0) continue;
            for (std::size_t j = k; j < n; ++j) m(r, j) ^= f.mul(c, m(k, j));
            b[r] ^= f.mul(c, b[k]);
        }
    }
    for (std::size_t k = n; k-- > 0;) {
        gf x = b[k];
        for (std::size_t j = k + 1; j < n; ++j)
            if (m(k, j) != 0 && b[j] != 0) x ^= f.mul(m(k, j), b[j]);
        b[k] = x;
    }
    return b;
}

inline std::size_t rank(const Matrix& input) {
    const Field& f = *input.field();
    Matrix m = input;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
        const gf inv = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t q = r + 1; q < m.rows(); ++q) {
            const gf coef = m(q, c);
            if (coef == 0) continue;
            for (std::size_t j = c; j < m.cols(); ++j) m(q, j) ^= f.mul(coef, m(r, j));
        }
        ++r;
    }
    return r;
}

}  // namespace gcii
