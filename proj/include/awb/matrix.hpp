#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "awb/fields.hpp"

namespace awb {

template <Field K>
using Vec = std::vector<K>;

template <Field K>
Vec<K> vec_zero(std::size_t n) { return Vec<K>(n, K(0)); }

template <Field K>
Vec<K> vec_unit(std::size_t n, std::size_t i) {
    Vec<K> v(n, K(0));
    v[i] = K(1);
    return v;
}

template <Field K>
void vec_add_scaled(Vec<K>& dst, const K& c, const Vec<K>& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
}

template <Field K>
bool vec_is_zero(const Vec<K>& v) {
    for (const K& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <Field K>
Vec<K> vec_sub(Vec<K> a, const Vec<K>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

template <Field K>
Vec<K> vec_add(Vec<K> a, const Vec<K>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <Field K>
Vec<K> vec_scale(const K& c, Vec<K> a) {
    for (K& x : a) x *= c;
    return a;
}

/// Dense matrix over an exact field. A linear map K^cols -> K^rows acting on
/// column vectors; column j holds the image of the j-th basis vector.
template <Field K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }
    /// Rows given as initializer-friendly vector of vectors.
    static Matrix from_rows(const std::vector<Vec<K>>& rows) {
        if (rows.empty()) return Matrix(0, 0);
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw error("ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_cols(const std::vector<Vec<K>>& cols) {
        if (cols.empty()) return Matrix(0, 0);
        Matrix m(cols[0].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_) throw error("ragged columns");
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const K& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix operator*(const Matrix& b) const {
        if (cols_ != b.rows_) throw error("matrix product dimension mismatch");
        Matrix out(rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const K& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += a * b(k, j);
            }
        return out;
    }
    Matrix operator+(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw error("matrix sum dimension mismatch");
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += b.data_[i];
        return out;
    }
    Matrix operator-(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw error("matrix difference dimension mismatch");
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= b.data_[i];
        return out;
    }
    Matrix operator-() const {
        Matrix out = *this;
        for (K& x : out.data_) x = -x;
        return out;
    }
    Matrix scaled(const K& c) const {
        Matrix out = *this;
        for (K& x : out.data_) x *= c;
        return out;
    }

    Vec<K> apply(const Vec<K>& v) const {
        if (v.size() != cols_) throw error("matrix apply dimension mismatch");
        Vec<K> out(rows_, K(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            K acc(0);
            for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    Vec<K> row(std::size_t i) const {
        Vec<K> v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }
    Vec<K> col(std::size_t j) const {
        Vec<K> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_col(std::size_t j, const Vec<K>& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    /// Stacks rows of b below this.
    Matrix vcat(const Matrix& b) const {
        if (cols_ != b.cols_ && rows_ != 0 && b.rows_ != 0)
            throw error("vcat column mismatch");
        std::size_t c = rows_ ? cols_ : b.cols_;
        Matrix out(rows_ + b.rows_, c);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) out(rows_ + i, j) = b(i, j);
        return out;
    }
    Matrix hcat(const Matrix& b) const {
        if (rows_ != b.rows_) throw error("hcat row mismatch");
        Matrix out(rows_, cols_ + b.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, cols_ + j) = b(i, j);
        }
        return out;
    }

    /// In-place Gauss-Jordan to reduced row echelon form. Pivot choice is the
    /// lowest-index nonzero row in each column, columns scanned left to right,
    /// so the result is canonical. Returns pivot column indices in order.
    std::vector<std::size_t> rref_in_place() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && (*this)(sel, c).is_zero()) ++sel;
            if (sel == rows_) continue;
            if (sel != r)
                for (std::size_t j = 0; j < cols_; ++j)
                    std::swap((*this)(sel, j), (*this)(r, j));
            K inv = K(1) / (*this)(r, c);
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                K f = (*this)(i, c);
                if (f.is_zero()) continue;
                for (std::size_t j = c; j < cols_; ++j)
                    (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref_in_place().size();
    }

    /// Canonical kernel basis: one row per free column, RREF'd. dim = cols - rank.
    Matrix kernel_basis_rows() const {
        Matrix m = *this;
        std::vector<std::size_t> pivots = m.rref_in_place();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t p : pivots) is_pivot[p] = true;
        std::vector<Vec<K>> basis;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            Vec<K> v(cols_, K(0));
            v[c] = K(1);
            for (std::size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = -m(r, c);
            basis.push_back(std::move(v));
        }
        Matrix out = Matrix::from_rows(basis);
        if (out.rows() == 0) out = Matrix(0, cols_);
        out.rref_in_place();
        return out;
    }

    /// Solves Mx = b; when solvable returns the solution with zero
    /// coordinates on all free (non-pivot) columns.
    std::optional<Vec<K>> solve(const Vec<K>& b) const {
        if (b.size() != rows_) throw error("solve dimension mismatch");
        Matrix aug = hcat(Matrix::from_cols({b}));
        std::vector<std::size_t> pivots = aug.rref_in_place();
        Vec<K> x(cols_, K(0));
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] == cols_) return std::nullopt;  // pivot in the b column
            x[pivots[r]] = aug(r, cols_);
        }
        return x;
    }

    /// Solves MX = B column by column (each column canonical); nullopt if any
    /// column is unsolvable.
    std::optional<Matrix> solve_matrix(const Matrix& b) const {
        if (b.rows() != rows_) throw error("solve dimension mismatch");
        Matrix x(cols_, b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) {
            auto xc = solve(b.col(j));
            if (!xc) return std::nullopt;
            x.set_col(j, *xc);
        }
        return x;
    }

    /// For surjective p, the deterministic linear section s with p*s = id
    /// (each column is the canonical solve, supported on pivot columns).
    Matrix section() const {
        Matrix m = *this;
        if (m.rref_in_place().size() != rows_) throw error("section: map is not surjective");
        auto s = solve_matrix(Matrix::identity(rows_));
        return *s;
    }

    /// For injective i, the left inverse r with r*i = id (canonical solve of
    /// i^T r^T = id column-wise is not used; instead solve i x = e_k per row).
    Matrix left_inverse() const {
        if (rank() != cols_) throw error("left_inverse: map is not injective");
        Matrix t = transpose();
        // r has shape cols_ x rows_; r * i = id  <=>  i^T * r^T = id.
        auto rt = t.section();
        return rt.transpose();
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        if (rank() != rows_) return std::nullopt;
        return solve_matrix(Matrix::identity(rows_));
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> data_;
};

}  // namespace awb
