#pragma once

#include <vector>

#include "awb/matrix.hpp"

namespace awb {

/// Subspace of K^ambient in canonical form: the basis is the reduced row
/// echelon form of any generating set, so equal spans compare equal.
template <Field K>
class Subspace {
public:
    Subspace() : Subspace(0) {}
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span_rows(const Matrix<K>& generators) {
        Subspace s(generators.cols());
        Matrix<K> m = generators;
        std::size_t r = m.rref_in_place().size();
        Matrix<K> b(r, generators.cols());
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < generators.cols(); ++j) b(i, j) = m(i, j);
        s.basis_ = b;
        return s;
    }
    static Subspace span_cols(const Matrix<K>& generators) {
        return span_rows(generators.transpose());
    }
    static Subspace span(std::size_t ambient, const std::vector<Vec<K>>& vectors) {
        if (vectors.empty()) return Subspace(ambient);
        return span_rows(Matrix<K>::from_rows(vectors));
    }
    static Subspace full(std::size_t ambient) {
        return span_rows(Matrix<K>::identity(ambient));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t quotient_dim() const { return ambient_ - dim(); }
    /// Canonical basis, one vector per row.
    const Matrix<K>& basis() const { return basis_; }
    /// Basis vectors as columns (the inclusion map K^dim -> K^ambient).
    Matrix<K> inclusion() const { return basis_.transpose(); }
    Vec<K> basis_vector(std::size_t i) const { return basis_.row(i); }

    std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> p;
        for (std::size_t i = 0; i < basis_.rows(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!basis_(i, j).is_zero()) { p.push_back(j); break; }
        return p;
    }
    /// Coordinates not used as pivots, in increasing order.
    std::vector<std::size_t> free_coordinates() const {
        std::vector<bool> is_pivot(ambient_, false);
        for (std::size_t p : pivots()) is_pivot[p] = true;
        std::vector<std::size_t> f;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!is_pivot[j]) f.push_back(j);
        return f;
    }

    /// Reduces v modulo the subspace; the residue is the canonical coset
    /// representative (zero iff v is a member).
    Vec<K> reduce(Vec<K> v) const {
        if (v.size() != ambient_) throw error("subspace ambient mismatch");
        auto piv = pivots();
        for (std::size_t r = 0; r < piv.size(); ++r) {
            K c = v[piv[r]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j) v[j] -= c * basis_(r, j);
        }
        return v;
    }
    bool contains(const Vec<K>& v) const { return vec_is_zero(reduce(v)); }
    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }
    /// Coordinates of a member vector in the canonical basis.
    Vec<K> coordinates(const Vec<K>& v) const {
        if (!contains(v)) throw error("vector not in subspace");
        auto piv = pivots();
        Vec<K> c(dim(), K(0));
        for (std::size_t r = 0; r < piv.size(); ++r) c[r] = v[piv[r]];
        return c;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    Subspace sum(const Subspace& other) const {
        check_ambient(other);
        return span_rows(basis_.vcat(other.basis_));
    }
    Subspace intersection(const Subspace& other) const {
        check_ambient(other);
        // x = U^T c = V^T d  <=>  [U^T | -V^T](c,d) = 0.
        Matrix<K> w = basis_.transpose().hcat(-other.basis_.transpose());
        Matrix<K> ker = w.kernel_basis_rows();
        std::vector<Vec<K>> gens;
        for (std::size_t r = 0; r < ker.rows(); ++r) {
            Vec<K> x(ambient_, K(0));
            for (std::size_t i = 0; i < dim(); ++i)
                vec_add_scaled(x, ker(r, i), basis_.row(i));
            gens.push_back(std::move(x));
        }
        return span(ambient_, gens);
    }

    bool is_zero() const { return dim() == 0; }

private:
    void check_ambient(const Subspace& other) const {
        if (ambient_ != other.ambient_) throw error("subspace ambient mismatch");
    }
    std::size_t ambient_;
    Matrix<K> basis_;
};

/// Matrix T with x in U iff T x = 0 (the linear form of Subspace::reduce).
template <Field K>
Matrix<K> residue_matrix(const Subspace<K>& u) {
    std::size_t n = u.ambient_dim();
    Matrix<K> t = Matrix<K>::identity(n);
    auto piv = u.pivots();
    for (std::size_t r = 0; r < piv.size(); ++r)
        for (std::size_t j = 0; j < n; ++j) t(j, piv[r]) -= u.basis()(r, j);
    return t;
}

/// Image (column space) of a matrix as a canonical subspace of K^rows.
template <Field K>
Subspace<K> image(const Matrix<K>& m) {
    return Subspace<K>::span_cols(m);
}

/// Kernel of a matrix as a canonical subspace of K^cols.
template <Field K>
Subspace<K> kernel(const Matrix<K>& m) {
    Subspace<K> s(m.cols());
    Matrix<K> kb = m.kernel_basis_rows();
    return Subspace<K>::span_rows(kb.rows() ? kb : Matrix<K>(0, m.cols()));
}

}  // namespace awb
