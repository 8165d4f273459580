#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "awb/subspace.hpp"

namespace awb {

/// Trilinear structure tensor, shape n1 x n2 x n3; the slice (i,j) is the
/// coordinate vector of the value on the (i,j)-th basis pair.
template <Field K>
class Trilinear {
public:
    Trilinear() : n1_(0), n2_(0), n3_(0) {}
    Trilinear(std::size_t n1, std::size_t n2, std::size_t n3)
        : n1_(n1), n2_(n2), n3_(n3), data_(n1 * n2 * n3, K(0)) {}

    std::size_t n1() const { return n1_; }
    std::size_t n2() const { return n2_; }
    std::size_t n3() const { return n3_; }

    K& at(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(i * n2_ + j) * n3_ + k];
    }
    const K& at(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * n2_ + j) * n3_ + k];
    }
    Vec<K> slice(std::size_t i, std::size_t j) const {
        Vec<K> v(n3_);
        for (std::size_t k = 0; k < n3_; ++k) v[k] = at(i, j, k);
        return v;
    }
    void set_slice(std::size_t i, std::size_t j, const Vec<K>& v) {
        for (std::size_t k = 0; k < n3_; ++k) at(i, j, k) = v[k];
    }

    /// Value on arbitrary coordinate vectors.
    Vec<K> eval(const Vec<K>& x, const Vec<K>& y) const {
        if (x.size() != n1_ || y.size() != n2_) throw error("trilinear eval dimension mismatch");
        Vec<K> out(n3_, K(0));
        for (std::size_t i = 0; i < n1_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n2_; ++j) {
                if (y[j].is_zero()) continue;
                K c = x[i] * y[j];
                for (std::size_t k = 0; k < n3_; ++k) out[k] += c * at(i, j, k);
            }
        }
        return out;
    }

    bool is_zero() const {
        for (const K& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }
    friend bool operator==(const Trilinear& a, const Trilinear& b) {
        return a.n1_ == b.n1_ && a.n2_ == b.n2_ && a.n3_ == b.n3_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Trilinear& a, const Trilinear& b) { return !(a == b); }

private:
    std::size_t n1_, n2_, n3_;
    std::vector<K> data_;
};

/// Finite-dimensional algebra with bracket given by structure constants:
/// product.at(i,j,k) is the e_k coefficient of e_i e_j, bracket.at(i,j,k)
/// that of [e_i, e_j]. The validity flag records a successful verify_awb;
/// raw values start unvalidated (useful for negative fixtures).
template <Field K>
struct Awb {
    std::vector<std::string> labels;
    Trilinear<K> product;
    Trilinear<K> bracket;
    bool validated = false;

    Awb() = default;
    explicit Awb(std::size_t n)
        : product(n, n, n), bracket(n, n, n) {
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    }

    std::size_t dim() const { return product.n1(); }
    Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const { return product.eval(x, y); }
    Vec<K> brk(const Vec<K>& x, const Vec<K>& y) const { return bracket.eval(x, y); }
    Vec<K> mul_basis(std::size_t i, std::size_t j) const { return product.slice(i, j); }
    Vec<K> brk_basis(std::size_t i, std::size_t j) const { return bracket.slice(i, j); }

    friend bool operator==(const Awb& a, const Awb& b) {
        return a.product == b.product && a.bracket == b.bracket;
    }
};

struct AwbReport {
    bool associative = false;
    bool fundamental = false;
    std::optional<std::array<std::size_t, 3>> counterexample;  // 0-based basis triple
    bool ok() const { return associative && fundamental; }
};

/// Checks associativity and the fundamental identity [ab,c] = [a,c]b + a[b,c]
/// on all basis triples (sufficient by multilinearity). The first failing
/// triple in lexicographic order is reported, associativity scanned first.
template <Field K>
AwbReport verify_awb(const Awb<K>& a) {
    std::size_t n = a.dim();
    AwbReport rep;
    rep.associative = true;
    rep.fundamental = true;
    for (std::size_t i = 0; i < n && rep.associative; ++i)
        for (std::size_t j = 0; j < n && rep.associative; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<K> lhs = a.product.eval(a.mul_basis(i, j), vec_unit<K>(n, k));
                Vec<K> rhs = a.product.eval(vec_unit<K>(n, i), a.mul_basis(j, k));
                if (lhs != rhs) {
                    rep.associative = false;
                    rep.counterexample = {{i, j, k}};
                    break;
                }
            }
    for (std::size_t i = 0; i < n && rep.fundamental; ++i)
        for (std::size_t j = 0; j < n && rep.fundamental; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                // [e_i e_j, e_k] = [e_i, e_k] e_j + e_i [e_j, e_k]
                Vec<K> lhs = a.bracket.eval(a.mul_basis(i, j), vec_unit<K>(n, k));
                Vec<K> rhs = a.product.eval(a.brk_basis(i, k), vec_unit<K>(n, j));
                rhs = vec_add(rhs, a.product.eval(vec_unit<K>(n, i), a.brk_basis(j, k)));
                if (lhs != rhs) {
                    rep.fundamental = false;
                    if (!rep.counterexample) rep.counterexample = {{i, j, k}};
                    break;
                }
            }
    return rep;
}

template <Field K>
Awb<K> validated(Awb<K> a) {
    AwbReport rep = verify_awb(a);
    if (!rep.ok()) throw error("constructed algebra fails verification");
    a.validated = true;
    return a;
}

template <Field K>
void require_valid(const Awb<K>& a) {
    if (!a.validated) throw error("operation requires a validated algebra");
}

/// Abelian algebra: all products and brackets vanish.
template <Field K>
Awb<K> abelian(std::size_t n) {
    return validated(Awb<K>(n));
}

template <Field K>
bool is_abelian(const Awb<K>& a) {
    return a.product.is_zero() && a.bracket.is_zero();
}

/// Associative algebra equipped with [a,b] := a D(b) - D(b) a.
template <Field K>
Awb<K> from_D(const Awb<K>& assoc, const Matrix<K>& d) {
    std::size_t n = assoc.dim();
    if (d.rows() != n || d.cols() != n) throw error("from_D: endomorphism shape mismatch");
    Awb<K> out(n);
    out.labels = assoc.labels;
    out.product = assoc.product;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> dj = d.apply(vec_unit<K>(n, j));
            Vec<K> v = assoc.product.eval(vec_unit<K>(n, i), dj);
            v = vec_sub(v, assoc.product.eval(dj, vec_unit<K>(n, i)));
            out.bracket.set_slice(i, j, v);
        }
    return validated(std::move(out));
}

/// Dendriform algebra (A, prec, succ): product a*b = a<b + a>b and bracket
/// [a,b] = a<b + a>b - b<a - b>a. Dendriform axioms of the input are assumed.
template <Field K>
Awb<K> from_dendriform(const Trilinear<K>& prec, const Trilinear<K>& succ) {
    std::size_t n = prec.n1();
    if (succ.n1() != n || prec.n2() != n || prec.n3() != n || succ.n2() != n || succ.n3() != n)
        throw error("from_dendriform: tensor shape mismatch");
    Awb<K> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> p = vec_add(prec.slice(i, j), succ.slice(i, j));
            out.product.set_slice(i, j, p);
            out.bracket.set_slice(i, j, vec_sub(p, vec_add(prec.slice(j, i), succ.slice(j, i))));
        }
    return validated(std::move(out));
}

/// The two AWB structures on A (x) A.
template <Field K>
Awb<K> tensor_square(const Awb<K>& a, int variant) {
    require_valid(a);
    std::size_t n = a.dim();
    Awb<K> out(n * n);
    for (std::size_t i = 0; i < n * n; ++i)
        out.labels[i] = a.labels[i / n] + "(x)" + a.labels[i % n];
    auto put = [n](Vec<K>& dst, const Vec<K>& u, const Vec<K>& v) {
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) dst[i * n + j] += u[i] * v[j];
        }
    };
    for (std::size_t a1 = 0; a1 < n; ++a1)
        for (std::size_t a2 = 0; a2 < n; ++a2)
            for (std::size_t b1 = 0; b1 < n; ++b1)
                for (std::size_t b2 = 0; b2 < n; ++b2) {
                    Vec<K> e_a1 = vec_unit<K>(n, a1), e_a2 = vec_unit<K>(n, a2);
                    Vec<K> e_b1 = vec_unit<K>(n, b1), e_b2 = vec_unit<K>(n, b2);
                    Vec<K> prod(n * n, K(0)), brk(n * n, K(0));
                    if (variant == 1) {
                        put(prod, a.mul_basis(a1, b1), a.mul_basis(a2, b2));
                        Vec<K> bb = a.brk_basis(b1, b2);
                        put(brk, a.brk(e_a1, bb), e_a2);
                        put(brk, e_a1, a.brk(e_a2, bb));
                    } else if (variant == 2) {
                        put(prod, e_a1, a.mul(e_a2, a.mul_basis(b1, b2)));
                        Vec<K> bprod = a.mul_basis(b1, b2);
                        put(brk, e_a1, a.brk(e_a2, bprod));
                        put(brk, a.brk(e_a1, bprod), e_a2);
                    } else {
                        throw error("tensor_square: variant must be 1 or 2");
                    }
                    out.product.set_slice(a1 * n + a2, b1 * n + b2, prod);
                    out.bracket.set_slice(a1 * n + a2, b1 * n + b2, brk);
                }
    return validated(std::move(out));
}

struct IdealReport {
    bool subalgebra = false;
    bool left_ideal = false;
    bool right_ideal = false;
    bool two_sided = false;
};

/// Containment flags for a subspace U: subalgebra (UU, [U,U] in U), right
/// ideal (AU, [A,U] in U), left ideal (UA, [U,A] in U), two-sided (both).
template <Field K>
IdealReport ideal_predicates(const Awb<K>& a, const Subspace<K>& u) {
    require_valid(a);
    if (u.ambient_dim() != a.dim()) throw error("ideal_predicates: ambient mismatch");
    std::size_t n = a.dim();
    auto inside = [&](const Vec<K>& v) { return u.contains(v); };
    IdealReport rep;
    rep.subalgebra = true;
    for (std::size_t r = 0; r < u.dim() && rep.subalgebra; ++r)
        for (std::size_t s = 0; s < u.dim(); ++s) {
            Vec<K> x = u.basis_vector(r), y = u.basis_vector(s);
            if (!inside(a.mul(x, y)) || !inside(a.brk(x, y))) {
                rep.subalgebra = false;
                break;
            }
        }
    bool au = true, ua = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < u.dim(); ++r) {
            Vec<K> e = vec_unit<K>(n, i), x = u.basis_vector(r);
            if (!inside(a.mul(e, x)) || !inside(a.brk(e, x))) au = false;
            if (!inside(a.mul(x, e)) || !inside(a.brk(x, e))) ua = false;
        }
    rep.right_ideal = rep.subalgebra && au;
    rep.left_ideal = rep.subalgebra && ua;
    rep.two_sided = rep.left_ideal && rep.right_ideal;
    return rep;
}

/// Span closure of generators under products and brackets with the carrier
/// subspace (both sides); stabilizes in at most dim steps.
template <Field K>
Subspace<K> ideal_closure(const Awb<K>& a, std::vector<Vec<K>> generators,
                          const Subspace<K>& carrier) {
    std::size_t n = a.dim();
    Subspace<K> s = Subspace<K>::span(n, generators);
    for (;;) {
        std::vector<Vec<K>> next;
        for (std::size_t r = 0; r < s.dim(); ++r) {
            Vec<K> v = s.basis_vector(r);
            next.push_back(v);
            for (std::size_t c = 0; c < carrier.dim(); ++c) {
                Vec<K> w = carrier.basis_vector(c);
                next.push_back(a.mul(w, v));
                next.push_back(a.mul(v, w));
                next.push_back(a.brk(w, v));
                next.push_back(a.brk(v, w));
            }
        }
        Subspace<K> grown = Subspace<K>::span(n, next);
        if (grown.dim() == s.dim()) return s;
        s = grown;
    }
}

/// Commutator ideal [[U,V]] = ideal of U and V generated by
/// {uv, vu, [u,v], [v,u]}. Also reports whether it happens to be an A-ideal.
template <Field K>
struct CommutatorIdeal {
    Subspace<K> space;
    bool is_a_ideal;
};

template <Field K>
CommutatorIdeal<K> commutator_ideal(const Awb<K>& a, const Subspace<K>& u, const Subspace<K>& v) {
    require_valid(a);
    if (!ideal_predicates(a, u).two_sided || !ideal_predicates(a, v).two_sided)
        throw error("commutator_ideal: inputs must be two-sided ideals");
    std::vector<Vec<K>> gens;
    for (std::size_t r = 0; r < u.dim(); ++r)
        for (std::size_t s = 0; s < v.dim(); ++s) {
            Vec<K> x = u.basis_vector(r), y = v.basis_vector(s);
            gens.push_back(a.mul(x, y));
            gens.push_back(a.mul(y, x));
            gens.push_back(a.brk(x, y));
            gens.push_back(a.brk(y, x));
        }
    Subspace<K> carrier = u.sum(v);
    Subspace<K> s = ideal_closure(a, std::move(gens), carrier);
    return {s, ideal_predicates(a, s).two_sided};
}

template <Field K>
Subspace<K> derived_algebra(const Awb<K>& a) {
    return commutator_ideal(a, Subspace<K>::full(a.dim()), Subspace<K>::full(a.dim())).space;
}

/// Center {x : xb = bx = 0, [x,b] = [b,x] = 0 for all b}, as a kernel.
template <Field K>
Subspace<K> center(const Awb<K>& a) {
    require_valid(a);
    std::size_t n = a.dim();
    // Conditions stacked as one (4n^2) x n matrix applied to x.
    Matrix<K> cond(4 * n * n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                cond((0 * n + j) * n + k, i) = a.product.at(i, j, k);
                cond((1 * n + j) * n + k, i) = a.product.at(j, i, k);
                cond((2 * n + j) * n + k, i) = a.bracket.at(i, j, k);
                cond((3 * n + j) * n + k, i) = a.bracket.at(j, i, k);
            }
        }
    }
    return kernel(cond);
}

template <Field K>
struct QuotientAlgebra {
    Awb<K> algebra;
    Matrix<K> projection;  // surjective homomorphism, q x n
};

/// Quotient by a two-sided ideal, on the basis of coordinates complementary
/// to the ideal's pivot columns.
template <Field K>
QuotientAlgebra<K> quotient(const Awb<K>& a, const Subspace<K>& ideal) {
    require_valid(a);
    if (ideal.ambient_dim() != a.dim()) throw error("quotient: ambient mismatch");
    if (!ideal_predicates(a, ideal).two_sided)
        throw error("quotient: subspace is not a two-sided ideal");
    std::size_t n = a.dim();
    std::vector<std::size_t> free = ideal.free_coordinates();
    std::size_t q = free.size();
    // projection: e_j -> e_{free slot j} for free j; pivot columns map to
    // minus the free-coordinate part of their echelon row.
    Matrix<K> proj(q, n);
    auto piv = ideal.pivots();
    for (std::size_t t = 0; t < q; ++t) proj(t, free[t]) = K(1);
    for (std::size_t r = 0; r < piv.size(); ++r)
        for (std::size_t t = 0; t < q; ++t)
            proj(t, piv[r]) = -ideal.basis()(r, free[t]);
    Matrix<K> lift(n, q);  // section of proj on the complement coordinates
    for (std::size_t t = 0; t < q; ++t) lift(free[t], t) = K(1);
    Awb<K> out(q);
    for (std::size_t t = 0; t < q; ++t) out.labels[t] = a.labels[free[t]];
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            Vec<K> x = lift.col(i), y = lift.col(j);
            out.product.set_slice(i, j, proj.apply(a.mul(x, y)));
            out.bracket.set_slice(i, j, proj.apply(a.brk(x, y)));
        }
    return {validated(std::move(out)), proj};
}

/// Checks that f is a homomorphism of AWB's on basis pairs.
template <Field K>
bool is_homomorphism(const Awb<K>& src, const Awb<K>& dst, const Matrix<K>& f) {
    if (f.rows() != dst.dim() || f.cols() != src.dim()) throw error("homomorphism shape mismatch");
    std::size_t n = src.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> fi = f.col(i), fj = f.col(j);
            if (f.apply(src.mul_basis(i, j)) != dst.mul(fi, fj)) return false;
            if (f.apply(src.brk_basis(i, j)) != dst.brk(fi, fj)) return false;
        }
    return true;
}

/// Maximal non-commutative-Poisson quotient: divides by the smallest
/// two-sided ideal making the product commutative, the bracket alternating
/// and the Jacobi identity hold.
template <Field K>
QuotientAlgebra<K> poisson_quotient(const Awb<K>& a) {
    require_valid(a);
    std::size_t n = a.dim();
    std::vector<Vec<K>> gens;
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back(a.brk_basis(i, i));  // [a,a] (needed in characteristic 2)
        for (std::size_t j = 0; j < n; ++j) {
            gens.push_back(vec_sub(a.mul_basis(i, j), a.mul_basis(j, i)));
            gens.push_back(vec_add(a.brk_basis(i, j), a.brk_basis(j, i)));
            for (std::size_t k = 0; k < n; ++k) {
                Vec<K> jac = a.bracket.eval(vec_unit<K>(n, i), a.brk_basis(j, k));
                jac = vec_add(jac, a.bracket.eval(vec_unit<K>(n, j), a.brk_basis(k, i)));
                jac = vec_add(jac, a.bracket.eval(vec_unit<K>(n, k), a.brk_basis(i, j)));
                gens.push_back(std::move(jac));
            }
        }
    }
    Subspace<K> ideal = ideal_closure(a, std::move(gens), Subspace<K>::full(n));
    return quotient(a, ideal);
}

}  // namespace awb
