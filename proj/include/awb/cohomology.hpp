#pragma once

#include <vector>

#include "awb/action.hpp"

namespace awb {

/// Matrix of a linear map given by an evaluator on coordinate vectors.
template <Field K, class F>
Matrix<K> matrix_of(std::size_t domain, std::size_t codomain, F&& apply) {
    Matrix<K> m(codomain, domain);
    for (std::size_t j = 0; j < domain; ++j) m.set_col(j, apply(vec_unit<K>(domain, j)));
    return m;
}

/// Multilinear map A^{(x) arity} -> M stored as a flat tensor, row-major over
/// the A-slot indices, M index innermost. For M^e-valued cochains the final
/// A-slot is the evaluation argument of Hom(A,M).
template <Field K>
struct Cochain {
    std::size_t arity = 0;
    std::size_t dim_a = 0, dim_m = 0;
    std::vector<K> data;

    Cochain() = default;
    Cochain(std::size_t arity_, std::size_t dim_a_, std::size_t dim_m_)
        : arity(arity_), dim_a(dim_a_), dim_m(dim_m_) {
        std::size_t n = dim_m;
        for (std::size_t i = 0; i < arity; ++i) n *= dim_a;
        data.assign(n, K(0));
    }

    std::size_t tuple_count() const { return data.size() / dim_m; }
    Vec<K> value(std::size_t ti) const {
        Vec<K> v(dim_m);
        for (std::size_t k = 0; k < dim_m; ++k) v[k] = data[ti * dim_m + k];
        return v;
    }
    void set_value(std::size_t ti, const Vec<K>& v) {
        for (std::size_t k = 0; k < dim_m; ++k) data[ti * dim_m + k] = v[k];
    }
    K& at(std::size_t ti, std::size_t k) { return data[ti * dim_m + k]; }
    const K& at(std::size_t ti, std::size_t k) const { return data[ti * dim_m + k]; }

    /// Value on a basis tuple given as digits.
    std::size_t flatten(const std::vector<std::size_t>& digits) const {
        std::size_t ti = 0;
        for (std::size_t d : digits) ti = ti * dim_a + d;
        return ti;
    }

    bool is_zero() const {
        for (const K& x : data)
            if (!x.is_zero()) return false;
        return true;
    }
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.arity == b.arity && a.dim_a == b.dim_a && a.dim_m == b.dim_m && a.data == b.data;
    }
    Cochain operator+(const Cochain& o) const {
        Cochain out = *this;
        for (std::size_t i = 0; i < data.size(); ++i) out.data[i] += o.data[i];
        return out;
    }
    Cochain operator-() const {
        Cochain out = *this;
        for (K& x : out.data) x = -x;
        return out;
    }
    Cochain scaled(const K& c) const {
        Cochain out = *this;
        for (K& x : out.data) x *= c;
        return out;
    }
};

namespace detail {

inline void decompose(std::size_t ti, std::size_t base, std::vector<std::size_t>& digits) {
    for (std::size_t q = digits.size(); q-- > 0;) {
        digits[q] = ti % base;
        ti /= base;
    }
}

}  // namespace detail

/// Hochschild coboundary with coefficients in the representation carrier:
/// b(f)(a_0..a_r) = a_0.f(a_1..a_r) + sum (-1)^{i+1} f(..a_i a_{i+1}..)
///                + (-1)^{r+1} f(a_0..a_{r-1}).a_r.
template <Field K>
Cochain<K> hochschild_b(const Representation<K>& rep, const Cochain<K>& f) {
    std::size_t r = f.arity, da = f.dim_a, dm = f.dim_m;
    const Awb<K>& a = rep.algebra;
    Cochain<K> out(r + 1, da, dm);
    std::vector<std::size_t> t(r + 1);
    bool last_neg = (r % 2 == 0);  // sign (-1)^{r+1}
    for (std::size_t ti = 0; ti < out.tuple_count(); ++ti) {
        detail::decompose(ti, da, t);
        // a_0 . f(a_1..a_r): head index is ti without the leading digit
        std::size_t head = t[0], tail = ti % (out.tuple_count() / da);
        Vec<K> v = rep.act.left.eval(vec_unit<K>(da, head), f.value(tail));
        // inner products
        std::vector<std::size_t> s(r);
        for (std::size_t i = 0; i + 1 <= r && r > 0 && i < r; ++i) {
            for (std::size_t q = 0; q < i; ++q) s[q] = t[q];
            for (std::size_t q = i + 1; q < r; ++q) s[q] = t[q + 1];
            bool neg = (i % 2 == 0);  // sign (-1)^{i+1}
            for (std::size_t c = 0; c < da; ++c) {
                const K& coef = a.product.at(t[i], t[i + 1], c);
                if (coef.is_zero()) continue;
                s[i] = c;
                Vec<K> fv = f.value(f.flatten(s));
                for (std::size_t k = 0; k < dm; ++k) {
                    K term = coef * fv[k];
                    if (neg) v[k] -= term; else v[k] += term;
                }
            }
        }
        // f(a_0..a_{r-1}) . a_r
        if (r > 0) {
            std::size_t front = ti / da;
            Vec<K> w = rep.act.right.eval(f.value(front), vec_unit<K>(da, t[r]));
            for (std::size_t k = 0; k < dm; ++k) {
                if (last_neg) v[k] -= w[k]; else v[k] += w[k];
            }
        } else {
            // r = 0 never occurs in the cone complex (lowest cochains are linear maps)
            throw error("hochschild_b: arity 0 cochain");
        }
        out.set_value(ti, v);
    }
    return out;
}

/// Hochschild coboundary with coefficients in M^e = Hom(A,M); g is stored
/// with the evaluation argument as its final slot. The bimodule structure is
/// (a0.g)(x) = a0.(g(x)) and (g.a0)(x) = (g(x)).a0.
template <Field K>
Cochain<K> hochschild_b_me(const Representation<K>& rep, const Cochain<K>& g) {
    if (g.arity < 1) throw error("hochschild_b_me: missing evaluation slot");
    std::size_t r = g.arity - 1;  // Hochschild arity
    std::size_t da = g.dim_a, dm = g.dim_m;
    const Awb<K>& a = rep.algebra;
    Cochain<K> out(r + 2, da, dm);
    std::vector<std::size_t> t(r + 2);  // t[0..r] real slots, t[r+1] = evaluation
    bool last_neg = (r % 2 == 0);
    std::vector<std::size_t> s(r + 1);
    for (std::size_t ti = 0; ti < out.tuple_count(); ++ti) {
        detail::decompose(ti, da, t);
        std::size_t x = t[r + 1];
        // a_0 . (g(a_1..a_r)(x))
        for (std::size_t q = 0; q < r; ++q) s[q] = t[q + 1];
        s[r] = x;
        Vec<K> v = rep.act.left.eval(vec_unit<K>(da, t[0]), g.value(g.flatten(s)));
        for (std::size_t i = 0; i + 1 <= r && i < r; ++i) {
            for (std::size_t q = 0; q < i; ++q) s[q] = t[q];
            for (std::size_t q = i + 1; q + 1 <= r; ++q) s[q] = t[q + 1];
            s[r] = x;
            bool neg = (i % 2 == 0);
            for (std::size_t c = 0; c < da; ++c) {
                const K& coef = a.product.at(t[i], t[i + 1], c);
                if (coef.is_zero()) continue;
                s[i] = c;
                Vec<K> gv = g.value(g.flatten(s));
                for (std::size_t k = 0; k < dm; ++k) {
                    K term = coef * gv[k];
                    if (neg) v[k] -= term; else v[k] += term;
                }
            }
        }
        // (g(a_0..a_{r-1})(x)) . a_r
        {
            for (std::size_t q = 0; q < r; ++q) s[q] = t[q];
            s[r] = x;
            Vec<K> w = rep.act.right.eval(g.value(g.flatten(s)), vec_unit<K>(da, t[r]));
            for (std::size_t k = 0; k < dm; ++k) {
                if (last_neg) v[k] -= w[k]; else v[k] += w[k];
            }
        }
        out.set_value(ti, v);
    }
    return out;
}

/// alpha^0(h)(a_0)(a_1) = {a_0, h(a_1)} - h[a_0,a_1] + {h(a_0), a_1}.
template <Field K>
Cochain<K> alpha0(const Representation<K>& rep, const Cochain<K>& h) {
    if (h.arity != 1) throw error("alpha0: expects a linear map");
    std::size_t da = h.dim_a, dm = h.dim_m;
    const Awb<K>& a = rep.algebra;
    Cochain<K> out(2, da, dm);
    for (std::size_t a0 = 0; a0 < da; ++a0)
        for (std::size_t a1 = 0; a1 < da; ++a1) {
            Vec<K> v = rep.act.blift.eval(vec_unit<K>(da, a0), h.value(a1));
            for (std::size_t c = 0; c < da; ++c) {
                const K& coef = a.bracket.at(a0, a1, c);
                if (coef.is_zero()) continue;
                Vec<K> hv = h.value(c);
                for (std::size_t k = 0; k < dm; ++k) v[k] -= coef * hv[k];
            }
            Vec<K> w = rep.act.bright.eval(h.value(a0), vec_unit<K>(da, a1));
            for (std::size_t k = 0; k < dm; ++k) v[k] += w[k];
            out.set_value(a0 * da + a1, v);
        }
    return out;
}

/// alpha^n (n >= 1) on f: A^{(x)(n+1)} -> M:
/// alpha(f)(a_0..a_n)(x) = {f(a_0..a_n), x} - sum_i f(a_0,..,[a_i,x],..,a_n).
template <Field K>
Cochain<K> alpha_n(const Representation<K>& rep, const Cochain<K>& f) {
    if (f.arity < 2) throw error("alpha_n: expects arity >= 2 (use alpha0 below)");
    std::size_t r = f.arity;  // = n+1 slots
    std::size_t da = f.dim_a, dm = f.dim_m;
    const Awb<K>& a = rep.algebra;
    Cochain<K> out(r + 1, da, dm);
    std::vector<std::size_t> t(r + 1), s(r);
    for (std::size_t ti = 0; ti < out.tuple_count(); ++ti) {
        detail::decompose(ti, da, t);
        std::size_t x = t[r];
        std::size_t front = ti / da;  // (a_0..a_n) flattened
        Vec<K> v = rep.act.bright.eval(f.value(front), vec_unit<K>(da, x));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t q = 0; q < r; ++q) s[q] = t[q];
            for (std::size_t c = 0; c < da; ++c) {
                const K& coef = a.bracket.at(t[i], x, c);
                if (coef.is_zero()) continue;
                s[i] = c;
                Vec<K> fv = f.value(f.flatten(s));
                for (std::size_t k = 0; k < dm; ++k) v[k] -= coef * fv[k];
            }
        }
        out.set_value(ti, v);
    }
    return out;
}

/// Cone cochain: degree -1 holds a single linear map h: A -> M (in f);
/// degree n >= 0 holds f: A^{(x)(n+2)} -> M and g: A^{(x)(n+1)} -> M^e
/// (stored with the evaluation slot appended, so g.arity = n+2 as well).
template <Field K>
struct KCochain {
    int degree = -1;
    Cochain<K> f;
    Cochain<K> g;

    static KCochain minus_one(Cochain<K> h) {
        if (h.arity != 1) throw error("KCochain: degree -1 expects a linear map");
        KCochain c;
        c.degree = -1;
        c.f = std::move(h);
        return c;
    }
    static KCochain pair(int degree, Cochain<K> f, Cochain<K> g) {
        if (degree < 0 || f.arity != static_cast<std::size_t>(degree) + 2 ||
            g.arity != static_cast<std::size_t>(degree) + 2)
            throw error("KCochain: component arity does not match degree");
        KCochain c;
        c.degree = degree;
        c.f = std::move(f);
        c.g = std::move(g);
        return c;
    }
    static KCochain zero(int degree, std::size_t da, std::size_t dm) {
        if (degree == -1) return minus_one(Cochain<K>(1, da, dm));
        return pair(degree, Cochain<K>(degree + 2, da, dm), Cochain<K>(degree + 2, da, dm));
    }

    bool is_zero() const { return f.is_zero() && (degree == -1 || g.is_zero()); }
    KCochain operator+(const KCochain& o) const {
        if (degree != o.degree) throw error("KCochain degree mismatch");
        KCochain out = *this;
        out.f = f + o.f;
        if (degree >= 0) out.g = g + o.g;
        return out;
    }
    KCochain operator-() const {
        KCochain out = *this;
        out.f = -f;
        if (degree >= 0) out.g = -g;
        return out;
    }
    KCochain scaled(const K& c) const {
        KCochain out = *this;
        out.f = f.scaled(c);
        if (degree >= 0) out.g = g.scaled(c);
        return out;
    }
    friend bool operator==(const KCochain& x, const KCochain& y) {
        return x.degree == y.degree && x.f == y.f && (x.degree == -1 || x.g == y.g);
    }
};

template <Field K>
std::size_t k_space_dim(const Representation<K>& rep, int degree) {
    std::size_t da = rep.algebra.dim(), dm = rep.dim_m();
    if (degree < -1) return 0;
    if (degree == -1) return da * dm;
    std::size_t n = dm;
    for (int i = 0; i < degree + 2; ++i) n *= da;
    return 2 * n;
}

template <Field K>
Vec<K> k_flatten(const KCochain<K>& c) {
    Vec<K> v = c.f.data;
    if (c.degree >= 0) v.insert(v.end(), c.g.data.begin(), c.g.data.end());
    return v;
}

template <Field K>
KCochain<K> k_unflatten(const Representation<K>& rep, int degree, const Vec<K>& v) {
    std::size_t da = rep.algebra.dim(), dm = rep.dim_m();
    KCochain<K> c = KCochain<K>::zero(degree, da, dm);
    if (v.size() != k_space_dim(rep, degree)) throw error("k_unflatten size mismatch");
    std::size_t half = c.f.data.size();
    for (std::size_t i = 0; i < half; ++i) c.f.data[i] = v[i];
    if (degree >= 0)
        for (std::size_t i = 0; i < half; ++i) c.g.data[i] = v[half + i];
    return c;
}

/// Cone coboundary. Displayed low degrees and the generic cone rule agree:
///   d(h)    = (-b h, -alpha^0 h)              degree -1
///   d(f,g)  = (-b f, b g - alpha f)           degree n >= 0
template <Field K>
KCochain<K> k_coboundary(const Representation<K>& rep, const KCochain<K>& c) {
    if (c.degree == -1) {
        Cochain<K> bf = hochschild_b(rep, c.f);
        Cochain<K> af = alpha0(rep, c.f);
        return KCochain<K>::pair(0, -bf, -af);
    }
    Cochain<K> bf = hochschild_b(rep, c.f);
    Cochain<K> bg = hochschild_b_me(rep, c.g);
    Cochain<K> af = alpha_n(rep, c.f);
    std::size_t n = bg.data.size();
    Cochain<K> second = bg;
    for (std::size_t i = 0; i < n; ++i) second.data[i] = bg.data[i] - af.data[i];
    return KCochain<K>::pair(c.degree + 1, -bf, std::move(second));
}

template <Field K>
Matrix<K> coboundary_matrix(const Representation<K>& rep, int degree) {
    std::size_t dom = k_space_dim(rep, degree);
    std::size_t cod = k_space_dim(rep, degree + 1);
    return matrix_of<K>(dom, cod, [&](const Vec<K>& v) {
        return k_flatten(k_coboundary(rep, k_unflatten(rep, degree, v)));
    });
}

/// H^n machinery: cocycles, coboundaries, canonical class representatives
/// (kernel basis reduced modulo the image, then re-echelonized). Degrees
/// beyond the displayed coboundaries are flagged extrapolated.
template <Field K>
struct Cohomology {
    int h_degree = 0;
    bool extrapolated = false;
    Subspace<K> cocycles{0};
    Subspace<K> coboundaries{0};
    std::vector<Vec<K>> class_basis;  // canonical representatives, flat

    std::size_t dim() const { return cocycles.dim() - coboundaries.dim(); }

    bool is_cocycle(const Vec<K>& flat) const { return cocycles.contains(flat); }
    bool is_coboundary(const Vec<K>& flat) const { return coboundaries.contains(flat); }
    /// Canonical coset representative of a cocycle.
    Vec<K> normal_form(const Vec<K>& flat) const {
        if (!is_cocycle(flat)) throw error("normal_form: not a cocycle");
        return coboundaries.reduce(flat);
    }
    bool same_class(const Vec<K>& x, const Vec<K>& y) const {
        return normal_form(x) == normal_form(y);
    }
};

template <Field K>
Cohomology<K> cohomology(const Representation<K>& rep, int n) {
    if (n < 0) throw error("cohomology: degree must be >= 0");
    require_valid(rep.algebra);
    Cohomology<K> h;
    h.h_degree = n;
    h.extrapolated = n >= 3;
    int k = n - 1;  // cone degree
    Matrix<K> dk = coboundary_matrix(rep, k);
    h.cocycles = kernel(dk);
    if (k - 1 >= -1) {
        Matrix<K> dprev = coboundary_matrix(rep, k - 1);
        h.coboundaries = image(dprev);
    } else {
        h.coboundaries = Subspace<K>(k_space_dim(rep, k));
    }
    for (std::size_t i = 0; i < h.cocycles.dim(); ++i) {
        Vec<K> r = h.coboundaries.reduce(h.cocycles.basis_vector(i));
        if (!vec_is_zero(r)) h.class_basis.push_back(std::move(r));
    }
    {
        Subspace<K> canon = Subspace<K>::span(k_space_dim(rep, k), h.class_basis);
        h.class_basis.clear();
        for (std::size_t i = 0; i < canon.dim(); ++i)
            h.class_basis.push_back(canon.basis_vector(i));
    }
    return h;
}

/// Hom(A,M) flattening: images of basis vectors concatenated, so a linear
/// map d corresponds to [d(e_0); d(e_1); ...].
template <Field K>
Vec<K> hom_flatten(const Matrix<K>& d) {
    Vec<K> v;
    v.reserve(d.rows() * d.cols());
    for (std::size_t j = 0; j < d.cols(); ++j)
        for (std::size_t i = 0; i < d.rows(); ++i) v.push_back(d(i, j));
    return v;
}

template <Field K>
Matrix<K> hom_unflatten(std::size_t rows, std::size_t cols, const Vec<K>& v) {
    if (v.size() != rows * cols) throw error("hom_unflatten size mismatch");
    Matrix<K> d(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) d(i, j) = v[j * rows + i];
    return d;
}

/// Derivations A -> M for arbitrary four-tensor coefficients (for
/// representations this is Der_AWB(A,M); with A acting on itself by its own
/// operations it is Der_AWB(A)). Subspace of Hom(A,M) in hom_flatten
/// coordinates.
template <Field K>
Subspace<K> derivation_space(const Awb<K>& a, const ActionData<K>& act) {
    require_valid(a);
    std::size_t da = a.dim(), dm = act.dim_m();
    if (act.dim_a() != da) throw error("derivation_space: tensor shape mismatch");
    auto constraints = [&](const Vec<K>& flat) {
        Matrix<K> d = hom_unflatten(dm, da, flat);
        Vec<K> out;
        out.reserve(2 * da * da * dm);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < da; ++j) {
                Vec<K> ei = vec_unit<K>(da, i), ej = vec_unit<K>(da, j);
                Vec<K> prod = d.apply(a.mul_basis(i, j));
                prod = vec_sub(prod, act.act_left(ei, d.col(j)));
                prod = vec_sub(prod, act.act_right(d.col(i), ej));
                Vec<K> brk = d.apply(a.brk_basis(i, j));
                brk = vec_sub(brk, act.act_blift(ei, d.col(j)));
                brk = vec_sub(brk, act.act_bright(d.col(i), ej));
                out.insert(out.end(), prod.begin(), prod.end());
                out.insert(out.end(), brk.begin(), brk.end());
            }
        return out;
    };
    Matrix<K> sys = matrix_of<K>(da * dm, 2 * da * da * dm, constraints);
    return kernel(sys);
}

template <Field K>
Subspace<K> derivation_space(const Representation<K>& rep) {
    return derivation_space(rep.algebra, rep.act);
}

/// The self-action of an algebra by its own operations.
template <Field K>
ActionData<K> self_action(const Awb<K>& a) {
    std::size_t n = a.dim();
    ActionData<K> act(n, n);
    act.left = a.product;
    act.right = a.product;
    act.blift = a.bracket;
    act.bright = a.bracket;
    return act;
}

template <Field K>
struct DerAwb {
    Subspace<K> space;      // subspace of End(A) in hom_flatten coordinates
    bool lie_closed = true; // commutators of basis derivations stay inside
};

template <Field K>
DerAwb<K> der_awb(const Awb<K>& a) {
    DerAwb<K> out{derivation_space(a, self_action(a)), true};
    std::size_t n = a.dim();
    for (std::size_t r = 0; r < out.space.dim() && out.lie_closed; ++r)
        for (std::size_t s = 0; s < out.space.dim(); ++s) {
            Matrix<K> d1 = hom_unflatten(n, n, out.space.basis_vector(r));
            Matrix<K> d2 = hom_unflatten(n, n, out.space.basis_vector(s));
            if (!out.space.contains(hom_flatten(d1 * d2 - d2 * d1))) {
                out.lie_closed = false;
                break;
            }
        }
    return out;
}

/// -1-cocycles of K*(A,M): Ker of the full cone coboundary (product and
/// bracket derivation conditions), i.e. the degree-0 cocycle space.
template <Field K>
Subspace<K> z_minus1(const Representation<K>& rep) {
    return kernel(coboundary_matrix(rep, -1));
}

/// One-off check that M^e = Hom(A,M) with (a.f)(x) = a.f(x), (f.a)(x) = f(x).a
/// is a bimodule (follows from the representation equations; verified on basis).
template <Field K>
bool me_bimodule_ok(const Representation<K>& rep) {
    std::size_t da = rep.algebra.dim(), dm = rep.dim_m();
    const Awb<K>& a = rep.algebra;
    // basis of M^e: phi_{t,k}(e_x) = delta_{t,x} e_k
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t t = 0; t < da; ++t)
                for (std::size_t k = 0; k < dm; ++k)
                    for (std::size_t x = 0; x < da; ++x) {
                        Vec<K> phi_x = (x == t) ? vec_unit<K>(dm, k) : vec_zero<K>(dm);
                        Vec<K> ei = vec_unit<K>(da, i), ej = vec_unit<K>(da, j);
                        // ((e_i e_j) . phi)(x) = e_i . (e_j . phi)(x)
                        Vec<K> lhs = rep.act.left.eval(a.mul_basis(i, j), phi_x);
                        Vec<K> rhs = rep.act.act_left(ei, rep.act.act_left(ej, phi_x));
                        if (lhs != rhs) return false;
                        // (phi . (e_i e_j))(x) = ((phi . e_i) . e_j)(x)
                        lhs = rep.act.right.eval(phi_x, a.mul_basis(i, j));
                        rhs = rep.act.act_right(rep.act.act_right(phi_x, ei), ej);
                        if (lhs != rhs) return false;
                        // ((e_i . phi) . e_j)(x) = (e_i . (phi . e_j))(x)
                        lhs = rep.act.act_right(rep.act.act_left(ei, phi_x), ej);
                        rhs = rep.act.act_left(ei, rep.act.act_right(phi_x, ej));
                        if (lhs != rhs) return false;
                    }
    return true;
}

}  // namespace awb
