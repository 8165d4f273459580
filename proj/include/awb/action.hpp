#pragma once

#include <array>
#include <optional>

#include "awb/algebra.hpp"

namespace awb {

/// Four bilinear action tensors of an algebra A on a space M. Acting index
/// first for left/blift, acted index first for right/bright:
///   left.slice(i, j)   = e_i . m_j        blift.slice(i, j)  = {e_i, m_j}
///   right.slice(j, i)  = m_j . e_i        bright.slice(j, i) = {m_j, e_i}
template <Field K>
struct ActionData {
    Trilinear<K> left;    // dimA x dimM x dimM
    Trilinear<K> right;   // dimM x dimA x dimM
    Trilinear<K> blift;   // dimA x dimM x dimM
    Trilinear<K> bright;  // dimM x dimA x dimM

    ActionData() = default;
    ActionData(std::size_t dim_a, std::size_t dim_m)
        : left(dim_a, dim_m, dim_m),
          right(dim_m, dim_a, dim_m),
          blift(dim_a, dim_m, dim_m),
          bright(dim_m, dim_a, dim_m) {}

    std::size_t dim_a() const { return left.n1(); }
    std::size_t dim_m() const { return left.n2(); }

    Vec<K> act_left(const Vec<K>& a, const Vec<K>& m) const { return left.eval(a, m); }
    Vec<K> act_right(const Vec<K>& m, const Vec<K>& a) const { return right.eval(m, a); }
    Vec<K> act_blift(const Vec<K>& a, const Vec<K>& m) const { return blift.eval(a, m); }
    Vec<K> act_bright(const Vec<K>& m, const Vec<K>& a) const { return bright.eval(m, a); }

    bool is_trivial() const {
        return left.is_zero() && right.is_zero() && blift.is_zero() && bright.is_zero();
    }
    friend bool operator==(const ActionData& x, const ActionData& y) {
        return x.left == y.left && x.right == y.right && x.blift == y.blift &&
               x.bright == y.bright;
    }
    friend bool operator!=(const ActionData& x, const ActionData& y) { return !(x == y); }
};

/// Representation of A: an abelian carrier K^dim_m with four action tensors
/// satisfying the six surviving action equations.
template <Field K>
struct Representation {
    Awb<K> algebra;
    ActionData<K> act;

    Representation() = default;
    Representation(Awb<K> a, ActionData<K> action)
        : algebra(std::move(a)), act(std::move(action)) {}

    std::size_t dim_m() const { return act.dim_m(); }
    /// The carrier viewed as an abelian AWB (Example 2.4(i) direction).
    Awb<K> carrier() const { return abelian<K>(dim_m()); }
};

template <Field K>
Representation<K> trivial_representation(const Awb<K>& a, std::size_t dim_m) {
    return Representation<K>(a, ActionData<K>(a.dim(), dim_m));
}

struct ActionReport {
    bool ok = true;
    std::optional<int> failed_equation;             // 1..12 row-major as printed
    std::optional<std::array<std::size_t, 3>> triple;  // 0-based basis indices
};

namespace detail {

/// Evaluates one side of action equation `eq` on a basis triple. Equations
/// 1-6 take triples (a1, a2, m); equations 7-12 take (a, m1, m2). The carrier
/// algebra ops are only consulted by equations 7-12 (pass the abelian carrier
/// for representations).
template <Field K>
std::pair<Vec<K>, Vec<K>> action_equation_sides(const Awb<K>& a, const Awb<K>& m,
                                                const ActionData<K>& act, int eq,
                                                std::size_t i, std::size_t j, std::size_t k) {
    std::size_t na = a.dim(), nm = m.dim();
    auto ea = [&](std::size_t t) { return vec_unit<K>(na, t); };
    auto em = [&](std::size_t t) { return vec_unit<K>(nm, t); };
    switch (eq) {
        case 1:  // (a1 a2) . m = a1 . (a2 . m)
            return {act.act_left(a.mul_basis(i, j), em(k)),
                    act.act_left(ea(i), act.act_left(ea(j), em(k)))};
        case 2:  // {a1 . m, a2} = a1 . {m, a2} + [a1, a2] . m
            return {act.act_bright(act.act_left(ea(i), em(k)), ea(j)),
                    vec_add(act.act_left(ea(i), act.act_bright(em(k), ea(j))),
                            act.act_left(a.brk_basis(i, j), em(k)))};
        case 3:  // m . (a1 a2) = (m . a1) . a2
            return {act.act_right(em(k), a.mul_basis(i, j)),
                    act.act_right(act.act_right(em(k), ea(i)), ea(j))};
        case 4:  // {m . a1, a2} = {m, a2} . a1 + m . [a1, a2]
            return {act.act_bright(act.act_right(em(k), ea(i)), ea(j)),
                    vec_add(act.act_right(act.act_bright(em(k), ea(j)), ea(i)),
                            act.act_right(em(k), a.brk_basis(i, j)))};
        case 5:  // (a1 . m) . a2 = a1 . (m . a2)
            return {act.act_right(act.act_left(ea(i), em(k)), ea(j)),
                    act.act_left(ea(i), act.act_right(em(k), ea(j)))};
        case 6:  // {a1 a2, m} = a1 . {a2, m} + {a1, m} . a2
            return {act.act_blift(a.mul_basis(i, j), em(k)),
                    vec_add(act.act_left(ea(i), act.act_blift(ea(j), em(k))),
                            act.act_right(act.act_blift(ea(i), em(k)), ea(j)))};
        case 7:  // (m1 m2) . a = m1 (m2 . a)
            return {act.act_right(m.mul_basis(j, k), ea(i)),
                    m.mul(em(j), act.act_right(em(k), ea(i)))};
        case 8:  // [m1 . a, m2] = m1 {a, m2} + [m1, m2] . a
            return {m.brk(act.act_right(em(j), ea(i)), em(k)),
                    vec_add(m.mul(em(j), act.act_blift(ea(i), em(k))),
                            act.act_right(m.brk_basis(j, k), ea(i)))};
        case 9:  // a . (m1 m2) = (a . m1) m2
            return {act.act_left(ea(i), m.mul_basis(j, k)),
                    m.mul(act.act_left(ea(i), em(j)), em(k))};
        case 10:  // [a . m1, m2] = a . [m1, m2] + {a, m2} m1
            return {m.brk(act.act_left(ea(i), em(j)), em(k)),
                    vec_add(act.act_left(ea(i), m.brk_basis(j, k)),
                            m.mul(act.act_blift(ea(i), em(k)), em(j)))};
        case 11:  // (m1 . a) m2 = m1 (a . m2)
            return {m.mul(act.act_right(em(j), ea(i)), em(k)),
                    m.mul(em(j), act.act_left(ea(i), em(k)))};
        case 12:  // {m1 m2, a} = m1 {m2, a} + {m1, a} m2
            return {act.act_bright(m.mul_basis(j, k), ea(i)),
                    vec_add(m.mul(em(j), act.act_bright(em(k), ea(i))),
                            m.mul(act.act_bright(em(j), ea(i)), em(k)))};
        default:
            throw error("action equation index out of range");
    }
}

template <Field K>
ActionReport check_action_equations(const Awb<K>& a, const Awb<K>& m,
                                    const ActionData<K>& act, int last_eq) {
    std::size_t na = a.dim(), nm = m.dim();
    ActionReport rep;
    for (int eq = 1; eq <= last_eq; ++eq) {
        bool two_a = eq <= 6;
        std::size_t ni = na;
        std::size_t nj = two_a ? na : nm;
        std::size_t nk = nm;
        for (std::size_t i = 0; i < ni; ++i)
            for (std::size_t j = 0; j < nj; ++j)
                for (std::size_t k = 0; k < nk; ++k) {
                    auto [lhs, rhs] = action_equation_sides(a, m, act, eq, i, j, k);
                    if (lhs != rhs) {
                        rep.ok = false;
                        rep.failed_equation = eq;
                        rep.triple = {{i, j, k}};
                        return rep;
                    }
                }
    }
    return rep;
}

}  // namespace detail

/// Full action check: the twelve equations of the action definition on all
/// basis triples, numbered row-major as printed.
template <Field K>
ActionReport verify_action(const Awb<K>& a, const Awb<K>& m, const ActionData<K>& act) {
    require_valid(a);
    require_valid(m);
    if (act.dim_a() != a.dim() || act.dim_m() != m.dim())
        throw error("verify_action: tensor shape mismatch");
    return detail::check_action_equations(a, m, act, 12);
}

/// Representation check: only the six surviving equations (the carrier is
/// abelian, so the remaining six vanish identically).
template <Field K>
ActionReport verify_representation(const Representation<K>& rep) {
    Awb<K> carrier = rep.carrier();
    if (rep.act.dim_a() != rep.algebra.dim())
        throw error("verify_representation: tensor shape mismatch");
    return detail::check_action_equations(rep.algebra, carrier, rep.act, 6);
}

template <Field K>
struct SemidirectProduct {
    Awb<K> algebra;  // underlying space M (+) A, M coordinates first
    Matrix<K> i;     // M -> E
    Matrix<K> p;     // E -> A
    Matrix<K> s;     // A -> E, linear splitting with p s = id
};

/// Semi-direct product M x| A for a verified action.
template <Field K>
SemidirectProduct<K> semidirect(const Awb<K>& m, const Awb<K>& a, const ActionData<K>& act) {
    ActionReport ar = verify_action(a, m, act);
    if (!ar.ok) throw error("semidirect: action fails equation " + std::to_string(*ar.failed_equation));
    std::size_t nm = m.dim(), na = a.dim(), n = nm + na;
    Awb<K> e(n);
    for (std::size_t i = 0; i < nm; ++i) e.labels[i] = m.labels[i];
    for (std::size_t i = 0; i < na; ++i) e.labels[nm + i] = a.labels[i];
    auto put_m = [&](Vec<K>& dst, const Vec<K>& v) {
        for (std::size_t k = 0; k < nm; ++k) dst[k] += v[k];
    };
    auto put_a = [&](Vec<K>& dst, const Vec<K>& v) {
        for (std::size_t k = 0; k < na; ++k) dst[nm + k] += v[k];
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> prod(n, K(0)), brk(n, K(0));
            bool i_in_m = i < nm, j_in_m = j < nm;
            if (i_in_m && j_in_m) {
                put_m(prod, m.mul_basis(i, j));
                put_m(brk, m.brk_basis(i, j));
            } else if (i_in_m) {
                put_m(prod, act.right.slice(i, j - nm));
                put_m(brk, act.bright.slice(i, j - nm));
            } else if (j_in_m) {
                put_m(prod, act.left.slice(i - nm, j));
                put_m(brk, act.blift.slice(i - nm, j));
            } else {
                put_a(prod, a.mul_basis(i - nm, j - nm));
                put_a(brk, a.brk_basis(i - nm, j - nm));
            }
            e.product.set_slice(i, j, prod);
            e.bracket.set_slice(i, j, brk);
        }
    SemidirectProduct<K> out;
    out.algebra = validated(std::move(e));
    out.i = Matrix<K>(n, nm);
    for (std::size_t k = 0; k < nm; ++k) out.i(k, k) = K(1);
    out.p = Matrix<K>(na, n);
    for (std::size_t k = 0; k < na; ++k) out.p(k, nm + k) = K(1);
    out.s = Matrix<K>(n, na);
    for (std::size_t k = 0; k < na; ++k) out.s(nm + k, k) = K(1);
    return out;
}

/// Action induced by a split short exact sequence 0 -> M -> E -> A -> 0 with
/// AWB-homomorphism section s: a.m = i^{-1}(s(a) i(m)) and companions.
template <Field K>
ActionData<K> action_from_split(const Awb<K>& m, const Awb<K>& a, const Awb<K>& e,
                                const Matrix<K>& i, const Matrix<K>& p, const Matrix<K>& s) {
    require_valid(m);
    require_valid(a);
    require_valid(e);
    if (p * s != Matrix<K>::identity(a.dim())) throw error("action_from_split: p s != id");
    if (image(i) != kernel(p) || i.rank() != m.dim() || p.rank() != a.dim())
        throw error("action_from_split: sequence not exact");
    if (!is_homomorphism(a, e, s)) throw error("action_from_split: s not a homomorphism");
    if (!is_homomorphism(m, e, i)) throw error("action_from_split: i not a homomorphism");
    Subspace<K> im_i = image(i);
    Matrix<K> ret = i.left_inverse();
    auto pull = [&](const Vec<K>& v) {
        if (!im_i.contains(v)) throw error("action_from_split: value lands outside Im i");
        return ret.apply(v);
    };
    std::size_t na = a.dim(), nm = m.dim();
    ActionData<K> act(na, nm);
    for (std::size_t t = 0; t < na; ++t)
        for (std::size_t j = 0; j < nm; ++j) {
            Vec<K> sa = s.col(t), im = i.col(j);
            act.left.set_slice(t, j, pull(e.mul(sa, im)));
            act.right.set_slice(j, t, pull(e.mul(im, sa)));
            act.blift.set_slice(t, j, pull(e.brk(sa, im)));
            act.bright.set_slice(j, t, pull(e.brk(im, sa)));
        }
    ActionReport ar = verify_action(a, m, act);
    if (!ar.ok) throw error("action_from_split: induced data fails the action equations");
    return act;
}

/// Action induced by a surjection mu: M -> A with Ker(mu) central in M,
/// via a linear section (the result is section-independent; asserted by
/// recomputing with a second section whenever one exists).
template <Field K>
ActionData<K> action_from_surjection(const Matrix<K>& mu, const Awb<K>& m, const Awb<K>& a) {
    require_valid(m);
    require_valid(a);
    if (!is_homomorphism(m, a, mu)) throw error("action_from_surjection: mu not a homomorphism");
    if (mu.rank() != a.dim()) throw error("action_from_surjection: mu not surjective");
    Subspace<K> ker = kernel(mu);
    if (!center(m).contains(ker)) throw error("action_from_surjection: Ker(mu) not central");
    auto build = [&](const Matrix<K>& q) {
        std::size_t na = a.dim(), nm = m.dim();
        ActionData<K> act(na, nm);
        for (std::size_t t = 0; t < na; ++t)
            for (std::size_t j = 0; j < nm; ++j) {
                Vec<K> qa = q.col(t), em = vec_unit<K>(nm, j);
                act.left.set_slice(t, j, m.mul(qa, em));
                act.right.set_slice(j, t, m.mul(em, qa));
                act.blift.set_slice(t, j, m.brk(qa, em));
                act.bright.set_slice(j, t, m.brk(em, qa));
            }
        return act;
    };
    Matrix<K> q = mu.section();
    ActionData<K> act = build(q);
    if (ker.dim() > 0) {
        Matrix<K> q2 = q;
        for (std::size_t t = 0; t < q2.cols(); ++t) {
            Vec<K> c = q2.col(t);
            q2.set_col(t, vec_add(c, ker.basis_vector(0)));
        }
        if (build(q2) != act)
            throw error("action_from_surjection: section dependence detected");
    }
    ActionReport ar = verify_action(a, m, act);
    if (!ar.ok) throw error("action_from_surjection: induced data fails the action equations");
    return act;
}

/// Subalgebra structure carried by an invariant subspace (coordinates in the
/// canonical basis of U).
template <Field K>
Awb<K> subalgebra_on(const Awb<K>& a, const Subspace<K>& u) {
    require_valid(a);
    if (!ideal_predicates(a, u).subalgebra) throw error("subalgebra_on: not a subalgebra");
    std::size_t k = u.dim();
    Awb<K> out(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            out.product.set_slice(i, j, u.coordinates(a.mul(u.basis_vector(i), u.basis_vector(j))));
            out.bracket.set_slice(i, j, u.coordinates(a.brk(u.basis_vector(i), u.basis_vector(j))));
        }
    return validated(std::move(out));
}

/// A two-sided ideal with the action of the ambient algebra by its own
/// operations (Example 2.4(ii)).
template <Field K>
struct IdealAction {
    Awb<K> m;          // the ideal as an algebra, in the canonical basis of u
    ActionData<K> act;
    Matrix<K> inclusion;  // dim(a) x dim(u)
};

template <Field K>
IdealAction<K> ideal_action(const Awb<K>& a, const Subspace<K>& u) {
    if (!ideal_predicates(a, u).two_sided) throw error("ideal_action: not a two-sided ideal");
    IdealAction<K> out;
    out.m = subalgebra_on(a, u);
    std::size_t na = a.dim(), k = u.dim();
    out.act = ActionData<K>(na, k);
    for (std::size_t t = 0; t < na; ++t)
        for (std::size_t j = 0; j < k; ++j) {
            Vec<K> ea = vec_unit<K>(na, t), w = u.basis_vector(j);
            out.act.left.set_slice(t, j, u.coordinates(a.mul(ea, w)));
            out.act.right.set_slice(j, t, u.coordinates(a.mul(w, ea)));
            out.act.blift.set_slice(t, j, u.coordinates(a.brk(ea, w)));
            out.act.bright.set_slice(j, t, u.coordinates(a.brk(w, ea)));
        }
    out.inclusion = u.inclusion();
    return out;
}

}  // namespace awb
