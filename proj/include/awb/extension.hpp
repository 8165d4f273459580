#pragma once

#include "awb/cohomology.hpp"

namespace awb {

/// Abelian extension 0 -> M -> E -> A -> 0 inducing the representation of A
/// on M.
template <Field K>
struct AbelianExtension {
    Representation<K> rep;  // (A, M)
    Awb<K> total;           // E
    Matrix<K> i;            // dim(E) x dim(M)
    Matrix<K> p;            // dim(A) x dim(E)
};

struct ExtensionReport {
    bool i_hom = false, p_hom = false, exact = false, induced_matches = false;
    bool ok() const { return i_hom && p_hom && exact && induced_matches; }
};

/// Representation induced on M by a (not necessarily split) extension via any
/// linear section; section-independent because Im i is an abelian ideal.
template <Field K>
ActionData<K> induced_representation(const AbelianExtension<K>& e) {
    std::size_t na = e.rep.algebra.dim(), nm = e.rep.dim_m();
    Matrix<K> s = e.p.section();
    Matrix<K> ret = e.i.left_inverse();
    Subspace<K> im_i = image(e.i);
    auto pull = [&](const Vec<K>& v) {
        if (!im_i.contains(v)) throw error("induced_representation: value outside Im i");
        return ret.apply(v);
    };
    ActionData<K> act(na, nm);
    for (std::size_t t = 0; t < na; ++t)
        for (std::size_t j = 0; j < nm; ++j) {
            Vec<K> sa = s.col(t), im = e.i.col(j);
            act.left.set_slice(t, j, pull(e.total.mul(sa, im)));
            act.right.set_slice(j, t, pull(e.total.mul(im, sa)));
            act.blift.set_slice(t, j, pull(e.total.brk(sa, im)));
            act.bright.set_slice(j, t, pull(e.total.brk(im, sa)));
        }
    return act;
}

template <Field K>
ExtensionReport verify_extension(const AbelianExtension<K>& e) {
    ExtensionReport rep;
    Awb<K> carrier = e.rep.carrier();
    rep.i_hom = is_homomorphism(carrier, e.total, e.i);
    rep.p_hom = is_homomorphism(e.total, e.rep.algebra, e.p);
    rep.exact = e.i.rank() == e.rep.dim_m() && e.p.rank() == e.rep.algebra.dim() &&
                image(e.i) == kernel(e.p);
    if (rep.i_hom && rep.p_hom && rep.exact)
        rep.induced_matches = induced_representation(e) == e.rep.act;
    return rep;
}

template <Field K>
void require_extension(const AbelianExtension<K>& e) {
    if (!verify_extension(e).ok()) throw error("invalid abelian extension");
}

template <Field K>
KCochain<K> cocycle_of_extension_with_section(const AbelianExtension<K>& e, const Matrix<K>& s);

/// 0-cocycle of an extension for the canonical linear section:
///   f(a0,a1) = i^{-1}(s(a0)s(a1) - s(a0 a1)),
///   g(a0)(a1) = i^{-1}([s(a0),s(a1)] - s[a0,a1]).
template <Field K>
KCochain<K> cocycle_of_extension(const AbelianExtension<K>& e) {
    require_extension(e);
    return cocycle_of_extension_with_section(e, e.p.section());
}

template <Field K>
KCochain<K> cocycle_of_extension_with_section(const AbelianExtension<K>& e, const Matrix<K>& s) {
    if (e.p * s != Matrix<K>::identity(e.rep.algebra.dim()))
        throw error("cocycle_of_extension: not a section of p");
    std::size_t na = e.rep.algebra.dim(), nm = e.rep.dim_m();
    Matrix<K> ret = e.i.left_inverse();
    Subspace<K> im_i = image(e.i);
    auto pull = [&](const Vec<K>& v) {
        if (!im_i.contains(v)) throw error("cocycle_of_extension: value outside Im i");
        return ret.apply(v);
    };
    Cochain<K> f(2, na, nm), g(2, na, nm);
    for (std::size_t a0 = 0; a0 < na; ++a0)
        for (std::size_t a1 = 0; a1 < na; ++a1) {
            Vec<K> s0 = s.col(a0), s1 = s.col(a1);
            Vec<K> fp = vec_sub(e.total.mul(s0, s1), s.apply(e.rep.algebra.mul_basis(a0, a1)));
            Vec<K> gp = vec_sub(e.total.brk(s0, s1), s.apply(e.rep.algebra.brk_basis(a0, a1)));
            f.set_value(a0 * na + a1, pull(fp));
            g.set_value(a0 * na + a1, pull(gp));
        }
    KCochain<K> z = KCochain<K>::pair(0, std::move(f), std::move(g));
    if (!k_coboundary(e.rep, z).is_zero())
        throw error("cocycle_of_extension: extension data is not a cocycle");
    return z;
}

/// Extension M (+) A built from a 0-cocycle:
///   (m1,a1)(m2,a2) = (a1.m2 + m1.a2 + f(a1,a2), a1 a2)
///   [(m1,a1),(m2,a2)] = ({a1,m2} + {m1,a2} + g(a1)(a2), [a1,a2]).
template <Field K>
AbelianExtension<K> extension_from_cocycle(const Representation<K>& rep, const KCochain<K>& z) {
    if (z.degree != 0) throw error("extension_from_cocycle: expects a degree-0 cochain");
    if (!k_coboundary(rep, z).is_zero())
        throw error("extension_from_cocycle: not a cocycle");
    std::size_t na = rep.algebra.dim(), nm = rep.dim_m(), n = nm + na;
    Awb<K> e(n);
    for (std::size_t i = 0; i < nm; ++i) e.labels[i] = "m" + std::to_string(i + 1);
    for (std::size_t i = 0; i < na; ++i) e.labels[nm + i] = rep.algebra.labels[i];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> prod(n, K(0)), brk(n, K(0));
            bool i_m = i < nm, j_m = j < nm;
            if (i_m && j_m) {
                // both abelian: zero
            } else if (i_m) {
                Vec<K> r = rep.act.right.slice(i, j - nm);
                Vec<K> br = rep.act.bright.slice(i, j - nm);
                for (std::size_t k = 0; k < nm; ++k) { prod[k] += r[k]; brk[k] += br[k]; }
            } else if (j_m) {
                Vec<K> l = rep.act.left.slice(i - nm, j);
                Vec<K> bl = rep.act.blift.slice(i - nm, j);
                for (std::size_t k = 0; k < nm; ++k) { prod[k] += l[k]; brk[k] += bl[k]; }
            } else {
                std::size_t ai = i - nm, aj = j - nm;
                Vec<K> fv = z.f.value(ai * na + aj), gv = z.g.value(ai * na + aj);
                for (std::size_t k = 0; k < nm; ++k) { prod[k] += fv[k]; brk[k] += gv[k]; }
                Vec<K> pa = rep.algebra.mul_basis(ai, aj), ba = rep.algebra.brk_basis(ai, aj);
                for (std::size_t k = 0; k < na; ++k) { prod[nm + k] += pa[k]; brk[nm + k] += ba[k]; }
            }
            e.product.set_slice(i, j, prod);
            e.bracket.set_slice(i, j, brk);
        }
    AbelianExtension<K> out;
    out.rep = rep;
    out.total = validated(std::move(e));
    out.i = Matrix<K>(n, nm);
    for (std::size_t k = 0; k < nm; ++k) out.i(k, k) = K(1);
    out.p = Matrix<K>(na, n);
    for (std::size_t k = 0; k < na; ++k) out.p(k, nm + k) = K(1);
    return out;
}

template <Field K>
AbelianExtension<K> split_extension(const Representation<K>& rep) {
    return extension_from_cocycle(rep, KCochain<K>::zero(0, rep.algebra.dim(), rep.dim_m()));
}

/// Baer sum by the genuine pullback-then-pushout construction; class
/// additivity against cocycle arithmetic is a theorem checked in tests.
template <Field K>
AbelianExtension<K> baer_sum(const AbelianExtension<K>& e1, const AbelianExtension<K>& e2) {
    if (!(e1.rep.algebra == e2.rep.algebra) || e1.rep.dim_m() != e2.rep.dim_m() ||
        e1.rep.act != e2.rep.act)
        throw error("baer_sum: extensions of different (A, M)");
    require_extension(e1);
    require_extension(e2);
    std::size_t n1 = e1.total.dim(), n2 = e2.total.dim();
    std::size_t na = e1.rep.algebra.dim(), nm = e1.rep.dim_m();
    // direct sum algebra E1 (+) E2
    Awb<K> ds(n1 + n2);
    for (std::size_t i = 0; i < n1 + n2; ++i)
        for (std::size_t j = 0; j < n1 + n2; ++j) {
            Vec<K> prod(n1 + n2, K(0)), brk(n1 + n2, K(0));
            if (i < n1 && j < n1) {
                Vec<K> p1 = e1.total.mul_basis(i, j), b1 = e1.total.brk_basis(i, j);
                for (std::size_t k = 0; k < n1; ++k) { prod[k] = p1[k]; brk[k] = b1[k]; }
            } else if (i >= n1 && j >= n1) {
                Vec<K> p2 = e2.total.mul_basis(i - n1, j - n1), b2 = e2.total.brk_basis(i - n1, j - n1);
                for (std::size_t k = 0; k < n2; ++k) { prod[n1 + k] = p2[k]; brk[n1 + k] = b2[k]; }
            }
            ds.product.set_slice(i, j, prod);
            ds.bracket.set_slice(i, j, brk);
        }
    ds = validated(std::move(ds));
    // pullback subalgebra P = {(x,y) : p1(x) = p2(y)}
    Matrix<K> glue(na, n1 + n2);
    for (std::size_t r = 0; r < na; ++r) {
        for (std::size_t c = 0; c < n1; ++c) glue(r, c) = e1.p(r, c);
        for (std::size_t c = 0; c < n2; ++c) glue(r, n1 + c) = -e2.p(r, c);
    }
    Subspace<K> pspace = kernel(glue);
    Awb<K> palg = subalgebra_on(ds, pspace);
    // ideal S = {(i1(m), -i2(m))} in P-coordinates
    std::vector<Vec<K>> sgens;
    for (std::size_t k = 0; k < nm; ++k) {
        Vec<K> v(n1 + n2, K(0));
        Vec<K> a = e1.i.col(k), b = e2.i.col(k);
        for (std::size_t t = 0; t < n1; ++t) v[t] = a[t];
        for (std::size_t t = 0; t < n2; ++t) v[n1 + t] = -b[t];
        sgens.push_back(pspace.coordinates(v));
    }
    Subspace<K> s_ideal = Subspace<K>::span(pspace.dim(), sgens);
    QuotientAlgebra<K> q = quotient(palg, s_ideal);
    AbelianExtension<K> out;
    out.rep = e1.rep;
    out.total = q.algebra;
    // i(m) = class of (i1(m), 0)
    out.i = Matrix<K>(q.algebra.dim(), nm);
    for (std::size_t k = 0; k < nm; ++k) {
        Vec<K> v(n1 + n2, K(0));
        Vec<K> a = e1.i.col(k);
        for (std::size_t t = 0; t < n1; ++t) v[t] = a[t];
        out.i.set_col(k, q.projection.apply(pspace.coordinates(v)));
    }
    // p(class of (x,y)) = p1(x)
    Matrix<K> lift(pspace.dim(), q.algebra.dim());
    {
        auto free = s_ideal.free_coordinates();
        for (std::size_t t = 0; t < free.size(); ++t) lift(free[t], t) = K(1);
    }
    Matrix<K> pr1(n1, n1 + n2);
    for (std::size_t t = 0; t < n1; ++t) pr1(t, t) = K(1);
    out.p = e1.p * pr1 * pspace.inclusion() * lift;
    require_extension(out);
    return out;
}

/// Scalar action on classes realized on cocycles; lambda = 0 rejected
/// (the sequence with 0.i is not exact).
template <Field K>
AbelianExtension<K> scalar_extension(const K& lambda, const AbelianExtension<K>& e) {
    if (lambda.is_zero()) throw error("scalar_extension: lambda = 0 breaks exactness");
    return extension_from_cocycle(e.rep, cocycle_of_extension(e).scaled(lambda));
}

/// Explicit equivalence of two extensions with the same class, when classes
/// agree: phi(i(m) + s(a)) = i'(m + h(a)) + s'(a) with d(h) = z - z'.
template <Field K>
std::optional<Matrix<K>> extension_equivalence(const AbelianExtension<K>& e1,
                                               const AbelianExtension<K>& e2) {
    KCochain<K> z1 = cocycle_of_extension(e1);
    KCochain<K> z2 = cocycle_of_extension(e2);
    Matrix<K> d = coboundary_matrix(e1.rep, -1);
    auto h_flat = d.solve(k_flatten(z1 + (-z2)));
    if (!h_flat) return std::nullopt;
    std::size_t na = e1.rep.algebra.dim(), nm = e1.rep.dim_m();
    // d(h~) = z1 - z2; the equivalence uses h = -h~.
    Matrix<K> h = -hom_unflatten(nm, na, *h_flat);
    Matrix<K> s1 = e1.p.section(), s2 = e2.p.section();
    Matrix<K> r1 = e1.i.left_inverse();
    Matrix<K> id1 = Matrix<K>::identity(e1.total.dim());
    Matrix<K> retraction = r1 * (id1 - s1 * e1.p);
    Matrix<K> phi = e2.i * (retraction + h * e1.p) + s2 * e1.p;
    if (!is_homomorphism(e1.total, e2.total, phi))
        throw error("extension_equivalence: constructed map is not a homomorphism");
    return phi;
}

}  // namespace awb
