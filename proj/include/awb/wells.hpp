#pragma once

#include "awb/extension.hpp"

namespace awb {

/// Pair of derivations (d_M, d_A); since M is abelian d_M is any linear map.
template <Field K>
struct DerPair {
    Matrix<K> d_m;  // dim(M) x dim(M)
    Matrix<K> d_a;  // dim(A) x dim(A)
};

/// Derivation property for a map A -> A with the algebra's own operations.
template <Field K>
bool is_awb_derivation(const Awb<K>& a, const Matrix<K>& d) {
    std::size_t n = a.dim();
    if (d.rows() != n || d.cols() != n) throw error("is_awb_derivation: shape mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> ei = vec_unit<K>(n, i), ej = vec_unit<K>(n, j);
            Vec<K> lhs = d.apply(a.mul_basis(i, j));
            Vec<K> rhs = vec_add(a.mul(d.col(i), ej), a.mul(ei, d.col(j)));
            if (lhs != rhs) return false;
            lhs = d.apply(a.brk_basis(i, j));
            rhs = vec_add(a.brk(d.col(i), ej), a.brk(ei, d.col(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

/// D_AWB(M,A): pairs satisfying the four semidirect-derivation equalities
/// plus d_A in Der_AWB(A); a Lie subalgebra of Der_AWB(M x| A).
template <Field K>
struct CompatiblePairSpace {
    std::size_t dim_m = 0, dim_a = 0;
    Subspace<K> space{0};  // of K^{m^2 + a^2}: d_M entries first (hom_flatten), then d_A
    bool lie_closed = true;

    Vec<K> flatten(const DerPair<K>& p) const {
        Vec<K> v = hom_flatten(p.d_m);
        Vec<K> w = hom_flatten(p.d_a);
        v.insert(v.end(), w.begin(), w.end());
        return v;
    }
    DerPair<K> unflatten(const Vec<K>& v) const {
        Vec<K> vm(v.begin(), v.begin() + dim_m * dim_m);
        Vec<K> va(v.begin() + dim_m * dim_m, v.end());
        return {hom_unflatten(dim_m, dim_m, vm), hom_unflatten(dim_a, dim_a, va)};
    }
    bool contains(const DerPair<K>& p) const { return space.contains(flatten(p)); }
    std::size_t dim() const { return space.dim(); }
    DerPair<K> basis_pair(std::size_t i) const { return unflatten(space.basis_vector(i)); }
};

template <Field K>
CompatiblePairSpace<K> compatible_pairs(const Representation<K>& rep) {
    std::size_t na = rep.algebra.dim(), nm = rep.dim_m();
    const Awb<K>& a = rep.algebra;
    CompatiblePairSpace<K> out;
    out.dim_m = nm;
    out.dim_a = na;
    auto constraints = [&](const Vec<K>& flat) {
        Vec<K> vm(flat.begin(), flat.begin() + nm * nm);
        Vec<K> va(flat.begin() + nm * nm, flat.end());
        Matrix<K> dm = hom_unflatten(nm, nm, vm);
        Matrix<K> da = hom_unflatten(na, na, va);
        Vec<K> rows;
        // d_A is an AWB-derivation of A
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j) {
                Vec<K> ei = vec_unit<K>(na, i), ej = vec_unit<K>(na, j);
                Vec<K> r = vec_sub(da.apply(a.mul_basis(i, j)),
                                   vec_add(a.mul(da.col(i), ej), a.mul(ei, da.col(j))));
                rows.insert(rows.end(), r.begin(), r.end());
                r = vec_sub(da.apply(a.brk_basis(i, j)),
                            vec_add(a.brk(da.col(i), ej), a.brk(ei, da.col(j))));
                rows.insert(rows.end(), r.begin(), r.end());
            }
        // the four compatibility equalities on basis pairs
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nm; ++j) {
                Vec<K> ei = vec_unit<K>(na, i), ej = vec_unit<K>(nm, j);
                Vec<K> r = vec_sub(dm.apply(rep.act.left.slice(i, j)),
                                   vec_add(rep.act.act_left(ei, dm.col(j)),
                                           rep.act.act_left(da.col(i), ej)));
                rows.insert(rows.end(), r.begin(), r.end());
                r = vec_sub(dm.apply(rep.act.right.slice(j, i)),
                            vec_add(rep.act.act_right(ej, da.col(i)),
                                    rep.act.act_right(dm.col(j), ei)));
                rows.insert(rows.end(), r.begin(), r.end());
                r = vec_sub(dm.apply(rep.act.blift.slice(i, j)),
                            vec_add(rep.act.act_blift(ei, dm.col(j)),
                                    rep.act.act_blift(da.col(i), ej)));
                rows.insert(rows.end(), r.begin(), r.end());
                r = vec_sub(dm.apply(rep.act.bright.slice(j, i)),
                            vec_add(rep.act.act_bright(ej, da.col(i)),
                                    rep.act.act_bright(dm.col(j), ei)));
                rows.insert(rows.end(), r.begin(), r.end());
            }
        return rows;
    };
    std::size_t n_rows = 2 * na * na * na + 4 * na * nm * nm;
    Matrix<K> sys = matrix_of<K>(nm * nm + na * na, n_rows, constraints);
    out.space = kernel(sys);
    for (std::size_t r = 0; r < out.space.dim() && out.lie_closed; ++r)
        for (std::size_t s = 0; s < out.space.dim(); ++s) {
            DerPair<K> p1 = out.basis_pair(r), p2 = out.basis_pair(s);
            DerPair<K> c{p1.d_m * p2.d_m - p2.d_m * p1.d_m,
                         p1.d_a * p2.d_a - p2.d_a * p1.d_a};
            if (!out.contains(c)) {
                out.lie_closed = false;
                break;
            }
        }
    return out;
}

/// theta twist of a degree-0 cochain by a pair:
///   f_theta(a0,a1) = d_M(f(a0,a1)) - f(d_A a0, a1) - f(a0, d_A a1),
/// and the same shape on g (both slots of g are twisted).
template <Field K>
KCochain<K> theta(const Representation<K>& rep, const DerPair<K>& pair, const KCochain<K>& z) {
    if (z.degree != 0) throw error("theta: expects a degree-0 cochain");
    std::size_t na = rep.algebra.dim();
    auto twist = [&](const Cochain<K>& c) {
        Cochain<K> out = c;
        for (std::size_t a0 = 0; a0 < na; ++a0)
            for (std::size_t a1 = 0; a1 < na; ++a1) {
                Vec<K> v = pair.d_m.apply(c.value(a0 * na + a1));
                for (std::size_t t = 0; t < na; ++t) {
                    const K& c0 = pair.d_a(t, a0);
                    if (!c0.is_zero()) {
                        Vec<K> w = c.value(t * na + a1);
                        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c0 * w[k];
                    }
                    const K& c1 = pair.d_a(t, a1);
                    if (!c1.is_zero()) {
                        Vec<K> w = c.value(a0 * na + t);
                        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c1 * w[k];
                    }
                }
                out.set_value(a0 * na + a1, v);
            }
        return out;
    };
    return KCochain<K>::pair(0, twist(z.f), twist(z.g));
}

/// Wells map: the class of theta(pair, cocycle of E) in H^1. Only defined on
/// compatible pairs. Returns the canonical coset representative (zero vector
/// iff the class vanishes).
template <Field K>
Vec<K> wells_class(const AbelianExtension<K>& e, const DerPair<K>& pair,
                   const CompatiblePairSpace<K>& d, const Cohomology<K>& h1) {
    if (!d.contains(pair)) throw error("wells_class: pair is not compatible");
    KCochain<K> z = cocycle_of_extension(e);
    return h1.normal_form(k_flatten(theta(e.rep, pair, z)));
}

enum class ExtendReason { extended, incompatible, nonzero_wells_class };

template <Field K>
struct ExtendOutcome {
    std::optional<Matrix<K>> d_e;
    ExtendReason reason = ExtendReason::extended;
};

/// Lift of a pair to a derivation of E: exists iff the pair is compatible and
/// its Wells class vanishes; then d_E(m + s(a)) = d_M(m) - h(a) + s(d_A(a))
/// with d(h) = theta(pair, z) and h the canonical solve() solution.
template <Field K>
ExtendOutcome<K> extend_pair(const AbelianExtension<K>& e, const DerPair<K>& pair) {
    require_extension(e);
    CompatiblePairSpace<K> d = compatible_pairs(e.rep);
    if (!d.contains(pair)) return {std::nullopt, ExtendReason::incompatible};
    KCochain<K> z = cocycle_of_extension(e);
    KCochain<K> tz = theta(e.rep, pair, z);
    Matrix<K> dmat = coboundary_matrix(e.rep, -1);
    auto h_flat = dmat.solve(k_flatten(tz));
    if (!h_flat) return {std::nullopt, ExtendReason::nonzero_wells_class};
    std::size_t na = e.rep.algebra.dim(), nm = e.rep.dim_m();
    Matrix<K> h = hom_unflatten(nm, na, *h_flat);
    Matrix<K> s = e.p.section();
    Matrix<K> retr = e.i.left_inverse() * (Matrix<K>::identity(e.total.dim()) - s * e.p);
    Matrix<K> de = e.i * pair.d_m * retr + (s * pair.d_a - e.i * h) * e.p;
    if (de * e.i != e.i * pair.d_m || e.p * de != pair.d_a * e.p)
        throw error("extend_pair: lift does not commute with i and p");
    if (!is_awb_derivation(e.total, de))
        throw error("extend_pair: lift is not an AWB-derivation");
    return {de, ExtendReason::extended};
}

template <Field K>
struct DerPreserving {
    Subspace<K> space{0};  // subspace of End(E), hom_flatten coordinates
    bool lie_closed = true;
};

/// Der_AWB(E|M): derivations of E mapping Im i into itself.
template <Field K>
DerPreserving<K> der_preserving(const AbelianExtension<K>& e) {
    require_extension(e);
    std::size_t n = e.total.dim();
    Subspace<K> der = derivation_space(e.total, self_action(e.total));
    Subspace<K> u = image(e.i);
    Matrix<K> resid = residue_matrix(u);
    auto pres = [&](const Vec<K>& flat) {
        Matrix<K> dmat = hom_unflatten(n, n, flat);
        Vec<K> rows;
        for (std::size_t t = 0; t < u.dim(); ++t) {
            Vec<K> r = resid.apply(dmat.apply(u.basis_vector(t)));
            rows.insert(rows.end(), r.begin(), r.end());
        }
        return rows;
    };
    Matrix<K> sys = matrix_of<K>(n * n, n * u.dim(), pres);
    DerPreserving<K> out;
    out.space = der.intersection(kernel(sys));
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

/// kappa(d_E) = (d_E restricted to M, p d_E s); the second component is
/// section-independent.
template <Field K>
DerPair<K> kappa(const AbelianExtension<K>& e, const Matrix<K>& d_e) {
    Subspace<K> u = image(e.i);
    for (std::size_t t = 0; t < u.dim(); ++t)
        if (!u.contains(d_e.apply(u.basis_vector(t))))
            throw error("kappa: derivation does not preserve M");
    Matrix<K> s = e.p.section();
    DerPair<K> out{e.i.left_inverse() * d_e * e.i, e.p * d_e * s};
    if (e.rep.dim_m() > 0) {
        // any two sections differ by a map into Im i; perturb by one
        Matrix<K> j(e.total.dim(), e.rep.algebra.dim());
        for (std::size_t c = 0; c < j.cols(); ++c) j.set_col(c, e.i.col(0));
        if (e.p * d_e * (s + j) != out.d_a)
            throw error("kappa: section dependence detected");
    }
    return out;
}

/// sigma(h) = i h p: the derivation killing M with d_E(s(a)) = h(a).
template <Field K>
Matrix<K> sigma_map(const AbelianExtension<K>& e, const Matrix<K>& h) {
    return e.i * h * e.p;
}

template <Field K>
struct WellsReport {
    std::size_t dim_z = 0, dim_der_em = 0, dim_d = 0, dim_h1 = 0;
    bool sigma_injective = false;
    bool im_sigma_eq_ker_kappa = false;
    bool im_kappa_eq_ker_omega = false;
    bool kappa_sigma_zero = false;
    bool omega_kappa_zero = false;
    bool split = false;
    bool corollary_dims = true;  // only meaningful when split
    bool ok() const {
        return sigma_injective && im_sigma_eq_ker_kappa && im_kappa_eq_ker_omega &&
               kappa_sigma_zero && omega_kappa_zero && (!split || corollary_dims);
    }
};

/// Exactness of 0 -> Z^{-1} -> Der(E|M) -> D_AWB(M,A) -> H^1 as canonical
/// subspace equalities.
template <Field K>
WellsReport<K> wells_sequence_report(const AbelianExtension<K>& e) {
    require_extension(e);
    const Representation<K>& rep = e.rep;
    std::size_t n = e.total.dim(), na = rep.algebra.dim(), nm = rep.dim_m();
    Subspace<K> z = z_minus1(rep);
    DerPreserving<K> der_em = der_preserving(e);
    CompatiblePairSpace<K> d = compatible_pairs(rep);
    Cohomology<K> h1 = cohomology(rep, 1);
    KCochain<K> zc = cocycle_of_extension(e);

    WellsReport<K> rep_out;
    rep_out.dim_z = z.dim();
    rep_out.dim_der_em = der_em.space.dim();
    rep_out.dim_d = d.dim();
    rep_out.dim_h1 = h1.dim();

    Matrix<K> s = e.p.section();
    // sigma on Z^{-1}
    Matrix<K> sig = matrix_of<K>(na * nm, n * n, [&](const Vec<K>& flat) {
        return hom_flatten(sigma_map(e, hom_unflatten(nm, na, flat)));
    });
    std::vector<Vec<K>> sig_im;
    Matrix<K> sig_on_z(n * n, z.dim());
    for (std::size_t t = 0; t < z.dim(); ++t) {
        Vec<K> img = sig.apply(z.basis_vector(t));
        sig_im.push_back(img);
        sig_on_z.set_col(t, img);
    }
    Subspace<K> im_sigma = Subspace<K>::span(n * n, sig_im);
    rep_out.sigma_injective = kernel(sig_on_z).dim() == 0;

    // kappa on Der(E|M)
    Matrix<K> kap = matrix_of<K>(n * n, nm * nm + na * na, [&](const Vec<K>& flat) {
        Matrix<K> dmat = hom_unflatten(n, n, flat);
        Vec<K> v = hom_flatten(e.i.left_inverse() * dmat * e.i);
        Vec<K> w = hom_flatten(e.p * dmat * s);
        v.insert(v.end(), w.begin(), w.end());
        return v;
    });
    std::vector<Vec<K>> kap_im;
    Matrix<K> kap_on_der(nm * nm + na * na, der_em.space.dim());
    for (std::size_t t = 0; t < der_em.space.dim(); ++t) {
        Vec<K> img = kap.apply(der_em.space.basis_vector(t));
        kap_im.push_back(img);
        kap_on_der.set_col(t, img);
    }
    Subspace<K> im_kappa = Subspace<K>::span(nm * nm + na * na, kap_im);
    // Ker kappa inside Der(E|M), mapped back to End(E) coordinates
    Subspace<K> ker_kappa_coords = kernel(kap_on_der);
    std::vector<Vec<K>> ker_kappa_vecs;
    for (std::size_t t = 0; t < ker_kappa_coords.dim(); ++t) {
        Vec<K> c = ker_kappa_coords.basis_vector(t);
        Vec<K> v(n * n, K(0));
        for (std::size_t q = 0; q < der_em.space.dim(); ++q)
            vec_add_scaled(v, c[q], der_em.space.basis_vector(q));
        ker_kappa_vecs.push_back(std::move(v));
    }
    Subspace<K> ker_kappa = Subspace<K>::span(n * n, ker_kappa_vecs);
    rep_out.im_sigma_eq_ker_kappa = im_sigma == ker_kappa;

    // omega on D: pair |-> normal form of theta(pair, z)
    Matrix<K> omega_on_d(k_space_dim(rep, 0), d.dim());
    for (std::size_t t = 0; t < d.dim(); ++t)
        omega_on_d.set_col(t, h1.normal_form(k_flatten(theta(rep, d.basis_pair(t), zc))));
    Subspace<K> ker_omega_coords = kernel(omega_on_d);
    std::vector<Vec<K>> ker_omega_vecs;
    for (std::size_t t = 0; t < ker_omega_coords.dim(); ++t) {
        Vec<K> c = ker_omega_coords.basis_vector(t);
        Vec<K> v(nm * nm + na * na, K(0));
        for (std::size_t q = 0; q < d.dim(); ++q)
            vec_add_scaled(v, c[q], d.space.basis_vector(q));
        ker_omega_vecs.push_back(std::move(v));
    }
    Subspace<K> ker_omega = Subspace<K>::span(nm * nm + na * na, ker_omega_vecs);
    rep_out.im_kappa_eq_ker_omega = im_kappa == ker_omega;

    rep_out.kappa_sigma_zero = ker_kappa.contains(im_sigma);
    rep_out.omega_kappa_zero = ker_omega.contains(im_kappa);

    rep_out.split = h1.is_coboundary(k_flatten(zc));
    if (rep_out.split)
        rep_out.corollary_dims = der_em.space.dim() == d.dim() + z.dim();
    return rep_out;
}

}  // namespace awb
