#pragma once

#include "awb/wells.hpp"

namespace awb {

// ---------------------------------------------------------------------------
// direct sums (used by pullbacks, pushouts and Baer sums)

template <Field K>
Awb<K> direct_sum_awb(const Awb<K>& x, const Awb<K>& y) {
    std::size_t n1 = x.dim(), n2 = y.dim();
    Awb<K> out(n1 + n2);
    for (std::size_t i = 0; i < n1; ++i) out.labels[i] = x.labels[i];
    for (std::size_t i = 0; i < n2; ++i) out.labels[n1 + i] = y.labels[i] + "'";
    for (std::size_t i = 0; i < n1 + n2; ++i)
        for (std::size_t j = 0; j < n1 + n2; ++j) {
            Vec<K> prod(n1 + n2, K(0)), brk(n1 + n2, K(0));
            if (i < n1 && j < n1) {
                Vec<K> p = x.mul_basis(i, j), b = x.brk_basis(i, j);
                for (std::size_t k = 0; k < n1; ++k) { prod[k] = p[k]; brk[k] = b[k]; }
            } else if (i >= n1 && j >= n1) {
                Vec<K> p = y.mul_basis(i - n1, j - n1), b = y.brk_basis(i - n1, j - n1);
                for (std::size_t k = 0; k < n2; ++k) { prod[n1 + k] = p[k]; brk[n1 + k] = b[k]; }
            }
            out.product.set_slice(i, j, prod);
            out.bracket.set_slice(i, j, brk);
        }
    return validated(std::move(out));
}

template <Field K>
Vec<K> concat(const Vec<K>& a, const Vec<K>& b) {
    Vec<K> v = a;
    v.insert(v.end(), b.begin(), b.end());
    return v;
}

// ---------------------------------------------------------------------------
// crossed modules

template <Field K>
struct CrossedModule {
    Awb<K> m, a;
    Matrix<K> mu;       // dim(a) x dim(m)
    ActionData<K> act;  // a on m
};

struct CrossedModuleReport {
    bool mu_hom = false;
    bool action_ok = false;
    std::array<bool, 4> cm1{};  // mu(m.a)=mu(m)a, mu(a.m)=a mu(m), mu{m,a}=[mu m,a], mu{a,m}=[a,mu m]
    std::array<bool, 4> cm2{};  // mu(m).m'=mm', m.mu(m')=mm', {mu m,m'}=[m,m'], {m,mu m'}=[m,m']
    bool ker_in_center = false;
    bool im_ideal = false;
    bool im_trivial_on_ker = false;
    bool ok() const {
        bool c = mu_hom && action_ok && ker_in_center && im_ideal && im_trivial_on_ker;
        for (bool b : cm1) c = c && b;
        for (bool b : cm2) c = c && b;
        return c;
    }
};

template <Field K>
CrossedModuleReport verify_crossed_module(const CrossedModule<K>& cm) {
    CrossedModuleReport rep;
    std::size_t nm = cm.m.dim(), na = cm.a.dim();
    if (cm.mu.rows() != na || cm.mu.cols() != nm) throw error("crossed module: mu shape mismatch");
    rep.mu_hom = is_homomorphism(cm.m, cm.a, cm.mu);
    rep.action_ok = verify_action(cm.a, cm.m, cm.act).ok;
    rep.cm1 = {true, true, true, true};
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nm; ++j) {
            Vec<K> ea = vec_unit<K>(na, i);
            Vec<K> muj = cm.mu.col(j);
            if (cm.mu.apply(cm.act.right.slice(j, i)) != cm.a.mul(muj, ea)) rep.cm1[0] = false;
            if (cm.mu.apply(cm.act.left.slice(i, j)) != cm.a.mul(ea, muj)) rep.cm1[1] = false;
            if (cm.mu.apply(cm.act.bright.slice(j, i)) != cm.a.brk(muj, ea)) rep.cm1[2] = false;
            if (cm.mu.apply(cm.act.blift.slice(i, j)) != cm.a.brk(ea, muj)) rep.cm1[3] = false;
        }
    rep.cm2 = {true, true, true, true};
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nm; ++j) {
            Vec<K> ei = vec_unit<K>(nm, i), ej = vec_unit<K>(nm, j);
            if (cm.act.left.eval(cm.mu.col(i), ej) != cm.m.mul_basis(i, j)) rep.cm2[0] = false;
            if (cm.act.right.eval(ei, cm.mu.col(j)) != cm.m.mul_basis(i, j)) rep.cm2[1] = false;
            if (cm.act.blift.eval(cm.mu.col(i), ej) != cm.m.brk_basis(i, j)) rep.cm2[2] = false;
            if (cm.act.bright.eval(ei, cm.mu.col(j)) != cm.m.brk_basis(i, j)) rep.cm2[3] = false;
        }
    // consequences (lemma): Ker mu central, Im mu an ideal, Im mu acts
    // trivially on Ker mu
    Subspace<K> ker = kernel(cm.mu);
    Subspace<K> im = image(cm.mu);
    rep.ker_in_center = center(cm.m).contains(ker);
    rep.im_ideal = ideal_predicates(cm.a, im).two_sided;
    rep.im_trivial_on_ker = true;
    for (std::size_t t = 0; t < im.dim() && rep.im_trivial_on_ker; ++t)
        for (std::size_t s = 0; s < ker.dim(); ++s) {
            Vec<K> u = im.basis_vector(t), w = ker.basis_vector(s);
            if (!vec_is_zero(cm.act.left.eval(u, w)) || !vec_is_zero(cm.act.right.eval(w, u)) ||
                !vec_is_zero(cm.act.blift.eval(u, w)) || !vec_is_zero(cm.act.bright.eval(w, u))) {
                rep.im_trivial_on_ker = false;
                break;
            }
        }
    return rep;
}

/// Representation of A/Im(mu) on Ker(mu) inherited by a crossed module.
template <Field K>
struct InducedKernelRep {
    QuotientAlgebra<K> coker;  // A/Im(mu)
    Subspace<K> ker;           // Ker(mu) in M coordinates
    Representation<K> rep;     // of coker.algebra on K^{dim Ker}
};

template <Field K>
InducedKernelRep<K> induced_kernel_representation(const CrossedModule<K>& cm) {
    if (!verify_crossed_module(cm).ok()) throw error("induced_kernel_representation: invalid crossed module");
    InducedKernelRep<K> out{quotient(cm.a, image(cm.mu)), kernel(cm.mu), {}};
    std::size_t nq = out.coker.algebra.dim(), nk = out.ker.dim();
    // lift of the quotient basis along the projection (free coordinates)
    Matrix<K> lift = out.coker.projection.section();
    ActionData<K> act(nq, nk);
    for (std::size_t t = 0; t < nq; ++t)
        for (std::size_t j = 0; j < nk; ++j) {
            Vec<K> u = lift.col(t), w = out.ker.basis_vector(j);
            act.left.set_slice(t, j, out.ker.coordinates(cm.act.left.eval(u, w)));
            act.right.set_slice(j, t, out.ker.coordinates(cm.act.right.eval(w, u)));
            act.blift.set_slice(t, j, out.ker.coordinates(cm.act.blift.eval(u, w)));
            act.bright.set_slice(j, t, out.ker.coordinates(cm.act.bright.eval(w, u)));
        }
    out.rep = Representation<K>(out.coker.algebra, act);
    if (!verify_representation(out.rep).ok)
        throw error("induced_kernel_representation: induced data fails the representation equations");
    return out;
}

struct PropositionHomReport {
    bool mu_id = false;   // (mu, id): M x| A -> A x| A
    bool id_mu = false;   // (id, mu): M x| M -> M x| A
    bool phi = false;     // (m,a) -> (-m, mu(m)+a)
    bool ok() const { return mu_id && id_mu && phi; }
};

template <Field K>
PropositionHomReport proposition_homs(const CrossedModule<K>& cm) {
    if (!verify_crossed_module(cm).ok()) throw error("proposition_homs: invalid crossed module");
    std::size_t nm = cm.m.dim(), na = cm.a.dim();
    SemidirectProduct<K> sd_ma = semidirect(cm.m, cm.a, cm.act);
    SemidirectProduct<K> sd_aa = semidirect(cm.a, cm.a, self_action(cm.a));
    SemidirectProduct<K> sd_mm = semidirect(cm.m, cm.m, self_action(cm.m));
    PropositionHomReport rep;
    {
        Matrix<K> f(2 * na, nm + na);
        for (std::size_t i = 0; i < na; ++i) {
            for (std::size_t j = 0; j < nm; ++j) f(i, j) = cm.mu(i, j);
            f(na + i, nm + i) = K(1);
        }
        rep.mu_id = is_homomorphism(sd_ma.algebra, sd_aa.algebra, f);
    }
    {
        Matrix<K> f(nm + na, 2 * nm);
        for (std::size_t j = 0; j < nm; ++j) f(j, j) = K(1);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nm; ++j) f(nm + i, nm + j) = cm.mu(i, j);
        rep.id_mu = is_homomorphism(sd_mm.algebra, sd_ma.algebra, f);
    }
    {
        Matrix<K> f(nm + na, nm + na);
        for (std::size_t j = 0; j < nm; ++j) f(j, j) = K(-1);
        for (std::size_t i = 0; i < na; ++i) {
            for (std::size_t j = 0; j < nm; ++j) f(nm + i, j) = cm.mu(i, j);
            f(nm + i, nm + i) = K(1);
        }
        rep.phi = is_homomorphism(sd_ma.algebra, sd_ma.algebra, f);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// internal categories

template <Field K>
struct InternalCategory {
    Awb<K> b, a;
    Matrix<K> s, t;      // B -> A
    Matrix<K> sigma;     // A -> B
    Subspace<K> pullback;  // {(b1,b2) : t b1 = s b2} in B (+) B coordinates
    Matrix<K> gamma;     // dim(B) x dim(pullback)
};

struct InternalCategoryReport {
    bool s_hom = false, t_hom = false, sigma_hom = false, sections = false;
    bool pullback_ok = false, gamma_hom = false;
    bool units = false, compat_st = false, assoc = false;
    bool ok() const {
        return s_hom && t_hom && sigma_hom && sections && pullback_ok && gamma_hom &&
               units && compat_st && assoc;
    }
};

template <Field K>
Subspace<K> category_pullback(const Awb<K>& b, const Matrix<K>& t, const Matrix<K>& s) {
    std::size_t nb = b.dim();
    Matrix<K> glue(t.rows(), 2 * nb);
    for (std::size_t r = 0; r < t.rows(); ++r) {
        for (std::size_t c = 0; c < nb; ++c) glue(r, c) = t(r, c);
        for (std::size_t c = 0; c < nb; ++c) glue(r, nb + c) = -s(r, c);
    }
    return kernel(glue);
}

template <Field K>
InternalCategoryReport verify_internal_category(const InternalCategory<K>& ic) {
    InternalCategoryReport rep;
    std::size_t nb = ic.b.dim(), na = ic.a.dim();
    rep.s_hom = is_homomorphism(ic.b, ic.a, ic.s);
    rep.t_hom = is_homomorphism(ic.b, ic.a, ic.t);
    rep.sigma_hom = is_homomorphism(ic.a, ic.b, ic.sigma);
    rep.sections = (ic.s * ic.sigma == Matrix<K>::identity(na)) &&
                   (ic.t * ic.sigma == Matrix<K>::identity(na));
    Subspace<K> p = category_pullback(ic.b, ic.t, ic.s);
    Awb<K> ds = direct_sum_awb(ic.b, ic.b);
    rep.pullback_ok = (p == ic.pullback) && ideal_predicates(ds, p).subalgebra;
    if (!rep.pullback_ok) return rep;
    Awb<K> palg = subalgebra_on(ds, p);
    rep.gamma_hom = is_homomorphism(palg, ic.b, ic.gamma);
    auto pcoords = [&](const Vec<K>& b1, const Vec<K>& b2) { return p.coordinates(concat(b1, b2)); };
    rep.units = true;
    for (std::size_t k = 0; k < nb && rep.units; ++k) {
        Vec<K> e = vec_unit<K>(nb, k);
        Vec<K> left = ic.gamma.apply(pcoords(ic.sigma.apply(ic.s.apply(e)), e));
        Vec<K> right = ic.gamma.apply(pcoords(e, ic.sigma.apply(ic.t.apply(e))));
        rep.units = (left == e) && (right == e);
    }
    rep.compat_st = true;
    for (std::size_t q = 0; q < p.dim(); ++q) {
        Vec<K> w = p.basis_vector(q);
        Vec<K> b1(w.begin(), w.begin() + nb), b2(w.begin() + nb, w.end());
        Vec<K> g = ic.gamma.apply(p.coordinates(w));
        if (ic.s.apply(g) != ic.s.apply(b1) || ic.t.apply(g) != ic.t.apply(b2)) {
            rep.compat_st = false;
            break;
        }
    }
    // associativity on the composable-triple subspace
    Matrix<K> glue(2 * na, 3 * nb);
    for (std::size_t r = 0; r < na; ++r)
        for (std::size_t c = 0; c < nb; ++c) {
            glue(r, c) = ic.t(r, c);
            glue(r, nb + c) = -ic.s(r, c);
            glue(na + r, nb + c) = ic.t(r, c);
            glue(na + r, 2 * nb + c) = -ic.s(r, c);
        }
    Subspace<K> triples = kernel(glue);
    rep.assoc = true;
    for (std::size_t q = 0; q < triples.dim(); ++q) {
        Vec<K> w = triples.basis_vector(q);
        Vec<K> b1(w.begin(), w.begin() + nb);
        Vec<K> b2(w.begin() + nb, w.begin() + 2 * nb);
        Vec<K> b3(w.begin() + 2 * nb, w.end());
        Vec<K> g12 = ic.gamma.apply(pcoords(b1, b2));
        Vec<K> g23 = ic.gamma.apply(pcoords(b2, b3));
        if (ic.gamma.apply(pcoords(g12, b3)) != ic.gamma.apply(pcoords(b1, g23))) {
            rep.assoc = false;
            break;
        }
    }
    return rep;
}

/// XAWB -> IAWB: B = M x| A, s(m,a) = a, t(m,a) = mu(m) + a, sigma(a) = (0,a),
/// gamma((m,a),(m', mu(m)+a)) = (m + m', a).
template <Field K>
InternalCategory<K> to_internal_category(const CrossedModule<K>& cm) {
    if (!verify_crossed_module(cm).ok()) throw error("to_internal_category: invalid crossed module");
    std::size_t nm = cm.m.dim(), na = cm.a.dim(), nb = nm + na;
    SemidirectProduct<K> sd = semidirect(cm.m, cm.a, cm.act);
    InternalCategory<K> ic;
    ic.b = sd.algebra;
    ic.a = cm.a;
    ic.s = sd.p;
    ic.t = Matrix<K>(na, nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nm; ++j) ic.t(i, j) = cm.mu(i, j);
        ic.t(i, nm + i) = K(1);
    }
    ic.sigma = sd.s;
    ic.pullback = category_pullback(ic.b, ic.t, ic.s);
    Matrix<K> g(nb, 2 * nb);
    for (std::size_t k = 0; k < nm; ++k) { g(k, k) = K(1); g(k, nb + k) = K(1); }
    for (std::size_t k = 0; k < na; ++k) g(nm + k, nm + k) = K(1);
    ic.gamma = g * ic.pullback.inclusion();
    InternalCategoryReport rep = verify_internal_category(ic);
    if (!rep.ok()) throw error("to_internal_category: construction fails the category axioms");
    return ic;
}

template <Field K>
struct FromInternalCategory {
    CrossedModule<K> cm;
    Subspace<K> kernel_s;  // where the crossed module carrier lives inside B
};

/// IAWB -> XAWB: M = Ker(s), mu = t restricted, action through sigma.
template <Field K>
FromInternalCategory<K> from_internal_category(const InternalCategory<K>& ic) {
    InternalCategoryReport icr = verify_internal_category(ic);
    if (!icr.ok()) throw error("from_internal_category: invalid internal category");
    FromInternalCategory<K> out;
    out.kernel_s = kernel(ic.s);
    const Subspace<K>& w = out.kernel_s;
    out.cm.m = subalgebra_on(ic.b, w);
    out.cm.a = ic.a;
    std::size_t na = ic.a.dim(), nk = w.dim();
    out.cm.mu = Matrix<K>(na, nk);
    for (std::size_t j = 0; j < nk; ++j) out.cm.mu.set_col(j, ic.t.apply(w.basis_vector(j)));
    out.cm.act = ActionData<K>(na, nk);
    for (std::size_t t = 0; t < na; ++t)
        for (std::size_t j = 0; j < nk; ++j) {
            Vec<K> u = ic.sigma.col(t), v = w.basis_vector(j);
            out.cm.act.left.set_slice(t, j, w.coordinates(ic.b.mul(u, v)));
            out.cm.act.right.set_slice(j, t, w.coordinates(ic.b.mul(v, u)));
            out.cm.act.blift.set_slice(t, j, w.coordinates(ic.b.brk(u, v)));
            out.cm.act.bright.set_slice(j, t, w.coordinates(ic.b.brk(v, u)));
        }
    if (!verify_crossed_module(out.cm).ok())
        throw error("from_internal_category: induced data is not a crossed module");
    return out;
}

// ---------------------------------------------------------------------------
// crossed extensions and eta

template <Field K>
struct CrossedExtension {
    Representation<K> rep;  // (A, M)
    CrossedModule<K> cm;    // mu: MM -> AAA
    Matrix<K> sigma;        // dim(MM) x dim(M)
    Matrix<K> pi;           // dim(A) x dim(AAA)
};

struct CrossedExtensionReport {
    bool cm_ok = false;
    bool sigma_hom = false;
    bool exact_mm = false;   // Im sigma = Ker mu, sigma injective
    bool exact_aaa = false;  // Im mu = Ker pi, pi surjective homomorphism
    bool induced_matches = false;
    bool ok() const { return cm_ok && sigma_hom && exact_mm && exact_aaa && induced_matches; }
};

template <Field K>
CrossedExtensionReport verify_crossed_extension(const CrossedExtension<K>& ce) {
    CrossedExtensionReport rep;
    rep.cm_ok = verify_crossed_module(ce.cm).ok();
    Awb<K> carrier = ce.rep.carrier();
    rep.sigma_hom = is_homomorphism(carrier, ce.cm.m, ce.sigma);
    rep.exact_mm = ce.sigma.rank() == ce.rep.dim_m() && image(ce.sigma) == kernel(ce.cm.mu);
    rep.exact_aaa = is_homomorphism(ce.cm.a, ce.rep.algebra, ce.pi) &&
                    ce.pi.rank() == ce.rep.algebra.dim() && image(ce.cm.mu) == kernel(ce.pi);
    if (!(rep.cm_ok && rep.sigma_hom && rep.exact_mm && rep.exact_aaa)) return rep;
    // induced representation of A on M through any linear section of pi
    std::size_t na = ce.rep.algebra.dim(), nm = ce.rep.dim_m();
    Matrix<K> s = ce.pi.section();
    Matrix<K> ret = ce.sigma.left_inverse();
    Subspace<K> im_sigma = image(ce.sigma);
    ActionData<K> act(na, nm);
    for (std::size_t t = 0; t < na; ++t)
        for (std::size_t j = 0; j < nm; ++j) {
            Vec<K> u = s.col(t), w = ce.sigma.col(j);
            Vec<K> l = ce.cm.act.left.eval(u, w), r = ce.cm.act.right.eval(w, u);
            Vec<K> bl = ce.cm.act.blift.eval(u, w), br = ce.cm.act.bright.eval(w, u);
            if (!im_sigma.contains(l) || !im_sigma.contains(r) || !im_sigma.contains(bl) ||
                !im_sigma.contains(br))
                return rep;
            act.left.set_slice(t, j, ret.apply(l));
            act.right.set_slice(j, t, ret.apply(r));
            act.blift.set_slice(t, j, ret.apply(bl));
            act.bright.set_slice(j, t, ret.apply(br));
        }
    rep.induced_matches = act == ce.rep.act;
    return rep;
}

template <Field K>
void require_crossed_extension(const CrossedExtension<K>& ce) {
    if (!verify_crossed_extension(ce).ok()) throw error("invalid crossed extension");
}

/// Trivial crossed extension 0 -> M -> M -> A -> A -> 0.
template <Field K>
CrossedExtension<K> trivial_crossed_extension(const Representation<K>& rep) {
    CrossedExtension<K> ce;
    ce.rep = rep;
    ce.cm.m = rep.carrier();
    ce.cm.a = rep.algebra;
    ce.cm.mu = Matrix<K>(rep.algebra.dim(), rep.dim_m());
    ce.cm.act = rep.act;
    ce.sigma = Matrix<K>::identity(rep.dim_m());
    ce.pi = Matrix<K>::identity(rep.algebra.dim());
    require_crossed_extension(ce);
    return ce;
}

/// eta cocycle with explicit sections: s with pi s = id and rho a linear
/// section of mu over Im mu (columns indexed by the canonical Im mu basis).
template <Field K>
KCochain<K> eta_cocycle_with_sections(const CrossedExtension<K>& ce, const Matrix<K>& s,
                                      const Matrix<K>& rho) {
    const Awb<K>& a = ce.rep.algebra;
    const Awb<K>& aaa = ce.cm.a;
    std::size_t na = a.dim(), nm = ce.rep.dim_m(), nmm = ce.cm.m.dim();
    if (ce.pi * s != Matrix<K>::identity(na)) throw error("eta: s is not a section of pi");
    Subspace<K> im_mu = image(ce.cm.mu);
    for (std::size_t t = 0; t < im_mu.dim(); ++t)
        if (ce.cm.mu.apply(rho.col(t)) != im_mu.basis_vector(t))
            throw error("eta: rho is not a section of mu");
    auto rho_apply = [&](const Vec<K>& v) {  // v in Im mu
        Vec<K> c = im_mu.coordinates(v);
        Vec<K> out(nmm, K(0));
        for (std::size_t t = 0; t < im_mu.dim(); ++t) vec_add_scaled(out, c[t], rho.col(t));
        return out;
    };
    // f(a0,a1) = rho(s(a0)s(a1) - s(a0 a1)); g likewise with brackets
    std::vector<Vec<K>> f(na * na), g(na * na);
    for (std::size_t a0 = 0; a0 < na; ++a0)
        for (std::size_t a1 = 0; a1 < na; ++a1) {
            Vec<K> s0 = s.col(a0), s1 = s.col(a1);
            f[a0 * na + a1] = rho_apply(vec_sub(aaa.mul(s0, s1), s.apply(a.mul_basis(a0, a1))));
            g[a0 * na + a1] = rho_apply(vec_sub(aaa.brk(s0, s1), s.apply(a.brk_basis(a0, a1))));
        }
    auto f_at = [&](const Vec<K>& x, std::size_t a1) {  // f(x, e_{a1}) for x in A
        Vec<K> out(nmm, K(0));
        for (std::size_t c = 0; c < na; ++c)
            if (!x[c].is_zero()) vec_add_scaled(out, x[c], f[c * na + a1]);
        return out;
    };
    auto f_at2 = [&](std::size_t a0, const Vec<K>& y) {
        Vec<K> out(nmm, K(0));
        for (std::size_t c = 0; c < na; ++c)
            if (!y[c].is_zero()) vec_add_scaled(out, y[c], f[a0 * na + c]);
        return out;
    };
    Matrix<K> ret = ce.sigma.left_inverse();
    Subspace<K> im_sigma = image(ce.sigma);
    auto into_m = [&](const Vec<K>& v) {
        if (!vec_is_zero(ce.cm.mu.apply(v)) || !im_sigma.contains(v))
            throw error("eta: cochain value does not land in M");
        return ret.apply(v);
    };
    Cochain<K> ff(3, na, nm), gg(3, na, nm);
    for (std::size_t a0 = 0; a0 < na; ++a0)
        for (std::size_t a1 = 0; a1 < na; ++a1)
            for (std::size_t a2 = 0; a2 < na; ++a2) {
                // f_E = s(a0).f(a1,a2) - f(a0 a1, a2) + f(a0, a1 a2) - f(a0,a1).s(a2)
                Vec<K> v = ce.cm.act.left.eval(s.col(a0), f[a1 * na + a2]);
                v = vec_sub(v, f_at(a.mul_basis(a0, a1), a2));
                v = vec_add(v, f_at2(a0, a.mul_basis(a1, a2)));
                v = vec_sub(v, ce.cm.act.right.eval(f[a0 * na + a1], s.col(a2)));
                ff.set_value((a0 * na + a1) * na + a2, into_m(v));
                // g_E = s(a0).(g(a1)(a2)) - g(a0 a1)(a2) + (g(a0)(a2)).s(a1)
                //       - {f(a0,a1), s(a2)} + f([a0,a2],a1) + f(a0,[a1,a2])
                Vec<K> w = ce.cm.act.left.eval(s.col(a0), g[a1 * na + a2]);
                {
                    Vec<K> prod = a.mul_basis(a0, a1);
                    Vec<K> term(nmm, K(0));
                    for (std::size_t c = 0; c < na; ++c)
                        if (!prod[c].is_zero()) vec_add_scaled(term, prod[c], g[c * na + a2]);
                    w = vec_sub(w, term);
                }
                w = vec_add(w, ce.cm.act.right.eval(g[a0 * na + a2], s.col(a1)));
                w = vec_sub(w, ce.cm.act.bright.eval(f[a0 * na + a1], s.col(a2)));
                w = vec_add(w, f_at(a.brk_basis(a0, a2), a1));
                w = vec_add(w, f_at2(a0, a.brk_basis(a1, a2)));
                gg.set_value((a0 * na + a1) * na + a2, into_m(w));
            }
    KCochain<K> kc = KCochain<K>::pair(1, std::move(ff), std::move(gg));
    if (!k_coboundary(ce.rep, kc).is_zero()) throw error("eta: (f_E, g_E) is not a 1-cocycle");
    return kc;
}

template <Field K>
KCochain<K> eta_cocycle(const CrossedExtension<K>& ce) {
    require_crossed_extension(ce);
    Subspace<K> im_mu = image(ce.cm.mu);
    Matrix<K> rho(ce.cm.m.dim(), im_mu.dim());
    for (std::size_t t = 0; t < im_mu.dim(); ++t)
        rho.set_col(t, *ce.cm.mu.solve(im_mu.basis_vector(t)));
    return eta_cocycle_with_sections(ce, ce.pi.section(), rho);
}

/// Canonical H^2 class representative of a crossed extension.
template <Field K>
Vec<K> eta_class(const CrossedExtension<K>& ce, const Cohomology<K>& h2) {
    return h2.normal_form(k_flatten(eta_cocycle(ce)));
}

/// Morphism of crossed extensions (alpha, beta): fixed ends, commuting
/// squares, and (alpha, beta) a morphism of crossed modules.
template <Field K>
bool is_ce_morphism(const CrossedExtension<K>& x, const CrossedExtension<K>& y,
                    const Matrix<K>& alpha, const Matrix<K>& beta) {
    if (!(x.rep.algebra == y.rep.algebra) || x.rep.dim_m() != y.rep.dim_m()) return false;
    if (!is_homomorphism(x.cm.m, y.cm.m, alpha)) return false;
    if (!is_homomorphism(x.cm.a, y.cm.a, beta)) return false;
    if (y.cm.mu * alpha != beta * x.cm.mu) return false;
    if (alpha * x.sigma != y.sigma) return false;
    if (y.pi * beta != x.pi) return false;
    std::size_t na = x.cm.a.dim(), nm = x.cm.m.dim();
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nm; ++j) {
            Vec<K> bi = beta.col(i), aj = alpha.col(j);
            Vec<K> ei = vec_unit<K>(na, i), ej = vec_unit<K>(nm, j);
            if (alpha.apply(x.cm.act.left.slice(i, j)) != y.cm.act.left.eval(bi, aj)) return false;
            if (alpha.apply(x.cm.act.right.slice(j, i)) != y.cm.act.right.eval(aj, bi)) return false;
            if (alpha.apply(x.cm.act.blift.slice(i, j)) != y.cm.act.blift.eval(bi, aj)) return false;
            if (alpha.apply(x.cm.act.bright.slice(j, i)) != y.cm.act.bright.eval(aj, bi)) return false;
            (void)ei; (void)ej;
        }
    return true;
}

/// Pullback of the representation along an algebra homomorphism psi: A' -> A.
template <Field K>
Representation<K> pullback_representation(const Representation<K>& rep, const Awb<K>& a_new,
                                          const Matrix<K>& psi) {
    if (!is_homomorphism(a_new, rep.algebra, psi))
        throw error("pullback_representation: psi is not a homomorphism");
    std::size_t na = a_new.dim(), nm = rep.dim_m();
    ActionData<K> act(na, nm);
    for (std::size_t t = 0; t < na; ++t)
        for (std::size_t j = 0; j < nm; ++j) {
            Vec<K> u = psi.col(t), ej = vec_unit<K>(nm, j);
            act.left.set_slice(t, j, rep.act.act_left(u, ej));
            act.right.set_slice(j, t, rep.act.act_right(ej, u));
            act.blift.set_slice(t, j, rep.act.act_blift(u, ej));
            act.bright.set_slice(j, t, rep.act.act_bright(ej, u));
        }
    return Representation<K>(a_new, act);
}

/// Pull back crossed extension along psi: A' -> A:
/// AAA_psi = AAA x_A A', mu_psi(m) = (mu m, 0), pi_psi(x, a') = a'.
template <Field K>
CrossedExtension<K> pullback_ce(const CrossedExtension<K>& ce, const Awb<K>& a_new,
                                const Matrix<K>& psi) {
    require_crossed_extension(ce);
    if (!is_homomorphism(a_new, ce.rep.algebra, psi)) throw error("pullback_ce: psi not a homomorphism");
    std::size_t naaa = ce.cm.a.dim(), nnew = a_new.dim();
    Awb<K> ds = direct_sum_awb(ce.cm.a, a_new);
    Matrix<K> glue(ce.rep.algebra.dim(), naaa + nnew);
    for (std::size_t r = 0; r < glue.rows(); ++r) {
        for (std::size_t c = 0; c < naaa; ++c) glue(r, c) = ce.pi(r, c);
        for (std::size_t c = 0; c < nnew; ++c) glue(r, naaa + c) = -psi(r, c);
    }
    Subspace<K> pb = kernel(glue);
    CrossedExtension<K> out;
    out.rep = pullback_representation(ce.rep, a_new, psi);
    out.cm.m = ce.cm.m;
    out.cm.a = subalgebra_on(ds, pb);
    out.sigma = ce.sigma;
    out.cm.mu = Matrix<K>(pb.dim(), ce.cm.m.dim());
    for (std::size_t j = 0; j < ce.cm.m.dim(); ++j)
        out.cm.mu.set_col(j, pb.coordinates(concat(ce.cm.mu.col(j), vec_zero<K>(nnew))));
    out.pi = Matrix<K>(nnew, pb.dim());
    for (std::size_t q = 0; q < pb.dim(); ++q) {
        Vec<K> w = pb.basis_vector(q);
        out.pi.set_col(q, Vec<K>(w.begin() + naaa, w.end()));
    }
    // action through the first projection
    out.cm.act = ActionData<K>(pb.dim(), ce.cm.m.dim());
    for (std::size_t q = 0; q < pb.dim(); ++q) {
        Vec<K> w = pb.basis_vector(q);
        Vec<K> x(w.begin(), w.begin() + naaa);
        for (std::size_t j = 0; j < ce.cm.m.dim(); ++j) {
            Vec<K> ej = vec_unit<K>(ce.cm.m.dim(), j);
            out.cm.act.left.set_slice(q, j, ce.cm.act.act_left(x, ej));
            out.cm.act.right.set_slice(j, q, ce.cm.act.act_right(ej, x));
            out.cm.act.blift.set_slice(q, j, ce.cm.act.act_blift(x, ej));
            out.cm.act.bright.set_slice(j, q, ce.cm.act.act_bright(ej, x));
        }
    }
    require_crossed_extension(out);
    return out;
}

/// Push out crossed extension along a representation homomorphism phi: M -> M':
/// MM_phi = (M' x MM)/S with S = {(phi(m), -sigma(m))}.
template <Field K>
CrossedExtension<K> pushout_ce(const CrossedExtension<K>& ce, const Representation<K>& rep_new,
                               const Matrix<K>& phi) {
    require_crossed_extension(ce);
    if (!(rep_new.algebra == ce.rep.algebra)) throw error("pushout_ce: base algebra mismatch");
    std::size_t nm = ce.rep.dim_m(), nm2 = rep_new.dim_m(), nmm = ce.cm.m.dim();
    // phi must preserve the representation structure
    for (std::size_t t = 0; t < ce.rep.algebra.dim(); ++t)
        for (std::size_t j = 0; j < nm; ++j) {
            Vec<K> et = vec_unit<K>(ce.rep.algebra.dim(), t);
            if (phi.apply(ce.rep.act.left.slice(t, j)) !=
                    rep_new.act.act_left(et, phi.col(j)) ||
                phi.apply(ce.rep.act.right.slice(j, t)) !=
                    rep_new.act.act_right(phi.col(j), et) ||
                phi.apply(ce.rep.act.blift.slice(t, j)) !=
                    rep_new.act.act_blift(et, phi.col(j)) ||
                phi.apply(ce.rep.act.bright.slice(j, t)) !=
                    rep_new.act.act_bright(phi.col(j), et))
                throw error("pushout_ce: phi is not a homomorphism of representations");
        }
    Awb<K> w = direct_sum_awb(rep_new.carrier(), ce.cm.m);
    std::vector<Vec<K>> sgens;
    for (std::size_t k = 0; k < nm; ++k)
        sgens.push_back(concat(phi.col(k), vec_scale(K(-1), ce.sigma.col(k))));
    Subspace<K> s_ideal = Subspace<K>::span(nm2 + nmm, sgens);
    QuotientAlgebra<K> q = quotient(w, s_ideal);
    std::size_t nq = q.algebra.dim();
    Matrix<K> lift = q.projection.section();
    CrossedExtension<K> out;
    out.rep = rep_new;
    out.cm.m = q.algebra;
    out.cm.a = ce.cm.a;
    out.pi = ce.pi;
    out.sigma = Matrix<K>(nq, nm2);
    for (std::size_t k = 0; k < nm2; ++k)
        out.sigma.set_col(k, q.projection.apply(concat(vec_unit<K>(nm2, k), vec_zero<K>(nmm))));
    out.cm.mu = Matrix<K>(ce.cm.a.dim(), nq);
    for (std::size_t t = 0; t < nq; ++t) {
        Vec<K> v = lift.col(t);
        Vec<K> mm_part(v.begin() + nm2, v.end());
        out.cm.mu.set_col(t, ce.cm.mu.apply(mm_part));
    }
    out.cm.act = ActionData<K>(ce.cm.a.dim(), nq);
    for (std::size_t t = 0; t < ce.cm.a.dim(); ++t)
        for (std::size_t j = 0; j < nq; ++j) {
            Vec<K> v = lift.col(j);
            Vec<K> mp(v.begin(), v.begin() + nm2), mmp(v.begin() + nm2, v.end());
            Vec<K> pix = ce.pi.col(t);
            Vec<K> ej = vec_unit<K>(ce.cm.a.dim(), t);
            auto combine = [&](const Vec<K>& new_part, const Vec<K>& mm_val) {
                return q.projection.apply(concat(new_part, mm_val));
            };
            out.cm.act.left.set_slice(t, j,
                combine(rep_new.act.act_left(pix, mp), ce.cm.act.act_left(ej, mmp)));
            out.cm.act.right.set_slice(j, t,
                combine(rep_new.act.act_right(mp, pix), ce.cm.act.act_right(mmp, ej)));
            out.cm.act.blift.set_slice(t, j,
                combine(rep_new.act.act_blift(pix, mp), ce.cm.act.act_blift(ej, mmp)));
            out.cm.act.bright.set_slice(j, t,
                combine(rep_new.act.act_bright(mp, pix), ce.cm.act.act_bright(mmp, ej)));
        }
    require_crossed_extension(out);
    return out;
}

/// Product crossed extension over A x A' on M x M'.
template <Field K>
CrossedExtension<K> product_ce(const CrossedExtension<K>& x, const CrossedExtension<K>& y) {
    require_crossed_extension(x);
    require_crossed_extension(y);
    CrossedExtension<K> out;
    Awb<K> a = direct_sum_awb(x.rep.algebra, y.rep.algebra);
    std::size_t nm1 = x.rep.dim_m(), nm2 = y.rep.dim_m();
    std::size_t na1 = x.rep.algebra.dim(), na2 = y.rep.algebra.dim();
    ActionData<K> act(na1 + na2, nm1 + nm2);
    for (std::size_t t = 0; t < na1 + na2; ++t)
        for (std::size_t j = 0; j < nm1 + nm2; ++j) {
            Vec<K> l(nm1 + nm2, K(0)), r(nm1 + nm2, K(0)), bl(nm1 + nm2, K(0)), br(nm1 + nm2, K(0));
            if (t < na1 && j < nm1) {
                Vec<K> v = x.rep.act.left.slice(t, j);
                for (std::size_t k = 0; k < nm1; ++k) l[k] = v[k];
                v = x.rep.act.right.slice(j, t);
                for (std::size_t k = 0; k < nm1; ++k) r[k] = v[k];
                v = x.rep.act.blift.slice(t, j);
                for (std::size_t k = 0; k < nm1; ++k) bl[k] = v[k];
                v = x.rep.act.bright.slice(j, t);
                for (std::size_t k = 0; k < nm1; ++k) br[k] = v[k];
            } else if (t >= na1 && j >= nm1) {
                Vec<K> v = y.rep.act.left.slice(t - na1, j - nm1);
                for (std::size_t k = 0; k < nm2; ++k) l[nm1 + k] = v[k];
                v = y.rep.act.right.slice(j - nm1, t - na1);
                for (std::size_t k = 0; k < nm2; ++k) r[nm1 + k] = v[k];
                v = y.rep.act.blift.slice(t - na1, j - nm1);
                for (std::size_t k = 0; k < nm2; ++k) bl[nm1 + k] = v[k];
                v = y.rep.act.bright.slice(j - nm1, t - na1);
                for (std::size_t k = 0; k < nm2; ++k) br[nm1 + k] = v[k];
            }
            act.left.set_slice(t, j, l);
            act.right.set_slice(j, t, r);
            act.blift.set_slice(t, j, bl);
            act.bright.set_slice(j, t, br);
        }
    out.rep = Representation<K>(a, act);
    out.cm.m = direct_sum_awb(x.cm.m, y.cm.m);
    out.cm.a = direct_sum_awb(x.cm.a, y.cm.a);
    std::size_t xm = x.cm.m.dim(), ym = y.cm.m.dim();
    std::size_t xa = x.cm.a.dim(), ya = y.cm.a.dim();
    out.cm.mu = Matrix<K>(xa + ya, xm + ym);
    for (std::size_t i = 0; i < xa; ++i)
        for (std::size_t j = 0; j < xm; ++j) out.cm.mu(i, j) = x.cm.mu(i, j);
    for (std::size_t i = 0; i < ya; ++i)
        for (std::size_t j = 0; j < ym; ++j) out.cm.mu(xa + i, xm + j) = y.cm.mu(i, j);
    out.cm.act = ActionData<K>(xa + ya, xm + ym);
    for (std::size_t t = 0; t < xa + ya; ++t)
        for (std::size_t j = 0; j < xm + ym; ++j) {
            Vec<K> l(xm + ym, K(0)), r(xm + ym, K(0)), bl(xm + ym, K(0)), br(xm + ym, K(0));
            if (t < xa && j < xm) {
                Vec<K> v = x.cm.act.left.slice(t, j);
                for (std::size_t k = 0; k < xm; ++k) l[k] = v[k];
                v = x.cm.act.right.slice(j, t);
                for (std::size_t k = 0; k < xm; ++k) r[k] = v[k];
                v = x.cm.act.blift.slice(t, j);
                for (std::size_t k = 0; k < xm; ++k) bl[k] = v[k];
                v = x.cm.act.bright.slice(j, t);
                for (std::size_t k = 0; k < xm; ++k) br[k] = v[k];
            } else if (t >= xa && j >= xm) {
                Vec<K> v = y.cm.act.left.slice(t - xa, j - xm);
                for (std::size_t k = 0; k < ym; ++k) l[xm + k] = v[k];
                v = y.cm.act.right.slice(j - xm, t - xa);
                for (std::size_t k = 0; k < ym; ++k) r[xm + k] = v[k];
                v = y.cm.act.blift.slice(t - xa, j - xm);
                for (std::size_t k = 0; k < ym; ++k) bl[xm + k] = v[k];
                v = y.cm.act.bright.slice(j - xm, t - xa);
                for (std::size_t k = 0; k < ym; ++k) br[xm + k] = v[k];
            }
            out.cm.act.left.set_slice(t, j, l);
            out.cm.act.right.set_slice(j, t, r);
            out.cm.act.blift.set_slice(t, j, bl);
            out.cm.act.bright.set_slice(j, t, br);
        }
    out.sigma = Matrix<K>(xm + ym, nm1 + nm2);
    for (std::size_t i = 0; i < xm; ++i)
        for (std::size_t j = 0; j < nm1; ++j) out.sigma(i, j) = x.sigma(i, j);
    for (std::size_t i = 0; i < ym; ++i)
        for (std::size_t j = 0; j < nm2; ++j) out.sigma(xm + i, nm1 + j) = y.sigma(i, j);
    out.pi = Matrix<K>(na1 + na2, xa + ya);
    for (std::size_t i = 0; i < na1; ++i)
        for (std::size_t j = 0; j < xa; ++j) out.pi(i, j) = x.pi(i, j);
    for (std::size_t i = 0; i < na2; ++i)
        for (std::size_t j = 0; j < ya; ++j) out.pi(na1 + i, xa + j) = y.pi(i, j);
    require_crossed_extension(out);
    return out;
}

/// Baer sum: pull the product back along the diagonal, push out along the
/// codiagonal.
template <Field K>
CrossedExtension<K> baer_sum_ce(const CrossedExtension<K>& x, const CrossedExtension<K>& y) {
    if (!(x.rep.algebra == y.rep.algebra) || x.rep.dim_m() != y.rep.dim_m() ||
        x.rep.act != y.rep.act)
        throw error("baer_sum_ce: crossed extensions of different (A, M)");
    CrossedExtension<K> prod = product_ce(x, y);
    std::size_t na = x.rep.algebra.dim(), nm = x.rep.dim_m();
    Matrix<K> diag(2 * na, na);
    for (std::size_t i = 0; i < na; ++i) { diag(i, i) = K(1); diag(na + i, i) = K(1); }
    CrossedExtension<K> pulled = pullback_ce(prod, x.rep.algebra, diag);
    Matrix<K> codiag(nm, 2 * nm);
    for (std::size_t i = 0; i < nm; ++i) { codiag(i, i) = K(1); codiag(i, nm + i) = K(1); }
    return pushout_ce(pulled, x.rep, codiag);
}

/// Scalar action as displayed: replace sigma by lambda sigma (lambda != 0).
template <Field K>
CrossedExtension<K> scalar_ce(const K& lambda, const CrossedExtension<K>& ce) {
    if (lambda.is_zero()) throw error("scalar_ce: lambda = 0 breaks exactness");
    CrossedExtension<K> out = ce;
    out.sigma = ce.sigma.scaled(lambda);
    require_crossed_extension(out);
    return out;
}

}  // namespace awb
