#pragma once

#include "awb/eightterm.hpp"

namespace awb::fixtures {

/// Dim-1 abelian algebra.
template <Field K>
Awb<K> z1() {
    Awb<K> a(1);
    a.labels = {"a"};
    return validated(std::move(a));
}

/// Dim-1 idempotent: e1 e1 = e1, trivial bracket.
template <Field K>
Awb<K> idem() {
    Awb<K> a(1);
    a.product.at(0, 0, 0) = K(1);
    return validated(std::move(a));
}

/// Dim-2 algebra on {m, e} with e e = m, everything else zero.
template <Field K>
Awb<K> e2() {
    Awb<K> a(2);
    a.labels = {"m", "e"};
    a.product.at(1, 1, 0) = K(1);
    return validated(std::move(a));
}

/// 2x2 matrices with the commutator bracket (tautological AWB). Basis order
/// E11, E12, E21, E22.
template <Field K>
Awb<K> taut4() {
    Awb<K> a(4);
    a.labels = {"e11", "e12", "e21", "e22"};
    auto idx = [](std::size_t r, std::size_t c) { return r * 2 + c; };
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            for (std::size_t r2 = 0; r2 < 2; ++r2)
                for (std::size_t c2 = 0; c2 < 2; ++c2)
                    if (c == r2) a.product.at(idx(r, c), idx(r2, c2), idx(r, c2)) = K(1);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                a.bracket.at(i, j, k) = a.product.at(i, j, k) - a.product.at(j, i, k);
    return validated(std::move(a));
}

/// Negative fixture: associative but the fundamental identity fails at
/// (e1,e1,e1). Deliberately left unvalidated.
template <Field K>
Awb<K> badfe() {
    Awb<K> a(2);
    a.product.at(0, 0, 0) = K(1);   // e1 e1 = e1
    a.bracket.at(0, 0, 1) = K(1);   // [e1, e1] = e2
    return a;
}

/// IDEM acting on a 1-dim space by left = right = identity, brackets zero.
template <Field K>
Representation<K> rep1() {
    Representation<K> r(idem<K>(), ActionData<K>(1, 1));
    r.act.left.at(0, 0, 0) = K(1);
    r.act.right.at(0, 0, 0) = K(1);
    return r;
}

/// Z1 representation with only the lift bracket action {a, m} = m nonzero.
template <Field K>
Representation<K> w2() {
    Representation<K> r(z1<K>(), ActionData<K>(1, 1));
    r.act.blift.at(0, 0, 0) = K(1);
    return r;
}

/// EXT1: 0 -> K -> E2 -> Z1 -> 0 with the trivial representation.
template <Field K>
AbelianExtension<K> ext1() {
    AbelianExtension<K> e;
    e.rep = trivial_representation(z1<K>(), 1);
    e.total = e2<K>();
    e.i = Matrix<K>(2, 1);
    e.i(0, 0) = K(1);  // m
    e.p = Matrix<K>(1, 2);
    e.p(0, 1) = K(1);  // e -> a
    require_extension(e);
    return e;
}

/// Crossed extension of Z1 by the trivial 1-dim representation whose class is
/// the nonzero f-component generator of H^2:
///   MM = abelian{m, n}, AAA = {eps, eps2} with eps eps = eps2,
///   mu(n) = eps2, action eps . n = m.
template <Field K>
CrossedExtension<K> xe2() {
    CrossedExtension<K> ce;
    ce.rep = trivial_representation(z1<K>(), 1);
    ce.cm.m = abelian<K>(2);
    ce.cm.m.labels = {"m", "n"};
    Awb<K> aaa(2);
    aaa.labels = {"eps", "eps2"};
    aaa.product.at(0, 0, 1) = K(1);  // eps eps = eps2
    ce.cm.a = validated(std::move(aaa));
    ce.cm.mu = Matrix<K>(2, 2);
    ce.cm.mu(1, 1) = K(1);  // mu(n) = eps2
    ce.cm.act = ActionData<K>(2, 2);
    ce.cm.act.left.at(0, 1, 0) = K(1);  // eps . n = m
    ce.sigma = Matrix<K>(2, 1);
    ce.sigma(0, 0) = K(1);
    ce.pi = Matrix<K>(1, 2);
    ce.pi(0, 0) = K(1);  // pi(eps) = a
    require_crossed_extension(ce);
    return ce;
}

/// Companion fixture realizing the g-component generator of H^2: same shape
/// but AAA has zero product and bracket [eps, eps] = eps2, so the defect sits
/// in the bracket cochain.
template <Field K>
CrossedExtension<K> xe2b() {
    CrossedExtension<K> ce;
    ce.rep = trivial_representation(z1<K>(), 1);
    ce.cm.m = abelian<K>(2);
    ce.cm.m.labels = {"m", "n"};
    Awb<K> aaa(2);
    aaa.labels = {"eps", "eps2"};
    aaa.bracket.at(0, 0, 1) = K(1);  // [eps, eps] = eps2
    ce.cm.a = validated(std::move(aaa));
    ce.cm.mu = Matrix<K>(2, 2);
    ce.cm.mu(1, 1) = K(1);
    ce.cm.act = ActionData<K>(2, 2);
    ce.cm.act.left.at(0, 1, 0) = K(1);  // eps . n = m
    ce.sigma = Matrix<K>(2, 1);
    ce.sigma(0, 0) = K(1);
    ce.pi = Matrix<K>(1, 2);
    ce.pi(0, 0) = K(1);
    require_crossed_extension(ce);
    return ce;
}

/// The eight-term fixture context: A = E2, B = span{m}, M the trivial 1-dim
/// representation of A/B (which is Z1 on the quotient basis).
template <Field K>
struct EightTermFixture {
    Awb<K> a;
    Subspace<K> b;
    Representation<K> m_rep;
};

template <Field K>
EightTermFixture<K> eight_term_fixture() {
    EightTermFixture<K> f;
    f.a = e2<K>();
    f.b = Subspace<K>::span(2, {Vec<K>{K(1), K(0)}});
    QuotientAlgebra<K> q = quotient(f.a, f.b);
    f.m_rep = trivial_representation(q.algebra, 1);
    return f;
}

/// XE1: crossed extension of A/B by M spliced from an abelian extension of A
/// via r and gamma on the eight-term fixture.
template <Field K>
CrossedExtension<K> xe1() {
    EightTermFixture<K> f = eight_term_fixture<K>();
    QuotientAlgebra<K> q = quotient(f.a, f.b);
    Representation<K> rep_a = pullback_representation(f.m_rep, f.a, q.projection);
    // inflate the EXT1 cocycle from A/B to A and build the extension
    KCochain<K> zq = cocycle_of_extension(ext1<K>());
    KCochain<K> za = kcochain_pullback(zq, q.projection, f.a.dim());
    AbelianExtension<K> e = extension_from_cocycle(rep_a, za);
    return gamma_map(r_map(f.a, f.b, f.m_rep, e));
}

}  // namespace awb::fixtures
