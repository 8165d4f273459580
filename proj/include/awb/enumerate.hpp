#pragma once

#include <functional>

#include "awb/extension.hpp"

namespace awb::enumerate {

/// All elements of the current prime field.
inline std::vector<Fp> field_elements() {
    std::vector<Fp> v;
    for (std::uint32_t x = 0; x < Fp::modulus(); ++x) v.push_back(Fp(static_cast<long>(x)));
    return v;
}

/// All vectors of a subspace (p^dim of them).
inline std::vector<Vec<Fp>> all_vectors(const Subspace<Fp>& s) {
    std::vector<Vec<Fp>> out;
    std::vector<Fp> elems = field_elements();
    std::size_t total = 1;
    for (std::size_t i = 0; i < s.dim(); ++i) total *= elems.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        Vec<Fp> v(s.ambient_dim(), Fp(0));
        std::size_t t = idx;
        for (std::size_t r = 0; r < s.dim(); ++r) {
            vec_add_scaled(v, elems[t % elems.size()], s.basis_vector(r));
            t /= elems.size();
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// All solutions x of M x = b (empty when inconsistent).
inline std::vector<Vec<Fp>> all_solutions(const Matrix<Fp>& m, const Vec<Fp>& b) {
    auto part = m.solve(b);
    if (!part) return {};
    std::vector<Vec<Fp>> out;
    for (const Vec<Fp>& k : all_vectors(kernel(m))) out.push_back(vec_add(*part, k));
    return out;
}

/// Every valid AWB of the given dimension over the current prime field:
/// product tensors enumerated and filtered by associativity, bracket tensors
/// obtained as the full solution set of the (linear) fundamental identity,
/// each candidate confirmed by verify_awb.
inline std::vector<Awb<Fp>> all_awbs(std::size_t dim) {
    std::vector<Awb<Fp>> out;
    std::vector<Fp> elems = field_elements();
    std::size_t p_entries = dim * dim * dim;
    std::size_t total = 1;
    for (std::size_t i = 0; i < p_entries; ++i) total *= elems.size();
    for (std::size_t pi = 0; pi < total; ++pi) {
        Awb<Fp> a(dim);
        std::size_t t = pi;
        for (std::size_t e = 0; e < p_entries; ++e) {
            a.product.at(e / (dim * dim), (e / dim) % dim, e % dim) = elems[t % elems.size()];
            t /= elems.size();
        }
        AwbReport r = verify_awb(a);
        if (!r.associative) continue;
        // the fundamental identity is linear in the bracket tensor
        auto fe_rows = [&](const Vec<Fp>& flat) {
            Trilinear<Fp> b(dim, dim, dim);
            for (std::size_t e = 0; e < p_entries; ++e)
                b.at(e / (dim * dim), (e / dim) % dim, e % dim) = flat[e];
            Vec<Fp> rows;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    for (std::size_t k = 0; k < dim; ++k) {
                        Vec<Fp> lhs = b.eval(a.mul_basis(i, j), vec_unit<Fp>(dim, k));
                        Vec<Fp> rhs = a.product.eval(b.slice(i, k), vec_unit<Fp>(dim, j));
                        rhs = vec_add(rhs, a.product.eval(vec_unit<Fp>(dim, i), b.slice(j, k)));
                        Vec<Fp> row = vec_sub(lhs, rhs);
                        rows.insert(rows.end(), row.begin(), row.end());
                    }
            return rows;
        };
        Matrix<Fp> sys = matrix_of<Fp>(p_entries, p_entries * dim, fe_rows);
        for (const Vec<Fp>& bflat : all_vectors(kernel(sys))) {
            Awb<Fp> cand = a;
            for (std::size_t e = 0; e < p_entries; ++e)
                cand.bracket.at(e / (dim * dim), (e / dim) % dim, e % dim) = bflat[e];
            AwbReport rr = verify_awb(cand);
            if (rr.ok()) {
                cand.validated = true;
                out.push_back(std::move(cand));
            }
        }
    }
    return out;
}

namespace detail {

/// All tuples of dim_a matrices (dim_m x dim_m) over the current field.
inline void for_each_matrix_tuple(std::size_t count, std::size_t dim_m,
                                  const std::function<void(const std::vector<Matrix<Fp>>&)>& fn) {
    std::vector<Fp> elems = field_elements();
    std::size_t entries = count * dim_m * dim_m;
    std::size_t total = 1;
    for (std::size_t i = 0; i < entries; ++i) total *= elems.size();
    std::vector<Matrix<Fp>> ms(count, Matrix<Fp>(dim_m, dim_m));
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t t = idx;
        for (std::size_t e = 0; e < entries; ++e) {
            ms[e / (dim_m * dim_m)]((e / dim_m) % dim_m, e % dim_m) = elems[t % elems.size()];
            t /= elems.size();
        }
        fn(ms);
    }
}

}  // namespace detail

/// One family of representations sharing the product actions (left, right):
/// the bracket actions form the affine space particular + row span of kernel
/// (the six surviving equations are linear in (blift, bright) once the
/// product actions are fixed).
struct RepFamily {
    std::vector<Matrix<Fp>> l, r;  // product-action matrices per A-basis vector
    Vec<Fp> particular;            // one (blift, bright) solution, flattened
    Matrix<Fp> kernel;             // rows span the homogeneous solutions
    std::size_t count() const {
        std::size_t n = 1;
        for (std::size_t i = 0; i < kernel.rows(); ++i) n *= Fp::modulus();
        return n;
    }
};

inline Representation<Fp> family_member(const Awb<Fp>& a, std::size_t dim_m,
                                        const RepFamily& fam, const Vec<Fp>& gh_flat) {
    std::size_t na = a.dim();
    ActionData<Fp> act(na, dim_m);
    std::size_t e = 0;
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < dim_m; ++j)
            for (std::size_t k = 0; k < dim_m; ++k) act.blift.at(i, j, k) = gh_flat[e++];
    for (std::size_t j = 0; j < dim_m; ++j)
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t k = 0; k < dim_m; ++k) act.bright.at(j, i, k) = gh_flat[e++];
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t c = 0; c < dim_m; ++c) {
            act.left.set_slice(i, c, fam.l[i].col(c));
            act.right.set_slice(c, i, fam.r[i].col(c));
        }
    return Representation<Fp>(a, act);
}

/// The affine basis of a family: the particular member plus one member per
/// kernel generator. A property that is an affine function of (blift, bright)
/// vanishes on the whole family iff it vanishes on these members.
inline std::vector<Vec<Fp>> family_affine_basis(const RepFamily& fam) {
    std::vector<Vec<Fp>> pts{fam.particular};
    for (std::size_t i = 0; i < fam.kernel.rows(); ++i)
        pts.push_back(vec_add(fam.particular, fam.kernel.row(i)));
    return pts;
}

template <class Fn>
void for_each_rep_family(const Awb<Fp>& a, std::size_t dim_m, Fn&& fn) {
    std::size_t na = a.dim();
    std::vector<std::vector<Matrix<Fp>>> lefts, rights;
    // L_{e_i e_j} = L_i L_j
    detail::for_each_matrix_tuple(na, dim_m, [&](const std::vector<Matrix<Fp>>& l) {
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j) {
                Matrix<Fp> lhs(dim_m, dim_m);
                Vec<Fp> prod = a.mul_basis(i, j);
                for (std::size_t c = 0; c < na; ++c)
                    if (!prod[c].is_zero()) lhs = lhs + l[c].scaled(prod[c]);
                if (lhs != l[i] * l[j]) return;
            }
        lefts.push_back(l);
    });
    // R_{e_i e_j} = R_j R_i
    detail::for_each_matrix_tuple(na, dim_m, [&](const std::vector<Matrix<Fp>>& r) {
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j) {
                Matrix<Fp> lhs(dim_m, dim_m);
                Vec<Fp> prod = a.mul_basis(i, j);
                for (std::size_t c = 0; c < na; ++c)
                    if (!prod[c].is_zero()) lhs = lhs + r[c].scaled(prod[c]);
                if (lhs != r[j] * r[i]) return;
            }
        rights.push_back(r);
    });
    std::size_t unknowns = 2 * na * dim_m * dim_m;
    for (const auto& l : lefts)
        for (const auto& r : rights) {
            // (L_i m) R_j = L_i (m R_j)
            bool ok = true;
            for (std::size_t i = 0; i < na && ok; ++i)
                for (std::size_t j = 0; j < na; ++j)
                    if (r[j] * l[i] != l[i] * r[j]) { ok = false; break; }
            if (!ok) continue;
            RepFamily fam;
            fam.l = l;
            fam.r = r;
            Awb<Fp> carrier = abelian<Fp>(dim_m);
            auto residual = [&](const Vec<Fp>& flat) {
                Representation<Fp> rep = family_member(a, dim_m, fam, flat);
                Vec<Fp> rows;
                for (std::size_t i = 0; i < na; ++i)
                    for (std::size_t j = 0; j < na; ++j)
                        for (std::size_t k = 0; k < dim_m; ++k)
                            for (int eq : {2, 4, 6}) {
                                auto [lhs, rhs] = awb::detail::action_equation_sides(
                                    a, carrier, rep.act, eq, i, j, k);
                                Vec<Fp> row = vec_sub(lhs, rhs);
                                rows.insert(rows.end(), row.begin(), row.end());
                            }
                return rows;
            };
            // the residual is affine in (blift, bright); split off the constant
            Vec<Fp> rhs = residual(vec_zero<Fp>(unknowns));
            std::size_t n_rows = rhs.size();
            Matrix<Fp> sys = matrix_of<Fp>(unknowns, n_rows, [&](const Vec<Fp>& v) {
                return vec_sub(residual(v), rhs);
            });
            for (Fp& x : rhs) x = -x;
            auto part = sys.solve(rhs);
            if (!part) continue;
            fam.particular = *part;
            fam.kernel = sys.kernel_basis_rows();
            fn(fam);
        }
}

/// Every representation of A on a dim_m space, materialized. Guarded against
/// families too large to enumerate one by one; each result is confirmed by
/// verify_representation.
inline std::vector<Representation<Fp>> all_representations(const Awb<Fp>& a, std::size_t dim_m,
                                                           std::size_t max_family = 4096) {
    std::vector<Representation<Fp>> out;
    for_each_rep_family(a, dim_m, [&](const RepFamily& fam) {
        if (fam.count() > max_family)
            throw error("all_representations: family too large; use for_each_rep_family");
        Subspace<Fp> hom = Subspace<Fp>::span_rows(fam.kernel);
        for (const Vec<Fp>& k : all_vectors(hom)) {
            Representation<Fp> rep = family_member(a, dim_m, fam, vec_add(fam.particular, k));
            if (verify_representation(rep).ok) out.push_back(std::move(rep));
        }
    });
    return out;
}

/// All 0-cocycles of the cone complex (every abelian extension datum).
inline std::vector<KCochain<Fp>> all_cocycles(const Representation<Fp>& rep) {
    std::vector<KCochain<Fp>> out;
    for (const Vec<Fp>& v : all_vectors(kernel(coboundary_matrix(rep, 0))))
        out.push_back(k_unflatten(rep, 0, v));
    return out;
}

/// Canonical form of an algebra under basis change, for orbit deduplication:
/// the lexicographically smallest transported tensor pair over all invertible
/// matrices (practical for dim <= 2 over small fields).
inline std::string awb_orbit_key(const Awb<Fp>& a) {
    std::size_t n = a.dim();
    std::vector<Matrix<Fp>> gls;
    detail::for_each_matrix_tuple(1, n, [&](const std::vector<Matrix<Fp>>& m) {
        if (m[0].rank() == n) gls.push_back(m[0]);
    });
    std::string best;
    for (const Matrix<Fp>& g : gls) {
        Matrix<Fp> ginv = *g.inverse();
        std::string key;
        key.reserve(2 * n * n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec<Fp> p = ginv.apply(a.mul(g.col(i), g.col(j)));
                Vec<Fp> b = ginv.apply(a.brk(g.col(i), g.col(j)));
                for (const Fp& x : p) key.push_back(static_cast<char>('0' + x.raw()));
                for (const Fp& x : b) key.push_back(static_cast<char>('0' + x.raw()));
            }
        if (best.empty() || key < best) best = key;
    }
    return best;
}

/// Iterates representations family by family; when a family has at most
/// `cap` members they are all materialized, otherwise only its affine basis
/// (the particular member and one member per kernel generator).
template <class Fn>
void for_each_rep_instance(const Awb<Fp>& a, std::size_t dim_m, std::size_t cap, Fn&& fn) {
    for_each_rep_family(a, dim_m, [&](const RepFamily& fam) {
        if (fam.count() <= cap) {
            Subspace<Fp> hom = Subspace<Fp>::span_rows(fam.kernel);
            for (const Vec<Fp>& k : all_vectors(hom))
                fn(family_member(a, dim_m, fam, vec_add(fam.particular, k)), fam, true);
        } else {
            for (const Vec<Fp>& pt : family_affine_basis(fam))
                fn(family_member(a, dim_m, fam, pt), fam, false);
        }
    });
}

/// Canonical key of a representation under basis change of the carrier
/// (GL(M)-orbit); used to deduplicate equivariant test instances.
inline std::string rep_orbit_key(const Representation<Fp>& rep) {
    std::size_t nm = rep.dim_m(), na = rep.algebra.dim();
    std::vector<Matrix<Fp>> gls;
    detail::for_each_matrix_tuple(1, nm, [&](const std::vector<Matrix<Fp>>& m) {
        if (m[0].rank() == nm) gls.push_back(m[0]);
    });
    std::string best;
    for (const Matrix<Fp>& g : gls) {
        Matrix<Fp> ginv = *g.inverse();
        std::string key;
        for (std::size_t t = 0; t < na; ++t)
            for (std::size_t j = 0; j < nm; ++j) {
                Vec<Fp> ej = g.col(j);
                Vec<Fp> l = ginv.apply(rep.act.act_left(vec_unit<Fp>(na, t), ej));
                Vec<Fp> r = ginv.apply(rep.act.act_right(ej, vec_unit<Fp>(na, t)));
                Vec<Fp> bl = ginv.apply(rep.act.act_blift(vec_unit<Fp>(na, t), ej));
                Vec<Fp> br = ginv.apply(rep.act.act_bright(ej, vec_unit<Fp>(na, t)));
                for (const Vec<Fp>* v : {&l, &r, &bl, &br})
                    for (const Fp& x : *v) key.push_back(static_cast<char>('0' + x.raw()));
            }
        if (best.empty() || key < best) best = key;
    }
    return best;
}

/// Representatives of the GL-orbit classes of all_awbs(dim).
inline std::vector<Awb<Fp>> awb_orbit_representatives(std::size_t dim) {
    std::vector<Awb<Fp>> all = all_awbs(dim);
    std::vector<Awb<Fp>> reps;
    std::vector<std::string> seen;
    for (const Awb<Fp>& a : all) {
        std::string key = awb_orbit_key(a);
        bool found = false;
        for (const std::string& s : seen)
            if (s == key) { found = true; break; }
        if (!found) {
            seen.push_back(key);
            reps.push_back(a);
        }
    }
    return reps;
}

}  // namespace awb::enumerate
