#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "awb/enumerate.hpp"
#include "awb/fixtures.hpp"
#include "awb/wells.hpp"

using namespace awb;
using namespace awb::fixtures;

namespace {

DerPair<Q> scalar_pair(long x, long y) {
    DerPair<Q> p{Matrix<Q>(1, 1), Matrix<Q>(1, 1)};
    p.d_m(0, 0) = Q(x);
    p.d_a(0, 0) = Q(y);
    return p;
}

}  // namespace

TEST_CASE("compatible pair spaces") {
    SECTION("trivial actions over an abelian base: everything is compatible") {
        Representation<Q> r = trivial_representation(abelian<Q>(2), 2);
        CompatiblePairSpace<Q> d = compatible_pairs(r);
        REQUIRE(d.dim() == 8);  // all of End(M) + End(A)
        REQUIRE(d.lie_closed);
    }
    SECTION("EXT1 base: both endomorphism scalars free") {
        CompatiblePairSpace<Q> d = compatible_pairs(trivial_representation(z1<Q>(), 1));
        REQUIRE(d.dim() == 2);
    }
    SECTION("IDEM with REP1: End(M) + 0") {
        CompatiblePairSpace<Q> d = compatible_pairs(rep1<Q>());
        REQUIRE(d.dim() == 1);
        REQUIRE(d.contains(scalar_pair(5, 0)));
        REQUIRE_FALSE(d.contains(scalar_pair(0, 1)));
    }
}

TEST_CASE("theta twists") {
    AbelianExtension<Q> e = ext1<Q>();
    KCochain<Q> z = cocycle_of_extension(e);
    SECTION("zero cochain and zero pair map to zero") {
        REQUIRE(theta(e.rep, scalar_pair(3, 4), KCochain<Q>::zero(0, 1, 1)).is_zero());
        REQUIRE(theta(e.rep, scalar_pair(0, 0), z).is_zero());
    }
    SECTION("EXT1: f_theta = (x - 2y) f") {
        KCochain<Q> t = theta(e.rep, scalar_pair(3, 1), z);
        REQUIRE(t.f.value(0) == Vec<Q>{Q(1)});
        REQUIRE(t.g.is_zero());
        REQUIRE(theta(e.rep, scalar_pair(2, 1), z).is_zero());
    }
    SECTION("theta is bilinear and preserves cocycles and coboundaries") {
        std::mt19937 rng(9);
        Representation<Q> r = rep1<Q>();
        CompatiblePairSpace<Q> d = compatible_pairs(r);
        Matrix<Q> dmat = coboundary_matrix(r, -1);
        Matrix<Q> d0 = coboundary_matrix(r, 0);
        for (int trial = 0; trial < 10; ++trial) {
            DerPair<Q> p = d.basis_pair(0);
            p.d_m = p.d_m.scaled(Q(long(rng() % 5)));
            Cochain<Q> h(1, 1, 1);
            h.at(0, 0) = Q(long(rng() % 7) - 3);
            KCochain<Q> cob = k_coboundary(r, KCochain<Q>::minus_one(h));
            KCochain<Q> tcob = theta(r, p, cob);
            REQUIRE(vec_is_zero(residue_matrix(image(dmat)).apply(k_flatten(tcob))));
            // cocycle goes to cocycle
            Subspace<Q> zs = kernel(d0);
            for (std::size_t t = 0; t < zs.dim(); ++t) {
                KCochain<Q> zc = k_unflatten(r, 0, zs.basis_vector(t));
                REQUIRE(vec_is_zero(d0.apply(k_flatten(theta(r, p, zc)))));
            }
        }
    }
}

TEST_CASE("Wells map") {
    AbelianExtension<Q> e = ext1<Q>();
    CompatiblePairSpace<Q> d = compatible_pairs(e.rep);
    Cohomology<Q> h1 = cohomology(e.rep, 1);
    SECTION("split extensions have trivial Wells map") {
        AbelianExtension<Q> s = split_extension(e.rep);
        for (std::size_t t = 0; t < d.dim(); ++t)
            REQUIRE(vec_is_zero(wells_class(s, d.basis_pair(t), d, h1)));
    }
    SECTION("EXT1 obstruction vanishes exactly on x = 2y") {
        REQUIRE_FALSE(vec_is_zero(wells_class(e, scalar_pair(1, 1), d, h1)));
        REQUIRE(vec_is_zero(wells_class(e, scalar_pair(2, 1), d, h1)));
        REQUIRE(vec_is_zero(wells_class(e, scalar_pair(4, 2), d, h1)));
        REQUIRE_FALSE(vec_is_zero(wells_class(e, scalar_pair(0, 3), d, h1)));
    }
    SECTION("incompatible pairs are rejected") {
        CompatiblePairSpace<Q> dr = compatible_pairs(rep1<Q>());
        AbelianExtension<Q> sr = split_extension(rep1<Q>());
        Cohomology<Q> h1r = cohomology(rep1<Q>(), 1);
        REQUIRE_THROWS_AS(wells_class(sr, scalar_pair(0, 1), dr, h1r), error);
    }
}

TEST_CASE("extend_pair") {
    AbelianExtension<Q> e = ext1<Q>();
    SECTION("the lift of (2, 1) acts as 2 on m and fixes e") {
        ExtendOutcome<Q> out = extend_pair(e, scalar_pair(2, 1));
        REQUIRE(out.reason == ExtendReason::extended);
        REQUIRE(out.d_e);
        Matrix<Q> expected(2, 2);
        expected(0, 0) = Q(2);
        expected(1, 1) = Q(1);
        REQUIRE(*out.d_e == expected);
    }
    SECTION("(1, 1) is compatible but obstructed") {
        ExtendOutcome<Q> out = extend_pair(e, scalar_pair(1, 1));
        REQUIRE_FALSE(out.d_e);
        REQUIRE(out.reason == ExtendReason::nonzero_wells_class);
    }
    SECTION("incompatible pairs are flagged") {
        AbelianExtension<Q> sr = split_extension(rep1<Q>());
        ExtendOutcome<Q> out = extend_pair(sr, scalar_pair(0, 1));
        REQUIRE_FALSE(out.d_e);
        REQUIRE(out.reason == ExtendReason::incompatible);
    }
    SECTION("split: every compatible pair extends") {
        AbelianExtension<Q> s = split_extension(e.rep);
        CompatiblePairSpace<Q> d = compatible_pairs(e.rep);
        for (std::size_t t = 0; t < d.dim(); ++t) {
            ExtendOutcome<Q> out = extend_pair(s, d.basis_pair(t));
            REQUIRE(out.d_e);
        }
    }
}

TEST_CASE("derivations preserving M") {
    SECTION("EXT1 total: all of Der(E2), dimension 2") {
        DerPreserving<Q> d = der_preserving(ext1<Q>());
        REQUIRE(d.space.dim() == 2);
        REQUIRE(d.lie_closed);
    }
    SECTION("split REP1 semidirect matches the corollary dimensions") {
        AbelianExtension<Q> s = split_extension(rep1<Q>());
        DerPreserving<Q> d = der_preserving(s);
        CompatiblePairSpace<Q> cp = compatible_pairs(rep1<Q>());
        Subspace<Q> z = z_minus1(rep1<Q>());
        REQUIRE(d.space.dim() == cp.dim() + z.dim());
    }
}

TEST_CASE("kappa and sigma") {
    AbelianExtension<Q> e = ext1<Q>();
    SECTION("zero maps to the zero pair") {
        DerPair<Q> p = kappa(e, Matrix<Q>(2, 2));
        REQUIRE(p.d_m.is_zero());
        REQUIRE(p.d_a.is_zero());
    }
    SECTION("reading off the EXT1 lift") {
        Matrix<Q> de(2, 2);
        de(0, 0) = Q(2);
        de(1, 1) = Q(1);
        DerPair<Q> p = kappa(e, de);
        REQUIRE(p.d_m(0, 0) == Q(2));
        REQUIRE(p.d_a(0, 0) == Q(1));
    }
    SECTION("sigma image is killed by kappa") {
        Matrix<Q> h(1, 1);
        h(0, 0) = Q(1);
        Matrix<Q> de = sigma_map(e, h);  // d(e) = m, d(m) = 0
        REQUIRE(de(0, 1) == Q(1));
        DerPair<Q> p = kappa(e, de);
        REQUIRE(p.d_m.is_zero());
        REQUIRE(p.d_a.is_zero());
    }
    SECTION("non-preserving derivations are rejected") {
        AbelianExtension<Q> s = split_extension(trivial_representation(z1<Q>(), 1));
        Matrix<Q> bad(2, 2);
        bad(1, 0) = Q(1);  // sends M outside itself
        REQUIRE_THROWS_AS(kappa(s, bad), error);
    }
}

TEST_CASE("Wells sequence report") {
    SECTION("EXT1 ledger") {
        WellsReport<Q> r = wells_sequence_report(ext1<Q>());
        REQUIRE(r.dim_z == 1);
        REQUIRE(r.dim_der_em == 2);
        REQUIRE(r.dim_d == 2);
        REQUIRE(r.dim_h1 == 2);
        REQUIRE(r.ok());
        REQUIRE_FALSE(r.split);
    }
    SECTION("split fixtures satisfy the corollary dimension identity") {
        for (const Representation<Q>& rep :
             {rep1<Q>(), w2<Q>(), trivial_representation(e2<Q>(), 1)}) {
            WellsReport<Q> r = wells_sequence_report(split_extension(rep));
            REQUIRE(r.ok());
            REQUIRE(r.split);
            REQUIRE(r.corollary_dims);
        }
    }
}

TEST_CASE("theta induces a Lie module structure on classes") {
    AbelianExtension<Q> e = ext1<Q>();
    CompatiblePairSpace<Q> d = compatible_pairs(e.rep);
    Cohomology<Q> h1 = cohomology(e.rep, 1);
    KCochain<Q> z = cocycle_of_extension(e);
    for (std::size_t i = 0; i < d.dim(); ++i)
        for (std::size_t j = 0; j < d.dim(); ++j) {
            DerPair<Q> p1 = d.basis_pair(i), p2 = d.basis_pair(j);
            DerPair<Q> c{p1.d_m * p2.d_m - p2.d_m * p1.d_m,
                         p1.d_a * p2.d_a - p2.d_a * p1.d_a};
            Vec<Q> lhs = h1.normal_form(k_flatten(theta(e.rep, c, z)));
            KCochain<Q> t12 = theta(e.rep, p1, theta(e.rep, p2, z));
            KCochain<Q> t21 = theta(e.rep, p2, theta(e.rep, p1, z));
            Vec<Q> rhs = h1.normal_form(k_flatten(t12 + (-t21)));
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("extensibility theorem holds exhaustively over F2 in dimension 2") {
    Fp::set_modulus(2);
    // dim E = 2: dim A = dim M = 1
    for (const Awb<Fp>& a : enumerate::all_awbs(1))
        for (const Representation<Fp>& rep : enumerate::all_representations(a, 1)) {
            CompatiblePairSpace<Fp> d = compatible_pairs(rep);
            Cohomology<Fp> h1 = cohomology(rep, 1);
            for (const KCochain<Fp>& z : enumerate::all_cocycles(rep)) {
                AbelianExtension<Fp> e = extension_from_cocycle(rep, z);
                for (long x = 0; x < 2; ++x)
                    for (long y = 0; y < 2; ++y) {
                        DerPair<Fp> p{Matrix<Fp>(1, 1), Matrix<Fp>(1, 1)};
                        p.d_m(0, 0) = Fp(x);
                        p.d_a(0, 0) = Fp(y);
                        ExtendOutcome<Fp> out = extend_pair(e, p);
                        bool expected =
                            d.contains(p) && vec_is_zero(wells_class(e, p, d, h1));
                        REQUIRE(out.d_e.has_value() == expected);
                    }
            }
        }
}
