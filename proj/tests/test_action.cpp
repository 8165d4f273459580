#include <catch2/catch_amalgamated.hpp>

#include "awb/fixtures.hpp"

using namespace awb;
using namespace awb::fixtures;

TEST_CASE("verify_action") {
    SECTION("trivial action of any pair is an action") {
        REQUIRE(verify_action(e2<Q>(), taut4<Q>(), ActionData<Q>(2, 4)).ok);
        REQUIRE(verify_action(z1<Q>(), z1<Q>(), ActionData<Q>(1, 1)).ok);
    }
    SECTION("an algebra acts on a two-sided ideal by its operations") {
        Awb<Q> a = e2<Q>();
        Subspace<Q> u = Subspace<Q>::span(2, {{Q(1), Q(0)}});
        IdealAction<Q> ia = ideal_action(a, u);
        REQUIRE(verify_action(a, ia.m, ia.act).ok);
        IdealAction<Q> self = ideal_action(taut4<Q>(), Subspace<Q>::full(4));
        REQUIRE(verify_action(taut4<Q>(), self.m, self.act).ok);
    }
    SECTION("REP1 as an action on the abelian line") {
        Representation<Q> r = rep1<Q>();
        REQUIRE(verify_action(r.algebra, r.carrier(), r.act).ok);
    }
}

TEST_CASE("verify_representation") {
    SECTION("trivial representations") {
        REQUIRE(verify_representation(trivial_representation(taut4<Q>(), 3)).ok);
    }
    SECTION("REP1 and W2 are representations") {
        REQUIRE(verify_representation(rep1<Q>()).ok);
        REQUIRE(verify_representation(w2<Q>()).ok);
    }
    SECTION("REP1 with a lift bracket action fails equation 6") {
        Representation<Q> r = rep1<Q>();
        r.act.blift.at(0, 0, 0) = Q(1);  // {e1, m} = m
        ActionReport rep = verify_representation(r);
        REQUIRE_FALSE(rep.ok);
        // {a1 a2, m} = a1.{a2, m} + {a1, m}.a2 gives m = 2m
        REQUIRE(rep.failed_equation == 6);
        REQUIRE(rep.triple == std::array<std::size_t, 3>{0, 0, 0});
    }
}

TEST_CASE("semidirect products") {
    SECTION("trivial action gives the direct sum") {
        SemidirectProduct<Q> sd = semidirect(e2<Q>(), z1<Q>(), ActionData<Q>(1, 2));
        REQUIRE(sd.algebra.dim() == 3);
        REQUIRE(verify_awb(sd.algebra).ok());
        REQUIRE(sd.algebra.mul_basis(0, 2) == vec_zero<Q>(3));
    }
    SECTION("REP1 semidirect product") {
        Representation<Q> r = rep1<Q>();
        SemidirectProduct<Q> sd = semidirect(r.carrier(), r.algebra, r.act);
        REQUIRE(sd.algebra.dim() == 2);
        // (m, 0)(0, e1) = (m, 0) and (0, e1)(0, e1) = (0, e1)
        REQUIRE(sd.algebra.mul_basis(0, 1) == Vec<Q>{Q(1), Q(0)});
        REQUIRE(sd.algebra.mul_basis(1, 1) == Vec<Q>{Q(0), Q(1)});
        REQUIRE(verify_awb(sd.algebra).ok());
        REQUIRE(image(sd.i) == kernel(sd.p));
        REQUIRE(sd.p * sd.s == Matrix<Q>::identity(1));
        REQUIRE(sd.p * sd.i == Matrix<Q>(1, 1));
    }
    SECTION("invalid actions are rejected") {
        ActionData<Q> bad(1, 1);
        bad.blift.at(0, 0, 0) = Q(1);
        REQUIRE_THROWS_AS(semidirect(abelian<Q>(1), idem<Q>(), bad), error);
    }
    SECTION("M is a two-sided ideal and abelian for representations") {
        Representation<Q> r = rep1<Q>();
        SemidirectProduct<Q> sd = semidirect(r.carrier(), r.algebra, r.act);
        Subspace<Q> m_inside = image(sd.i);
        REQUIRE(ideal_predicates(sd.algebra, m_inside).two_sided);
        Awb<Q> restricted = subalgebra_on(sd.algebra, m_inside);
        REQUIRE(is_abelian(restricted));
    }
}

TEST_CASE("action from a split sequence") {
    SECTION("round trip through the semidirect product") {
        std::vector<Representation<Q>> reps = {rep1<Q>(), w2<Q>(),
                                               trivial_representation(e2<Q>(), 2)};
        for (const Representation<Q>& r : reps) {
            SemidirectProduct<Q> sd = semidirect(r.carrier(), r.algebra, r.act);
            ActionData<Q> back = action_from_split(r.carrier(), r.algebra, sd.algebra,
                                                   sd.i, sd.p, sd.s);
            REQUIRE(back == r.act);
        }
    }
    SECTION("full actions round trip too") {
        Awb<Q> a = e2<Q>();
        IdealAction<Q> ia = ideal_action(a, Subspace<Q>::span(2, {{Q(1), Q(0)}}));
        SemidirectProduct<Q> sd = semidirect(ia.m, a, ia.act);
        REQUIRE(action_from_split(ia.m, a, sd.algebra, sd.i, sd.p, sd.s) == ia.act);
    }
    SECTION("direct sum gives the trivial cross action") {
        SemidirectProduct<Q> sd = semidirect(e2<Q>(), z1<Q>(), ActionData<Q>(1, 2));
        ActionData<Q> act = action_from_split(e2<Q>(), z1<Q>(), sd.algebra, sd.i, sd.p, sd.s);
        REQUIRE(act.is_trivial());
    }
    SECTION("no AWB section of E2 over the idempotent line") {
        // p: E2 -> IDEM, e -> e1; any linear section fails to be a homomorphism
        Awb<Q> m = abelian<Q>(1), a = idem<Q>(), e = e2<Q>();
        Matrix<Q> i(2, 1), p(1, 2), s(2, 1);
        i(0, 0) = Q(1);
        p(0, 1) = Q(1);
        s(1, 0) = Q(1);
        REQUIRE_THROWS_WITH(action_from_split(m, a, e, i, p, s),
                            Catch::Matchers::ContainsSubstring("s not a homomorphism"));
    }
    SECTION("broken exactness is reported") {
        Awb<Q> m = abelian<Q>(1), a = z1<Q>(), e = abelian<Q>(3);
        Matrix<Q> i(3, 1), p(1, 3), s(3, 1);
        i(0, 0) = Q(1);
        p(0, 2) = Q(1);
        s(2, 0) = Q(1);
        REQUIRE_THROWS_WITH(action_from_split(m, a, e, i, p, s),
                            Catch::Matchers::ContainsSubstring("not exact"));
    }
}

TEST_CASE("actions induced by a homomorphism") {
    // f: A -> M composed with M's own operations gives an action of A on M
    // (pulling the self-action of M back along f)
    Awb<Q> a = e2<Q>(), m = taut4<Q>();
    Matrix<Q> f(4, 2);
    f(1, 1) = Q(1);  // m -> 0, e -> E12
    REQUIRE(is_homomorphism(a, m, f));
    std::size_t na = a.dim(), nm = m.dim();
    ActionData<Q> act(na, nm);
    for (std::size_t t = 0; t < na; ++t)
        for (std::size_t j = 0; j < nm; ++j) {
            Vec<Q> fa = f.col(t), ej = vec_unit<Q>(nm, j);
            act.left.set_slice(t, j, m.mul(fa, ej));
            act.right.set_slice(j, t, m.mul(ej, fa));
            act.blift.set_slice(t, j, m.brk(fa, ej));
            act.bright.set_slice(j, t, m.brk(ej, fa));
        }
    REQUIRE(verify_action(a, m, act).ok);
}

TEST_CASE("action from a central surjection") {
    SECTION("identity gives the self action") {
        Awb<Q> m = e2<Q>();
        ActionData<Q> act = action_from_surjection(Matrix<Q>::identity(2), m, m);
        REQUIRE(act == self_action(m));
    }
    SECTION("E2 onto its abelianization") {
        Awb<Q> m = e2<Q>();
        QuotientAlgebra<Q> q = quotient(m, Subspace<Q>::span(2, {{Q(1), Q(0)}}));
        ActionData<Q> act = action_from_surjection(q.projection, m, q.algebra);
        // a . m' = e m'; in particular a . e = m
        REQUIRE(act.left.slice(0, 1) == Vec<Q>{Q(1), Q(0)});
        REQUIRE(act.left.slice(0, 0) == vec_zero<Q>(2));
        REQUIRE(verify_action(q.algebra, m, act).ok);
    }
    SECTION("non-central kernels are rejected") {
        Awb<Q> m = idem<Q>(), zero = abelian<Q>(0);
        Matrix<Q> mu(0, 1);
        REQUIRE_THROWS_WITH(action_from_surjection(mu, m, zero),
                            Catch::Matchers::ContainsSubstring("not central"));
    }
}
