#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "awb/subspace.hpp"

using namespace awb;

namespace {

template <Field K>
Matrix<K> mat(std::vector<std::vector<long>> rows) {
    std::vector<Vec<K>> vs;
    for (auto& r : rows) {
        Vec<K> v;
        for (long x : r) v.push_back(K(x));
        vs.push_back(v);
    }
    return Matrix<K>::from_rows(vs);
}

template <Field K>
Vec<K> vec(std::vector<long> xs) {
    Vec<K> v;
    for (long x : xs) v.push_back(K(x));
    return v;
}

}  // namespace

TEST_CASE("rational field arithmetic is exact") {
    Q a(1, 3), b(3, 1);
    REQUIRE(a * b == Q(1));
    REQUIRE((a / b) * b == a);
    REQUIRE(Q::parse("3/2").has_value());
    REQUIRE(Q::parse("3/2")->str() == "3/2");
    REQUIRE(Q::parse("4/2")->str() == "2");
    REQUIRE_FALSE(Q::parse("1.5").has_value());
    REQUIRE_FALSE(Q::parse("1/0").has_value());
    REQUIRE_THROWS_AS(Q(1) / Q(0), error);
}

TEST_CASE("prime field arithmetic") {
    Fp::set_modulus(7);
    Fp a(3), b(5);
    REQUIRE((a * b).raw() == 1);
    REQUIRE((a / b) * b == a);
    REQUIRE(Fp::parse("1/2")->raw() == 4);
    Fp::set_modulus(2);
    REQUIRE_FALSE(Fp::parse("1/2").has_value());
    REQUIRE_THROWS_AS(Fp::set_modulus(4), error);
}

TEST_CASE("kernel basis") {
    SECTION("zero 2x2 matrix has full kernel") {
        Matrix<Q> m(2, 2);
        REQUIRE(kernel(m).dim() == 2);
        REQUIRE(kernel(m) == Subspace<Q>::full(2));
    }
    SECTION("identity 3x3 has zero kernel") {
        REQUIRE(kernel(Matrix<Q>::identity(3)).dim() == 0);
    }
    SECTION("rank-1 2x2 over the rationals") {
        Matrix<Q> m = mat<Q>({{1, 2}, {2, 4}});
        Subspace<Q> k = kernel(m);
        REQUIRE(k.dim() == 1);
        // span{(-2, 1)}: canonical form has leading 1
        REQUIRE(k.contains(vec<Q>({-2, 1})));
        REQUIRE(k.basis_vector(0) == Vec<Q>{Q(1), Q(-1, 2)});
    }
}

TEST_CASE("solve returns the zero-free-coordinate solution") {
    SECTION("identity") {
        Matrix<Q> m = Matrix<Q>::identity(3);
        auto x = m.solve(vec<Q>({1, 2, 3}));
        REQUIRE(x);
        REQUIRE(*x == vec<Q>({1, 2, 3}));
    }
    SECTION("zero matrix with nonzero rhs") {
        Matrix<Q> m(2, 2);
        REQUIRE_FALSE(m.solve(vec<Q>({1, 0})).has_value());
    }
    SECTION("underdetermined picks pivot support") {
        Matrix<Q> m = mat<Q>({{1, 1}});
        auto x = m.solve(vec<Q>({3}));
        REQUIRE(x);
        REQUIRE(*x == vec<Q>({3, 0}));
    }
}

TEST_CASE("subspace calculus") {
    SECTION("sum and intersection of equal spaces") {
        Subspace<Q> u = Subspace<Q>::span(3, {vec<Q>({1, 1, 0}), vec<Q>({0, 0, 1})});
        REQUIRE(u.sum(u) == u);
        REQUIRE(u.intersection(u) == u);
    }
    SECTION("complementary lines") {
        Subspace<Q> u = Subspace<Q>::span(2, {vec<Q>({1, 0})});
        Subspace<Q> v = Subspace<Q>::span(2, {vec<Q>({0, 1})});
        REQUIRE(u.sum(v) == Subspace<Q>::full(2));
        REQUIRE(u.intersection(v).dim() == 0);
    }
    SECTION("intersection determined by membership") {
        Subspace<Q> u = Subspace<Q>::span(3, {vec<Q>({1, 1, 0})});
        Subspace<Q> v = Subspace<Q>::span(3, {vec<Q>({0, 1, 1}), vec<Q>({1, 0, -1})});
        REQUIRE(u.intersection(v) == u);
        REQUIRE(v.contains(vec<Q>({1, 1, 0})));
    }
    SECTION("quotient dimension and dimension formula") {
        Subspace<Q> u = Subspace<Q>::span(3, {vec<Q>({1, 0, 0}), vec<Q>({0, 1, 0})});
        Subspace<Q> v = Subspace<Q>::span(3, {vec<Q>({0, 1, 0}), vec<Q>({0, 0, 1})});
        REQUIRE(u.quotient_dim() == 1);
        REQUIRE(u.sum(v).dim() + u.intersection(v).dim() == u.dim() + v.dim());
    }
    SECTION("ambient mismatch is an error") {
        Subspace<Q> u = Subspace<Q>::full(2), v = Subspace<Q>::full(3);
        REQUIRE_THROWS_AS(u.sum(v), error);
    }
}

TEST_CASE("linear sections of surjections") {
    SECTION("identity") {
        REQUIRE(Matrix<Q>::identity(2).section() == Matrix<Q>::identity(2));
    }
    SECTION("projection [1 0]") {
        Matrix<Q> p = mat<Q>({{1, 0}});
        Matrix<Q> s = p.section();
        REQUIRE(s == mat<Q>({{1}, {0}}));
        REQUIRE(p * s == Matrix<Q>::identity(1));
    }
    SECTION("[1 1] picks the pivot column") {
        Matrix<Q> p = mat<Q>({{1, 1}});
        Matrix<Q> s = p.section();
        REQUIRE(s == mat<Q>({{1}, {0}}));
        REQUIRE(p * s == Matrix<Q>::identity(1));
    }
    SECTION("non-surjective map is rejected") {
        REQUIRE_THROWS_AS(mat<Q>({{1, 0}, {1, 0}}).section(), error);
    }
}

TEST_CASE("rank-nullity on random matrices over both fields") {
    auto check = [](auto tag, auto make_entry) {
        using KK = decltype(tag);
        std::mt19937 rng(42);
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
            Matrix<KK> m(r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) m(i, j) = make_entry(rng);
            REQUIRE(kernel(m).dim() + m.rank() == c);
            // independently computed bases of the same span agree
            Subspace<KK> s1 = image(m);
            Matrix<KK> shuffled(r, c);
            for (std::size_t j = 0; j < c; ++j) shuffled.set_col(j, m.col(c - 1 - j));
            REQUIRE(image(shuffled) == s1);
        }
    };
    check(Q(), [](std::mt19937& g) { return Q(long(g() % 7) - 3); });
    Fp::set_modulus(5);
    check(Fp(), [](std::mt19937& g) { return Fp(long(g() % 5)); });
}

TEST_CASE("residue matrix characterizes membership") {
    Subspace<Q> u = Subspace<Q>::span(3, {vec<Q>({1, 2, 0}), vec<Q>({0, 0, 1})});
    Matrix<Q> t = residue_matrix(u);
    REQUIRE(vec_is_zero(t.apply(vec<Q>({1, 2, 0}))));
    REQUIRE(vec_is_zero(t.apply(vec<Q>({2, 4, 5}))));
    REQUIRE_FALSE(vec_is_zero(t.apply(vec<Q>({0, 1, 0}))));
}
