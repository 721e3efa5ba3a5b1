#include "pvc/cohomology.hpp"
#include "pvc/errors.hpp"
#include "pvc/gen.hpp"

#include <doctest.h>

using namespace pvc;

namespace {
const Poly X = Poly::var(Var::x);
const Poly Y = Poly::var(Var::y);
const Poly Z = Poly::var(Var::z);
const Rational half(1, 2);
}

TEST_CASE("solve_divergence") {
    auto [a1, b1] = solve_divergence(Poly(1));
    CHECK(a1 == X);
    CHECK(b1.is_zero());
    auto [a2, b2] = solve_divergence(X);
    CHECK(a2 == Poly::monomial(2, 0, 0, half));
    CHECK(b2.is_zero());
    auto [a3, b3] = solve_divergence(Poly());
    CHECK(a3.is_zero());
    CHECK(b3.is_zero());

    Gen gen(20);
    for (int rep = 0; rep < 30; ++rep) {
        Poly h = gen.poly(5);
        for (DivGauge g : {DivGauge::AllX, DivGauge::AllY}) {
            auto [A, B] = solve_divergence(h, g);
            CHECK(A.partial(Var::x) + B.partial(Var::y) == h);
        }
    }
}

TEST_CASE("reconstruct_potential") {
    CHECK(reconstruct_potential(-X, Y) == X * Y);
    CHECK(reconstruct_potential(Poly(), Z * Z) == X * Z * Z);
    CHECK(reconstruct_potential(Poly(), Poly()).is_zero());
    CHECK_THROWS_AS(reconstruct_potential(X, Poly()), NotIntegrable);

    Gen gen(21);
    for (int rep = 0; rep < 40; ++rep) {
        Poly g = gen.poly(5, 5);
        Poly U = -g.partial(Var::y), V = g.partial(Var::x);
        Poly rec = reconstruct_potential(U, V);
        CHECK(-rec.partial(Var::y) == U);
        CHECK(rec.partial(Var::x) == V);
        CHECK(rec.pure_z_part().is_zero());
    }
}

TEST_CASE("is_cocycle") {
    CHECK(is_cocycle(heisenberg_pi()));
    CHECK(!is_cocycle(PolyVector::scalar(X)));
    Gen gen(22);
    for (int rep = 0; rep < 10; ++rep) CHECK(is_cocycle(vec3(gen.poly(4))));
    PolyVector mixed = PolyVector::scalar(X) + heisenberg_pi();
    CHECK_THROWS_AS(is_cocycle(mixed), MixedDegree);
}

TEST_CASE("include") {
    Session s;
    CHECK(include(CohClass::h1(X * Y, Poly()), s) == vec1(-X, Y, Poly()));
    CHECK(include(CohClass::h2(X * Z), s) == vec2(Poly(), Poly(), Z));
    CHECK(include(CohClass::h0(Poly()), s).is_zero());
    // D_a with a = 1/3
    Session s2{Rational(1, 3), DivGauge::AllX};
    CHECK(include(CohClass::h1(Poly(), Poly(1)), s2) ==
          vec1(Rational(1, 3) * X, Rational(2, 3) * Y, Z));
}

TEST_CASE("normal_form examples") {
    Session s;
    SUBCASE("degree 0") {
        auto nf = normal_form(PolyVector::scalar(Z * Z), s);
        CHECK(class_equal(nf.cls, CohClass::h0(Z * Z)));
        CHECK(nf.primitive.is_zero());
    }
    SUBCASE("degree 1 coboundary") {
        auto nf = normal_form(PolyVector::blade_term(Blade::Dy, -Z), s);
        CHECK(class_equal(nf.cls, CohClass::h1(Poly(), Poly())));
        CHECK(nf.primitive == PolyVector::scalar(X));
    }
    SUBCASE("degree 1 representative round trip") {
        Session s2{Rational(2, 7), DivGauge::AllX};
        auto nf = normal_form(include(CohClass::h1(Poly(), Poly(1)), s2), s2);
        CHECK(class_equal(nf.cls, CohClass::h1(Poly(), Poly(1))));
        CHECK(nf.primitive.is_zero());
    }
    SUBCASE("degree 2") {
        auto nf = normal_form(vec2(Poly(), Poly(), Z * Z), s);
        CHECK(class_equal(nf.cls, CohClass::h2(Poly())));
        CHECK(nf.primitive ==
              vec1(Poly::monomial(2, 0, 0, -half), Poly(), -(Z * X)));
    }
    SUBCASE("degree 3") {
        auto nf = normal_form(vec3(X + Z * Y), s);
        CHECK(class_equal(nf.cls, CohClass::h3(X)));
        CHECK(nf.primitive == vec2(Poly(), X * Y, Poly()));
    }
}

TEST_CASE("normal_form errors") {
    Session s;
    CHECK_THROWS_AS(normal_form(PolyVector::scalar(X), s), NotACocycle);
    CHECK_THROWS_AS(normal_form(PolyVector::scalar(X) + heisenberg_pi(), s), MixedDegree);
}

TEST_CASE("class invariants") {
    CHECK_THROWS_AS(CohClass::h2(X * Y + Z * Z), InvalidClass);
    CHECK_THROWS_AS(CohClass::h3(X + Z), InvalidClass);
    CHECK_THROWS_AS(CohClass::h0(X), InvalidClass);
    CHECK_THROWS_AS(CohClass::h1(X * Z, Poly()), InvalidClass);
    CHECK_THROWS_AS(CohClass::h1(X, Y), InvalidClass);
    // normalization: pure-z terms of G and the constant of g0 are dropped
    CHECK(CohClass::h2(X * Y + Z + Poly(3)) == CohClass::h2(X * Y));
    CHECK(CohClass::h1(X + Poly(5), Z) == CohClass::h1(X, Z));
}

TEST_CASE("class_equal") {
    CHECK(class_equal(CohClass::h0(Z), CohClass::h0(Z)));
    CHECK(class_equal(CohClass::h1(X * X, Z), CohClass::h1(X * X, Z)));
    CHECK(!class_equal(CohClass::h0(Z), CohClass::h0(Z * Z)));
    CHECK_THROWS_AS(class_equal(CohClass::h0(Z), CohClass::h3(X)), DegreeMismatch);
}

TEST_CASE("round trip A: normal_form o include == (c, 0)") {
    for (uint64_t seed : {31ull, 32ull}) {
        Gen gen(seed);
        Session s{Rational(gen.range(-2, 2), gen.range(1, 3)), DivGauge::AllX};
        for (int d = 0; d <= 3; ++d)
            for (int rep = 0; rep < 25; ++rep) {
                CohClass c = gen.coh_class(d);
                auto nf = normal_form(include(c, s), s, d);
                CHECK(class_equal(nf.cls, c));
                CHECK(nf.primitive.is_zero());
            }
    }
}

TEST_CASE("round trip B: coboundary shifts recover the class") {
    Gen gen(33);
    Session s;
    for (int d = 1; d <= 3; ++d)
        for (int rep = 0; rep < 25; ++rep) {
            CohClass c = gen.coh_class(d);
            PolyVector v = gen.homogeneous(d - 1, 3);
            PolyVector u = include(c, s) + delta_ce(v);
            auto nf = normal_form(u, s, d);
            CHECK(class_equal(nf.cls, c));
            CHECK(delta_ce(nf.primitive) == delta_ce(v));
        }
}

TEST_CASE("exactness witness: coboundaries project to zero") {
    Gen gen(34);
    Session s;
    for (int d = 0; d <= 2; ++d)
        for (int rep = 0; rep < 25; ++rep) {
            PolyVector v = gen.homogeneous(d, 3);
            auto nf = normal_form(delta_ce(v), s, d + 1);
            CHECK(nf.cls.is_zero());
        }
}

TEST_CASE("include always lands in the cocycles") {
    Gen gen(35);
    Session s{Rational(1, 2), DivGauge::AllX};
    for (int d = 0; d <= 3; ++d)
        for (int rep = 0; rep < 15; ++rep) CHECK(is_cocycle(include(gen.coh_class(d), s)));
}

TEST_CASE("normal form invariant: input == include(cls) + delta(primitive)") {
    Gen gen(36);
    Session s;
    for (int d = 0; d <= 3; ++d)
        for (int rep = 0; rep < 20; ++rep) {
            PolyVector u = include(gen.coh_class(d), s);
            if (d > 0) u += delta_ce(gen.homogeneous(d - 1, 3));
            auto nf = normal_form(u, s, d);
            CHECK(include(nf.cls, s) + delta_ce(nf.primitive) == u);
        }
}
