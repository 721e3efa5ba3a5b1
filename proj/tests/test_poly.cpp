#include "pvc/gen.hpp"
#include "pvc/poly.hpp"

#include <doctest.h>

using namespace pvc;

namespace {
const Poly X = Poly::var(Var::x);
const Poly Y = Poly::var(Var::y);
const Poly Z = Poly::var(Var::z);
}

TEST_CASE("ring operations") {
    CHECK((X + Y) * (X - Y) == X * X - Y * Y);
    Poly p = X * X * Z + Y;
    CHECK(p + Poly() == p);
    CHECK((X * X * Z).scaled(Rational(3, 2)) == Poly::monomial(2, 0, 1, Rational(3, 2)));
    CHECK((p - p).is_zero());
    CHECK(p.terms().size() == 2);
}

TEST_CASE("partial derivatives") {
    CHECK((X * X * Z).partial(Var::x) == Rational(2) * (X * Z));
    CHECK(Poly(7).partial(Var::y).is_zero());
    CHECK((X * Y + Z * Z * Z).partial(Var::z) == Rational(3) * (Z * Z));
}

TEST_CASE("z_split") {
    auto [p0, p1] = (X + Z * Z * Y).z_split();
    CHECK(p0 == X);
    CHECK(p1 == Z * Y);
    auto [q0, q1] = Z.z_split();
    CHECK(q0.is_zero());
    CHECK(q1 == Poly(1));
    auto [r0, r1] = (X * X * Y).z_split();
    CHECK(r0 == X * X * Y);
    CHECK(r1.is_zero());
}

TEST_CASE("antiderivative") {
    CHECK(X.antiderivative(Var::x) == Poly::monomial(2, 0, 0, Rational(1, 2)));
    CHECK(Poly(1).antiderivative(Var::y) == Y);
    CHECK((Rational(2) * (X * Z)).antiderivative(Var::z) == X * Z * Z);
}

TEST_CASE("partial o antiderivative == id") {
    Gen gen(1);
    for (int rep = 0; rep < 50; ++rep) {
        Poly p = gen.poly(6, 6);
        for (Var v : {Var::x, Var::y, Var::z}) {
            CHECK(p.antiderivative(v).partial(v) == p);
            // integration constant fixed to zero: no v-free terms appear
            Poly q = p.antiderivative(v);
            for (auto& [m, c] : q.terms()) CHECK(m.e[static_cast<size_t>(v)] > 0);
        }
    }
}

TEST_CASE("product rule on randomized pairs") {
    Gen gen(2);
    for (int rep = 0; rep < 50; ++rep) {
        Poly p = gen.poly(6, 5), q = gen.poly(6, 5);
        for (Var v : {Var::x, Var::y, Var::z})
            CHECK((p * q).partial(v) == p.partial(v) * q + p * q.partial(v));
    }
}

TEST_CASE("z_split round trip and canonical form") {
    Gen gen(3);
    for (int rep = 0; rep < 50; ++rep) {
        Poly p = gen.poly(5, 6);
        auto [p0, p1] = p.z_split();
        CHECK(p0 + Z * p1 == p);
        CHECK(!p0.depends_on(Var::z));
        for (auto& [m, c] : p.terms()) CHECK(!c.is_zero());
        // re-normalizing changes nothing
        Poly again;
        for (auto& [m, c] : p.terms()) again += Poly::monomial(m.e[0], m.e[1], m.e[2], c);
        CHECK(again == p);
    }
}

TEST_CASE("helpers: pure_z_part, poisson bracket") {
    Poly p = X * Y + Z * Z + Poly(4) + X * Z;
    CHECK(p.pure_z_part() == Z * Z + Poly(4));
    CHECK(p.drop_pure_z() == X * Y + X * Z);
    CHECK(poisson_xy(X, Y) == Poly(1));
    Gen gen(4);
    for (int rep = 0; rep < 20; ++rep) {
        Poly f = gen.poly(4), g = gen.poly(4);
        CHECK(poisson_xy(f, g) == -poisson_xy(g, f));
    }
}
