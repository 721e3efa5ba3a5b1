#include "pvc/errors.hpp"
#include "pvc/gen.hpp"
#include "pvc/schouten.hpp"

#include <doctest.h>

using namespace pvc;

namespace {
const Poly X = Poly::var(Var::x);
const Poly Y = Poly::var(Var::y);
const Poly Z = Poly::var(Var::z);

int shifted(int ce) { return ce - 1; }
bool odd(int k) { return ((k % 2) + 2) % 2 == 1; }
}

TEST_CASE("closed-form examples") {
    // [z dx, x] = z
    CHECK(schouten_closed(PolyVector::blade_term(Blade::Dx, Z), PolyVector::scalar(X)) ==
          PolyVector::scalar(Z));
    // [x dy, y dx] = x dx - y dy
    CHECK(schouten_closed(PolyVector::blade_term(Blade::Dy, X),
                          PolyVector::blade_term(Blade::Dx, Y)) ==
          vec1(X, -Y, Poly()));
    // [x, y] = 0 by degree reasoning
    CHECK(schouten_closed(PolyVector::scalar(X), PolyVector::scalar(Y)).is_zero());
    // [pi, xy] = zx dx - zy dy
    CHECK(schouten_closed(heisenberg_pi(), PolyVector::scalar(X * Y)) ==
          vec1(Z * X, -(Z * Y), Poly()));
}

TEST_CASE("oracle examples") {
    CHECK(schouten_oracle(PolyVector::blade_term(Blade::Dx, Z), PolyVector::scalar(X)) ==
          PolyVector::scalar(Z));
    CHECK(schouten_oracle(heisenberg_pi(), heisenberg_pi()).is_zero());
    CHECK(schouten_oracle(PolyVector::scalar(X), PolyVector::scalar(Y)).is_zero());
}

TEST_CASE("delta_ce examples") {
    CHECK(delta_ce(PolyVector::scalar(X)) == PolyVector::blade_term(Blade::Dy, -Z));
    CHECK(delta_ce(vec1(Poly(), Poly(), Poly(1))) == PolyVector::blade_term(Blade::Dxy, Poly(-1)));
    CHECK(delta_ce(vec2(Poly(), X, Poly())) == vec3(Z));
    Gen gen(8);
    for (int rep = 0; rep < 10; ++rep) CHECK(delta_ce(vec3(gen.poly(4))).is_zero());
}

TEST_CASE("vector-field bracket lands on dz, not dy") {
    // The classical (1,1) table is sometimes printed with the third output
    // component attached to dy; that variant breaks against the oracle
    // (docs/ERRATA.md E1). Failing instance of the dy-variant:
    PolyVector u = PolyVector::blade_term(Blade::Dz, X);  // x dz
    PolyVector v = PolyVector::blade_term(Blade::Dx, Poly(1));
    PolyVector expected = PolyVector::blade_term(Blade::Dz, Poly(-1));
    CHECK(schouten_closed(u, v) == expected);
    CHECK(schouten_oracle(u, v) == expected);
    CHECK(schouten_closed(u, v).component(Blade::Dy).is_zero());
}

TEST_CASE("mixed degree input is rejected") {
    PolyVector mixed = PolyVector::scalar(X) + PolyVector::blade_term(Blade::Dx, Y);
    CHECK_THROWS_AS(schouten_closed(mixed, PolyVector::scalar(X)), MixedDegree);
    CHECK_THROWS_AS(schouten_oracle(mixed, PolyVector::scalar(X)), MixedDegree);
}

TEST_CASE("closed form equals oracle on every degree pair") {
    Gen gen(9);
    int checked = 0;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            for (int rep = 0; rep < 8; ++rep) {
                PolyVector u = gen.homogeneous(i, 4), v = gen.homogeneous(j, 4);
                CHECK(schouten_closed(u, v) == schouten_oracle(u, v));
                ++checked;
            }
    CHECK(checked >= 120);
}

TEST_CASE("graded antisymmetry (shifted degrees)") {
    Gen gen(10);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            for (int rep = 0; rep < 5; ++rep) {
                PolyVector u = gen.homogeneous(i, 4), v = gen.homogeneous(j, 4);
                PolyVector rhs = schouten_closed(u, v);
                if (!(odd(shifted(i)) && odd(shifted(j)))) rhs = -rhs;
                CHECK(schouten_closed(v, u) == rhs);
            }
}

TEST_CASE("graded Jacobi (shifted degrees)") {
    Gen gen(11);
    for (int rep = 0; rep < 60; ++rep) {
        int i = gen.range(0, 3), j = gen.range(0, 3), k = gen.range(0, 3);
        PolyVector a = gen.homogeneous(i, 3), b = gen.homogeneous(j, 3),
                   c = gen.homogeneous(k, 3);
        auto sgn = [&](int p, int q) {
            return (odd(shifted(p)) && odd(shifted(q))) ? -1 : 1;
        };
        PolyVector t1 = schouten_closed(schouten_closed(a, b), c);
        if (sgn(i, k) < 0) t1 = -t1;
        PolyVector t2 = schouten_closed(schouten_closed(b, c), a);
        if (sgn(j, i) < 0) t2 = -t2;
        PolyVector t3 = schouten_closed(schouten_closed(c, a), b);
        if (sgn(k, j) < 0) t3 = -t3;
        CHECK((t1 + t2 + t3).is_zero());
    }
}

TEST_CASE("graded Leibniz rule") {
    Gen gen(12);
    for (int rep = 0; rep < 60; ++rep) {
        int i = gen.range(0, 3), j = gen.range(0, 2), k = gen.range(0, 3 - j);
        PolyVector a = gen.homogeneous(i, 3), b = gen.homogeneous(j, 3),
                   c = gen.homogeneous(k, 3);
        // [a, b^c] = [a,b]^c + (-1)^{|a|(|b|+1)} b^[a,c], |.| shifted
        PolyVector lhs = schouten_closed(a, wedge(b, c));
        PolyVector t2 = wedge(b, schouten_closed(a, c));
        if (odd(shifted(i)) && odd(shifted(j) + 1)) t2 = -t2;
        CHECK(lhs == wedge(schouten_closed(a, b), c) + t2);
    }
}

TEST_CASE("delta_ce is the bracket with pi, and squares to zero") {
    Gen gen(13);
    for (int d = 0; d <= 3; ++d)
        for (int rep = 0; rep < 15; ++rep) {
            PolyVector u = gen.homogeneous(d, 4);
            CHECK(delta_ce(u) == schouten_closed(heisenberg_pi(), u));
            CHECK(delta_ce(delta_ce(u)).is_zero());
            if (d < 3) CHECK(*delta_ce(u).homogeneous_degree() == d + 1);
        }
}

TEST_CASE("with pi = 0 everything is a cocycle") {
    Gen gen(14);
    PolyVector zero_pi;
    for (int d = 0; d <= 3; ++d) CHECK(delta_ce(gen.homogeneous(d, 4), zero_pi).is_zero());
}

TEST_CASE("bracket backend dispatch") {
    Gen gen(15);
    PolyVector u = gen.homogeneous(1, 3), v = gen.homogeneous(2, 3);
    set_bracket_backend(BracketBackend::Oracle);
    PolyVector via_oracle = schouten(u, v);
    set_bracket_backend(BracketBackend::Closed);
    CHECK(via_oracle == schouten(u, v));
}
