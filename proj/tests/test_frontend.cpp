#include "pvc/errors.hpp"
#include "pvc/frontend.hpp"
#include "pvc/gen.hpp"
#include "pvc/json_io.hpp"

#include <doctest.h>

using namespace pvc;

namespace {
const Poly X = Poly::var(Var::x);
const Poly Y = Poly::var(Var::y);
const Poly Z = Poly::var(Var::z);
}

TEST_CASE("parse_pv examples") {
    CHECK(parse_pv("z*dx^dy") == heisenberg_pi());
    PolyVector mixed = parse_pv("x**2 - 1/2*y*dz");
    CHECK(mixed.component(Blade::One) == X * X);
    CHECK(mixed.component(Blade::Dz) == Poly::monomial(0, 1, 0, Rational(-1, 2)));
    CHECK(parse_pv("dx^dx").is_zero());
    CHECK(parse_pv("dz^dx") == PolyVector::blade_term(Blade::Dxz, Poly(-1)));
    CHECK(parse_pv("(x + y)*(x - y)") == PolyVector::scalar(X * X - Y * Y));
    CHECK(parse_pv("-z*dy") == PolyVector::blade_term(Blade::Dy, -Z));
    CHECK(parse_pv("0").is_zero());
}

TEST_CASE("parse_class examples") {
    CHECK(parse_class("H1{x*y; 0}") == CohClass::h1(X * Y, Poly()));
    CHECK_THROWS_AS(parse_class("H3{x+z}"), InvalidClass);
    CHECK(parse_class("H0{z**3}") == CohClass::h0(Z * Z * Z));
    CHECK_THROWS_AS(parse_class("H1{x*y}"), ParseError);
    CHECK_THROWS_AS(parse_class("H2{dx}"), ParseError);
}

TEST_CASE("print_pv examples") {
    CHECK(print_pv(heisenberg_pi()) == "z*dx^dy");
    CHECK(print_pv(PolyVector()) == "0");
    PolyVector mixed = PolyVector::scalar(X * X) +
                       PolyVector::blade_term(Blade::Dz, Poly::monomial(0, 1, 0, Rational(-1, 2)));
    CHECK(print_pv(mixed) == "x**2 - 1/2*y*dz");
    CHECK(print_pv(PolyVector::scalar(Poly(1))) == "1");
    CHECK(print_pv(PolyVector::blade_term(Blade::Dxyz, Poly(1))) == "dx^dy^dz");
    CHECK(print_class(CohClass::h2(Poly())) == "H2{0}");
}

TEST_CASE("graded-lex print order, leading term first") {
    Poly p = Poly(3) + X * X + Y * Y * Z + X * Y;
    CHECK(print_poly(p) == "y**2*z + x**2 + x*y + 3");
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_pv("x + @");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 5);
    }
    try {
        parse_pv("x ** y");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.expected == "exponent");
    }
    CHECK_THROWS_AS(parse_pv("w + 1"), ParseError);
    CHECK_THROWS_AS(parse_pv("x +"), ParseError);
    CHECK_THROWS_AS(parse_pv("1/0"), ParseError);
}

TEST_CASE("round trip: parse o print is the identity") {
    Gen gen(60);
    for (int rep = 0; rep < 200; ++rep) {
        PolyVector u;
        int parts = gen.range(1, 3);
        for (int p = 0; p < parts; ++p) u += gen.homogeneous(gen.range(0, 3), 4);
        CHECK(parse_pv(print_pv(u)) == u);
    }
}

TEST_CASE("print o parse canonicalizes") {
    for (const char* text : {"y*x", "x*y+0*z", "dx ^ dy", "x**1", "2/4", "z*dx^dy - 0*dz",
                             "(x+y)^dx", "1*x*dx"}) {
        PolyVector v = parse_pv(text);
        CHECK(parse_pv(print_pv(v)) == v);
        CHECK(print_pv(parse_pv(print_pv(v))) == print_pv(v));
    }
}

TEST_CASE("json round trip") {
    Gen gen(61);
    for (int rep = 0; rep < 50; ++rep) {
        PolyVector u = gen.homogeneous(gen.range(0, 3), 4);
        CHECK(pv_from_json(pv_to_json(u)) == u);
    }
    // exact rationals as strings
    PolyVector v = PolyVector::blade_term(Blade::Dxy, Poly::monomial(1, 0, 2, Rational(-7, 3)));
    auto j = pv_to_json(v);
    CHECK(j["blades"]["dx^dy"][0]["num"] == "-7");
    CHECK(j["blades"]["dx^dy"][0]["den"] == "3");
    CHECK(pv_from_json(j) == v);
}
