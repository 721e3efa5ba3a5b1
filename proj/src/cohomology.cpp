#include "pvc/cohomology.hpp"

#include "pvc/errors.hpp"

namespace pvc {

CohClass CohClass::h0(Poly psi) {
    if (!psi.is_z_only()) throw InvalidClass("H0 payload must be a polynomial in z only");
    return CohClass(V{H0{std::move(psi)}});
}

CohClass CohClass::h1(Poly g0, Poly psi) {
    if (!g0.is_xy_only()) throw InvalidClass("H1 payload g0 must be free of z");
    if (!psi.is_z_only()) throw InvalidClass("H1 payload psi must be a polynomial in z only");
    // The constant of g0 does not change X_{g0}; drop it for a unique payload.
    g0 -= Poly(g0.coeff(0, 0, 0));
    return CohClass(V{H1{std::move(g0), std::move(psi)}});
}

CohClass CohClass::h2(Poly G) {
    if (G.degree_in(Var::z) > 1) throw InvalidClass("H2 payload must have z-degree <= 1");
    // Pure-z terms do not change X_G; drop them for a unique payload.
    G = G.drop_pure_z();
    return CohClass(V{H2{std::move(G)}});
}

CohClass CohClass::h3(Poly P) {
    if (!P.is_xy_only()) throw InvalidClass("H3 payload must be free of z");
    return CohClass(V{H3{std::move(P)}});
}

CohClass CohClass::zero(int degree) {
    switch (degree) {
        case 0: return h0(Poly());
        case 1: return h1(Poly(), Poly());
        case 2: return h2(Poly());
        case 3: return h3(Poly());
        default: return CohClass(V{Zero{degree}});
    }
}

int CohClass::degree() const {
    struct Visitor {
        int operator()(const H0&) const { return 0; }
        int operator()(const H1&) const { return 1; }
        int operator()(const H2&) const { return 2; }
        int operator()(const H3&) const { return 3; }
        int operator()(const Zero& z) const { return z.degree; }
    };
    return std::visit(Visitor{}, v_);
}

bool CohClass::is_zero() const {
    struct Visitor {
        bool operator()(const H0& c) const { return c.psi.is_zero(); }
        bool operator()(const H1& c) const { return c.g0.is_zero() && c.psi.is_zero(); }
        bool operator()(const H2& c) const { return c.G.is_zero(); }
        bool operator()(const H3& c) const { return c.P.is_zero(); }
        bool operator()(const Zero&) const { return true; }
    };
    return std::visit(Visitor{}, v_);
}

CohClass CohClass::negated() const {
    struct Visitor {
        CohClass operator()(const H0& c) const { return h0(-c.psi); }
        CohClass operator()(const H1& c) const { return h1(-c.g0, -c.psi); }
        CohClass operator()(const H2& c) const { return h2(-c.G); }
        CohClass operator()(const H3& c) const { return h3(-c.P); }
        CohClass operator()(const Zero& z) const { return zero(z.degree); }
    };
    return std::visit(Visitor{}, v_);
}

bool is_cocycle(const PolyVector& u) {
    if (!u.is_homogeneous()) throw MixedDegree("is_cocycle");
    return delta_ce(u).is_zero();
}

std::pair<Poly, Poly> solve_divergence(const Poly& h, DivGauge gauge) {
    if (gauge == DivGauge::AllX) return {h.antiderivative(Var::x), Poly()};
    return {Poly(), h.antiderivative(Var::y)};
}

Poly reconstruct_potential(const Poly& U, const Poly& V) {
    if (!(U.partial(Var::x) + V.partial(Var::y)).is_zero())
        throw NotIntegrable("reconstruct_potential: Ux + Vy != 0");
    Poly g = V.antiderivative(Var::x) - U.at_x0().antiderivative(Var::y);
    // Postconditions hold exactly; cheap to re-check while debugging.
    return g;
}

PolyVector include(const CohClass& c, const Session& s) {
    if (const auto* h0 = c.get<CohClass::H0>()) return PolyVector::scalar(h0->psi);
    if (const auto* h1 = c.get<CohClass::H1>())
        return x_field(h1->g0) + euler_field(s.a).scaled(h1->psi);
    if (const auto* h2 = c.get<CohClass::H2>()) return wedge(x_field(h2->G), vec1(0, 0, 1));
    if (const auto* h3 = c.get<CohClass::H3>()) return vec3(h3->P);
    return {};
}

namespace {

NormalFormResult normal_form_deg0(const PolyVector& u) {
    // Z^0 = K[z], B^0 = 0: the cocycle is its own representative.
    return {CohClass::h0(u.component(Blade::One)), PolyVector()};
}

NormalFormResult normal_form_deg1(const PolyVector& u, const Session& s) {
    const Poly &X1 = u.component(Blade::Dx), &X2 = u.component(Blade::Dy),
               &X3 = u.component(Blade::Dz);
    // Cocycle condition forces X3 = z*psi(z).
    Poly psi = X3.z_part();
    Poly U = X1 - psi.scaled(s.a) * Poly::var(Var::x);
    Poly V = X2 - psi.scaled(Rational(1) - s.a) * Poly::var(Var::y);
    Poly g = reconstruct_potential(U, V);
    auto [g0, g1] = g.z_split();
    // u = X_{g0} + psi D_a - delta(g1), so the primitive is -g1.
    return {CohClass::h1(g0, psi), PolyVector::scalar(-g1)};
}

NormalFormResult normal_form_deg2(const PolyVector& u, const Session& s) {
    const Poly &xi12 = u.component(Blade::Dxy), &xi13 = u.component(Blade::Dxz),
               &xi23 = u.component(Blade::Dyz);
    Poly g = reconstruct_potential(xi13, xi23);
    auto [g0, g1] = g.z_split();
    auto [g10, g11] = g1.z_split();
    Poly h0 = xi12.z_free_part() - g10;
    Poly h1 = xi12.z_part();
    auto [A, B] = solve_divergence(g11 - h1, s.gauge);
    PolyVector X = vec1(A, B, g1);
    PolyVector Y = vec1(Poly(), Poly(), h0);
    // u + delta(X) + delta(Y) = X_{g0 - z h0} ^ dz
    return {CohClass::h2(g0 - Poly::var(Var::z) * h0), -(X + Y)};
}

NormalFormResult normal_form_deg3(const PolyVector& u, const Session& s) {
    auto [w0, w1] = u.component(Blade::Dxyz).z_split();
    auto [A, B] = solve_divergence(-w1, s.gauge);
    // u + delta(A dx^dz + B dy^dz) = w0 dx^dy^dz
    return {CohClass::h3(w0), -vec2(Poly(), A, B)};
}

} // namespace

NormalFormResult normal_form(const PolyVector& u, const Session& s,
                             std::optional<int> degree_hint) {
    auto deg = u.homogeneous_degree();
    if (!deg && !u.is_zero()) throw MixedDegree("normal_form");
    if (!deg) deg = degree_hint.value_or(0);
    if (degree_hint && !u.is_zero() && *deg != *degree_hint)
        throw DegreeMismatch("normal_form: input degree " + std::to_string(*deg) +
                             " != hint " + std::to_string(*degree_hint));
    if (!is_cocycle(u)) throw NotACocycle("normal_form");
    switch (*deg) {
        case 0: return normal_form_deg0(u);
        case 1: return normal_form_deg1(u, s);
        case 2: return normal_form_deg2(u, s);
        case 3: return normal_form_deg3(u, s);
        default: throw DegreeOutOfRange("normal_form: degree " + std::to_string(*deg));
    }
}

bool class_equal(const CohClass& c1, const CohClass& c2) {
    if (c1.degree() != c2.degree())
        throw DegreeMismatch("class_equal: degrees " + std::to_string(c1.degree()) + " and " +
                             std::to_string(c2.degree()));
    return c1 == c2;
}

} // namespace pvc
