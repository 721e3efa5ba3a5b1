#include "pvc/schouten.hpp"

#include "pvc/errors.hpp"

namespace pvc {

namespace {

Poly d(const Poly& p, Var v) { return p.partial(v); }

// [X, f]_s = X(f)
PolyVector bracket_10(const PolyVector& u, const PolyVector& v) {
    const Poly& f = v.component(Blade::One);
    Poly r = u.component(Blade::Dx) * d(f, Var::x) + u.component(Blade::Dy) * d(f, Var::y) +
             u.component(Blade::Dz) * d(f, Var::z);
    return PolyVector::scalar(r);
}

// [f, xi]_s for xi of degree 2
PolyVector bracket_02(const PolyVector& u, const PolyVector& v) {
    const Poly& f = u.component(Blade::One);
    const Poly &x12 = v.component(Blade::Dxy), &x13 = v.component(Blade::Dxz),
               &x23 = v.component(Blade::Dyz);
    Poly fx = d(f, Var::x), fy = d(f, Var::y), fz = d(f, Var::z);
    return vec1(x12 * fy + x13 * fz, -(x12 * fx) + x23 * fz, -(x13 * fx) - x23 * fy);
}

// [f, xi]_s for xi of degree 3
PolyVector bracket_03(const PolyVector& u, const PolyVector& v) {
    const Poly& f = u.component(Blade::One);
    const Poly& w = v.component(Blade::Dxyz);
    return vec2(-(w * d(f, Var::z)), w * d(f, Var::y), -(w * d(f, Var::x)));
}

// [X, Y]_s, the commutator. The classical table prints the third component
// with a y-derivative in one place; the correct operator is d/dz (see
// docs/ERRATA.md E1), which is what the oracle and the Jacobi identity force.
PolyVector bracket_11(const PolyVector& u, const PolyVector& v) {
    std::array<Poly, 3> X{u.component(Blade::Dx), u.component(Blade::Dy), u.component(Blade::Dz)};
    std::array<Poly, 3> Y{v.component(Blade::Dx), v.component(Blade::Dy), v.component(Blade::Dz)};
    PolyVector r;
    const Blade out[3] = {Blade::Dx, Blade::Dy, Blade::Dz};
    const Var vars[3] = {Var::x, Var::y, Var::z};
    for (int j = 0; j < 3; ++j) {
        Poly c;
        for (int i = 0; i < 3; ++i)
            c += X[static_cast<size_t>(i)] * d(Y[static_cast<size_t>(j)], vars[i]) -
                 Y[static_cast<size_t>(i)] * d(X[static_cast<size_t>(j)], vars[i]);
        r.set_component(out[j], c);
    }
    return r;
}

// [X, xi]_s for xi of degree 2
PolyVector bracket_12(const PolyVector& u, const PolyVector& v) {
    const Poly &X1 = u.component(Blade::Dx), &X2 = u.component(Blade::Dy),
               &X3 = u.component(Blade::Dz);
    const Poly &x12 = v.component(Blade::Dxy), &x13 = v.component(Blade::Dxz),
               &x23 = v.component(Blade::Dyz);
    auto transport = [&](const Poly& c) {
        return X1 * d(c, Var::x) + X2 * d(c, Var::y) + X3 * d(c, Var::z);
    };
    Poly c12 = transport(x12) - x12 * d(X1, Var::x) - x12 * d(X2, Var::y) -
               x13 * d(X2, Var::z) + x23 * d(X1, Var::z);
    Poly c13 = transport(x13) - x13 * d(X1, Var::x) - x12 * d(X3, Var::y) -
               x13 * d(X3, Var::z) - x23 * d(X1, Var::y);
    Poly c23 = transport(x23) - x13 * d(X2, Var::x) - x23 * d(X2, Var::y) -
               x23 * d(X3, Var::z) + x12 * d(X3, Var::x);
    return vec2(c12, c13, c23);
}

// [X, xi]_s for xi of degree 3
PolyVector bracket_13(const PolyVector& u, const PolyVector& v) {
    const Poly &X1 = u.component(Blade::Dx), &X2 = u.component(Blade::Dy),
               &X3 = u.component(Blade::Dz);
    const Poly& w = v.component(Blade::Dxyz);
    Poly c = X1 * d(w, Var::x) + X2 * d(w, Var::y) + X3 * d(w, Var::z) -
             w * (d(X1, Var::x) + d(X2, Var::y) + d(X3, Var::z));
    return vec3(c);
}

// [xi, eta]_s for two degree-2 cochains
PolyVector bracket_22(const PolyVector& u, const PolyVector& v) {
    const Poly &x12 = u.component(Blade::Dxy), &x13 = u.component(Blade::Dxz),
               &x23 = u.component(Blade::Dyz);
    const Poly &e12 = v.component(Blade::Dxy), &e13 = v.component(Blade::Dxz),
               &e23 = v.component(Blade::Dyz);
    Poly c = x12 * d(e13, Var::x) - e13 * d(x12, Var::x) + x12 * d(e23, Var::y) -
             e23 * d(x12, Var::y) + e12 * d(x13, Var::x) - x13 * d(e12, Var::x) +
             x13 * d(e23, Var::z) - e23 * d(x13, Var::z) + e12 * d(x23, Var::y) -
             x23 * d(e12, Var::y) + e13 * d(x23, Var::z) - x23 * d(e13, Var::z);
    return vec3(c);
}

} // namespace

PolyVector schouten_closed(const PolyVector& u, const PolyVector& v) {
    if (u.is_zero() || v.is_zero()) return {};
    auto du = u.homogeneous_degree();
    auto dv = v.homogeneous_degree();
    if (!du) throw MixedDegree("schouten_closed");
    if (!dv) throw MixedDegree("schouten_closed");
    int i = *du, j = *dv;

    switch (i * 4 + j) {
        case 0 * 4 + 0: return {};
        case 1 * 4 + 0: return bracket_10(u, v);
        case 0 * 4 + 2: return bracket_02(u, v);
        case 0 * 4 + 3: return bracket_03(u, v);
        case 1 * 4 + 1: return bracket_11(u, v);
        case 1 * 4 + 2: return bracket_12(u, v);
        case 1 * 4 + 3: return bracket_13(u, v);
        case 2 * 4 + 2: return bracket_22(u, v);
        case 2 * 4 + 3: case 3 * 4 + 2: case 3 * 4 + 3: return {};
        default: break;
    }
    // Remaining pairs via graded antisymmetry in the shifted degrees:
    // [u,v] = -(-1)^{(i-1)(j-1)} [v,u].
    PolyVector flipped = schouten_closed(v, u);
    int sign = -(((i - 1) * (j - 1)) % 2 == 0 ? 1 : -1);
    return sign < 0 ? -flipped : flipped;
}

namespace {
BracketBackend g_backend = BracketBackend::Closed;
}

void set_bracket_backend(BracketBackend backend) { g_backend = backend; }
BracketBackend bracket_backend() { return g_backend; }

PolyVector schouten(const PolyVector& u, const PolyVector& v) {
    return g_backend == BracketBackend::Closed ? schouten_closed(u, v) : schouten_oracle(u, v);
}

PolyVector delta_ce(const PolyVector& u, const PolyVector& pi) { return schouten(pi, u); }

PolyVector delta_ce(const PolyVector& u) { return delta_ce(u, heisenberg_pi()); }

} // namespace pvc
