#include "pvc/errors.hpp"
#include "pvc/schouten.hpp"

#include <array>

// Verification path for the Schouten bracket, written against a different
// model: a degree-k polyvector is a superfunction, polynomial in x, y, z and
// three anticommuting generators t0, t1, t2 (dx ~ t0, dy ~ t1, dz ~ t2,
// dx^dy ~ t0 t1, ...). The bracket is
//
//   [U,V] = sum_i ( dR U/dt_i * dV/dx_i  -  dU/dx_i * dL V/dt_i )
//
// with dL/dR the left/right Grassmann derivatives and all Koszul signs coming
// out of the generic super-product below. Calibration: [X,f] = X(f) and
// [X,Y] = commutator, i.e. the same bracket the closed forms implement.

namespace pvc {

namespace {

// Superfunction: coefficient per generator subset, indexed directly by mask.
using SuperFn = std::array<Poly, 8>;

int popcount3(int m) { return ((m >> 0) & 1) + ((m >> 1) & 1) + ((m >> 2) & 1); }

SuperFn to_super(const PolyVector& u) {
    SuperFn f;
    for (int b = 0; b < kBladeCount; ++b)
        f[static_cast<size_t>(blade_mask(static_cast<Blade>(b)))] = u.component(static_cast<Blade>(b));
    return f;
}

PolyVector from_super(const SuperFn& f) {
    PolyVector u;
    for (int m = 0; m < 8; ++m) u.set_component(blade_from_mask(m), f[static_cast<size_t>(m)]);
    return u;
}

// t_A * t_B with A, B written ascending: count the inversions created by the
// concatenation, zero if a generator repeats.
SuperFn super_mul(const SuperFn& f, const SuperFn& g) {
    SuperFn r;
    for (int ma = 0; ma < 8; ++ma) {
        if (f[static_cast<size_t>(ma)].is_zero()) continue;
        for (int mb = 0; mb < 8; ++mb) {
            if (g[static_cast<size_t>(mb)].is_zero()) continue;
            if ((ma & mb) != 0) continue;
            int inversions = 0;
            for (int i = 0; i < 3; ++i)
                if (mb & (1 << i)) inversions += popcount3(ma & ~((1 << (i + 1)) - 1));
            Poly term = f[static_cast<size_t>(ma)] * g[static_cast<size_t>(mb)];
            if (inversions & 1) term = -term;
            r[static_cast<size_t>(ma | mb)] += term;
        }
    }
    return r;
}

// Left derivative: t_i is moved to the front of the monomial first.
SuperFn dtheta_left(const SuperFn& f, int i) {
    SuperFn r;
    for (int m = 0; m < 8; ++m) {
        if (!(m & (1 << i)) || f[static_cast<size_t>(m)].is_zero()) continue;
        int below = popcount3(m & ((1 << i) - 1));
        Poly term = f[static_cast<size_t>(m)];
        if (below & 1) term = -term;
        r[static_cast<size_t>(m & ~(1 << i))] += term;
    }
    return r;
}

// Right derivative: t_i is moved to the end instead.
SuperFn dtheta_right(const SuperFn& f, int i) {
    SuperFn r;
    for (int m = 0; m < 8; ++m) {
        if (!(m & (1 << i)) || f[static_cast<size_t>(m)].is_zero()) continue;
        int above = popcount3(m) - 1 - popcount3(m & ((1 << i) - 1));
        Poly term = f[static_cast<size_t>(m)];
        if (above & 1) term = -term;
        r[static_cast<size_t>(m & ~(1 << i))] += term;
    }
    return r;
}

SuperFn dx(const SuperFn& f, Var v) {
    SuperFn r;
    for (int m = 0; m < 8; ++m) r[static_cast<size_t>(m)] = f[static_cast<size_t>(m)].partial(v);
    return r;
}

SuperFn super_add(SuperFn a, const SuperFn& b) {
    for (int m = 0; m < 8; ++m) a[static_cast<size_t>(m)] += b[static_cast<size_t>(m)];
    return a;
}

SuperFn super_neg(SuperFn a) {
    for (int m = 0; m < 8; ++m) a[static_cast<size_t>(m)] = -a[static_cast<size_t>(m)];
    return a;
}

} // namespace

PolyVector schouten_oracle(const PolyVector& u, const PolyVector& v) {
    if (!u.is_homogeneous() || !v.is_homogeneous()) throw MixedDegree("schouten_oracle");
    SuperFn U = to_super(u), V = to_super(v);
    SuperFn acc;
    const Var vars[3] = {Var::x, Var::y, Var::z};
    for (int i = 0; i < 3; ++i) {
        acc = super_add(acc, super_mul(dtheta_right(U, i), dx(V, vars[i])));
        acc = super_add(acc, super_neg(super_mul(dx(U, vars[i]), dtheta_left(V, i))));
    }
    return from_super(acc);
}

} // namespace pvc
