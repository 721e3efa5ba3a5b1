#ifndef PVC_POLYVECTOR_HPP
#define PVC_POLYVECTOR_HPP

#include "pvc/poly.hpp"

#include <array>
#include <optional>

namespace pvc {

/// The eight basis blades of Lambda(dx, dy, dz), in canonical print order.
/// Index i corresponds to the generator subset blade_mask(i).
enum class Blade : int {
    One = 0,   // 1
    Dx = 1,    // dx
    Dy = 2,    // dy
    Dz = 3,    // dz
    Dxy = 4,   // dx^dy
    Dxz = 5,   // dx^dz
    Dyz = 6,   // dy^dz
    Dxyz = 7,  // dx^dy^dz
};

constexpr int kBladeCount = 8;

/// Bit i of the mask set <=> generator i (0:dx, 1:dy, 2:dz) present.
constexpr int blade_mask(Blade b) {
    constexpr int masks[kBladeCount] = {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
    return masks[static_cast<int>(b)];
}

constexpr Blade blade_from_mask(int mask) {
    constexpr Blade inv[8] = {Blade::One, Blade::Dx,  Blade::Dy,  Blade::Dxy,
                              Blade::Dz,  Blade::Dxz, Blade::Dyz, Blade::Dxyz};
    return inv[mask];
}

constexpr int wedge_degree(Blade b) {
    int m = blade_mask(b);
    return ((m >> 0) & 1) + ((m >> 1) & 1) + ((m >> 2) & 1);
}

/// Sign of dx_A ^ dx_B brought to ascending order; 0 if a generator repeats.
constexpr int blade_product_sign(int mask_a, int mask_b) {
    if ((mask_a & mask_b) != 0) return 0;
    // Count transpositions: for each generator in a, the generators of b below it
    // must move past it.
    int sign = 1;
    for (int i = 0; i < 3; ++i) {
        if (!(mask_a & (1 << i))) continue;
        int below = mask_b & ((1 << i) - 1);
        int cnt = ((below >> 0) & 1) + ((below >> 1) & 1) + ((below >> 2) & 1);
        if (cnt & 1) sign = -sign;
    }
    return sign;
}

/// A Chevalley-Eilenberg cochain: one Poly coefficient per blade. Mixed-degree
/// values are allowed; operations that need homogeneity check it explicitly.
class PolyVector {
public:
    PolyVector() = default;

    static PolyVector scalar(Poly f) {
        PolyVector u;
        u.c_[0] = std::move(f);
        return u;
    }
    static PolyVector blade_term(Blade b, Poly f) {
        PolyVector u;
        u.c_[static_cast<size_t>(b)] = std::move(f);
        return u;
    }

    const Poly& component(Blade b) const { return c_[static_cast<size_t>(b)]; }
    void set_component(Blade b, Poly f) { c_[static_cast<size_t>(b)] = std::move(f); }

    bool is_zero() const {
        for (auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }

    /// CE degree when homogeneous (zero reports nullopt as well: its degree is
    /// contextual and callers supply it where it matters).
    std::optional<int> homogeneous_degree() const {
        std::optional<int> deg;
        for (int i = 0; i < kBladeCount; ++i) {
            if (c_[static_cast<size_t>(i)].is_zero()) continue;
            int d = wedge_degree(static_cast<Blade>(i));
            if (deg && *deg != d) return std::nullopt;
            deg = d;
        }
        return deg;
    }
    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

    PolyVector operator-() const {
        PolyVector r;
        for (int i = 0; i < kBladeCount; ++i) r.c_[static_cast<size_t>(i)] = -c_[static_cast<size_t>(i)];
        return r;
    }
    PolyVector& operator+=(const PolyVector& o) {
        for (int i = 0; i < kBladeCount; ++i) c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
        return *this;
    }
    PolyVector& operator-=(const PolyVector& o) {
        for (int i = 0; i < kBladeCount; ++i) c_[static_cast<size_t>(i)] -= o.c_[static_cast<size_t>(i)];
        return *this;
    }
    friend PolyVector operator+(PolyVector a, const PolyVector& b) { return a += b; }
    friend PolyVector operator-(PolyVector a, const PolyVector& b) { return a -= b; }

    PolyVector scaled(const Rational& c) const {
        PolyVector r;
        for (int i = 0; i < kBladeCount; ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)].scaled(c);
        return r;
    }
    PolyVector scaled(const Poly& f) const {
        PolyVector r;
        for (int i = 0; i < kBladeCount; ++i) r.c_[static_cast<size_t>(i)] = f * c_[static_cast<size_t>(i)];
        return r;
    }

    friend bool operator==(const PolyVector& a, const PolyVector& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyVector& a, const PolyVector& b) { return !(a == b); }

private:
    std::array<Poly, kBladeCount> c_;
};

/// Pointwise exterior product; graded-commutative in the wedge degrees, any
/// term of total degree >= 4 (i.e. with a repeated generator) vanishes.
PolyVector wedge(const PolyVector& u, const PolyVector& v);

// Convenience constructors for the common shapes.
inline PolyVector vec1(Poly x1, Poly x2, Poly x3) {
    PolyVector u;
    u.set_component(Blade::Dx, std::move(x1));
    u.set_component(Blade::Dy, std::move(x2));
    u.set_component(Blade::Dz, std::move(x3));
    return u;
}
inline PolyVector vec2(Poly xi12, Poly xi13, Poly xi23) {
    PolyVector u;
    u.set_component(Blade::Dxy, std::move(xi12));
    u.set_component(Blade::Dxz, std::move(xi13));
    u.set_component(Blade::Dyz, std::move(xi23));
    return u;
}
inline PolyVector vec3(Poly xi123) {
    return PolyVector::blade_term(Blade::Dxyz, std::move(xi123));
}

/// The Heisenberg bivector pi = z dx^dy (the Lie bracket as a bivector).
inline PolyVector heisenberg_pi() {
    return PolyVector::blade_term(Blade::Dxy, Poly::var(Var::z));
}

/// X_g = -g_y dx + g_x dy (the Hamiltonian-type field of a function).
inline PolyVector x_field(const Poly& g) {
    return vec1(-g.partial(Var::y), g.partial(Var::x), Poly());
}

/// D_a = a x dx + (1-a) y dy + z dz, the weighted Euler field.
inline PolyVector euler_field(const Rational& a) {
    return vec1(a * Poly::var(Var::x), (Rational(1) - a) * Poly::var(Var::y), Poly::var(Var::z));
}

} // namespace pvc

#endif
