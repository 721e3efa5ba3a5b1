#ifndef PVC_POLY_HPP
#define PVC_POLY_HPP

#include "pvc/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>

namespace pvc {

enum class Var : int { x = 0, y = 1, z = 2 };

/// Exponent triple (i, j, k) for x^i y^j z^k.
struct Monomial {
    std::array<int, 3> e{0, 0, 0};

    int total_degree() const { return e[0] + e[1] + e[2]; }
    int operator[](int i) const { return e[static_cast<size_t>(i)]; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/// Graded-lex order with x > y > z, leading (largest) monomial first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int ta = a.total_degree(), tb = b.total_degree();
        if (ta != tb) return ta > tb;
        return a.e > b.e;
    }
};

/// Exact polynomial in x, y, z over the rationals. Canonical form: no zero
/// coefficients are ever stored, so equality is map equality.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Poly() = default;
    Poly(const Rational& c) {                 // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_[Monomial{}] = c;
    }
    Poly(long c) : Poly(Rational(c)) {}       // NOLINT(google-explicit-constructor)

    static Poly monomial(int i, int j, int k, Rational c = Rational(1)) {
        Poly p;
        if (!c.is_zero() && i >= 0 && j >= 0 && k >= 0) p.terms_[Monomial{{i, j, k}}] = c;
        return p;
    }
    static Poly var(Var v) {
        int e[3] = {0, 0, 0};
        e[static_cast<int>(v)] = 1;
        return monomial(e[0], e[1], e[2]);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(int i, int j, int k) const {
        auto it = terms_.find(Monomial{{i, j, k}});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const {  // degree of 0 is -1 by convention
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }
    int degree_in(Var v) const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m[static_cast<int>(v)]);
        return d;
    }

    bool depends_on(Var v) const { return degree_in(v) > 0; }
    bool is_z_only() const { return !depends_on(Var::x) && !depends_on(Var::y); }
    bool is_xy_only() const { return !depends_on(Var::z); }

    Poly operator-() const {
        Poly r;
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_)
                r.add_term(Monomial{{ma.e[0] + mb.e[0], ma.e[1] + mb.e[1], ma.e[2] + mb.e[2]}},
                           ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }
    Poly scaled(const Rational& c) const {
        Poly r;
        if (c.is_zero()) return r;
        for (auto& [m, co] : terms_) r.terms_[m] = c * co;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Formal partial derivative.
    Poly partial(Var v) const {
        int vi = static_cast<int>(v);
        Poly r;
        for (auto& [m, c] : terms_) {
            if (m.e[static_cast<size_t>(vi)] == 0) continue;
            Monomial n = m;
            int k = n.e[static_cast<size_t>(vi)]--;
            r.add_term(n, Rational(k) * c);
        }
        return r;
    }

    /// Antiderivative in v with integration constant fixed to zero: the
    /// v-degree-0 part of the result is zero and partial(result, v) == *this.
    Poly antiderivative(Var v) const {
        int vi = static_cast<int>(v);
        Poly r;
        for (auto& [m, c] : terms_) {
            Monomial n = m;
            int k = ++n.e[static_cast<size_t>(vi)];
            r.add_term(n, c / Rational(k));
        }
        return r;
    }

    /// Splits p = p0 + z*p1 with p0 free of z. Returns (p0, p1).
    std::pair<Poly, Poly> z_split() const {
        Poly p0, p1;
        for (auto& [m, c] : terms_) {
            if (m.e[2] == 0) {
                p0.terms_[m] = c;
            } else {
                Monomial n = m;
                --n.e[2];
                p1.terms_[n] = c;
            }
        }
        return {p0, p1};
    }

    /// Terms free of z (the "subscript 0" part).
    Poly z_free_part() const { return z_split().first; }
    /// The "subscript 1" part: (p - p0)/z.
    Poly z_part() const { return z_split().second; }

    /// Terms in z alone (x- and y-exponents zero), constants included.
    Poly pure_z_part() const {
        Poly r;
        for (auto& [m, c] : terms_)
            if (m.e[0] == 0 && m.e[1] == 0) r.terms_[m] = c;
        return r;
    }
    Poly drop_pure_z() const { return *this - pure_z_part(); }

    /// Substitutes z = 0.
    Poly at_z0() const { return z_free_part(); }

    /// Substitutes x = 0.
    Poly at_x0() const {
        Poly r;
        for (auto& [m, c] : terms_)
            if (m.e[0] == 0) r.terms_[m] = c;
        return r;
    }

private:
    void add_term(const Monomial& m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

/// Poisson bracket in the two variables x, y: {f,g} = fx*gy - gx*fy.
inline Poly poisson_xy(const Poly& f, const Poly& g) {
    return f.partial(Var::x) * g.partial(Var::y) - g.partial(Var::x) * f.partial(Var::y);
}

} // namespace pvc

#endif
