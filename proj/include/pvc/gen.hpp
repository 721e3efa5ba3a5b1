#ifndef PVC_GEN_HPP
#define PVC_GEN_HPP

#include "pvc/cohomology.hpp"
#include "pvc/polyvector.hpp"

#include <cstdint>

namespace pvc {

/// Deterministic value generators for property tests and the selfcheck panel.
/// xorshift64 keeps runs reproducible across platforms.
class Gen {
public:
    explicit Gen(uint64_t seed = 0x9e3779b97f4a7c15ull) : s_(seed ? seed : 1) {}

    uint64_t next() {
        s_ ^= s_ << 13;
        s_ ^= s_ >> 7;
        s_ ^= s_ << 17;
        return s_;
    }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
    bool chance(int percent) { return range(1, 100) <= percent; }

    Rational rational() {
        int num = range(-9, 9);
        if (num == 0) num = 1;
        int den = range(1, 3);
        return Rational(num, den);
    }

    /// Random polynomial of total degree <= max_deg with up to max_terms terms.
    Poly poly(int max_deg = 4, int max_terms = 4) {
        Poly p;
        int terms = range(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            int i = range(0, max_deg);
            int j = range(0, max_deg - i);
            int k = range(0, max_deg - i - j);
            p += Poly::monomial(i, j, k, rational());
        }
        return p;
    }

    Poly poly_in_z(int max_deg = 4, int max_terms = 3) {
        Poly p;
        int terms = range(1, max_terms);
        for (int t = 0; t < terms; ++t) p += Poly::monomial(0, 0, range(0, max_deg), rational());
        return p;
    }

    Poly poly_in_xy(int max_deg = 4, int max_terms = 3) {
        Poly p;
        int terms = range(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            int i = range(0, max_deg);
            int j = range(0, max_deg - i);
            p += Poly::monomial(i, j, 0, rational());
        }
        return p;
    }

    /// Homogeneous cochain of the given CE degree.
    PolyVector homogeneous(int degree, int max_deg = 4) {
        switch (degree) {
            case 0: return PolyVector::scalar(poly(max_deg));
            case 1: return vec1(poly(max_deg), poly(max_deg), poly(max_deg));
            case 2: return vec2(poly(max_deg), poly(max_deg), poly(max_deg));
            default: return vec3(poly(max_deg));
        }
    }

    /// Random class of the given degree, valid by construction.
    CohClass coh_class(int degree) {
        switch (degree) {
            case 0: return CohClass::h0(poly_in_z());
            case 1: return CohClass::h1(poly_in_xy(), poly_in_z());
            case 2: {
                Poly g = poly_in_xy() + Poly::var(Var::z) * poly_in_xy();
                return CohClass::h2(g);
            }
            default: return CohClass::h3(poly_in_xy());
        }
    }

private:
    uint64_t s_;
};

} // namespace pvc

#endif
