#ifndef PVC_COHOMOLOGY_HPP
#define PVC_COHOMOLOGY_HPP

#include "pvc/polyvector.hpp"
#include "pvc/schouten.hpp"

#include <optional>
#include <utility>
#include <variant>

namespace pvc {

/// Tie-break for the underdetermined divergence equation fx' + gy' = h.
enum class DivGauge { AllX, AllY };

/// Session-wide configuration: the Euler-field parameter a (fixed once per
/// session) and the divergence solver gauge.
struct Session {
    Rational a{0};
    DivGauge gauge = DivGauge::AllX;
};

/// Representative families, one per degree:
///   H0: psi(z)
///   H1: X_{g0} + psi D_a               (g0 in K[x,y] with no constant term)
///   H2: X_G ^ dz                       (G of z-degree <= 1, no pure-z terms)
///   H3: P(x,y) dx^dy^dz
/// plus a degree-tagged zero for brackets that land outside degrees 0..3.
class CohClass {
public:
    struct H0 { Poly psi; };
    struct H1 { Poly g0; Poly psi; };
    struct H2 { Poly G; };
    struct H3 { Poly P; };
    struct Zero { int degree; };

    /// Factories validate the family invariants (throw InvalidClass) and
    /// normalize away representation slack (H1: constant of g0; H2: pure-z
    /// terms of G, which do not change X_G).
    static CohClass h0(Poly psi);
    static CohClass h1(Poly g0, Poly psi);
    static CohClass h2(Poly G);
    static CohClass h3(Poly P);
    static CohClass zero(int degree);

    int degree() const;
    bool is_zero() const;
    CohClass negated() const;

    template <class T>
    const T* get() const { return std::get_if<T>(&v_); }

    friend bool operator==(const CohClass& a, const CohClass& b) { return a.v_ == b.v_; }

private:
    using V = std::variant<H0, H1, H2, H3, Zero>;
    explicit CohClass(V v) : v_(std::move(v)) {}
    V v_;
};

inline bool operator==(const CohClass::H0& a, const CohClass::H0& b) { return a.psi == b.psi; }
inline bool operator==(const CohClass::H1& a, const CohClass::H1& b) { return a.g0 == b.g0 && a.psi == b.psi; }
inline bool operator==(const CohClass::H2& a, const CohClass::H2& b) { return a.G == b.G; }
inline bool operator==(const CohClass::H3& a, const CohClass::H3& b) { return a.P == b.P; }
inline bool operator==(const CohClass::Zero& a, const CohClass::Zero& b) { return a.degree == b.degree; }

struct NormalFormResult {
    CohClass cls;
    PolyVector primitive;  // include(cls) + delta_ce(primitive) == input, exactly
};

/// true iff delta_ce(u) == 0. Throws MixedDegree.
bool is_cocycle(const PolyVector& u);

/// Solves dA/dx + dB/dy = h. AllX: (antiderivative_x(h), 0); AllY mirrored.
std::pair<Poly, Poly> solve_divergence(const Poly& h, DivGauge gauge = DivGauge::AllX);

/// Recovers g with -dg/dy = U and dg/dx = V from a curl-free pair
/// (precondition Ux + Vy = 0, else NotIntegrable). Canonical choice:
/// g = antiderivative_x(V) - antiderivative_y(U at x=0); g has no pure-z part.
Poly reconstruct_potential(const Poly& U, const Poly& V);

/// The representative cochain of a class. Always a cocycle.
PolyVector include(const CohClass& c, const Session& s = {});

/// Projects a cocycle onto its representative and exhibits the primitive:
/// u = include(cls) + delta_ce(primitive). The degree hint disambiguates the
/// zero cochain (which is homogeneous of every degree).
/// Throws NotACocycle / MixedDegree.
NormalFormResult normal_form(const PolyVector& u, const Session& s = {},
                             std::optional<int> degree_hint = std::nullopt);

/// Structural equality of normalized classes of equal degree.
/// Throws DegreeMismatch when the degrees differ.
bool class_equal(const CohClass& c1, const CohClass& c2);

} // namespace pvc

#endif
