#ifndef PVC_SCHOUTEN_HPP
#define PVC_SCHOUTEN_HPP

#include "pvc/polyvector.hpp"

namespace pvc {

// Sign conventions (fixed once, used everywhere):
//   - [.,.]_s is a graded Lie bracket for the shifted degree |u| = deg u - 1:
//     [v,u]_s = -(-1)^{|u||v|} [u,v]_s, graded Jacobi in the same degrees.
//   - The wedge product uses the unshifted degrees.
//   - [X,f]_s = X(f) and [X,Y]_s is the commutator of vector fields.
// The closed forms below and the Grassmann oracle both realize this bracket;
// they share no code beyond Poly arithmetic.

/// Hand-coded case table for all degree pairs, antisymmetry for the rest.
/// Throws MixedDegree on non-homogeneous input.
PolyVector schouten_closed(const PolyVector& u, const PolyVector& v);

/// Independent verification path: polyvectors as superfunctions in three odd
/// generators, bracket as the odd Poisson pairing of theta-derivatives
/// against x,y,z-derivatives. Agrees with schouten_closed everywhere.
PolyVector schouten_oracle(const PolyVector& u, const PolyVector& v);

/// Process-wide bracket dispatch. Closed is the default; Oracle routes every
/// internal bracket (delta_ce included) through schouten_oracle. Set once at
/// startup, before any computation; the results are equal either way.
enum class BracketBackend { Closed, Oracle };
void set_bracket_backend(BracketBackend backend);
BracketBackend bracket_backend();

/// The configured bracket (schouten_closed unless the oracle is selected).
PolyVector schouten(const PolyVector& u, const PolyVector& v);

/// Chevalley-Eilenberg differential [pi, u]_s for a configurable bivector;
/// defaults to the Heisenberg value pi = z dx^dy.
PolyVector delta_ce(const PolyVector& u, const PolyVector& pi);
PolyVector delta_ce(const PolyVector& u);

} // namespace pvc

#endif
