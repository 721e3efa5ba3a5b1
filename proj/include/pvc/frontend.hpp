#ifndef PVC_FRONTEND_HPP
#define PVC_FRONTEND_HPP

#include "pvc/cohomology.hpp"
#include "pvc/polyvector.hpp"

#include <string>

namespace pvc {

// Expression grammar (see README):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := wfact ('*' wfact)*
//   wfact  := power ('^' power)*
//   power  := atom ('**' nat)*
//   atom   := nat ['/' nat] | 'x' | 'y' | 'z' | 'dx' | 'dy' | 'dz' | '(' expr ')'
// '^' is the wedge, '**' the power; juxtaposition is not multiplication.

/// Parses an expression into a cochain. Throws ParseError with position and
/// expected-token information.
PolyVector parse_pv(const std::string& text);

/// Parses a class literal H0{psi} | H1{g0; psi} | H2{G} | H3{P}.
/// Throws ParseError on syntax, InvalidClass on invariant violations.
CohClass parse_class(const std::string& text);

/// Canonical text: blades in the fixed order 1, dx, dy, dz, dx^dy, dx^dz,
/// dy^dz, dx^dy^dz; monomials graded-lex with x > y > z, leading term first;
/// exact rational coefficients. parse_pv(print_pv(u)) == u.
std::string print_pv(const PolyVector& u);

/// Degree-0 printing shorthand (payloads, scalars).
std::string print_poly(const Poly& p);

/// "H1{x*y; 0}" style class literal; plain "0" for a degree-tagged zero
/// outside degrees 0..3.
std::string print_class(const CohClass& c);

} // namespace pvc

#endif
