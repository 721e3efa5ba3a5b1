#ifndef PVC_SELFCHECK_HPP
#define PVC_SELFCHECK_HPP

#include <ostream>

namespace pvc {

/// Quick built-in identity panel: closed form vs oracle, delta^2 = 0, graded
/// identities, class round trips, parse/print round trips. Returns the number
/// of failed checks (0 = healthy) and writes one line per group to `out`.
int selfcheck(std::ostream& out);

} // namespace pvc

#endif
