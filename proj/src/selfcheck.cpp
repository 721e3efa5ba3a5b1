#include "pvc/selfcheck.hpp"

#include "pvc/frontend.hpp"
#include "pvc/gen.hpp"
#include "pvc/schouten.hpp"
#include "pvc/transfer.hpp"

namespace pvc {

namespace {

int check(std::ostream& out, const char* name, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << name << "\n";
    return ok ? 0 : 1;
}

} // namespace

int selfcheck(std::ostream& out) {
    int failures = 0;
    Gen gen(42);

    {
        bool ok = true;
        for (int i = 0; i <= 3 && ok; ++i)
            for (int j = 0; j <= 3 && ok; ++j)
                for (int rep = 0; rep < 5 && ok; ++rep) {
                    PolyVector u = gen.homogeneous(i, 3), v = gen.homogeneous(j, 3);
                    ok = schouten_closed(u, v) == schouten_oracle(u, v);
                }
        failures += check(out, "closed bracket == oracle on all degree pairs", ok);
    }
    {
        bool ok = true;
        for (int d = 0; d <= 3 && ok; ++d)
            for (int rep = 0; rep < 10 && ok; ++rep)
                ok = delta_ce(delta_ce(gen.homogeneous(d, 3))).is_zero();
        failures += check(out, "delta_ce o delta_ce == 0", ok);
    }
    {
        // Graded antisymmetry in the shifted degrees.
        bool ok = true;
        for (int i = 0; i <= 3 && ok; ++i)
            for (int j = 0; j <= 3 && ok; ++j) {
                PolyVector u = gen.homogeneous(i, 3), v = gen.homogeneous(j, 3);
                int sgn = ((i - 1) * (j - 1)) % 2 == 0 ? 1 : -1;
                PolyVector rhs = schouten_closed(u, v);
                if (sgn > 0) rhs = -rhs;
                ok = schouten_closed(v, u) == rhs;
            }
        failures += check(out, "graded antisymmetry", ok);
    }
    {
        bool ok = true;
        Session s;
        for (int d = 0; d <= 3 && ok; ++d)
            for (int rep = 0; rep < 5 && ok; ++rep) {
                CohClass c = gen.coh_class(d);
                NormalFormResult nf = normal_form(include(c, s), s, d);
                ok = class_equal(nf.cls, c) && nf.primitive.is_zero();
            }
        failures += check(out, "normal_form(include(c)) == (c, 0)", ok);
    }
    {
        bool ok = true;
        for (int d = 0; d <= 3 && ok; ++d)
            for (int rep = 0; rep < 5 && ok; ++rep) {
                PolyVector u = gen.homogeneous(d, 3);
                ok = parse_pv(print_pv(u)) == u;
            }
        failures += check(out, "parse_pv o print_pv == id", ok);
    }
    return failures;
}

} // namespace pvc
