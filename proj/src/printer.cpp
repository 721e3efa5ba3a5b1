#include "pvc/frontend.hpp"

#include <sstream>

namespace pvc {

namespace {

const char* blade_name(Blade b) {
    switch (b) {
        case Blade::One: return "";
        case Blade::Dx: return "dx";
        case Blade::Dy: return "dy";
        case Blade::Dz: return "dz";
        case Blade::Dxy: return "dx^dy";
        case Blade::Dxz: return "dx^dz";
        case Blade::Dyz: return "dy^dz";
        case Blade::Dxyz: return "dx^dy^dz";
    }
    return "";
}

std::string monomial_str(const Monomial& m) {
    static const char* names[3] = {"x", "y", "z"};
    std::string out;
    for (int v = 0; v < 3; ++v) {
        int e = m.e[static_cast<size_t>(v)];
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += names[v];
        if (e > 1) out += "**" + std::to_string(e);
    }
    return out;
}

std::string magnitude_str(const Rational& c) {
    Rational m = c.sign() < 0 ? -c : c;
    return m.str();
}

// One output term: [coefficient][*][monomial][*][blade], coefficient 1 elided
// unless nothing else is printed.
std::string term_str(const Rational& c, const Monomial& m, Blade b) {
    std::string mono = monomial_str(m);
    std::string blade = blade_name(b);
    Rational mag = c.sign() < 0 ? -c : c;
    std::string out;
    if (!mag.is_one() || (mono.empty() && blade.empty())) out = magnitude_str(c);
    if (!mono.empty()) {
        if (!out.empty()) out += "*";
        out += mono;
    }
    if (!blade.empty()) {
        if (!out.empty()) out += "*";
        out += blade;
    }
    return out;
}

} // namespace

std::string print_pv(const PolyVector& u) {
    std::ostringstream os;
    bool first = true;
    for (int bi = 0; bi < kBladeCount; ++bi) {
        Blade b = static_cast<Blade>(bi);
        for (auto& [m, c] : u.component(b).terms()) {
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            os << term_str(c, m, b);
        }
    }
    if (first) return "0";
    return os.str();
}

std::string print_poly(const Poly& p) { return print_pv(PolyVector::scalar(p)); }

std::string print_class(const CohClass& c) {
    if (const auto* h0 = c.get<CohClass::H0>()) return "H0{" + print_poly(h0->psi) + "}";
    if (const auto* h1 = c.get<CohClass::H1>())
        return "H1{" + print_poly(h1->g0) + "; " + print_poly(h1->psi) + "}";
    if (const auto* h2 = c.get<CohClass::H2>()) return "H2{" + print_poly(h2->G) + "}";
    if (const auto* h3 = c.get<CohClass::H3>()) return "H3{" + print_poly(h3->P) + "}";
    return "0";
}

} // namespace pvc
