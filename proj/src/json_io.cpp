#include "pvc/json_io.hpp"

#include "pvc/frontend.hpp"

namespace pvc {

using nlohmann::json;

namespace {

const char* blade_key(Blade b) {
    switch (b) {
        case Blade::One: return "1";
        case Blade::Dx: return "dx";
        case Blade::Dy: return "dy";
        case Blade::Dz: return "dz";
        case Blade::Dxy: return "dx^dy";
        case Blade::Dxz: return "dx^dz";
        case Blade::Dyz: return "dy^dz";
        case Blade::Dxyz: return "dx^dy^dz";
    }
    return "?";
}

Blade blade_of_key(const std::string& k) {
    for (int i = 0; i < kBladeCount; ++i)
        if (k == blade_key(static_cast<Blade>(i))) return static_cast<Blade>(i);
    throw std::invalid_argument("unknown blade key: " + k);
}

} // namespace

json poly_to_json(const Poly& p) {
    json terms = json::array();
    for (auto& [m, c] : p.terms())
        terms.push_back({{"num", c.num_str()},
                         {"den", c.den_str()},
                         {"exp", json::array({m.e[0], m.e[1], m.e[2]})}});
    return terms;
}

json pv_to_json(const PolyVector& u) {
    json blades = json::object();
    for (int i = 0; i < kBladeCount; ++i) {
        Blade b = static_cast<Blade>(i);
        if (!u.component(b).is_zero()) blades[blade_key(b)] = poly_to_json(u.component(b));
    }
    return {{"kind", "polyvector"}, {"blades", blades}};
}

json class_to_json(const CohClass& c) {
    json j{{"kind", "class"}, {"degree", c.degree()}, {"text", print_class(c)}};
    if (const auto* h0 = c.get<CohClass::H0>()) {
        j["payload"] = {{"psi", poly_to_json(h0->psi)}};
    } else if (const auto* h1 = c.get<CohClass::H1>()) {
        j["payload"] = {{"g0", poly_to_json(h1->g0)}, {"psi", poly_to_json(h1->psi)}};
    } else if (const auto* h2 = c.get<CohClass::H2>()) {
        j["payload"] = {{"G", poly_to_json(h2->G)}};
    } else if (const auto* h3 = c.get<CohClass::H3>()) {
        j["payload"] = {{"P", poly_to_json(h3->P)}};
    } else {
        j["zero"] = true;
    }
    return j;
}

json normal_form_to_json(const NormalFormResult& nf) {
    return {{"class", class_to_json(nf.cls)}, {"primitive", pv_to_json(nf.primitive)}};
}

json report_to_json(const ResidualReport& r) {
    json j{{"kind", "residual_report"},
           {"target_degree", r.target_degree},
           {"residual", pv_to_json(r.residual)},
           {"cocycle", r.cocycle},
           {"out_of_range", r.out_of_range},
           {"degenerate_word", r.degenerate_word},
           {"obstruction", r.obstruction},
           {"z_constant_scalar", poly_to_json(r.z_constant_scalar)},
           {"z_constant_dxyz", poly_to_json(r.z_constant_dxyz)}};
    if (r.normal) j["normal"] = normal_form_to_json(*r.normal);
    return j;
}

Poly poly_from_json(const json& j) {
    Poly p;
    for (auto& t : j) {
        Rational c = Rational::parse(t.at("num").get<std::string>() + "/" +
                                     t.at("den").get<std::string>());
        auto e = t.at("exp");
        p += Poly::monomial(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(), c);
    }
    return p;
}

PolyVector pv_from_json(const json& j) {
    PolyVector u;
    for (auto& [key, terms] : j.at("blades").items())
        u.set_component(blade_of_key(key), poly_from_json(terms));
    return u;
}

} // namespace pvc
