#include "pvc/errors.hpp"
#include "pvc/frontend.hpp"
#include "pvc/json_io.hpp"
#include "pvc/schouten.hpp"
#include "pvc/selfcheck.hpp"
#include "pvc/transfer.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <string>
#include <vector>

namespace {

using namespace pvc;

std::string read_arg(const std::string& arg) {
    if (arg != "-") return arg;
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
}

void print_report(const ResidualReport& rep, bool json_mode) {
    if (json_mode) {
        std::cout << report_to_json(rep).dump(2) << "\n";
        return;
    }
    std::cout << "residual: " << print_pv(rep.residual) << "\n";
    if (rep.out_of_range) {
        std::cout << "note: target degree " << rep.target_degree
                  << " is outside 0..3, everything vanishes\n";
        return;
    }
    if (rep.degenerate_word) {
        std::cout << "note: repeated odd-degree entry, the symmetric word is zero\n";
        return;
    }
    std::cout << "cocycle: " << (rep.cocycle ? "true" : "false") << "\n";
    if (rep.normal) {
        std::cout << "class: " << print_class(rep.normal->cls) << "\n";
        std::cout << "primitive: " << print_pv(rep.normal->primitive) << "\n";
    }
    if (rep.obstruction) {
        if (!rep.cocycle) {
            std::cout << "note: residual is not a cocycle; raw value recorded as the d-value\n";
        } else if (rep.target_degree == 0 && !rep.z_constant_scalar.is_zero()) {
            std::cout << "note: nonzero z-constant part " << print_poly(rep.z_constant_scalar)
                      << " survives; no coboundary can cancel it (formality obstruction)\n";
        } else if (rep.target_degree == 3 && !rep.z_constant_dxyz.is_zero()) {
            std::cout << "note: nonzero z-constant part (" << print_poly(rep.z_constant_dxyz)
                      << ")*dx^dy^dz survives (formality obstruction)\n";
        } else {
            std::cout << "note: nonzero induced operation (formality obstruction)\n";
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact polyvector calculus on K[x,y,z]: Schouten brackets, cohomology "
                 "normal forms and homotopy-transfer (formality) data"};
    app.require_subcommand(1);

    std::string a_str = "0";
    bool json_mode = false;
    bool oracle = false;
    app.add_option("--a", a_str, "Euler-field parameter a (exact rational, default 0)");
    app.add_flag("--json", json_mode, "structured JSON output");
    app.add_flag("--oracle", oracle, "route brackets through the Grassmann oracle");

    std::string arg1, arg2;
    std::vector<std::string> class_args;
    int order = 0;

    auto* cmd_bracket = app.add_subcommand("bracket", "Schouten bracket of two cochains");
    cmd_bracket->add_option("A", arg1)->required();
    cmd_bracket->add_option("B", arg2)->required();

    auto* cmd_delta = app.add_subcommand("delta", "Chevalley-Eilenberg differential");
    cmd_delta->add_option("A", arg1)->required();

    auto* cmd_cocycle = app.add_subcommand("cocycle", "test whether a cochain is a cocycle");
    cmd_cocycle->add_option("A", arg1)->required();

    auto* cmd_cohom = app.add_subcommand("cohom", "normal form: class and primitive");
    cmd_cohom->add_option("A", arg1)->required();

    auto* cmd_d2 = app.add_subcommand("d2", "induced bracket of two classes");
    cmd_d2->add_option("C1", arg1)->required();
    cmd_d2->add_option("C2", arg2)->required();

    auto* cmd_phi2 = app.add_subcommand("phi2", "order-1 homotopy correction");
    cmd_phi2->add_option("C1", arg1)->required();
    cmd_phi2->add_option("C2", arg2)->required();

    auto* cmd_form = app.add_subcommand("formality", "order-k formality step on a class word");
    cmd_form->add_option("--order", order, "order k (word has k+1 classes)")->required();
    cmd_form->add_option("classes", class_args, "class literals")->required();

    app.add_subcommand("selfcheck", "run the built-in identity panel");

    CLI11_PARSE(app, argc, argv);

    if (oracle) set_bracket_backend(BracketBackend::Oracle);

    try {
        Session session;
        session.a = Rational::parse(a_str);

        if (cmd_bracket->parsed()) {
            PolyVector r = schouten(parse_pv(read_arg(arg1)), parse_pv(read_arg(arg2)));
            std::cout << (json_mode ? pv_to_json(r).dump(2) : print_pv(r)) << "\n";
        } else if (cmd_delta->parsed()) {
            PolyVector r = delta_ce(parse_pv(read_arg(arg1)));
            std::cout << (json_mode ? pv_to_json(r).dump(2) : print_pv(r)) << "\n";
        } else if (cmd_cocycle->parsed()) {
            bool r = is_cocycle(parse_pv(read_arg(arg1)));
            if (json_mode)
                std::cout << nlohmann::json{{"cocycle", r}}.dump(2) << "\n";
            else
                std::cout << (r ? "true" : "false") << "\n";
        } else if (cmd_cohom->parsed()) {
            NormalFormResult nf = normal_form(parse_pv(read_arg(arg1)), session);
            if (json_mode) {
                std::cout << normal_form_to_json(nf).dump(2) << "\n";
            } else {
                std::cout << "class: " << print_class(nf.cls) << "\n";
                std::cout << "primitive: " << print_pv(nf.primitive) << "\n";
            }
        } else if (cmd_d2->parsed()) {
            CohClass r = d2(parse_class(read_arg(arg1)), parse_class(read_arg(arg2)), session);
            std::cout << (json_mode ? class_to_json(r).dump(2) : print_class(r)) << "\n";
        } else if (cmd_phi2->parsed()) {
            PolyVector r = phi2(parse_class(read_arg(arg1)), parse_class(read_arg(arg2)), session);
            std::cout << (json_mode ? pv_to_json(r).dump(2) : print_pv(r)) << "\n";
        } else if (cmd_form->parsed()) {
            if (static_cast<int>(class_args.size()) != order + 1)
                throw Error("formality: order " + std::to_string(order) + " needs exactly " +
                            std::to_string(order + 1) + " classes");
            std::vector<CohClass> entries;
            entries.reserve(class_args.size());
            for (auto& c : class_args) entries.push_back(parse_class(read_arg(c)));
            TransferTable table;
            ResidualReport rep = formality_step(order, ClassWord{entries}, table, session);
            print_report(rep, json_mode);
        } else {  // selfcheck
            int failures = selfcheck(std::cout);
            if (json_mode) std::cout << nlohmann::json{{"failures", failures}}.dump(2) << "\n";
            return failures == 0 ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
