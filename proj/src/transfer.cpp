#include "pvc/transfer.hpp"

#include "pvc/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace pvc {

namespace {

std::string poly_key(const Poly& p) {
    std::ostringstream os;
    for (auto& [m, c] : p.terms())
        os << m.e[0] << "." << m.e[1] << "." << m.e[2] << "=" << c.str() << ";";
    return os.str();
}

std::string class_key(const CohClass& c) {
    if (const auto* h0 = c.get<CohClass::H0>()) return "0{" + poly_key(h0->psi) + "}";
    if (const auto* h1 = c.get<CohClass::H1>())
        return "1{" + poly_key(h1->g0) + "|" + poly_key(h1->psi) + "}";
    if (const auto* h2 = c.get<CohClass::H2>()) return "2{" + poly_key(h2->G) + "}";
    if (const auto* h3 = c.get<CohClass::H3>()) return "3{" + poly_key(h3->P) + "}";
    return "Z{" + std::to_string(c.degree()) + "}";
}

bool odd_parity(const CohClass& c) {
    int d = c.degree();
    return (d % 2 + 2) % 2 == 1;  // doubly shifted degree d-2 has the same parity
}

int target_ce_degree(const std::vector<CohClass>& entries, int outputs_shift) {
    // d_a / residual land one degree above the word in H[2]:
    // CE = sum(CE_i - 2) + outputs_shift + 2.
    int s = 0;
    for (auto& e : entries) s += e.degree() - 2;
    return s + outputs_shift + 2;
}

bool has_zero_entry(const std::vector<CohClass>& entries) {
    return std::any_of(entries.begin(), entries.end(),
                       [](const CohClass& c) { return c.is_zero(); });
}

// y * y = 0 in Sym(H[2]) for odd y (characteristic zero).
bool has_repeated_odd_entry(const std::vector<CohClass>& entries) {
    for (size_t i = 0; i < entries.size(); ++i)
        for (size_t j = i + 1; j < entries.size(); ++j)
            if (odd_parity(entries[i]) && odd_parity(entries[j]) && entries[i] == entries[j])
                return true;
    return false;
}

} // namespace

PolyVector d2_suspended(const PolyVector& u, const PolyVector& v, int ce_u) {
    PolyVector b = schouten(u, v);
    return ((ce_u % 2 + 2) % 2 == 0) ? b : -b;
}

TransferNF transfer_nf(const PolyVector& w, const Session& s, std::optional<int> degree_hint) {
    auto deg = w.homogeneous_degree();
    if (!deg && !w.is_zero()) throw MixedDegree("transfer_nf");
    if (!deg) deg = degree_hint.value_or(0);
    if (!is_cocycle(w)) throw NotACocycle("transfer_nf");

    switch (*deg) {
        case 0:
            return {CohClass::h0(w.component(Blade::One)), PolyVector(), PolyVector()};
        case 1: {
            Poly psi = w.component(Blade::Dz).z_part();
            Poly U = w.component(Blade::Dx) - psi.scaled(s.a) * Poly::var(Var::x);
            Poly V = w.component(Blade::Dy) - psi.scaled(Rational(1) - s.a) * Poly::var(Var::y);
            auto [g0, g1] = reconstruct_potential(U, V).z_split();
            return {CohClass::h1(g0, psi), PolyVector::scalar(g1), PolyVector()};
        }
        case 2: {
            // Gauge: remove the dx^dy component with the field xi12 dz, then
            // reduce the payload to z-degree <= 1 for the recorded class.
            const Poly& h = w.component(Blade::Dxy);
            Poly g = reconstruct_potential(w.component(Blade::Dxz), w.component(Blade::Dyz));
            Poly ext = g - Poly::var(Var::z) * h;
            auto [e0, e1] = ext.z_split();
            auto [e10, e11] = e1.z_split();
            Poly strict_payload = e0 + Poly::var(Var::z) * e10;
            PolyVector corr;
            if (!e11.is_zero()) {
                auto [w1, w2] = solve_divergence(-e11, s.gauge);
                corr = vec1(w1, w2, -(Poly::var(Var::z) * e11));
            }
            return {CohClass::h2(strict_payload), vec1(Poly(), Poly(), h), corr};
        }
        case 3: {
            auto [w0, w1] = w.component(Blade::Dxyz).z_split();
            auto [A, B] = solve_divergence(-w1, s.gauge);
            return {CohClass::h3(w0), vec2(Poly(), A, B), PolyVector()};
        }
        default:
            throw DegreeOutOfRange("transfer_nf: degree " + std::to_string(*deg));
    }
}

CohClass d2(const CohClass& c1, const CohClass& c2, const Session& s) {
    int target = c1.degree() + c2.degree() - 1;
    if (c1.is_zero() || c2.is_zero() || target < 0 || target > 3)
        return CohClass::zero(target);
    PolyVector w = d2_suspended(include(c1, s), include(c2, s), c1.degree());
    return transfer_nf(w, s, target).cls;
}

PolyVector phi2(const CohClass& c1, const CohClass& c2, const Session& s) {
    int target = c1.degree() + c2.degree() - 1;
    if (c1.is_zero() || c2.is_zero() || target < 0 || target > 3) return {};
    PolyVector w = d2_suspended(include(c1, s), include(c2, s), c1.degree());
    return transfer_nf(w, s, target).phi;
}

int ClassWord::shifted_degree_sum() const {
    int s = 0;
    for (auto& e : entries_) s += e.degree() - 2;
    return s;
}

std::pair<std::string, int> ClassWord::canonical() const {
    struct Keyed {
        int degree;
        std::string key;
        bool odd;
        const CohClass* cls;
    };
    std::vector<Keyed> v;
    v.reserve(entries_.size());
    for (auto& e : entries_) v.push_back({e.degree(), class_key(e), odd_parity(e), &e});

    // Bubble sort, tracking the Koszul sign of each adjacent transposition.
    int sign = 1;
    for (size_t i = 0; i + 1 < v.size(); ++i)
        for (size_t j = 0; j + 1 < v.size() - i; ++j) {
            auto &a = v[j], &b = v[j + 1];
            if (a.degree > b.degree || (a.degree == b.degree && a.key > b.key)) {
                if (a.odd && b.odd) sign = -sign;
                std::swap(a, b);
            }
        }

    std::ostringstream os;
    os << "[" << entries_.size() << "]";
    for (auto& e : v) os << e.key << "#";
    return {os.str(), sign};
}

int koszul_sign(const ClassWord& word, const std::vector<int>& subset) {
    std::vector<bool> in(static_cast<size_t>(word.size()), false);
    for (int i : subset) in[static_cast<size_t>(i)] = true;
    int sign = 1;
    for (int i = 0; i < word.size(); ++i) {
        if (!in[static_cast<size_t>(i)] || !odd_parity(word[i])) continue;
        // y_i moves past every earlier entry that stays behind.
        for (int j = 0; j < i; ++j)
            if (!in[static_cast<size_t>(j)] && odd_parity(word[j])) sign = -sign;
    }
    return sign;
}

namespace {

const TransferTable::Entry& step_canonical(int k, const std::vector<CohClass>& sorted,
                                           const std::string& key, TransferTable& table,
                                           const Session& s);

std::vector<CohClass> sorted_entries(const std::vector<CohClass>& word) {
    auto v = word;
    std::sort(v.begin(), v.end(), [](const CohClass& a, const CohClass& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return class_key(a) < class_key(b);
    });
    return v;
}

/// phi_m on an arbitrary word (m = word size): include for m = 1, phi2 for
/// m = 2, table recursion above that. Zero on any zero entry.
PolyVector phi_map(const std::vector<CohClass>& word, TransferTable& table, const Session& s) {
    if (has_zero_entry(word)) return {};
    if (word.size() == 1) return include(word[0], s);
    if (word.size() == 2) return phi2(word[0], word[1], s);
    auto [key, sign] = ClassWord{word}.canonical();
    const auto& entry = step_canonical(static_cast<int>(word.size()) - 1, sorted_entries(word),
                                       key, table, s);
    return sign >= 0 ? entry.phi : -entry.phi;
}

/// d_a on a word of size a; throws when a lower-order residual was not a
/// cocycle (the recursion is undefined past such a word).
CohClass d_map(const std::vector<CohClass>& word, TransferTable& table, const Session& s) {
    int target = target_ce_degree(word, 1);
    if (has_zero_entry(word) || has_repeated_odd_entry(word)) return CohClass::zero(target);
    if (word.size() == 2) return d2(word[0], word[1], s);
    auto [key, sign] = ClassWord{word}.canonical();
    const auto& entry = step_canonical(static_cast<int>(word.size()) - 1, sorted_entries(word),
                                       key, table, s);
    if (!entry.d_cls)
        throw Error("formality recursion blocked: the order-" +
                    std::to_string(word.size() - 1) +
                    " residual on a subword is not a cocycle, higher transfer data is undefined");
    return sign >= 0 ? *entry.d_cls : entry.d_cls->negated();
}

PolyVector residual_for(int k, const std::vector<CohClass>& word, TransferTable& table,
                        const Session& s) {
    int n = k + 1;
    ClassWord cw{word};
    PolyVector r;

    // Bracket side: one term per unordered pair {S, S^c}; fix 0 in S.
    for (int mask = 1; mask < (1 << n); ++mask) {
        if (!(mask & 1)) continue;
        int a = __builtin_popcount(static_cast<unsigned>(mask));
        if (a < 1 || a > k) continue;
        std::vector<int> si;
        std::vector<CohClass> ws, wc;
        int ce_first = 2;
        for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) {
                si.push_back(i);
                ws.push_back(word[static_cast<size_t>(i)]);
                ce_first += word[static_cast<size_t>(i)].degree() - 2;
            } else {
                wc.push_back(word[static_cast<size_t>(i)]);
            }
        }
        PolyVector pa = phi_map(ws, table, s);
        if (pa.is_zero()) continue;
        PolyVector pb = phi_map(wc, table, s);
        if (pb.is_zero()) continue;
        PolyVector term = d2_suspended(pa, pb, ce_first);
        int nu = koszul_sign(cw, si);
        r += (nu >= 0) ? term : -term;
    }

    // phi-of-d side: subsets of size 2..k.
    for (int mask = 1; mask < (1 << n); ++mask) {
        int a = __builtin_popcount(static_cast<unsigned>(mask));
        if (a < 2 || a > k) continue;
        std::vector<int> si;
        std::vector<CohClass> ws, wc;
        for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) {
                si.push_back(i);
                ws.push_back(word[static_cast<size_t>(i)]);
            } else {
                wc.push_back(word[static_cast<size_t>(i)]);
            }
        }
        CohClass dv = d_map(ws, table, s);
        if (dv.is_zero()) continue;
        std::vector<CohClass> sub;
        sub.reserve(wc.size() + 1);
        sub.push_back(dv);
        for (auto& e : wc) sub.push_back(e);
        PolyVector term = phi_map(sub, table, s);
        if (term.is_zero()) continue;
        int nu = koszul_sign(cw, si);
        r -= (nu >= 0) ? term : -term;
    }
    return r;
}

const TransferTable::Entry& step_canonical(int k, const std::vector<CohClass>& sorted,
                                           const std::string& key, TransferTable& table,
                                           const Session& s) {
    if (const auto* e = table.find(key)) return *e;

    TransferTable::Entry entry;
    ResidualReport& rep = entry.report;
    int target = target_ce_degree(sorted, 1);
    rep.target_degree = target;

    if (target < 0 || target > 3) {
        rep.out_of_range = true;
        entry.d_cls = CohClass::zero(target);
    } else if (has_zero_entry(sorted) || has_repeated_odd_entry(sorted)) {
        rep.degenerate_word = has_repeated_odd_entry(sorted);
        entry.d_cls = CohClass::zero(target);
    } else {
        PolyVector r = residual_for(k, sorted, table, s);
        rep.residual = r;
        rep.z_constant_dxyz = r.component(Blade::Dxyz).z_free_part();
        rep.z_constant_scalar = r.component(Blade::One).z_free_part();
        if (is_cocycle(r)) {
            rep.cocycle = true;
            rep.normal = normal_form(r, s, target);
            TransferNF tnf = transfer_nf(r, s, target);
            rep.obstruction = !tnf.cls.is_zero();
            entry.d_cls = tnf.cls;
            entry.phi = tnf.phi;
        } else {
            rep.cocycle = false;
            rep.obstruction = true;
            entry.d_raw = r;
        }
    }
    table.put(key, std::move(entry));
    return *table.find(key);
}

ResidualReport negate_report(ResidualReport rep) {
    rep.residual = -rep.residual;
    rep.z_constant_dxyz = -rep.z_constant_dxyz;
    rep.z_constant_scalar = -rep.z_constant_scalar;
    if (rep.normal)
        rep.normal = NormalFormResult{rep.normal->cls.negated(), -rep.normal->primitive};
    return rep;
}

} // namespace

PolyVector formality_residual(int k, const ClassWord& word, TransferTable& table,
                              const Session& s) {
    if (k < 1) throw Error("formality_residual: order must be >= 1");
    if (word.size() != k + 1)
        throw Error("formality_residual: order " + std::to_string(k) + " needs a word of " +
                    std::to_string(k + 1) + " classes");
    int target = target_ce_degree(word.entries(), 1);
    if (target < 0 || target > 3) return {};
    if (has_zero_entry(word.entries()) || has_repeated_odd_entry(word.entries())) return {};
    return residual_for(k, word.entries(), table, s);
}

ResidualReport formality_step(int k, const ClassWord& word, TransferTable& table,
                              const Session& s) {
    if (k < 1) throw Error("formality_step: order must be >= 1");
    if (word.size() != k + 1)
        throw Error("formality_step: order " + std::to_string(k) + " needs a word of " +
                    std::to_string(k + 1) + " classes");
    auto [key, sign] = word.canonical();
    const auto& entry = step_canonical(k, sorted_entries(word.entries()), key, table, s);
    return sign >= 0 ? entry.report : negate_report(entry.report);
}

} // namespace pvc
