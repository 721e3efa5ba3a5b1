#ifndef PVC_TRANSFER_HPP
#define PVC_TRANSFER_HPP

#include "pvc/cohomology.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pvc {

// Convention ledger (fixed at build time, see docs/CONVENTIONS.md):
//   - suspension sign: D2(u,v) = (-1)^{deg_CE(u)} [u,v]_s, degrees in C[2];
//   - Koszul signs nu_a over the doubly shifted degrees |y| = deg_CE(y) - 2;
//   - phi_k := -(transfer normal-form primitive), where the degree-2 transfer
//     normal form removes the dx^dy component with a dz-field (primitive
//     -xi12 dz) before the z-degree reduction of the recorded class.

/// D2 = [.,.]_s[1] on the doubly shifted complex. ce_u is the CE degree of u
/// (supplied by the caller so the sign is well defined when u == 0).
PolyVector d2_suspended(const PolyVector& u, const PolyVector& v, int ce_u);

/// Transfer-gauge splitting of a cocycle W:
///   W = include(cls) + delta(trunc_correction) - delta(phi)
/// cls is strictly normalized; phi is the homotopy value fed to the formality
/// recursion; trunc_correction is zero except for degree-2 inputs whose
/// potential has z-degree >= 2 (where the strict class representative differs
/// from the X_{g - z xi12} ^ dz gauge by that coboundary).
struct TransferNF {
    CohClass cls;
    PolyVector phi;
    PolyVector trunc_correction;
};
TransferNF transfer_nf(const PolyVector& w, const Session& s = {},
                       std::optional<int> degree_hint = std::nullopt);

/// Induced bracket on classes: the strictly normalized class of
/// D2(include c1, include c2); the zero class of the target degree when that
/// degree falls outside 0..3.
CohClass d2(const CohClass& c1, const CohClass& c2, const Session& s = {});

/// Homotopy correction of order 1.
PolyVector phi2(const CohClass& c1, const CohClass& c2, const Session& s = {});

/// A finite symmetric word y_1 * ... * y_n of classes in H[2].
class ClassWord {
public:
    ClassWord() = default;
    explicit ClassWord(std::vector<CohClass> entries) : entries_(std::move(entries)) {}

    int size() const { return static_cast<int>(entries_.size()); }
    const CohClass& operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<CohClass>& entries() const { return entries_; }

    /// Sum of the doubly shifted degrees of the entries.
    int shifted_degree_sum() const;

    /// Deterministic encoding of the sorted word plus the Koszul sign of the
    /// sorting permutation (computed, never stored).
    std::pair<std::string, int> canonical() const;

private:
    std::vector<CohClass> entries_;
};

/// Sign of the graded permutation moving `subset` (ascending indices) to the
/// front of the word, using the doubly shifted degrees.
int koszul_sign(const ClassWord& word, const std::vector<int>& subset);

struct ResidualReport {
    PolyVector residual;
    bool cocycle = false;
    std::optional<NormalFormResult> normal;  // present iff cocycle
    int target_degree = 0;                   // CE degree of the residual slot
    bool out_of_range = false;               // target outside 0..3: residual is 0
    bool degenerate_word = false;            // repeated odd entry: zero in Sym(H[2])
    bool obstruction = false;                // nonzero d-value or non-cocycle residual
    Poly z_constant_dxyz;                    // z-free part of the omega component
    Poly z_constant_scalar;                  // z-free part of the scalar component
};

/// Memo of d_j / phi_j values on previously seen words, keyed by canonical
/// word encoding. Values for a queried word are the stored ones multiplied by
/// the Koszul reordering sign.
class TransferTable {
public:
    struct Entry {
        std::optional<CohClass> d_cls;  // absent when the residual is not a cocycle
        PolyVector d_raw;               // the raw residual (always kept)
        PolyVector phi;
        ResidualReport report;
    };

    bool has(const std::string& key) const { return entries_.count(key) != 0; }
    const Entry* find(const std::string& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }
    void put(const std::string& key, Entry e) { entries_.emplace(std::move(key), std::move(e)); }

private:
    std::map<std::string, Entry> entries_;
};

/// The order-k residual R = include(d_{k+1}(word)) - delta(phi_{k+1}(word))
/// assembled from lower-order data (computed recursively through the table):
/// the nu-signed sum of D2(phi_a x phi_{k+1-a}) over unordered subset pairs
/// minus the nu-signed sum of phi_{k+2-a}(d_a(...) * rest) for 2 <= a <= k.
PolyVector formality_residual(int k, const ClassWord& word, TransferTable& table,
                              const Session& s = {});

/// Computes the residual, splits it when it is a cocycle, records
/// d_{k+1}(word) and phi_{k+1}(word) into the table, and reports. A residual
/// that is not a cocycle is recorded raw with phi = 0 and flagged.
ResidualReport formality_step(int k, const ClassWord& word, TransferTable& table,
                              const Session& s = {});

} // namespace pvc

#endif
