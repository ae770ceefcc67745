#pragma once

#include <map>
#include <optional>

#include "qv/poly.hpp"
#include "qv/rep.hpp"

namespace qv {

// ---- endomorphism algebra analysis (over Q) ----------------------------

using Endo = std::vector<Matrix<Rational>>;  // one square matrix per vertex

inline Endo endo_compose(const Endo& f, const Endo& g) {
    Endo h;
    for (size_t v = 0; v < f.size(); ++v) h.push_back(f[v] * g[v]);
    return h;
}

inline Endo endo_add(const Endo& f, const Endo& g) {
    Endo h;
    for (size_t v = 0; v < f.size(); ++v) h.push_back(f[v] + g[v]);
    return h;
}

inline Endo endo_sub(const Endo& f, const Endo& g) {
    Endo h;
    for (size_t v = 0; v < f.size(); ++v) h.push_back(f[v] - g[v]);
    return h;
}

// dim of End(V) modulo its radical, computed as the rank of the trace form
// of the left-regular representation (valid in characteristic zero)
int semisimple_quotient_dim(const RepQ& v, const std::vector<Endo>& basis);

enum class Indec {
    Decomposable,
    Indecomposable,        // absolutely indecomposable (End/rad has dim 1)
    UndeterminedOverQ,     // End/rad > 1 but no rational splitting was found
};

Indec indecomposability(const RepQ& v);

// true iff absolutely indecomposable; throws on the undetermined case
bool is_indecomposable(const RepQ& v);

// Krull-Schmidt decomposition, pieces in canonical order. Splits along
// generalized eigenspaces of endomorphisms with reducible characteristic
// polynomial; throws "cannot split over Q" if End/rad > 1 but no such
// endomorphism is found among basis elements and their sums/products.
std::vector<RepQ> decompose(const RepQ& v);

bool is_isomorphic(const RepQ& v, const RepQ& w);

// F_p variants: indecomposability by exhaustive idempotent search (End
// dimension bounded), isomorphism by exhaustive invertible-intertwiner
// search.
bool is_indecomposable_fp(const RepF& v, long long budget = 1 << 21);
bool is_isomorphic_fp(const RepF& v, const RepF& w, long long budget = 1 << 21);

// decompose + match each summand against the string modules with the same
// support interval; error if any summand matches none
std::vector<StringSpec> classify_AA(const RepQ& v);

// 0/1 lift of an F_p representation to Q; requires all entries in {0, 1}
// and the lift to satisfy the relations
RepQ lift_zero_one(const RepF& v);

// Representation of the (n+1)-chain from a weight-space ladder: dims are
// the weight-space dimensions, f_maps act rightward, fstar_maps leftward.
// The 2-cycle relations f fstar = 0 = fstar f are enforced.
RepQ weight_chain_rep(const std::vector<int>& dims, const std::vector<Matrix<Rational>>& f_maps,
                      const std::vector<Matrix<Rational>>& fstar_maps);

}  // namespace qv
