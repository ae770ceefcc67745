#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qv/scalar.hpp"

namespace qv {

// Finite quiver: ordered vertex ids and arrows between them. Vertex and
// arrow ids are opaque strings; all structural work uses indices.
struct Arrow {
    std::string id;
    int tail = -1;
    int head = -1;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& id) const;
    int arrow_index(const std::string& id) const;
    // throws on duplicate ids or dangling endpoints
    void validate() const;
};

// Directed path, stored as the source vertex plus the arrow index sequence
// in tail-to-head composition order. An empty sequence is the trivial path
// at `source`.
struct PathWord {
    int source = -1;
    std::vector<int> arrows;

    int target(const Quiver& q) const;
    int length() const { return static_cast<int>(arrows.size()); }
    bool trivial() const { return arrows.empty(); }
};

PathWord trivial_path(int vertex);
// builds and validates a path from arrow ids
PathWord make_path(const Quiver& q, const std::vector<std::string>& arrow_ids);
// p followed by q_; requires target(p) == source(q_)
PathWord compose(const Quiver& q, const PathWord& p, const PathWord& q_);
std::string path_to_string(const Quiver& q, const PathWord& p);

// Quiver with monomial relations: each relation is a composable path of
// length >= 2 declared to be zero. Only finite-dimensional presentations
// are accepted: validate() rejects quivers admitting arbitrarily long
// nonzero paths.
struct QuiverPresentation {
    Quiver quiver;
    std::vector<std::vector<int>> relations;  // arrow index words

    void validate() const;  // structure + finiteness
    bool is_finite_dimensional() const;
};

QuiverPresentation make_presentation(Quiver q,
                                     const std::vector<std::vector<std::string>>& relation_ids);

// true iff some relation occurs as a contiguous subword of p
bool is_zero_path(const QuiverPresentation& pres, const PathWord& p);

// All nonzero paths including the trivial ones, ordered by length then
// lexicographically on arrow indices. Throws "infinite algebra" if the
// presentation is not finite-dimensional.
std::vector<PathWord> enumerate_nonzero_paths(const QuiverPresentation& pres);

// entry (x, y) = number of nonzero paths x -> y
std::vector<std::vector<long long>> cartan_matrix(const QuiverPresentation& pres);

QuiverPresentation opposite(const QuiverPresentation& pres);

// structural equality: same vertex/arrow lists, same relation set
bool same_presentation(const QuiverPresentation& a, const QuiverPresentation& b);

// presentation isomorphism: vertex + arrow bijection preserving incidence
// and mapping the relation set onto the relation set
bool presentation_isomorphic(const QuiverPresentation& a, const QuiverPresentation& b);
bool is_self_opposite(const QuiverPresentation& pres);

// checks a given vertex permutation (by index) for being an automorphism
bool is_presentation_automorphism(const QuiverPresentation& pres,
                                  const std::vector<int>& vertex_perm);

// searches for an involutive automorphism extending the given partial vertex
// assignment (pairs of vertex indices, understood symmetrically)
std::optional<std::vector<int>> find_involutive_automorphism(
    const QuiverPresentation& pres, const std::vector<std::pair<int, int>>& forced);

// Builders for the stock shapes. Chains carry one arrow each way between
// consecutive vertices ("a<i>" rightward, "b<i>" leftward).
QuiverPresentation make_AA(int n);        // 2-cycles zero; n = 1 is a bare vertex
QuiverPresentation make_AA3c();           // 3-vertex chain, all length-2 compositions zero
QuiverPresentation make_EE6();            // 5-chain plus vertex (6) over the middle
QuiverPresentation make_B8();             // 8-vertex tree with two zero compositions
QuiverPresentation make_B8_opposite();

// "AA:<n>", "AA3c", "EE6", "B8", "B8op"
QuiverPresentation make_builtin(const std::string& spec);

}  // namespace qv
