#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "qv/matrix.hpp"
#include "qv/quiver.hpp"
#include "qv/scalar.hpp"

namespace qv {

// Field tag carried by a representation: p == 0 means Q, otherwise F_p.
struct FieldInfo {
    std::int64_t p = 0;
    bool is_q() const { return p == 0; }
    friend bool operator==(const FieldInfo& a, const FieldInfo& b) { return a.p == b.p; }
    std::string name() const { return p == 0 ? "Q" : "Fp:" + std::to_string(p); }
};

template <class K> K field_zero(const FieldInfo&);
template <class K> K field_one(const FieldInfo&);
template <> inline Rational field_zero<Rational>(const FieldInfo&) { return Rational(0); }
template <> inline Rational field_one<Rational>(const FieldInfo&) { return Rational(1); }
template <> inline Fp field_zero<Fp>(const FieldInfo& f) { return Fp(0, f.p); }
template <> inline Fp field_one<Fp>(const FieldInfo& f) { return Fp(1, f.p); }

using PresPtr = std::shared_ptr<const QuiverPresentation>;

inline PresPtr share(QuiverPresentation pres) {
    return std::make_shared<const QuiverPresentation>(std::move(pres));
}

// Finite-dimensional representation: one exact matrix per arrow, of shape
// (dim head x dim tail).
template <class K>
struct RepT {
    PresPtr pres;
    FieldInfo field;
    std::vector<int> dims;          // per vertex
    std::vector<Matrix<K>> maps;    // per arrow

    int total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }
    bool is_zero() const { return total_dim() == 0; }
};

using RepQ = RepT<Rational>;
using RepF = RepT<Fp>;

template <class K>
RepT<K> make_zero_rep(PresPtr pres, std::vector<int> dims, FieldInfo field) {
    RepT<K> r;
    r.pres = std::move(pres);
    r.field = field;
    if (dims.size() != r.pres->quiver.vertices.size())
        throw Error("rep: dimension vector length mismatch");
    for (int d : dims)
        if (d < 0) throw Error("rep: negative dimension");
    r.dims = std::move(dims);
    K zero = field_zero<K>(field);
    for (const auto& a : r.pres->quiver.arrows)
        r.maps.push_back(Matrix<K>::zeros(r.dims[static_cast<size_t>(a.head)],
                                          r.dims[static_cast<size_t>(a.tail)], zero));
    return r;
}

template <class K>
void check_shapes(const RepT<K>& v) {
    const auto& arrows = v.pres->quiver.arrows;
    if (v.maps.size() != arrows.size()) throw Error("rep: one matrix per arrow required");
    for (size_t i = 0; i < arrows.size(); ++i) {
        if (v.maps[i].rows() != v.dims[static_cast<size_t>(arrows[i].head)] ||
            v.maps[i].cols() != v.dims[static_cast<size_t>(arrows[i].tail)])
            throw Error("rep: matrix shape mismatch on arrow '" + arrows[i].id + "'");
    }
}

// M(a_k) ... M(a_1) for the word a_1 ... a_k
template <class K>
Matrix<K> path_composite(const RepT<K>& v, const std::vector<int>& word) {
    Matrix<K> m = v.maps[static_cast<size_t>(word.front())];
    for (size_t i = 1; i < word.size(); ++i) m = v.maps[static_cast<size_t>(word[i])] * m;
    return m;
}

struct ValidationReport {
    bool ok = true;
    std::string message;
};

template <class K>
ValidationReport validate_rep(const RepT<K>& v) {
    check_shapes(v);
    for (size_t r = 0; r < v.pres->relations.size(); ++r) {
        if (!path_composite(v, v.pres->relations[r]).is_zero_matrix()) {
            std::ostringstream os;
            os << "relation violated: ";
            PathWord p{v.pres->quiver.arrows[static_cast<size_t>(v.pres->relations[r][0])].tail,
                       v.pres->relations[r]};
            os << path_to_string(v.pres->quiver, p) << " has nonzero composite";
            return {false, os.str()};
        }
    }
    return {true, ""};
}

template <class K>
void check_valid(const RepT<K>& v) {
    auto rep = validate_rep(v);
    if (!rep.ok) throw Error(rep.message);
}

template <class K>
RepT<K> direct_sum(const RepT<K>& a, const RepT<K>& b) {
    if (!same_presentation(*a.pres, *b.pres) || !(a.field == b.field))
        throw Error("direct_sum: presentation/field mismatch");
    std::vector<int> dims(a.dims.size());
    for (size_t i = 0; i < dims.size(); ++i) dims[i] = a.dims[i] + b.dims[i];
    RepT<K> s = make_zero_rep<K>(a.pres, dims, a.field);
    for (size_t ai = 0; ai < s.maps.size(); ++ai) {
        const auto& arr = a.pres->quiver.arrows[ai];
        int ra = a.dims[static_cast<size_t>(arr.head)], ca = a.dims[static_cast<size_t>(arr.tail)];
        for (int i = 0; i < a.maps[ai].rows(); ++i)
            for (int j = 0; j < a.maps[ai].cols(); ++j) s.maps[ai].at(i, j) = a.maps[ai].at(i, j);
        for (int i = 0; i < b.maps[ai].rows(); ++i)
            for (int j = 0; j < b.maps[ai].cols(); ++j)
                s.maps[ai].at(ra + i, ca + j) = b.maps[ai].at(i, j);
    }
    return s;
}

// representation of the opposite presentation, all matrices transposed
template <class K>
RepT<K> rep_opposite(const RepT<K>& v) {
    RepT<K> o;
    o.pres = share(opposite(*v.pres));
    o.field = v.field;
    o.dims = v.dims;
    for (const auto& m : v.maps) o.maps.push_back(m.transposed());
    return o;
}

// Intertwiner space Hom(V, W): solutions of phi_head V(a) = W(a) phi_tail
// for every arrow. Returns a basis, each element a per-vertex matrix tuple.
template <class K>
std::vector<std::vector<Matrix<K>>> hom_basis(const RepT<K>& v, const RepT<K>& w) {
    if (!same_presentation(*v.pres, *w.pres) || !(v.field == w.field))
        throw Error("hom: presentation/field mismatch");
    check_shapes(v);
    check_shapes(w);
    K zero = field_zero<K>(v.field);
    K one = field_one<K>(v.field);
    size_t nv = v.dims.size();
    std::vector<int> offset(nv + 1, 0);
    for (size_t i = 0; i < nv; ++i) offset[i + 1] = offset[i] + w.dims[i] * v.dims[i];
    int unknowns = offset[nv];
    int rows = 0;
    for (size_t ai = 0; ai < v.maps.size(); ++ai) {
        const auto& arr = v.pres->quiver.arrows[ai];
        rows += w.dims[static_cast<size_t>(arr.head)] * v.dims[static_cast<size_t>(arr.tail)];
    }
    Matrix<K> sys(rows, unknowns, zero);
    int row = 0;
    for (size_t ai = 0; ai < v.maps.size(); ++ai) {
        const auto& arr = v.pres->quiver.arrows[ai];
        int t = arr.tail, h = arr.head;
        // phi_h V(a) - W(a) phi_t = 0, entry (i, j)
        for (int i = 0; i < w.dims[static_cast<size_t>(h)]; ++i)
            for (int j = 0; j < v.dims[static_cast<size_t>(t)]; ++j) {
                for (int k = 0; k < v.dims[static_cast<size_t>(h)]; ++k)
                    sys.at(row, offset[static_cast<size_t>(h)] + i * v.dims[static_cast<size_t>(h)] + k) +=
                        v.maps[ai].at(k, j);
                for (int k = 0; k < w.dims[static_cast<size_t>(t)]; ++k)
                    sys.at(row, offset[static_cast<size_t>(t)] + k * v.dims[static_cast<size_t>(t)] + j) -=
                        w.maps[ai].at(i, k);
                ++row;
            }
    }
    auto kernel = nullspace(std::move(sys), zero, one);
    std::vector<std::vector<Matrix<K>>> basis;
    for (const auto& vec : kernel) {
        std::vector<Matrix<K>> phis;
        for (size_t vi = 0; vi < nv; ++vi) {
            Matrix<K> m(w.dims[vi], v.dims[vi], zero);
            for (int i = 0; i < w.dims[vi]; ++i)
                for (int j = 0; j < v.dims[vi]; ++j)
                    m.at(i, j) = vec[static_cast<size_t>(offset[vi] + i * v.dims[vi] + j)];
            phis.push_back(std::move(m));
        }
        basis.push_back(std::move(phis));
    }
    return basis;
}

template <class K>
int hom_dim(const RepT<K>& v, const RepT<K>& w) {
    return static_cast<int>(hom_basis(v, w).size());
}

template <class K>
std::vector<std::vector<Matrix<K>>> end_basis(const RepT<K>& v) {
    return hom_basis(v, v);
}

// deterministic total order used for canonical output
template <class K>
bool rep_less(const RepT<K>& a, const RepT<K>& b) {
    if (a.dims != b.dims) return a.dims < b.dims;
    for (size_t i = 0; i < a.maps.size(); ++i) {
        if (a.maps[i] < b.maps[i]) return true;
        if (b.maps[i] < a.maps[i]) return false;
    }
    return false;
}

// ---- string modules ---------------------------------------------------

// Interval [i, j] on the n-chain with a sign word of length j - i. Sign
// '+' at position l puts the identity on the rightward arrow
// (i+l-1) -> (i+l) and zero on the leftward one; '-' the reverse.
struct StringSpec {
    int n = 0;
    int i = 1;
    int j = 1;
    std::string signs;

    void validate() const {
        if (n < 1 || i < 1 || j < i || j > n) throw Error("string spec: bad interval");
        if (static_cast<int>(signs.size()) != j - i)
            throw Error("string spec: sign word length must be j - i");
        for (char c : signs)
            if (c != '+' && c != '-') throw Error("string spec: signs must be '+'/'-'");
    }
    friend bool operator<(const StringSpec& a, const StringSpec& b) {
        return std::tie(a.n, a.i, a.j, a.signs) < std::tie(b.n, b.i, b.j, b.signs);
    }
    friend bool operator==(const StringSpec& a, const StringSpec& b) {
        return std::tie(a.n, a.i, a.j, a.signs) == std::tie(b.n, b.i, b.j, b.signs);
    }
    std::string name() const {
        std::ostringstream os;
        os << "I[" << i << "," << j << "]";
        if (!signs.empty()) os << "^" << signs;
        return os.str();
    }
};

RepQ string_module(const StringSpec& spec, PresPtr aa = nullptr);
std::vector<StringSpec> all_string_specs(int n);

}  // namespace qv
