#include "qv/rep_alg.hpp"

#include <algorithm>
#include <functional>

namespace qv {

namespace {

std::vector<Rational> endo_flatten(const Endo& f) {
    std::vector<Rational> out;
    for (const auto& m : f)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
    return out;
}

Matrix<Rational> mat_power(Matrix<Rational> m, int e) {
    Matrix<Rational> acc = Matrix<Rational>::identity(m.rows(), Rational(0), Rational(1));
    for (int i = 0; i < e; ++i) acc = acc * m;
    return acc;
}

Matrix<Rational> mat_poly_eval(const Poly& p, const Matrix<Rational>& m) {
    int n = m.rows();
    Matrix<Rational> acc(n, n, Rational(0));
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * m;
        for (int i = 0; i < n; ++i) acc.at(i, i) += *it;
    }
    return acc;
}

// columns-of-subspace matrices, one per vertex
using SubspaceBasis = std::vector<Matrix<Rational>>;

SubspaceBasis kernel_basis_per_vertex(const RepQ& v,
                                      const std::function<Matrix<Rational>(int)>& op_at) {
    SubspaceBasis cols;
    for (size_t vi = 0; vi < v.dims.size(); ++vi) {
        int d = v.dims[vi];
        if (d == 0) {
            cols.push_back(Matrix<Rational>(0, 0, Rational(0)));
            continue;
        }
        auto vecs = nullspace(op_at(static_cast<int>(vi)), Rational(0), Rational(1));
        Matrix<Rational> c(d, static_cast<int>(vecs.size()), Rational(0));
        for (size_t b = 0; b < vecs.size(); ++b)
            for (int i = 0; i < d; ++i) c.at(i, static_cast<int>(b)) = vecs[b][static_cast<size_t>(i)];
        cols.push_back(std::move(c));
    }
    return cols;
}

RepQ restrict_to(const RepQ& v, const SubspaceBasis& cols) {
    std::vector<int> dims;
    for (const auto& c : cols) dims.push_back(c.cols());
    RepQ sub = make_zero_rep<Rational>(v.pres, dims, v.field);
    for (size_t ai = 0; ai < v.maps.size(); ++ai) {
        const auto& arr = v.pres->quiver.arrows[ai];
        const auto& ct = cols[static_cast<size_t>(arr.tail)];
        const auto& ch = cols[static_cast<size_t>(arr.head)];
        if (ct.cols() == 0 || v.dims[static_cast<size_t>(arr.head)] == 0) continue;
        Matrix<Rational> rhs = v.maps[ai] * ct;
        sub.maps[ai] = solve_exact(ch, rhs, Rational(0));
        // the subspace family must be arrow-invariant
        if (ch * sub.maps[ai] != rhs) throw Error("internal: subspace not invariant");
    }
    return sub;
}

// generalized eigenspace split along one endomorphism; nullopt when its
// characteristic polynomial yields fewer than two coprime pieces
std::optional<std::vector<RepQ>> split_along(const RepQ& v, const Endo& phi) {
    Poly c{Rational(1)};
    for (const auto& m : phi)
        if (m.rows() > 0) c = poly_mul(c, char_poly(m));
    auto roots = rational_roots(c);
    Poly g = c;
    for (const auto& [lambda, mult] : roots)
        for (int t = 0; t < mult; ++t) g = poly_divide_linear(g, lambda);
    int n_pieces = static_cast<int>(roots.size()) + (poly_degree(g) > 0 ? 1 : 0);
    if (n_pieces < 2) return std::nullopt;

    std::vector<RepQ> pieces;
    std::vector<SubspaceBasis> all_bases;
    for (const auto& [lambda, mult] : roots) {
        (void)mult;
        const Rational& lam = lambda;
        all_bases.push_back(kernel_basis_per_vertex(v, [&](int vi) {
            Matrix<Rational> m = phi[static_cast<size_t>(vi)];
            for (int i = 0; i < m.rows(); ++i) m.at(i, i) -= lam;
            return mat_power(m, v.dims[static_cast<size_t>(vi)]);
        }));
    }
    if (poly_degree(g) > 0)
        all_bases.push_back(kernel_basis_per_vertex(
            v, [&](int vi) { return mat_poly_eval(g, phi[static_cast<size_t>(vi)]); }));

    // assemble the change-of-basis witness per vertex and check invertibility
    for (size_t vi = 0; vi < v.dims.size(); ++vi) {
        int d = v.dims[vi], col = 0;
        Matrix<Rational> witness(d, d, Rational(0));
        int total = 0;
        for (const auto& basis : all_bases) total += basis[vi].cols();
        if (total != d) throw Error("internal: eigenspace dimensions do not add up");
        for (const auto& basis : all_bases)
            for (int j = 0; j < basis[vi].cols(); ++j, ++col)
                for (int i = 0; i < d; ++i) witness.at(i, col) = basis[vi].at(i, j);
        if (d > 0 && !is_invertible(witness)) throw Error("internal: eigenspace split not direct");
    }
    for (const auto& basis : all_bases) {
        RepQ piece = restrict_to(v, basis);
        if (!piece.is_zero()) pieces.push_back(std::move(piece));
    }
    if (pieces.size() < 2) return std::nullopt;
    return pieces;
}

// deterministic candidate stream: basis, then pairwise products, sums and
// differences (products of echelon basis elements surface idempotents of
// matrix-algebra blocks)
std::vector<Endo> split_candidates(const std::vector<Endo>& basis) {
    std::vector<Endo> cand = basis;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) cand.push_back(endo_compose(basis[i], basis[j]));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            cand.push_back(endo_add(basis[i], basis[j]));
            cand.push_back(endo_sub(basis[i], basis[j]));
        }
    return cand;
}

std::optional<std::vector<RepQ>> try_split(const RepQ& v, const std::vector<Endo>& basis) {
    for (const auto& phi : split_candidates(basis)) {
        auto pieces = split_along(v, phi);
        if (pieces) return pieces;
    }
    return std::nullopt;
}

}  // namespace

int semisimple_quotient_dim(const RepQ& v, const std::vector<Endo>& basis) {
    int k = static_cast<int>(basis.size());
    if (k == 0) throw Error("zero representation");
    int n_flat = 0;
    for (int d : v.dims) n_flat += d * d;
    // coordinates of all pairwise products in the given basis, via one
    // reduction of [basis | products]
    Matrix<Rational> aug(n_flat, k + k * k, Rational(0));
    for (int b = 0; b < k; ++b) {
        auto flat = endo_flatten(basis[static_cast<size_t>(b)]);
        for (int r = 0; r < n_flat; ++r) aug.at(r, b) = flat[static_cast<size_t>(r)];
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            auto flat = endo_flatten(
                endo_compose(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]));
            for (int r = 0; r < n_flat; ++r) aug.at(r, k + i * k + j) = flat[static_cast<size_t>(r)];
        }
    auto pivots = row_reduce(aug);
    if (static_cast<int>(pivots.size()) != k || pivots.back() != k - 1)
        throw Error("internal: endomorphism basis is not independent");
    // left-regular matrices L_i(r, j) = r-th coordinate of b_i b_j
    std::vector<Matrix<Rational>> lreg;
    for (int i = 0; i < k; ++i) {
        Matrix<Rational> l(k, k, Rational(0));
        for (int r = 0; r < k; ++r)
            for (int j = 0; j < k; ++j) l.at(r, j) = aug.at(r, k + i * k + j);
        lreg.push_back(std::move(l));
    }
    // trace form of the regular representation; its rank is dim End/rad
    Matrix<Rational> gram(k, k, Rational(0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Rational tr(0);
            for (int r = 0; r < k; ++r)
                for (int s = 0; s < k; ++s)
                    tr += lreg[static_cast<size_t>(i)].at(r, s) * lreg[static_cast<size_t>(j)].at(s, r);
            gram.at(i, j) = tr;
        }
    return rank(gram);
}

Indec indecomposability(const RepQ& v) {
    if (v.is_zero()) throw Error("zero representation");
    check_valid(v);
    auto basis = end_basis(v);
    if (basis.size() == 1) return Indec::Indecomposable;
    if (semisimple_quotient_dim(v, basis) == 1) return Indec::Indecomposable;
    if (try_split(v, basis)) return Indec::Decomposable;
    return Indec::UndeterminedOverQ;
}

bool is_indecomposable(const RepQ& v) {
    switch (indecomposability(v)) {
        case Indec::Indecomposable: return true;
        case Indec::Decomposable: return false;
        default:
            throw Error("indecomposable over the rationals, absolute indecomposability undetermined");
    }
}

std::vector<RepQ> decompose(const RepQ& v) {
    check_valid(v);
    std::vector<RepQ> out;
    std::vector<RepQ> work{v};
    while (!work.empty()) {
        RepQ u = std::move(work.back());
        work.pop_back();
        if (u.is_zero()) continue;
        auto basis = end_basis(u);
        if (basis.size() == 1 || semisimple_quotient_dim(u, basis) == 1) {
            out.push_back(std::move(u));
            continue;
        }
        auto pieces = try_split(u, basis);
        if (!pieces)
            throw Error("cannot split over Q: End/rad has dimension " +
                        std::to_string(semisimple_quotient_dim(u, basis)));
        for (auto& p : *pieces) work.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), rep_less<Rational>);
    return out;
}

namespace {

template <class K>
bool iso_fast_reject(const RepT<K>& v, const RepT<K>& w, int& hom_vw_dim) {
    if (!same_presentation(*v.pres, *w.pres) || !(v.field == w.field))
        throw Error("is_isomorphic: presentation/field mismatch");
    if (v.dims != w.dims) return true;
    if (v.total_dim() == 0) return false;
    hom_vw_dim = hom_dim(v, w);
    if (hom_vw_dim == 0) return true;
    if (hom_dim(w, v) != hom_vw_dim) return true;
    if (hom_dim(v, v) != hom_vw_dim || hom_dim(w, w) != hom_vw_dim) return true;
    return false;
}

template <class K>
bool invertible_at_every_vertex(const std::vector<Matrix<K>>& phi) {
    for (const auto& m : phi)
        if (m.rows() > 0 && !is_invertible(m)) return false;
    return true;
}

}  // namespace

namespace {

bool iso_witness_at(const RepQ& v, const RepQ& w,
                    const std::vector<std::vector<Matrix<Rational>>>& basis,
                    const std::vector<long long>& c) {
    std::vector<Matrix<Rational>> phi;
    int k = static_cast<int>(basis.size());
    for (size_t vi = 0; vi < v.dims.size(); ++vi) {
        Matrix<Rational> m(w.dims[vi], v.dims[vi], Rational(0));
        for (int b = 0; b < k; ++b)
            if (c[static_cast<size_t>(b)] != 0)
                m = m + basis[static_cast<size_t>(b)][vi].scaled(Rational(c[static_cast<size_t>(b)]));
        phi.push_back(std::move(m));
    }
    return invertible_at_every_vertex(phi);
}

}  // namespace

bool is_isomorphic(const RepQ& v, const RepQ& w) {
    int k = 0;
    if (iso_fast_reject(v, w, k)) return false;
    if (v.total_dim() == 0) return true;
    auto basis = hom_basis(v, w);
    // An invertible intertwiner exists iff the product of the per-vertex
    // determinants of a generic basis combination is a nonzero polynomial
    // in the coefficients; its total degree is bounded by the total
    // dimension, so the integer grid {0..D}^k decides it. A short
    // deterministic sequence of sample points runs first, since a witness,
    // when one exists, is generic.
    long long d_bound = v.total_dim() + 1;
    double grid_size = 1;
    for (int i = 0; i < k; ++i) grid_size *= static_cast<double>(d_bound);
    if (grid_size > 4e6) throw Error("isomorphism grid budget exceeded (hom space too large)");
    std::uint64_t state = 0x6a09e667f3bcc908ULL;
    auto next = [&state]() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::vector<long long> c(static_cast<size_t>(k), 0);
    for (int trial = 0; trial < 64; ++trial) {
        for (int i = 0; i < k; ++i)
            c[static_cast<size_t>(i)] = static_cast<long long>(next() % static_cast<std::uint64_t>(d_bound));
        if (iso_witness_at(v, w, basis, c)) return true;
    }
    // exhaustive sweep; exhaustion proves non-isomorphism
    std::fill(c.begin(), c.end(), 0);
    while (true) {
        int pos = 0;
        while (pos < k && c[static_cast<size_t>(pos)] == d_bound - 1) {
            c[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == k) return false;
        c[static_cast<size_t>(pos)]++;
        if (iso_witness_at(v, w, basis, c)) return true;
    }
}

bool is_isomorphic_fp(const RepF& v, const RepF& w, long long budget) {
    int k = 0;
    if (iso_fast_reject(v, w, k)) return false;
    if (v.total_dim() == 0) return true;
    auto basis = hom_basis(v, w);
    long long p = v.field.p;
    double combos = 1;
    for (int i = 0; i < k; ++i) combos *= static_cast<double>(p);
    if (combos > static_cast<double>(budget)) throw Error("isomorphism budget exceeded over F_p");
    std::vector<long long> c(static_cast<size_t>(k), 0);
    while (true) {
        int pos = 0;
        while (pos < k && c[static_cast<size_t>(pos)] == p - 1) {
            c[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == k) return false;
        c[static_cast<size_t>(pos)]++;
        std::vector<Matrix<Fp>> phi;
        for (size_t vi = 0; vi < v.dims.size(); ++vi) {
            Matrix<Fp> m(w.dims[vi], v.dims[vi], Fp(0, p));
            for (int b = 0; b < k; ++b)
                if (c[static_cast<size_t>(b)] != 0)
                    m = m + basis[static_cast<size_t>(b)][vi].scaled(
                            Fp(c[static_cast<size_t>(b)], p));
            phi.push_back(std::move(m));
        }
        if (invertible_at_every_vertex(phi)) return true;
    }
}

bool is_indecomposable_fp(const RepF& v, long long budget) {
    if (v.is_zero()) throw Error("zero representation");
    check_valid(v);
    auto basis = end_basis(v);
    int k = static_cast<int>(basis.size());
    if (k > 20) throw Error("budget exceeded: End dimension " + std::to_string(k) + " > 20");
    long long p = v.field.p;
    double combos = 1;
    for (int i = 0; i < k; ++i) combos *= static_cast<double>(p);
    if (combos > static_cast<double>(budget)) throw Error("budget exceeded: idempotent search");
    std::vector<Matrix<Fp>> id;
    for (int d : v.dims) id.push_back(Matrix<Fp>::identity(d, Fp(0, p), Fp(1, p)));
    std::vector<long long> c(static_cast<size_t>(k), 0);
    while (true) {
        int pos = 0;
        while (pos < k && c[static_cast<size_t>(pos)] == p - 1) {
            c[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == k) return true;  // no nontrivial idempotent found
        c[static_cast<size_t>(pos)]++;
        bool is_idem = true, is_zero_e = true, is_id = true;
        std::vector<Matrix<Fp>> e;
        for (size_t vi = 0; vi < v.dims.size(); ++vi) {
            Matrix<Fp> m(v.dims[vi], v.dims[vi], Fp(0, p));
            for (int b = 0; b < k; ++b)
                if (c[static_cast<size_t>(b)] != 0)
                    m = m + basis[static_cast<size_t>(b)][vi].scaled(
                            Fp(c[static_cast<size_t>(b)], p));
            e.push_back(std::move(m));
        }
        for (size_t vi = 0; vi < e.size(); ++vi) {
            if (!(e[vi] * e[vi] == e[vi])) { is_idem = false; break; }
            if (!e[vi].is_zero_matrix()) is_zero_e = false;
            if (!(e[vi] == id[vi])) is_id = false;
        }
        if (is_idem && !is_zero_e && !is_id) return false;
    }
}

std::vector<StringSpec> classify_AA(const RepQ& v) {
    int n = static_cast<int>(v.pres->quiver.vertices.size());
    if (!same_presentation(*v.pres, make_AA(n)))
        throw Error("classify_AA: representation is not over the doubled n-chain");
    std::vector<StringSpec> specs;
    for (const auto& piece : decompose(v)) {
        int i = -1, j = -1;
        bool interval = true;
        for (int vi = 0; vi < n; ++vi) {
            int d = piece.dims[static_cast<size_t>(vi)];
            if (d > 1) interval = false;
            if (d == 1) {
                if (i < 0) i = vi + 1;
                else if (j != vi) interval = false;  // gap
                j = vi + 1;
            }
        }
        if (!interval || i < 0)
            throw Error("classify_AA: summand is not supported on an interval with dims <= 1");
        int len = j - i;
        bool matched = false;
        for (int mask = 0; mask < (1 << len) && !matched; ++mask) {
            std::string signs;
            for (int l = 0; l < len; ++l) signs += (mask >> l) & 1 ? '-' : '+';
            StringSpec spec{n, i, j, signs};
            if (is_isomorphic(piece, string_module(spec, piece.pres))) {
                specs.push_back(spec);
                matched = true;
            }
        }
        if (!matched)
            throw Error("classify_AA: summand matches no string module (internal consistency failure)");
    }
    std::sort(specs.begin(), specs.end());
    return specs;
}

RepQ lift_zero_one(const RepF& v) {
    RepQ out = make_zero_rep<Rational>(v.pres, v.dims, FieldInfo{0});
    for (size_t ai = 0; ai < v.maps.size(); ++ai)
        for (int i = 0; i < v.maps[ai].rows(); ++i)
            for (int j = 0; j < v.maps[ai].cols(); ++j) {
                long long e = v.maps[ai].at(i, j).v;
                if (e != 0 && e != 1) throw Error("lift: entry outside {0,1}");
                out.maps[ai].at(i, j) = e;
            }
    check_valid(out);
    return out;
}

RepQ weight_chain_rep(const std::vector<int>& dims, const std::vector<Matrix<Rational>>& f_maps,
                      const std::vector<Matrix<Rational>>& fstar_maps) {
    if (dims.empty()) throw Error("weight_chain_rep: empty weight ladder");
    size_t n = dims.size() - 1;
    if (f_maps.size() != n || fstar_maps.size() != n)
        throw Error("weight_chain_rep: need one f and one fstar map per step");
    RepQ v = make_zero_rep<Rational>(share(make_AA(static_cast<int>(n) + 1)), dims, FieldInfo{0});
    for (size_t k = 1; k <= n; ++k) {
        int a_idx = v.pres->quiver.arrow_index("a" + std::to_string(k));
        int b_idx = v.pres->quiver.arrow_index("b" + std::to_string(k));
        v.maps[static_cast<size_t>(a_idx)] = f_maps[k - 1];
        v.maps[static_cast<size_t>(b_idx)] = fstar_maps[k - 1];
    }
    check_shapes(v);
    auto report = validate_rep(v);
    if (!report.ok)
        throw Error("weight_chain_rep: f/fstar composites violate the chain relations (" +
                    report.message + ")");
    return v;
}

}  // namespace qv
