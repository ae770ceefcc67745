#include "qv/atlas.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qv::atlas {

std::string family_tag(Family f) {
    switch (f) {
        case Family::GlmGln: return "gl_m_gl_n";
        case Family::Skew: return "skew";
        case Family::Symmetric: return "symmetric";
        case Family::Sp2nGl2: return "sp2n_gl2";
        case Family::Sp2nGl3: return "sp2n_gl3";
        case Family::Sp4Glm: return "sp4_glm";
        case Family::Sp4Gl4: return "sp4_gl4";
        case Family::Sp2n: return "sp_2n";
        case Family::Spin10: return "spin10";
        case Family::SoN: return "so_n";
        case Family::Spin7: return "spin7";
        case Family::Spin9: return "spin9";
        case Family::G2: return "g2";
        case Family::E6: return "e6";
    }
    throw Error("unreachable family tag");
}

Family family_from_tag(const std::string& tag) {
    for (const auto& t : list_cases())
        if (t.tag == tag) return t.family;
    throw Error("unknown case family '" + tag + "'");
}

std::string CaseId::to_string() const {
    std::string s = family_tag(family);
    switch (family) {
        case Family::GlmGln: return s + " m=" + std::to_string(m) + " n=" + std::to_string(n);
        case Family::Skew:
        case Family::Symmetric:
        case Family::Sp2nGl2:
        case Family::Sp2nGl3:
        case Family::Sp2n:
        case Family::SoN: return s + " n=" + std::to_string(n);
        case Family::Sp4Glm: return s + " m=" + std::to_string(m);
        default: return s;
    }
}

std::vector<FamilyTemplate> list_cases() {
    return {
        {Family::GlmGln, "gl_m_gl_n", "m, n >= 1", "GL_m x GL_n on m x n matrices"},
        {Family::Skew, "skew", "n >= 2", "GL_n on skew-symmetric n x n matrices"},
        {Family::Symmetric, "symmetric", "n >= 1", "GL_n on symmetric n x n matrices"},
        {Family::Sp2nGl2, "sp2n_gl2", "n >= 2", "Sp_2n x GL_2 on 2n x 2 matrices"},
        {Family::Sp2nGl3, "sp2n_gl3", "n >= 2", "Sp_2n x GL_3 on 2n x 3 matrices"},
        {Family::Sp4Glm, "sp4_glm", "m > 4", "Sp_4 x GL_m on 4 x m matrices"},
        {Family::Sp4Gl4, "sp4_gl4", "", "Sp_4 x GL_4 on 4 x 4 matrices"},
        {Family::Sp2n, "sp_2n", "n >= 1", "Sp_2n on its defining 2n-dimensional space"},
        {Family::Spin10, "spin10", "", "Spin_10 on the even half-spin representation"},
        {Family::SoN, "so_n", "n >= 3", "SO_n x C* on C^n"},
        {Family::Spin7, "spin7", "", "Spin_7 x C* on the 8-dimensional spin representation"},
        {Family::Spin9, "spin9", "", "Spin_9 x C* on the 16-dimensional spin representation"},
        {Family::G2, "g2", "", "G_2 x C* on the 7-dimensional fundamental representation"},
        {Family::E6, "e6", "", "E_6 x C* on the 27-dimensional fundamental representation"},
    };
}

int CaseRecord::orbit_index(const std::string& label) const {
    for (size_t i = 0; i < orbits.size(); ++i)
        if (orbits[i].label == label) return static_cast<int>(i);
    throw Error("case " + id.to_string() + ": no orbit labeled '" + label + "'");
}

bool CaseRecord::closure_leq(int a, int b) const {
    if (a == b) return true;
    for (const auto& [x, y] : closure)
        if (x == a && y == b) return true;
    return false;
}

namespace {

std::string paren(int k) { return "(" + std::to_string(k) + ")"; }
std::string paren_prime(int k) { return k == 0 ? "(0)" : "(" + std::to_string(k) + ")'"; }
std::string pair_label(int r, int s) {
    return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

struct RecordBuilder {
    CaseRecord rec;
    int arrow_seq = 0;

    explicit RecordBuilder(CaseId id) { rec.id = id; }

    int orbit(const std::string& label, long long codim, int cg) {
        rec.orbits.push_back({label, codim, cg});
        return static_cast<int>(rec.orbits.size()) - 1;
    }

    int vertex(const std::string& label, int orbit_idx) {
        rec.quiver.quiver.vertices.push_back(label);
        rec.vertex_orbit.push_back(orbit_idx);
        return static_cast<int>(rec.quiver.quiver.vertices.size()) - 1;
    }

    void two_cycle(int a_idx, int b_idx) {
        rec.quiver.relations.push_back({a_idx, b_idx});
        rec.quiver.relations.push_back({b_idx, a_idx});
    }

    // doubled chain with all 2-cycles zero; a single vertex gets no arrows
    void chain(const std::vector<int>& verts) {
        for (size_t k = 0; k + 1 < verts.size(); ++k) {
            ++arrow_seq;
            int a = add_arrow("a" + std::to_string(arrow_seq), verts[k], verts[k + 1]);
            int b = add_arrow("b" + std::to_string(arrow_seq), verts[k + 1], verts[k]);
            two_cycle(a, b);
        }
    }

    // doubled chain with every length-2 composition zero
    void chain_all_compositions_zero(const std::vector<int>& verts) {
        std::vector<int> arrows;
        for (size_t k = 0; k + 1 < verts.size(); ++k) {
            ++arrow_seq;
            arrows.push_back(add_arrow("a" + std::to_string(arrow_seq), verts[k], verts[k + 1]));
            arrows.push_back(add_arrow("b" + std::to_string(arrow_seq), verts[k + 1], verts[k]));
        }
        const auto& q = rec.quiver.quiver;
        for (int x : arrows)
            for (int y : arrows)
                if (q.arrows[static_cast<size_t>(x)].head == q.arrows[static_cast<size_t>(y)].tail)
                    rec.quiver.relations.push_back({x, y});
    }

    // doubled 5-chain plus a top vertex over chain position `mid`, with all
    // 2-cycles zero and every composition through the top arrows zero
    void chain_with_top(const std::vector<int>& verts, int top, size_t mid) {
        std::vector<int> chain_arrows;
        for (size_t k = 0; k + 1 < verts.size(); ++k) {
            ++arrow_seq;
            int a = add_arrow("a" + std::to_string(arrow_seq), verts[k], verts[k + 1]);
            int b = add_arrow("b" + std::to_string(arrow_seq), verts[k + 1], verts[k]);
            two_cycle(a, b);
            chain_arrows.push_back(a);
            chain_arrows.push_back(b);
        }
        int alpha = add_arrow("alpha", top, verts[mid]);
        int beta = add_arrow("beta", verts[mid], top);
        two_cycle(alpha, beta);
        const auto& q = rec.quiver.quiver;
        for (int x : chain_arrows) {
            if (q.arrows[static_cast<size_t>(x)].tail == verts[mid])
                rec.quiver.relations.push_back({alpha, x});
            if (q.arrows[static_cast<size_t>(x)].head == verts[mid])
                rec.quiver.relations.push_back({x, beta});
        }
    }

    int add_arrow(const std::string& id, int tail, int head) {
        rec.quiver.quiver.arrows.push_back({id, tail, head});
        return static_cast<int>(rec.quiver.quiver.arrows.size()) - 1;
    }

    void total_closure_order() {
        for (size_t a = 0; a < rec.orbits.size(); ++a)
            for (size_t b = a + 1; b < rec.orbits.size(); ++b)
                rec.closure.push_back({static_cast<int>(a), static_cast<int>(b)});
    }

    CaseRecord finish() {
        rec.quiver.validate();
        return std::move(rec);
    }
};

long long binom2(long long k) { return k < 2 ? 0 : k * (k - 1) / 2; }

long long sp_codim(int n, int m, int r, int s) {
    return static_cast<long long>(2 * n - r) * (m - r) +
           static_cast<long long>(r - s) * (r - s - 1) / 2;
}

// admissible (r, s) pairs for Sp_2n x GL_m, in lexicographic order
std::vector<std::pair<int, int>> sp_orbit_pairs(int n, int m) {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r <= std::min(m, 2 * n); ++r)
        for (int s = 0; s <= r; s += 2)
            if (2 * r - 2 * n <= s) out.push_back({r, s});
    return out;
}

void add_sp_orbits(RecordBuilder& b, int n, int m) {
    auto pairs = sp_orbit_pairs(n, m);
    for (auto [r, s] : pairs) b.orbit(pair_label(r, s), sp_codim(n, m, r, s), 1);
    // closure order is the product order on (r, s)
    for (size_t a = 0; a < pairs.size(); ++a)
        for (size_t c = 0; c < pairs.size(); ++c) {
            if (a == c) continue;
            if (pairs[a].first <= pairs[c].first && pairs[a].second <= pairs[c].second)
                b.rec.closure.push_back({static_cast<int>(a), static_cast<int>(c)});
        }
}

std::vector<Rational> integer_roots(int from, int to, int step = 1) {
    std::vector<Rational> roots;
    for (int k = from; k <= to; k += step) roots.push_back(Rational(-k));
    std::sort(roots.begin(), roots.end());
    return roots;
}

CaseRecord build_gl(int m, int n) {
    if (m < 1 || n < 1) throw Error("gl_m_gl_n: m, n must be >= 1");
    if (m < n) std::swap(m, n);  // transpose equivalence
    RecordBuilder b({Family::GlmGln, m, n});
    b.rec.dim_space = static_cast<long long>(m) * n;
    for (int i = 0; i <= n; ++i)
        b.orbit(paren(i), static_cast<long long>(m - i) * (n - i), 1);
    b.total_closure_order();
    std::vector<int> verts;
    for (int i = 0; i <= n; ++i) verts.push_back(b.vertex(paren(i), i));
    if (m == n) {
        b.chain(verts);
        SemiInvariant f;
        f.degree = n;
        f.roots = integer_roots(1, n);
        b.rec.semi_invariant = f;
        FourierData fd;
        for (int k = 0; 2 * k <= n; ++k) fd.pairs.push_back({paren(k), paren(n - k)});
        b.rec.fourier = fd;
        b.rec.notes = {
            "rank-i orbits, connected stabilizers; simples in bijection with ranks",
            "chain of length n+1 from the composition series of the localization at the determinant",
            "b-function of the determinant has roots -1..-n",
            "Fourier involution reverses the chain (the structure sheaf maps to the delta module)",
        };
    } else {
        b.rec.notes = {
            "no semi-invariant for m != n; the category is semisimple",
            "all vertices isolated",
        };
    }
    return b.finish();
}

CaseRecord build_skew(int n) {
    if (n < 2) throw Error("skew: n must be >= 2");
    int r = n / 2;
    RecordBuilder b({Family::Skew, 0, n});
    b.rec.dim_space = binom2(n);
    for (int i = 0; i <= r; ++i) b.orbit(paren(i), binom2(n - 2 * i), 1);
    b.total_closure_order();
    std::vector<int> verts;
    for (int i = 0; i <= r; ++i) verts.push_back(b.vertex(paren(i), i));
    if (n % 2 == 0) {
        b.chain(verts);
        SemiInvariant f;
        f.degree = r;
        f.roots = integer_roots(1, n - 1, 2);  // -1, -3, ..., -(n-1)
        b.rec.semi_invariant = f;
        b.rec.notes = {"rank-2i orbits; Pfaffian semi-invariant of degree n/2",
                       "b-function roots are the odd negatives -1, -3, ..., -(n-1)"};
    } else {
        b.rec.notes = {"n odd: no semi-invariant, semisimple category, all vertices isolated"};
    }
    return b.finish();
}

CaseRecord build_symmetric(int n) {
    if (n < 1) throw Error("symmetric: n must be >= 1");
    RecordBuilder b({Family::Symmetric, 0, n});
    b.rec.dim_space = binom2(n + 1);
    for (int i = 0; i <= n; ++i) b.orbit(paren(i), binom2(n - i + 1), i == 0 ? 1 : 2);
    b.total_closure_order();
    int eps = n % 2;
    // two chains stepping by 2 with a final step of 1 resp. 2; everything
    // else is isolated
    std::vector<int> chain1_ranks, chain2_ranks;
    for (int k = 1 - eps; k <= n - 1; k += 2) chain1_ranks.push_back(k);
    chain1_ranks.push_back(n);
    for (int k = eps; k <= n - 2; k += 2) chain2_ranks.push_back(k);
    chain2_ranks.push_back(n);

    std::set<int> in1(chain1_ranks.begin(), chain1_ranks.end());
    std::set<int> in2(chain2_ranks.begin(), chain2_ranks.end());
    std::vector<int> chain1, chain2;
    for (int k : chain1_ranks) chain1.push_back(b.vertex(paren(k), k));
    for (int k : chain2_ranks) chain2.push_back(b.vertex(paren_prime(k), k));
    for (int k = 0; k <= n; ++k) {
        if (!in1.count(k) && k >= 1) b.vertex(paren(k), k);
        if (!in2.count(k) && k >= 1) b.vertex(paren_prime(k), k);
        if (k == 0 && !in1.count(0) && !in2.count(0)) b.vertex(paren(0), 0);
    }
    b.chain(chain1);
    b.chain(chain2);
    SemiInvariant f;
    f.degree = n;
    for (int k = 1; k <= n; ++k) f.roots.push_back(Rational(-(k + 1), 2));
    std::sort(f.roots.begin(), f.roots.end());
    b.rec.semi_invariant = f;
    FourierData fd;
    fd.pairs.push_back({paren(n), paren(0)});
    fd.partial = true;
    b.rec.fourier = fd;
    b.rec.notes = {
        "rank-i orbits; stabilizers of nonzero orbits have two components, so two local systems each",
        "primed vertices carry the sign local system; (0)' = (0)",
        "b-function of the symmetric determinant has roots -1, -3/2, ..., -(n+1)/2",
        "only the Fourier image of the structure sheaf (the delta module) is recorded; "
        "the rest of the involution is left unstated",
    };
    return b.finish();
}

CaseRecord build_sp2n_gl2(int n) {
    if (n < 2) throw Error("sp2n_gl2: n must be >= 2");
    RecordBuilder b({Family::Sp2nGl2, 2, n});
    b.rec.dim_space = 4LL * n;
    add_sp_orbits(b, n, 2);
    int o00 = b.rec.orbit_index("(0,0)"), o20 = b.rec.orbit_index("(2,0)");
    int o22 = b.rec.orbit_index("(2,2)"), o10 = b.rec.orbit_index("(1,0)");
    std::vector<int> chain{b.vertex("(0,0)", o00), b.vertex("(2,0)", o20),
                           b.vertex("(2,2)", o22)};
    b.vertex("(1,0)", o10);
    b.chain(chain);
    SemiInvariant f;
    f.degree = 2;
    f.roots = {Rational(-2 * n), Rational(-1)};
    b.rec.semi_invariant = f;
    b.rec.notes = {"orbits indexed by (rank, isometry rank)",
                   "Pfaffian-type semi-invariant of degree 2 with roots -1, -2n",
                   "(1,0) is an isolated vertex"};
    return b.finish();
}

CaseRecord build_sp2n_gl3(int n) {
    if (n < 2) throw Error("sp2n_gl3: n must be >= 2");
    RecordBuilder b({Family::Sp2nGl3, 3, n});
    b.rec.dim_space = 6LL * n;
    add_sp_orbits(b, n, 3);
    FourierData fd;
    if (n == 2) {
        std::vector<int> chain{b.vertex("(1,0)", b.rec.orbit_index("(1,0)")),
                               b.vertex("(2,0)", b.rec.orbit_index("(2,0)")),
                               b.vertex("(2,2)", b.rec.orbit_index("(2,2)"))};
        b.vertex("(3,2)", b.rec.orbit_index("(3,2)"));
        b.vertex("(0,0)", b.rec.orbit_index("(0,0)"));
        b.chain_all_compositions_zero(chain);
        fd.pairs = {{"(3,2)", "(0,0)"}, {"(2,2)", "(1,0)"}, {"(2,0)", "(2,0)"}};
        b.rec.notes = {
            "n = 2: no (3,0) orbit; three-vertex chain with all compositions zero",
            "the projective cover at (2,2) has length two, which forces the vanishing compositions",
            "Fourier swaps (2,2) with (1,0) and fixes (2,0)"};
    } else {
        std::vector<int> c1{b.vertex("(1,0)", b.rec.orbit_index("(1,0)")),
                            b.vertex("(3,0)", b.rec.orbit_index("(3,0)"))};
        std::vector<int> c2{b.vertex("(2,0)", b.rec.orbit_index("(2,0)")),
                            b.vertex("(2,2)", b.rec.orbit_index("(2,2)"))};
        b.vertex("(3,2)", b.rec.orbit_index("(3,2)"));
        b.vertex("(0,0)", b.rec.orbit_index("(0,0)"));
        b.chain(c1);
        b.chain(c2);
        fd.pairs = {{"(3,2)", "(0,0)"}, {"(2,2)", "(1,0)"}, {"(3,0)", "(2,0)"}};
        b.rec.notes = {
            "n >= 3: two two-vertex chains; (2,2) and (3,0) have incomparable closures",
            "characteristic cycles of all simples are irreducible with multiplicity one"};
    }
    b.rec.fourier = fd;
    return b.finish();
}

CaseRecord build_sp4_glm(int m) {
    if (m <= 4) throw Error("sp4_glm: m must be > 4");
    RecordBuilder b({Family::Sp4Glm, m, 2});
    b.rec.dim_space = 4LL * m;
    add_sp_orbits(b, 2, m);
    std::vector<int> chain{b.vertex("(2,0)", b.rec.orbit_index("(2,0)")),
                           b.vertex("(2,2)", b.rec.orbit_index("(2,2)"))};
    for (const char* lab : {"(0,0)", "(1,0)", "(3,2)", "(4,4)"})
        b.vertex(lab, b.rec.orbit_index(lab));
    b.chain(chain);
    b.rec.notes = {"m > 4: no semi-invariant; only (2,0) -- (2,2) are linked"};
    return b.finish();
}

CaseRecord build_sp4_gl4() {
    RecordBuilder b({Family::Sp4Gl4, 4, 2});
    b.rec.dim_space = 16;
    add_sp_orbits(b, 2, 4);
    std::vector<int> chain5{
        b.vertex("(0,0)", b.rec.orbit_index("(0,0)")),
        b.vertex("(1,0)", b.rec.orbit_index("(1,0)")),
        b.vertex("(2,2)", b.rec.orbit_index("(2,2)")),
        b.vertex("(3,2)", b.rec.orbit_index("(3,2)")),
        b.vertex("(4,4)", b.rec.orbit_index("(4,4)"))};
    int top = b.vertex("(2,0)", b.rec.orbit_index("(2,0)"));
    b.chain_with_top(chain5, top, 2);
    SemiInvariant f;
    f.degree = 4;
    f.roots = {Rational(-4), Rational(-3), Rational(-2), Rational(-1)};
    b.rec.semi_invariant = f;
    b.rec.notes = {
        "the one tame, representation-infinite case: five-vertex chain with (2,0) over (2,2)",
        "all compositions through the vertical arrows vanish",
        "degree-4 semi-invariant with roots -1, -2, -3, -4"};
    return b.finish();
}

CaseRecord build_sp2n(int n) {
    if (n < 1) throw Error("sp_2n: n must be >= 1");
    RecordBuilder b({Family::Sp2n, 0, n});
    b.rec.dim_space = 2LL * n;
    b.orbit(paren(0), 2LL * n, 1);
    b.orbit(paren(1), 0, 1);
    b.total_closure_order();
    b.vertex(paren(0), 0);
    b.vertex(paren(1), 1);
    FourierData fd;
    fd.pairs = {{"(0)", "(1)"}};
    b.rec.fourier = fd;
    b.rec.notes = {"two isolated vertices; the Fourier transform exchanges the delta module "
                   "and the structure sheaf"};
    return b.finish();
}

CaseRecord build_spin10() {
    RecordBuilder b({Family::Spin10, 0, 0});
    b.rec.dim_space = 16;
    b.orbit(paren(0), 16, 1);
    b.orbit(paren(1), 5, 1);
    b.orbit(paren(2), 0, 1);
    b.total_closure_order();
    for (int i = 0; i < 3; ++i) b.vertex(paren(i), i);
    b.rec.notes = {"no semi-invariant; three isolated vertices"};
    return b.finish();
}

CaseRecord build_so_n(int n) {
    if (n < 3) throw Error("so_n: n must be >= 3");
    RecordBuilder b({Family::SoN, 0, n});
    b.rec.dim_space = n;
    b.orbit(paren(0), n, 1);
    b.orbit(paren(1), 1, 1);
    b.orbit(paren(2), 0, 2);
    b.total_closure_order();
    if (n % 2 == 0) {
        std::vector<int> chain{b.vertex("(0)", 0), b.vertex("(1)", 1), b.vertex("(2)", 2)};
        b.vertex("(2)'", 2);
        b.chain(chain);
    } else {
        std::vector<int> c1{b.vertex("(1)", 1), b.vertex("(2)", 2)};
        std::vector<int> c2{b.vertex("(0)", 0), b.vertex("(2)'", 2)};
        b.chain(c1);
        b.chain(c2);
    }
    SemiInvariant f;
    f.degree = 2;
    f.roots = {Rational(-n, 2), Rational(-1)};
    std::sort(f.roots.begin(), f.roots.end());
    b.rec.semi_invariant = f;
    b.rec.notes = {"quadric semi-invariant with roots -1, -n/2",
                   "two local systems on the open orbit; the chain shape depends on the parity of n"};
    return b.finish();
}

// Spin_7 and G_2 share orbit structure and quiver shape with SO_n on the
// same space (n = 8 resp. 7).
RecordBuilder build_like_so(Family fam, int effective_n, long long dim, long long mid_codim) {
    RecordBuilder b({fam, 0, 0});
    b.rec.dim_space = dim;
    b.orbit(paren(0), dim, 1);
    b.orbit(paren(1), mid_codim, 1);
    b.orbit(paren(2), 0, 2);
    b.total_closure_order();
    if (effective_n % 2 == 0) {
        std::vector<int> chain{b.vertex("(0)", 0), b.vertex("(1)", 1), b.vertex("(2)", 2)};
        b.vertex("(2)'", 2);
        b.chain(chain);
    } else {
        std::vector<int> c1{b.vertex("(1)", 1), b.vertex("(2)", 2)};
        std::vector<int> c2{b.vertex("(0)", 0), b.vertex("(2)'", 2)};
        b.chain(c1);
        b.chain(c2);
    }
    SemiInvariant f;
    f.degree = 2;
    f.roots = {Rational(-effective_n, 2), Rational(-1)};
    std::sort(f.roots.begin(), f.roots.end());
    b.rec.semi_invariant = f;
    return b;  // caller adds notes and finishes
}

CaseRecord build_spin7() {
    RecordBuilder b = build_like_so(Family::Spin7, 8, 8, 1);
    b.rec.notes = {"same orbits and category shape as the even orthogonal case on C^8"};
    return b.finish();
}

CaseRecord build_g2() {
    RecordBuilder b = build_like_so(Family::G2, 7, 7, 1);
    b.rec.notes = {"same orbits and category shape as the odd orthogonal case on C^7"};
    return b.finish();
}

CaseRecord build_spin9() {
    RecordBuilder b({Family::Spin9, 0, 0});
    b.rec.dim_space = 16;
    b.orbit(paren(0), 16, 1);
    b.orbit(paren(1), 5, 1);
    b.orbit(paren(2), 1, 1);
    b.orbit(paren(3), 0, 2);
    b.total_closure_order();
    std::vector<int> chain{b.vertex("(0)", 0), b.vertex("(2)", 2), b.vertex("(3)", 3)};
    b.vertex("(1)", 1);
    b.vertex("(3)'", 3);
    b.chain(chain);
    SemiInvariant f;
    f.degree = 2;
    f.roots = {Rational(-8), Rational(-1)};
    b.rec.semi_invariant = f;
    b.rec.notes = {"the degree-1 hypersurface orbit splits off a codimension-5 orbit (1), "
                   "which stays isolated"};
    return b.finish();
}

CaseRecord build_e6() {
    RecordBuilder b({Family::E6, 0, 0});
    b.rec.dim_space = 27;
    b.orbit(paren(0), 27, 1);
    b.orbit(paren(1), 10, 1);
    b.orbit(paren(2), 1, 1);
    b.orbit(paren(3), 0, 1);
    b.total_closure_order();
    std::vector<int> chain;
    for (int i = 0; i < 4; ++i) chain.push_back(b.vertex(paren(i), i));
    b.chain(chain);
    SemiInvariant f;
    f.degree = 3;
    f.roots = {Rational(-9), Rational(-5), Rational(-1)};
    b.rec.semi_invariant = f;
    b.rec.notes = {"cubic semi-invariant with roots -1, -5, -9",
                   "the record stores the base group; covering groups can only add isolated vertices"};
    return b.finish();
}

}  // namespace

CaseRecord get_case(const CaseId& id) {
    switch (id.family) {
        case Family::GlmGln: return build_gl(id.m, id.n);
        case Family::Skew: return build_skew(id.n);
        case Family::Symmetric: return build_symmetric(id.n);
        case Family::Sp2nGl2: return build_sp2n_gl2(id.n);
        case Family::Sp2nGl3: return build_sp2n_gl3(id.n);
        case Family::Sp4Glm: return build_sp4_glm(id.m);
        case Family::Sp4Gl4: return build_sp4_gl4();
        case Family::Sp2n: return build_sp2n(id.n);
        case Family::Spin10: return build_spin10();
        case Family::SoN: return build_so_n(id.n);
        case Family::Spin7: return build_spin7();
        case Family::Spin9: return build_spin9();
        case Family::G2: return build_g2();
        case Family::E6: return build_e6();
    }
    throw Error("unreachable case family");
}

long long orbit_codim(const CaseId& id, const std::string& label) {
    CaseRecord rec = get_case(id);
    return rec.orbits[static_cast<size_t>(rec.orbit_index(label))].codim;
}

std::optional<FourierData> fourier_permutation(const CaseId& id) { return get_case(id).fourier; }

std::optional<PyasetskiiData> pyasetskii(const CaseId& id) {
    CaseRecord rec = get_case(id);
    if (!rec.fourier) return std::nullopt;
    PyasetskiiData out;
    out.partial = rec.fourier->partial;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& [va, vb] : rec.fourier->pairs) {
        int oa = rec.vertex_orbit[static_cast<size_t>(rec.quiver.quiver.vertex_index(va))];
        int ob = rec.vertex_orbit[static_cast<size_t>(rec.quiver.quiver.vertex_index(vb))];
        std::string la = rec.orbits[static_cast<size_t>(oa)].label;
        std::string lb = rec.orbits[static_cast<size_t>(ob)].label;
        if (lb < la) std::swap(la, lb);
        if (seen.insert({la, lb}).second) out.pairs.push_back({la, lb});
    }
    return out;
}

CharCycle characteristic_cycle(const CaseId& id, const std::string& vertex) {
    CaseRecord rec = get_case(id);
    int vi = rec.quiver.quiver.vertex_index(vertex);
    int oi = rec.vertex_orbit[static_cast<size_t>(vi)];
    const OrbitInfo& orbit = rec.orbits[static_cast<size_t>(oi)];
    CharCycle out;
    if (id.family == Family::Sp2nGl3 && id.n >= 3) {
        // every simple here has irreducible characteristic variety
        out.known = true;
        out.components = {{orbit.label, 1}};
        return out;
    }
    if (orbit.codim == rec.dim_space && orbit.component_group_order == 1) {
        // delta module at the origin: the zero-fiber conormal, multiplicity one
        out.known = true;
        out.components = {{orbit.label, 1}};
        return out;
    }
    out.known = false;  // multiplicity-free, components undetermined
    return out;
}

std::vector<long long> projective_cover_dims(const CaseId& id, const std::string& vertex) {
    CaseRecord rec = get_case(id);
    int vi = rec.quiver.quiver.vertex_index(vertex);
    auto cartan = cartan_matrix(rec.quiver);
    return cartan[static_cast<size_t>(vi)];
}

std::vector<InvariantCheck> verify_case_invariants(const CaseId& id) {
    std::vector<InvariantCheck> checks;
    CaseRecord rec = get_case(id);
    auto push = [&](const std::string& name, bool pass, const std::string& note) {
        checks.push_back({name, pass, note});
    };

    bool finite = rec.quiver.is_finite_dimensional();
    push("quiver-finite", finite, "nonzero paths form a finite set");

    bool cartan01 = true;
    if (finite)
        for (const auto& row : cartan_matrix(rec.quiver))
            for (long long e : row)
                if (e < 0 || e > 1) cartan01 = false;
    push("cartan-entries-01", finite && cartan01, "at most one nonzero path between any two vertices");

    push("self-opposite", is_self_opposite(rec.quiver), "presentation isomorphic to its opposite");

    int cg_sum = 0;
    for (const auto& o : rec.orbits) cg_sum += o.component_group_order;
    push("vertex-count", static_cast<int>(rec.quiver.quiver.vertices.size()) == cg_sum,
         "one vertex per orbit local system");

    std::vector<int> per_orbit(rec.orbits.size(), 0);
    for (int oi : rec.vertex_orbit) per_orbit[static_cast<size_t>(oi)]++;
    bool vertex_orbit_ok = true;
    for (size_t i = 0; i < rec.orbits.size(); ++i)
        if (per_orbit[i] != rec.orbits[i].component_group_order) vertex_orbit_ok = false;
    push("vertices-per-orbit", vertex_orbit_ok,
         "vertex multiplicity equals the component group order");

    if (rec.semi_invariant) {
        std::set<Rational> distinct(rec.semi_invariant->roots.begin(),
                                    rec.semi_invariant->roots.end());
        bool ok = static_cast<int>(distinct.size()) ==
                      static_cast<int>(rec.semi_invariant->roots.size()) &&
                  static_cast<int>(distinct.size()) == rec.semi_invariant->degree;
        bool negative = true;
        for (const auto& r : rec.semi_invariant->roots)
            if (r >= 0) negative = false;
        push("roots-count-equals-degree", ok, "distinct b-function roots match deg f");
        push("roots-negative", negative, "all b-function roots are negative rationals");
    }

    if (rec.fourier) {
        std::vector<std::pair<int, int>> forced;
        bool labels_ok = true;
        try {
            for (const auto& [a, bb] : rec.fourier->pairs)
                forced.push_back({rec.quiver.quiver.vertex_index(a),
                                  rec.quiver.quiver.vertex_index(bb)});
        } catch (const Error&) {
            labels_ok = false;
        }
        bool ok = labels_ok;
        if (labels_ok) {
            if (rec.fourier->partial) {
                ok = find_involutive_automorphism(rec.quiver, forced).has_value();
            } else {
                std::vector<int> perm(rec.quiver.quiver.vertices.size());
                std::vector<bool> set(perm.size(), false);
                for (auto [a, bb] : forced) {
                    perm[static_cast<size_t>(a)] = bb;
                    perm[static_cast<size_t>(bb)] = a;
                    set[static_cast<size_t>(a)] = set[static_cast<size_t>(bb)] = true;
                }
                for (bool s : set) ok = ok && s;
                if (ok) {
                    for (size_t i = 0; i < perm.size(); ++i)
                        if (perm[static_cast<size_t>(perm[i])] != static_cast<int>(i)) ok = false;
                }
                if (ok) ok = is_presentation_automorphism(rec.quiver, perm);
            }
        }
        push(rec.fourier->partial ? "fourier-extends-to-involutive-automorphism"
                                  : "fourier-involutive-automorphism",
             ok, "Fourier data respects the quiver");
    }

    // closure order sanity
    bool antisym = true, transitive = true, codim_mono = true;
    for (const auto& [a, b] : rec.closure) {
        if (rec.closure_leq(b, a)) antisym = false;
        if (rec.orbits[static_cast<size_t>(a)].codim <= rec.orbits[static_cast<size_t>(b)].codim)
            codim_mono = false;
        for (const auto& [c, d] : rec.closure)
            if (b == c && !rec.closure_leq(a, d)) transitive = false;
    }
    push("closure-partial-order", antisym && transitive, "strict containment is a partial order");
    push("closure-codim-decreasing", codim_mono, "codimension drops strictly along containment");

    int open_count = 0, zero_ok = 0;
    for (const auto& o : rec.orbits) {
        if (o.codim == 0) open_count++;
        if (o.codim == rec.dim_space) zero_ok++;
    }
    push("unique-open-orbit", open_count == 1, "exactly one orbit of codimension 0");
    push("zero-orbit-codim", zero_ok == 1, "exactly one orbit of codimension dim X");
    return checks;
}

std::vector<CaseId> grid_cases(int lo, int hi) {
    std::vector<CaseId> out;
    for (int m = lo; m <= hi; ++m)
        for (int n = lo; n <= m; ++n) out.push_back({Family::GlmGln, m, n});
    for (int n = lo; n <= hi; ++n) out.push_back({Family::Skew, 0, n});
    for (int n = lo; n <= hi; ++n) out.push_back({Family::Symmetric, 0, n});
    for (int n = std::max(lo, 2); n <= hi; ++n) out.push_back({Family::Sp2nGl2, 2, n});
    for (int n = std::max(lo, 2); n <= hi; ++n) out.push_back({Family::Sp2nGl3, 3, n});
    for (int m = std::max(lo, 5); m <= hi; ++m) out.push_back({Family::Sp4Glm, m, 2});
    out.push_back({Family::Sp4Gl4, 4, 2});
    for (int n = lo; n <= hi; ++n) out.push_back({Family::Sp2n, 0, n});
    out.push_back({Family::Spin10, 0, 0});
    for (int n = std::max(lo, 3); n <= hi; ++n) out.push_back({Family::SoN, 0, n});
    out.push_back({Family::Spin7, 0, 0});
    out.push_back({Family::Spin9, 0, 0});
    out.push_back({Family::G2, 0, 0});
    out.push_back({Family::E6, 0, 0});
    return out;
}

}  // namespace qv::atlas
