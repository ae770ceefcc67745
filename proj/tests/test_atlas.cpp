#include <doctest.h>

#include <set>

#include "qv/atlas.hpp"
#include "qv/quiver.hpp"

using namespace qv;
using namespace qv::atlas;

namespace {

// the presentation induced on the non-isolated vertices
QuiverPresentation linked_part(const QuiverPresentation& pres) {
    std::set<int> linked;
    for (const auto& a : pres.quiver.arrows) {
        linked.insert(a.tail);
        linked.insert(a.head);
    }
    QuiverPresentation out;
    std::vector<int> new_index(pres.quiver.vertices.size(), -1);
    for (int v : linked) {
        new_index[static_cast<size_t>(v)] = static_cast<int>(out.quiver.vertices.size());
        out.quiver.vertices.push_back(pres.quiver.vertices[static_cast<size_t>(v)]);
    }
    for (const auto& a : pres.quiver.arrows)
        out.quiver.arrows.push_back({a.id, new_index[static_cast<size_t>(a.tail)],
                                     new_index[static_cast<size_t>(a.head)]});
    out.relations = pres.relations;
    return out;
}

}  // namespace

TEST_CASE("the family list has fourteen entries") {
    auto families = list_cases();
    CHECK(families.size() == 14);
    std::set<std::string> tags;
    for (const auto& f : families) tags.insert(f.tag);
    CHECK(tags.count("sp4_gl4") == 1);
    CHECK(tags.count("e6") == 1);
    CHECK(tags.size() == 14);
    CHECK(family_from_tag("skew") == Family::Skew);
    CHECK_THROWS_AS(family_from_tag("so"), Error);
}

TEST_CASE("square matrices: the doubled chain with determinant data") {
    for (int n = 1; n <= 5; ++n) {
        CaseRecord rec = get_case({Family::GlmGln, n, n});
        CHECK(rec.dim_space == n * n);
        CHECK(static_cast<int>(rec.orbits.size()) == n + 1);
        CHECK(presentation_isomorphic(rec.quiver, make_AA(n + 1)));
        REQUIRE(rec.semi_invariant.has_value());
        CHECK(rec.semi_invariant->degree == n);
        REQUIRE(static_cast<int>(rec.semi_invariant->roots.size()) == n);
        for (int k = 1; k <= n; ++k)
            CHECK(std::count(rec.semi_invariant->roots.begin(), rec.semi_invariant->roots.end(),
                             Rational(-k)) == 1);
    }
}

TEST_CASE("non-square matrices are semisimple") {
    CaseRecord rec = get_case({Family::GlmGln, 3, 2});
    CHECK(rec.orbits.size() == 3);
    CHECK(rec.quiver.quiver.arrows.empty());
    CHECK_FALSE(rec.semi_invariant.has_value());
    CHECK_FALSE(rec.fourier.has_value());
    // the transpose-equivalent request gives the same record
    CaseRecord swapped = get_case({Family::GlmGln, 2, 3});
    CHECK(swapped.orbits.size() == 3);
    CHECK(swapped.quiver.quiver.arrows.empty());
}

TEST_CASE("skew-symmetric matrices") {
    CaseRecord even = get_case({Family::Skew, 0, 6});
    CHECK(even.dim_space == 15);
    CHECK(even.orbits.size() == 4);
    CHECK(presentation_isomorphic(even.quiver, make_AA(4)));
    REQUIRE(even.semi_invariant.has_value());
    CHECK(even.semi_invariant->degree == 3);  // Pfaffian
    std::vector<Rational> expect{-5, -3, -1};
    CHECK(even.semi_invariant->roots == expect);

    CaseRecord odd = get_case({Family::Skew, 0, 5});
    CHECK(odd.quiver.quiver.arrows.empty());
    CHECK_FALSE(odd.semi_invariant.has_value());
}

TEST_CASE("symmetric matrices at n = 3: the worked structure") {
    CaseRecord rec = get_case({Family::Symmetric, 0, 3});
    CHECK(rec.dim_space == 6);
    CHECK(rec.quiver.quiver.vertices.size() == 7);
    // chains {(0),(2),(3)} and {(1)',(3)'}; isolated {(1),(2)'}
    std::vector<std::string> expect = {"(0)", "(2)", "(3)", "(1)'", "(3)'", "(1)", "(2)'"};
    CHECK(rec.quiver.quiver.vertices == expect);
    CHECK(rec.quiver.quiver.arrows.size() == 6);  // 2 + 1 doubled steps
    auto degree = [&](const std::string& label) {
        int vi = rec.quiver.quiver.vertex_index(label);
        int d = 0;
        for (const auto& a : rec.quiver.quiver.arrows) d += (a.tail == vi) + (a.head == vi);
        return d;
    };
    CHECK(degree("(1)") == 0);
    CHECK(degree("(2)'") == 0);
    CHECK(degree("(2)") == 4);
    REQUIRE(rec.semi_invariant.has_value());
    std::vector<Rational> roots{-2, Rational(-3, 2), -1};
    CHECK(rec.semi_invariant->roots == roots);
    // component groups: trivial at the origin, order two elsewhere
    CHECK(rec.orbits[0].component_group_order == 1);
    for (size_t i = 1; i < rec.orbits.size(); ++i)
        CHECK(rec.orbits[i].component_group_order == 2);
}

TEST_CASE("symmetric matrices at n = 2") {
    CaseRecord rec = get_case({Family::Symmetric, 0, 2});
    // chains {(1),(2)} and {(0),(2)'}; (1)' isolated
    CHECK(rec.quiver.quiver.vertices ==
          std::vector<std::string>{"(1)", "(2)", "(0)", "(2)'", "(1)'"});
    CHECK(rec.quiver.quiver.arrows.size() == 4);
    std::vector<Rational> roots{Rational(-3, 2), -1};
    CHECK(rec.semi_invariant->roots == roots);
}

TEST_CASE("symmetric matrices at n = 4: nine vertices, four roots") {
    CaseRecord rec = get_case({Family::Symmetric, 0, 4});
    CHECK(rec.quiver.quiver.vertices.size() == 9);
    REQUIRE(rec.semi_invariant.has_value());
    CHECK(rec.semi_invariant->degree == 4);
    CHECK(rec.semi_invariant->roots.size() == 4);
    std::vector<Rational> roots{Rational(-5, 2), -2, Rational(-3, 2), -1};
    CHECK(rec.semi_invariant->roots == roots);
}

TEST_CASE("symplectic times rank two") {
    CaseRecord rec = get_case({Family::Sp2nGl2, 2, 3});
    CHECK(rec.dim_space == 12);
    std::vector<long long> codims;
    for (const auto& o : rec.orbits) codims.push_back(o.codim);
    CHECK(codims == std::vector<long long>{12, 5, 1, 0});  // 4n, 2n-1, 1, 0 at n=3
    REQUIRE(rec.semi_invariant.has_value());
    std::vector<Rational> roots{-6, -1};
    CHECK(rec.semi_invariant->roots == roots);
}

TEST_CASE("symplectic times rank three, both regimes") {
    CaseRecord n2 = get_case({Family::Sp2nGl3, 3, 2});
    CHECK(n2.orbits.size() == 5);  // no (3,0) orbit at n = 2
    // the linked component is the three-vertex chain with all compositions
    // zero; (3,2) and (0,0) stay isolated
    CHECK(presentation_isomorphic(linked_part(n2.quiver), make_AA3c()));
    CHECK(n2.quiver.quiver.vertices.size() == 5);
    CHECK_FALSE(n2.semi_invariant.has_value());

    CaseRecord n3 = get_case({Family::Sp2nGl3, 3, 3});
    CHECK(n3.orbits.size() == 6);
    std::vector<long long> codims;
    for (const auto& o : n3.orbits) codims.push_back(o.codim);
    CHECK(codims == std::vector<long long>{18, 10, 5, 4, 3, 0});
    // (2,2) and (3,0) have incomparable closures
    int i22 = n3.orbit_index("(2,2)"), i30 = n3.orbit_index("(3,0)");
    CHECK_FALSE(n3.closure_leq(i22, i30));
    CHECK_FALSE(n3.closure_leq(i30, i22));
}

TEST_CASE("orbit codimension lookups") {
    CHECK(orbit_codim({Family::Sp2nGl3, 3, 2}, "(2,0)") == 3);
    CHECK(orbit_codim({Family::Sp2nGl3, 3, 3}, "(3,2)") == 0);
    CHECK(orbit_codim({Family::Sp4Glm, 5, 2}, "(1,0)") == 12);  // 3m - 3
    CHECK(orbit_codim({Family::GlmGln, 4, 3}, "(1)") == 6);
    CHECK_THROWS_AS(orbit_codim({Family::Sp2nGl3, 3, 2}, "(3,0)"), Error);
}

TEST_CASE("sp4 with large rank") {
    CaseRecord rec = get_case({Family::Sp4Glm, 5, 2});
    std::vector<long long> codims;
    for (const auto& o : rec.orbits) codims.push_back(o.codim);
    CHECK(codims == std::vector<long long>{20, 12, 7, 6, 2, 0});
    CHECK(rec.quiver.quiver.arrows.size() == 2);
    CHECK_FALSE(rec.semi_invariant.has_value());
    CHECK_THROWS_AS(get_case({Family::Sp4Glm, 4, 2}), Error);
}

TEST_CASE("sp4 times gl4 carries the six-vertex shape") {
    CaseRecord rec = get_case({Family::Sp4Gl4, 4, 2});
    std::vector<long long> codims;
    for (const auto& o : rec.orbits) codims.push_back(o.codim);
    CHECK(codims == std::vector<long long>{16, 9, 5, 4, 1, 0});
    CHECK(presentation_isomorphic(rec.quiver, make_EE6()));
    REQUIRE(rec.semi_invariant.has_value());
    CHECK(rec.semi_invariant->degree == 4);
    std::vector<Rational> roots{-4, -3, -2, -1};
    CHECK(rec.semi_invariant->roots == roots);
}

TEST_CASE("the remaining families") {
    CaseRecord sp = get_case({Family::Sp2n, 0, 4});
    CHECK(sp.orbits.size() == 2);
    CHECK(sp.quiver.quiver.arrows.empty());
    REQUIRE(sp.fourier.has_value());

    CaseRecord s10 = get_case({Family::Spin10, 0, 0});
    CHECK(s10.orbits.size() == 3);
    CHECK(s10.quiver.quiver.arrows.empty());
    std::vector<long long> s10_codims;
    for (const auto& o : s10.orbits) s10_codims.push_back(o.codim);
    CHECK(s10_codims == std::vector<long long>{16, 5, 0});

    CaseRecord so_even = get_case({Family::SoN, 0, 4});
    CHECK(so_even.quiver.quiver.vertices ==
          std::vector<std::string>{"(0)", "(1)", "(2)", "(2)'"});
    CHECK(so_even.quiver.quiver.arrows.size() == 4);
    std::vector<Rational> so4_roots{-2, -1};
    CHECK(so_even.semi_invariant->roots == so4_roots);

    CaseRecord so_odd = get_case({Family::SoN, 0, 5});
    CHECK(so_odd.quiver.quiver.arrows.size() == 4);  // two 2-vertex chains
    std::vector<Rational> so5_roots{Rational(-5, 2), -1};
    CHECK(so_odd.semi_invariant->roots == so5_roots);
    CHECK_THROWS_AS(get_case({Family::SoN, 0, 2}), Error);

    CaseRecord s7 = get_case({Family::Spin7, 0, 0});
    CHECK(s7.dim_space == 8);
    std::vector<Rational> s7_roots{-4, -1};
    CHECK(s7.semi_invariant->roots == s7_roots);

    CaseRecord s9 = get_case({Family::Spin9, 0, 0});
    CHECK(s9.quiver.quiver.vertices ==
          std::vector<std::string>{"(0)", "(2)", "(3)", "(1)", "(3)'"});
    std::vector<long long> s9_codims;
    for (const auto& o : s9.orbits) s9_codims.push_back(o.codim);
    CHECK(s9_codims == std::vector<long long>{16, 5, 1, 0});
    std::vector<Rational> s9_roots{-8, -1};
    CHECK(s9.semi_invariant->roots == s9_roots);

    CaseRecord g2 = get_case({Family::G2, 0, 0});
    CHECK(g2.dim_space == 7);
    std::vector<Rational> g2_roots{Rational(-7, 2), -1};
    CHECK(g2.semi_invariant->roots == g2_roots);

    CaseRecord e6 = get_case({Family::E6, 0, 0});
    CHECK(e6.dim_space == 27);
    CHECK(presentation_isomorphic(e6.quiver, make_AA(4)));
    REQUIRE(e6.semi_invariant.has_value());
    CHECK(e6.semi_invariant->degree == 3);
    std::vector<Rational> e6_roots{-9, -5, -1};
    CHECK(e6.semi_invariant->roots == e6_roots);
    std::vector<long long> e6_codims;
    for (const auto& o : e6.orbits) e6_codims.push_back(o.codim);
    CHECK(e6_codims == std::vector<long long>{27, 10, 1, 0});
}

TEST_CASE("fourier data") {
    auto fd = fourier_permutation({Family::Sp2nGl3, 3, 3});
    REQUIRE(fd.has_value());
    CHECK_FALSE(fd->partial);
    std::set<std::set<std::string>> got, expect;
    for (const auto& [a, b] : fd->pairs) got.insert({a, b});
    expect = {{"(3,2)", "(0,0)"}, {"(2,2)", "(1,0)"}, {"(3,0)", "(2,0)"}};
    CHECK(got == expect);

    // n = 2 variant: the middle vertex is fixed
    auto fd2 = fourier_permutation({Family::Sp2nGl3, 3, 2});
    REQUIRE(fd2.has_value());
    bool mid_fixed = false;
    for (const auto& [a, b] : fd2->pairs)
        if (a == "(2,0)" && b == "(2,0)") mid_fixed = true;
    CHECK(mid_fixed);

    // full chain reversal on a square matrix space
    auto fgl = fourier_permutation({Family::GlmGln, 4, 4});
    REQUIRE(fgl.has_value());
    CHECK_FALSE(fgl->partial);
    for (const auto& [a, b] : fgl->pairs) {
        int ka = std::stoi(a.substr(1, a.size() - 2));
        int kb = std::stoi(b.substr(1, b.size() - 2));
        CHECK(ka + kb == 4);
    }

    // symmetric case: recorded only at the endpoints
    auto fs = fourier_permutation({Family::Symmetric, 0, 4});
    REQUIRE(fs.has_value());
    CHECK(fs->partial);
    REQUIRE(fs->pairs.size() == 1);
    CHECK(fs->pairs[0] == std::pair<std::string, std::string>{"(4)", "(0)"});

    // the delta module and the structure sheaf swap on the symplectic space
    auto fsp = fourier_permutation({Family::Sp2n, 0, 3});
    REQUIRE(fsp.has_value());
    REQUIRE(fsp->pairs.size() == 1);
    CHECK(fsp->pairs[0] == std::pair<std::string, std::string>{"(0)", "(1)"});

    CHECK_FALSE(fourier_permutation({Family::Skew, 0, 6}).has_value());
    CHECK_FALSE(fourier_permutation({Family::E6, 0, 0}).has_value());
}

TEST_CASE("pyasetskii pairing follows fourier and swaps zero with open") {
    auto pd = pyasetskii({Family::Sp2nGl3, 3, 3});
    REQUIRE(pd.has_value());
    std::set<std::set<std::string>> got;
    for (const auto& [a, b] : pd->pairs) got.insert({a, b});
    std::set<std::set<std::string>> expect = {
        {"(0,0)", "(3,2)"}, {"(1,0)", "(2,2)"}, {"(2,0)", "(3,0)"}};
    CHECK(got == expect);

    auto pgl = pyasetskii({Family::GlmGln, 3, 3});
    REQUIRE(pgl.has_value());
    bool zero_open = false;
    for (const auto& [a, b] : pgl->pairs)
        if ((a == "(0)" && b == "(3)") || (a == "(3)" && b == "(0)")) zero_open = true;
    CHECK(zero_open);

    CHECK_FALSE(pyasetskii({Family::Spin10, 0, 0}).has_value());
}

TEST_CASE("characteristic cycles") {
    CaseId id{Family::Sp2nGl3, 3, 3};
    auto cc = characteristic_cycle(id, "(2,2)");
    REQUIRE(cc.known);
    REQUIRE(cc.components.size() == 1);
    CHECK(cc.components[0] == std::pair<std::string, int>{"(2,2)", 1});

    // the delta module at the origin is known exactly everywhere
    auto cc0 = characteristic_cycle({Family::E6, 0, 0}, "(0)");
    REQUIRE(cc0.known);
    CHECK(cc0.components[0] == std::pair<std::string, int>{"(0)", 1});

    // elsewhere only multiplicity-freeness is recorded
    auto ccu = characteristic_cycle({Family::Sp4Gl4, 4, 2}, "(2,0)");
    CHECK_FALSE(ccu.known);
    CHECK_THROWS_AS(characteristic_cycle(id, "(9,9)"), Error);
}

TEST_CASE("projective cover dimension vectors are cartan rows") {
    auto dims = projective_cover_dims({Family::Sp2nGl3, 3, 2}, "(2,2)");
    long long total = 0;
    for (long long d : dims) total += d;
    CHECK(total == 2);  // the cover has length two

    auto gl = projective_cover_dims({Family::GlmGln, 3, 3}, "(1)");
    CHECK(gl == std::vector<long long>{1, 1, 1, 1});

    auto iso = projective_cover_dims({Family::Sp2nGl3, 3, 2}, "(0,0)");
    long long iso_total = 0;
    for (long long d : iso) iso_total += d;
    CHECK(iso_total == 1);  // isolated vertex: the simple is projective
}

TEST_CASE("invariant grid over the parameter window") {
    for (const auto& id : grid_cases(2, 6)) {
        auto checks = verify_case_invariants(id);
        for (const auto& c : checks) {
            INFO(id.to_string(), ": ", c.name);
            CHECK(c.pass);
        }
    }
    CHECK(grid_cases(2, 6).size() == 52);
}

TEST_CASE("vertex count equals the sum of component group orders") {
    for (const auto& id : grid_cases(2, 6)) {
        auto rec = get_case(id);
        int total = 0;
        for (const auto& o : rec.orbits) total += o.component_group_order;
        CHECK(static_cast<int>(rec.quiver.quiver.vertices.size()) == total);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(get_case({Family::GlmGln, 0, 1}), Error);
    CHECK_THROWS_AS(get_case({Family::Skew, 0, 1}), Error);
    CHECK_THROWS_AS(get_case({Family::Sp2nGl2, 2, 1}), Error);
    CHECK_THROWS_AS(get_case({Family::Sp2nGl3, 3, 1}), Error);
    CHECK_THROWS_AS(get_case({Family::Sp2n, 0, 0}), Error);
}
