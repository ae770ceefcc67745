#include <doctest.h>

#include "qv/detrng.hpp"
#include "qv/moment.hpp"

using namespace qv;
using namespace qv::moment;

TEST_CASE("polynomial arithmetic and evaluation") {
    MultiPoly five = MultiPoly::constant(5);
    CHECK(five.eval({}) == 5);

    MultiPoly x = MultiPoly::variable(0), y = MultiPoly::variable(1);
    MultiPoly xy = x * y;
    CHECK(xy.eval({2, 3}) == 6);
    CHECK((xy + xy).eval({2, 3}) == 12);
    CHECK((xy - xy).is_zero());
    CHECK(xy.pow(3).eval({2, 3}) == 216);
    CHECK_THROWS_WITH_AS(xy.eval({2}), doctest::Contains("assign"), Error);

    // d/dx (x^2 y + x) = 2xy + 1
    MultiPoly p = x * x * y + x;
    MultiPoly dp = p.derivative(0);
    CHECK(dp.eval({5, 7}) == 71);
    CHECK(p.derivative(1).eval({5, 7}) == 25);
    CHECK(p.derivative(3).is_zero());
}

TEST_CASE("evaluation is a ring homomorphism at deterministic samples") {
    DetRng rng(99);
    for (int t = 0; t < 50; ++t) {
        auto random_poly = [&]() {
            MultiPoly p;
            int terms = 1 + static_cast<int>(rng.below(4));
            for (int k = 0; k < terms; ++k) {
                MultiPoly mono = MultiPoly::constant(Rational(rng.range(-5, 5), 1 + rng.below(3)));
                int deg = static_cast<int>(rng.below(4));
                for (int d = 0; d < deg; ++d)
                    mono = mono * MultiPoly::variable(static_cast<int>(rng.below(4)));
                p = p + mono;
            }
            return p;
        };
        MultiPoly p = random_poly(), q = random_poly();
        std::vector<Rational> pt;
        for (int i = 0; i < 4; ++i) pt.push_back(Rational(rng.range(-6, 6), 1 + rng.below(4)));
        CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
        CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
    }
}

TEST_CASE("moment polynomials of the scalar action") {
    auto sys = make_moment_system(gl_gl_action(1, 1));
    REQUIRE(sys.h_polys.size() == 2);
    MultiPoly xy = MultiPoly::variable(sys.vars.x(1, 1)) * MultiPoly::variable(sys.vars.y(1, 1));
    CHECK(sys.h_polys[0] == xy);
    CHECK(sys.h_polys[1] == xy.scaled(-1));
}

TEST_CASE("moment polynomials of the 2x2 action: eight bilinear row/column pairings") {
    auto sys = make_moment_system(gl_gl_action(2, 2));
    REQUIRE(sys.h_polys.size() == 8);
    for (const auto& h : sys.h_polys) {
        CHECK(h.term_count() == 2);
        for (const auto& [mono, coeff] : h.terms()) {
            CHECK(mono.exps.size() == 2);  // one x and one y of degree one each
            for (const auto& [var, exp] : mono.exps) CHECK(exp == 1);
            CHECK((coeff == 1 || coeff == -1));
        }
    }
    // an empty Lie algebra gives no polynomials
    LinearAction none;
    none.rows = 2;
    none.cols = 2;
    CHECK(make_moment_system(none).h_polys.empty());
}

TEST_CASE("gradient rank equals orbit tangent rank") {
    auto sys = make_moment_system(gl_gl_action(2, 2));
    std::vector<Rational> origin(static_cast<size_t>(sys.vars.total()), 0);
    CHECK(jacobian_rank(sys, origin) == 0);
    CHECK(orbit_tangent_rank(sys, origin) == 0);

    // x = E11, y = E22
    std::vector<Rational> pt = origin;
    pt[static_cast<size_t>(sys.vars.x(1, 1))] = 1;
    pt[static_cast<size_t>(sys.vars.y(2, 2))] = 1;
    int jr = jacobian_rank(sys, pt);
    CHECK(jr == orbit_tangent_rank(sys, pt));
    CHECK(jr > 0);

    DetRng rng(314);
    std::vector<MomentSystem> systems;
    systems.push_back(make_moment_system(gl_gl_action(2, 2)));
    systems.push_back(make_moment_system(gl_gl_action(2, 3)));
    systems.push_back(make_moment_system(sp_gl_action(4, 3)));
    for (const auto& s : systems) {
        for (int t = 0; t < 20; ++t) {
            std::vector<Rational> p;
            for (int i = 0; i < s.vars.total(); ++i)
                p.push_back(Rational(rng.range(-7, 7), 1 + rng.below(3)));
            int a = jacobian_rank(s, p);
            int b = orbit_tangent_rank(s, p);
            CHECK(a == b);
            CHECK(a <= static_cast<int>(s.action.basis.size()));
            CHECK(a <= s.vars.total());
        }
    }
    CHECK_THROWS_WITH_AS(jacobian_rank(sys, {Rational(1)}), doctest::Contains("coordinates"),
                         Error);
}

TEST_CASE("the symplectic factor solves to the right dimension and constraint") {
    Matrix<Rational> j = sp_standard_form(4);
    auto act = sp_gl_action(4, 3);
    CHECK(act.basis.size() == 19);  // dim sp_4 + dim gl_3
    int sp_count = 0;
    for (const auto& xi : act.basis) {
        if (xi.b.is_zero_matrix()) {
            ++sp_count;
            Matrix<Rational> ja = j * xi.a;
            CHECK(ja == ja.transposed());
        }
    }
    CHECK(sp_count == 10);
    CHECK_THROWS_AS(sp_standard_form(3), Error);
}

TEST_CASE("transcribed symbols take the stated shape") {
    auto d = lemma_m2_data();
    REQUIRE(d.generator_symbols.size() == 19);

    // symbol of the first invariant combination: sum_k x1k y1k - sum_k x3k y3k
    MultiPoly expect;
    for (int k = 1; k <= 3; ++k)
        expect = expect + MultiPoly::variable(d.vars.x(1, k)) * MultiPoly::variable(d.vars.y(1, k)) -
                 MultiPoly::variable(d.vars.x(3, k)) * MultiPoly::variable(d.vars.y(3, k));
    CHECK(d.generator_symbols[0] == expect);

    // the additive constant of the Euler-type operator is dropped: the
    // symbol is homogeneous bilinear with four terms
    const MultiPoly& h11 = d.generator_symbols[10];
    CHECK(h11.term_count() == 4);
    std::vector<Rational> origin(static_cast<size_t>(d.vars.total()), 0);
    CHECK(h11.eval(origin) == 0);

    // the two cubes really are cubes of four-term bilinears
    CHECK(d.generator_names[17] == "h(1,3)^3");
    for (const auto& [mono, coeff] : d.generator_symbols[17].terms()) {
        int deg = 0;
        for (const auto& [var, e] : mono.exps) deg += e;
        CHECK(deg == 6);
    }

    CHECK(d.h.term_count() == 6);
    int nonzero = 0;
    for (const auto& c : d.point)
        if (c != 0) ++nonzero;
    CHECK(nonzero == 3);
    CHECK(d.point[static_cast<size_t>(d.vars.x(1, 1))] == 1);
    CHECK(d.point[static_cast<size_t>(d.vars.y(2, 2))] == 1);
    CHECK(d.point[static_cast<size_t>(d.vars.y(4, 3))] == 1);
}

TEST_CASE("the distinguished point kills every symbol but not h") {
    auto rep = lemma_m2_check();
    CHECK(rep.pass);
    for (const auto& item : rep.generator_values) CHECK(item.value == 0);
    CHECK(rep.h_value == 1);  // frozen hand evaluation of the six-term cubic
}
