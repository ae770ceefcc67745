#include "qv/verify.hpp"

#include <set>
#include <sstream>

#include "qv/atlas.hpp"
#include "qv/census.hpp"
#include "qv/detrng.hpp"
#include "qv/moment.hpp"
#include "qv/rep_alg.hpp"
#include "qv/tits.hpp"

namespace qv::verify {

namespace {

struct Suite {
    std::vector<Check> checks;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }

    // runs fn, turning exceptions into failures
    template <class F>
    void run(const std::string& name, F&& fn) {
        try {
            auto [pass, detail] = fn();
            add(name, pass, detail);
        } catch (const std::exception& e) {
            add(name, false, std::string("exception: ") + e.what());
        }
    }
};

using Outcome = std::pair<bool, std::string>;
Outcome ok() { return {true, ""}; }
Outcome okd(const std::string& d) { return {true, d}; }
Outcome fail(const std::string& d) { return {false, d}; }

}  // namespace

std::vector<Check> quiver_core_suite() {
    Suite s;
    s.run("builders-validate", []() -> Outcome {
        for (int n = 1; n <= 8; ++n) make_AA(n).validate();
        make_AA3c().validate();
        make_EE6().validate();
        make_B8().validate();
        make_B8_opposite().validate();
        return ok();
    });
    s.run("relation-words-length>=2-composable", []() -> Outcome {
        for (const auto& pres : {make_AA(5), make_AA3c(), make_EE6(), make_B8()}) {
            for (const auto& r : pres.relations) {
                if (r.size() < 2) return fail("short relation");
                for (size_t i = 0; i + 1 < r.size(); ++i)
                    if (pres.quiver.arrows[static_cast<size_t>(r[i])].head !=
                        pres.quiver.arrows[static_cast<size_t>(r[i + 1])].tail)
                        return fail("non-composable relation");
            }
        }
        return ok();
    });
    s.run("path-counts", []() -> Outcome {
        if (enumerate_nonzero_paths(make_AA(2)).size() != 4) return fail("AA2 != 4");
        if (enumerate_nonzero_paths(make_AA(3)).size() != 9) return fail("AA3 != 9");
        return okd("AA2: 4 paths, AA3: 9 paths");
    });
    s.run("loop-without-relations-is-infinite", []() -> Outcome {
        Quiver q;
        q.vertices = {"v"};
        q.arrows = {{"loop", 0, 0}};
        QuiverPresentation pres;
        pres.quiver = q;
        try {
            pres.validate();
            return fail("expected infinite-algebra rejection");
        } catch (const Error& e) {
            return okd(e.what());
        }
    });
    s.run("nonzero-paths-closed-under-subwords", []() -> Outcome {
        for (const auto& pres : {make_AA(4), make_AA3c(), make_EE6(), make_B8()}) {
            for (const auto& p : enumerate_nonzero_paths(pres)) {
                for (size_t i = 0; i < p.arrows.size(); ++i)
                    for (size_t j = i; j < p.arrows.size(); ++j) {
                        PathWord sub;
                        sub.arrows.assign(p.arrows.begin() + static_cast<long>(i),
                                          p.arrows.begin() + static_cast<long>(j) + 1);
                        sub.source =
                            pres.quiver.arrows[static_cast<size_t>(sub.arrows.front())].tail;
                        if (is_zero_path(pres, sub)) return fail("zero subword of nonzero path");
                    }
            }
        }
        return ok();
    });
    s.run("cartan-diagonal-ones", []() -> Outcome {
        for (const auto& pres : {make_AA(4), make_AA3c(), make_EE6(), make_B8()}) {
            auto c = cartan_matrix(pres);
            for (size_t i = 0; i < c.size(); ++i)
                if (c[i][i] != 1) return fail("diagonal entry != 1");
        }
        return ok();
    });
    s.run("cartan-entries-01", []() -> Outcome {
        for (const auto& pres : {make_AA(6), make_AA3c(), make_EE6()}) {
            for (const auto& row : cartan_matrix(pres))
                for (long long e : row)
                    if (e < 0 || e > 1) return fail("entry outside {0,1}");
        }
        return ok();
    });
    s.run("opposite-is-involutive", []() -> Outcome {
        for (const auto& pres : {make_AA(4), make_AA3c(), make_EE6(), make_B8()}) {
            auto opop = opposite(opposite(pres));
            if (!same_presentation(pres, opop)) return fail("opposite^2 != id");
        }
        return ok();
    });
    s.run("self-opposite-shapes", []() -> Outcome {
        if (!is_self_opposite(make_AA(5))) return fail("AA5");
        if (!is_self_opposite(make_AA3c())) return fail("AA3c");
        if (!is_self_opposite(make_EE6())) return fail("EE6");
        return ok();
    });
    return s.checks;
}

std::vector<Check> strings_suite() {
    Suite s;
    s.run("string-modules-validate-n<=8", []() -> Outcome {
        int count = 0;
        for (int n = 1; n <= 8; ++n) {
            PresPtr aa = share(make_AA(n));
            for (const auto& spec : all_string_specs(n)) {
                if (!validate_rep(string_module(spec, aa)).ok) return fail(spec.name());
                ++count;
            }
        }
        return okd(std::to_string(count) + " string modules");
    });
    s.run("strings-indecomposable-n<=5", []() -> Outcome {
        for (int n = 1; n <= 5; ++n) {
            PresPtr aa = share(make_AA(n));
            for (const auto& spec : all_string_specs(n))
                if (indecomposability(string_module(spec, aa)) != Indec::Indecomposable)
                    return fail(spec.name());
        }
        return ok();
    });
    s.run("strings-end-dimension-1-n<=5", []() -> Outcome {
        for (int n = 1; n <= 5; ++n) {
            PresPtr aa = share(make_AA(n));
            for (const auto& spec : all_string_specs(n))
                if (end_basis(string_module(spec, aa)).size() != 1) return fail(spec.name());
        }
        return ok();
    });
    s.run("strings-pairwise-noniso-n<=4", []() -> Outcome {
        for (int n = 1; n <= 4; ++n) {
            PresPtr aa = share(make_AA(n));
            auto specs = all_string_specs(n);
            std::vector<RepQ> mods;
            for (const auto& sp : specs) mods.push_back(string_module(sp, aa));
            for (size_t i = 0; i < mods.size(); ++i)
                for (size_t j = i + 1; j < mods.size(); ++j)
                    if (is_isomorphic(mods[i], mods[j]))
                        return fail(specs[i].name() + " ~ " + specs[j].name());
        }
        return ok();
    });
    s.run("hom-duality-via-opposite", []() -> Outcome {
        PresPtr aa = share(make_AA(4));
        DetRng rng(11);
        auto specs = all_string_specs(4);
        for (int trial = 0; trial < 30; ++trial) {
            const auto& sa = specs[rng.below(specs.size())];
            const auto& sb = specs[rng.below(specs.size())];
            RepQ v = string_module(sa, aa), w = string_module(sb, aa);
            if (hom_dim(v, w) != hom_dim(rep_opposite(w), rep_opposite(v)))
                return fail(sa.name() + " vs " + sb.name());
        }
        return ok();
    });
    s.run("decompose-random-sums-of-strings", []() -> Outcome {
        DetRng rng(23);
        PresPtr aa = share(make_AA(3));
        auto specs = all_string_specs(3);
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<StringSpec> chosen;
            int pieces = 1 + static_cast<int>(rng.below(3));
            RepQ sum = make_zero_rep<Rational>(aa, {0, 0, 0}, FieldInfo{0});
            for (int k = 0; k < pieces; ++k) {
                const auto& sp = specs[rng.below(specs.size())];
                chosen.push_back(sp);
                sum = direct_sum(sum, string_module(sp, aa));
            }
            auto got = classify_AA(sum);
            std::sort(chosen.begin(), chosen.end());
            if (got != chosen) return fail("multiset mismatch");
        }
        return ok();
    });
    s.run("weight-chain-determinant-example", []() -> Outcome {
        std::vector<Matrix<Rational>> f = {Matrix<Rational>::identity(1, 0, 1),
                                           Matrix<Rational>::identity(1, 0, 1)};
        std::vector<Matrix<Rational>> fstar = {Matrix<Rational>(1, 1, Rational(0)),
                                               Matrix<Rational>(1, 1, Rational(0))};
        RepQ v = weight_chain_rep({1, 1, 1}, f, fstar);
        auto specs = classify_AA(v);
        if (specs.size() != 1 || !(specs[0] == StringSpec{3, 1, 3, "++"}))
            return fail("expected the single string I[1,3]^++");
        return ok();
    });
    return s.checks;
}

std::vector<Check> tits_suite() {
    Suite s;
    s.run("b8-golden-form", []() -> Outcome {
        TitsForm f = tits_form(make_B8());
        for (const auto& d : f.diag)
            if (d != 1) return fail("diagonal != 1");
        std::map<std::pair<int, int>, Int> expect = {
            {{0, 1}, -1}, {{1, 2}, -1}, {{2, 3}, -1}, {{3, 4}, -1}, {{2, 5}, -1},
            {{1, 6}, -1}, {{3, 7}, -1}, {{0, 6}, 1},  {{4, 7}, 1},
        };
        if (f.cross != expect) return fail("cross terms differ");
        return okd(f.to_string());
    });
    s.run("b8-psd-with-radical", []() -> Outcome {
        TitsForm f = tits_form(make_B8());
        if (!is_psd(f)) return fail("not psd");
        auto rad = radical_lattice(f);
        if (rad.size() != 1) return fail("radical rank != 1");
        std::vector<Int> expect = {1, 3, 4, 3, 1, 2, 1, 1};
        if (rad[0] != expect) return fail("radical generator differs");
        return okd("radical generated by (1,3,4,3,1,2,1,1)");
    });
    s.run("b8-zero-on-radical-positive-off", []() -> Outcome {
        TitsForm f = tits_form(make_B8());
        std::vector<Int> gen = {1, 3, 4, 3, 1, 2, 1, 1};
        for (int k = -3; k <= 3; ++k) {
            std::vector<Int> x;
            for (const auto& g : gen) x.push_back(k * g);
            if (f.evaluate(x) != 0) return fail("q(k*gen) != 0");
        }
        DetRng rng(7);
        int tested = 0;
        while (tested < 1000) {
            std::vector<Int> x;
            for (int i = 0; i < 8; ++i) x.push_back(rng.range(-9, 9));
            // skip lattice multiples of the generator (the zero vector included)
            Int k = x[0];
            bool is_multiple = true;
            for (size_t i = 0; i < 8; ++i)
                if (x[i] != k * gen[i]) { is_multiple = false; break; }
            if (is_multiple) continue;
            if (f.evaluate(x) <= 0) return fail("q <= 0 off the radical");
            ++tested;
        }
        return okd("1000 deterministic off-radical vectors positive");
    });
    s.run("no-arrows-identity-form", []() -> Outcome {
        Quiver q;
        q.vertices = {"u", "v", "w"};
        QuiverPresentation pres;
        pres.quiver = q;
        pres.validate();
        TitsForm f = tits_form(pres);
        if (!f.cross.empty()) return fail("unexpected cross terms");
        if (!is_psd(f)) return fail("not psd");
        if (!radical_lattice(f).empty()) return fail("nonempty radical");
        return ok();
    });
    s.run("indefinite-form-detected", []() -> Outcome {
        // three parallel arrows give -3 x1 x2
        Quiver q;
        q.vertices = {"1", "2"};
        q.arrows = {{"a", 0, 1}, {"b", 0, 1}, {"c", 0, 1}};
        QuiverPresentation pres;
        pres.quiver = q;
        pres.validate();
        TitsForm f = tits_form(pres);
        if (is_psd(f)) return fail("expected indefinite");
        std::vector<Int> x = {1, 1};
        if (f.evaluate(x) != -1) return fail("q(1,1) != -1");
        return ok();
    });
    s.run("census-aa2-spot", []() -> Outcome {
        auto rep = census(share(make_AA(2)), {1, 1}, 2);
        if (rep.total_classes != 3) return fail("classes != 3");
        if (rep.indec_classes != 2) return fail("indecomposables != 2");
        return okd("3 classes, 2 indecomposable");
    });
    s.run("census-order-independent", []() -> Outcome {
        CensusOptions alt;
        alt.alternate_bucketing = true;
        for (auto dims : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}}) {
            auto a = census(share(make_AA(2)), dims, 2);
            auto b = census(share(make_AA(2)), dims, 2, alt);
            if (a.total_classes != b.total_classes || a.indec_classes != b.indec_classes)
                return fail("bucketing strategy changed counts");
            for (size_t i = 0; i < a.classes.size(); ++i)
                if (!(a.classes[i].representative.maps == b.classes[i].representative.maps))
                    return fail("representatives differ");
        }
        return ok();
    });
    s.run("census-representatives-valid-indecomposable", []() -> Outcome {
        auto rep = census(share(make_AA(3)), {1, 1, 1}, 2);
        for (const auto& cls : rep.classes) {
            if (!validate_rep(cls.representative).ok) return fail("invalid representative");
            if (cls.indecomposable && cls.representative.is_zero()) return fail("zero marked indec");
        }
        return ok();
    });
    s.run("finite-type-aa3-p2", []() -> Outcome {
        auto rep = finite_type_check(3, 2);
        if (!rep.ok) return fail("not finite type");
        if (rep.indec_count != 11) return fail("count != 11");
        return okd("11 indecomposables, all strings; spot census clean");
    });
    s.run("finite-type-aa3-p3", []() -> Outcome {
        auto rep = finite_type_check(3, 3);
        return rep.ok && rep.indec_count == 11 ? ok() : fail("p=3 check failed");
    });
    return s.checks;
}

std::vector<Check> atlas_suite() {
    Suite s;
    for (const auto& id : atlas::grid_cases(2, 6)) {
        s.run("invariants[" + id.to_string() + "]", [&id]() -> Outcome {
            for (const auto& c : atlas::verify_case_invariants(id))
                if (!c.pass) return fail(c.name);
            return ok();
        });
    }
    s.run("gl-square-quiver-is-doubled-chain", []() -> Outcome {
        for (int n = 2; n <= 5; ++n) {
            auto rec = atlas::get_case({atlas::Family::GlmGln, n, n});
            if (!presentation_isomorphic(rec.quiver, make_AA(n + 1))) return fail("n=" + std::to_string(n));
        }
        return ok();
    });
    s.run("symmetric-n3-structure", []() -> Outcome {
        auto rec = atlas::get_case({atlas::Family::Symmetric, 0, 3});
        if (rec.quiver.quiver.vertices.size() != 7) return fail("vertex count");
        std::vector<std::string> expect = {"(0)", "(2)", "(3)", "(1)'", "(3)'", "(1)", "(2)'"};
        if (rec.quiver.quiver.vertices != expect) return fail("vertex layout");
        if (rec.quiver.quiver.arrows.size() != 6) return fail("arrow count");
        return ok();
    });
    s.run("sp2n-gl3-n3-codims", []() -> Outcome {
        auto rec = atlas::get_case({atlas::Family::Sp2nGl3, 3, 3});
        std::vector<long long> got;
        for (const auto& o : rec.orbits) got.push_back(o.codim);
        if (got != std::vector<long long>{18, 10, 5, 4, 3, 0}) return fail("codim list");
        return ok();
    });
    s.run("sp4-gl4-quiver-matches-ee6", []() -> Outcome {
        auto rec = atlas::get_case({atlas::Family::Sp4Gl4, 4, 2});
        return presentation_isomorphic(rec.quiver, make_EE6()) ? ok() : fail("not isomorphic");
    });
    s.run("sp2n-gl3-n2-projective-cover-length-2", []() -> Outcome {
        auto dims = atlas::projective_cover_dims({atlas::Family::Sp2nGl3, 3, 2}, "(2,2)");
        long long total = 0;
        for (long long d : dims) total += d;
        return total == 2 ? ok() : fail("length != 2");
    });
    s.run("fourier-sp2n-gl3-printed-swaps", []() -> Outcome {
        auto fd = atlas::fourier_permutation({atlas::Family::Sp2nGl3, 3, 4});
        if (!fd || fd->partial) return fail("missing");
        std::set<std::set<std::string>> got, expect;
        for (const auto& [a, b] : fd->pairs) got.insert({a, b});
        expect = {{"(3,2)", "(0,0)"}, {"(2,2)", "(1,0)"}, {"(3,0)", "(2,0)"}};
        return got == expect ? ok() : fail("pairs differ");
    });
    s.run("fourier-gl-square-chain-reversal", []() -> Outcome {
        for (int n = 2; n <= 5; ++n) {
            auto fd = atlas::fourier_permutation({atlas::Family::GlmGln, n, n});
            if (!fd || fd->partial) return fail("missing");
            for (const auto& [a, b] : fd->pairs) {
                int ka = std::stoi(a.substr(1, a.size() - 2));
                int kb = std::stoi(b.substr(1, b.size() - 2));
                if (ka + kb != n) return fail("not a reversal");
            }
        }
        return ok();
    });
    s.run("pyasetskii-zero-open-swap", []() -> Outcome {
        for (const auto& id : atlas::grid_cases(2, 5)) {
            auto pd = atlas::pyasetskii(id);
            if (!pd) continue;
            auto rec = atlas::get_case(id);
            std::string zero, open;
            for (const auto& o : rec.orbits) {
                if (o.codim == 0) open = o.label;
                if (o.codim == rec.dim_space) zero = o.label;
            }
            bool found = false;
            for (const auto& [a, b] : pd->pairs)
                if ((a == zero && b == open) || (a == open && b == zero)) found = true;
            if (!found) return fail(id.to_string());
        }
        return ok();
    });
    s.run("charcycle-sp2n-gl3-irreducible", []() -> Outcome {
        auto rec = atlas::get_case({atlas::Family::Sp2nGl3, 3, 3});
        for (const auto& v : rec.quiver.quiver.vertices) {
            auto cc = atlas::characteristic_cycle({atlas::Family::Sp2nGl3, 3, 3}, v);
            if (!cc.known || cc.components.size() != 1 || cc.components[0].second != 1)
                return fail(v);
        }
        return ok();
    });
    return s.checks;
}

std::vector<Check> moment_suite() {
    Suite s;
    s.run("gl1-gl1-polys", []() -> Outcome {
        auto sys = moment::make_moment_system(moment::gl_gl_action(1, 1));
        if (sys.h_polys.size() != 2) return fail("basis size");
        auto xy = moment::MultiPoly::variable(sys.vars.x(1, 1)) *
                  moment::MultiPoly::variable(sys.vars.y(1, 1));
        if (!(sys.h_polys[0] == xy)) return fail("H for the row factor");
        if (!(sys.h_polys[1] == xy.scaled(Rational(-1)))) return fail("H for the column factor");
        return ok();
    });
    s.run("gl2-gl2-polys-shape", []() -> Outcome {
        auto sys = moment::make_moment_system(moment::gl_gl_action(2, 2));
        if (sys.h_polys.size() != 8) return fail("basis size");
        for (const auto& h : sys.h_polys)
            if (h.term_count() != 2) return fail("term count");
        return ok();
    });
    s.run("eval-is-ring-homomorphism", []() -> Outcome {
        DetRng rng(5);
        for (int trial = 0; trial < 40; ++trial) {
            moment::MultiPoly p, q;
            auto random_poly = [&](moment::MultiPoly& target) {
                int terms = 1 + static_cast<int>(rng.below(4));
                for (int t = 0; t < terms; ++t) {
                    moment::MultiPoly mono = moment::MultiPoly::constant(
                        Rational(rng.range(-4, 4), 1 + rng.below(3)));
                    int deg = static_cast<int>(rng.below(3));
                    for (int d = 0; d < deg; ++d)
                        mono = mono * moment::MultiPoly::variable(static_cast<int>(rng.below(5)));
                    target = target + mono;
                }
            };
            random_poly(p);
            random_poly(q);
            std::vector<Rational> point;
            for (int i = 0; i < 5; ++i) point.push_back(Rational(rng.range(-5, 5), 1 + rng.below(4)));
            if ((p * q).eval(point) != p.eval(point) * q.eval(point)) return fail("mult");
            if ((p + q).eval(point) != p.eval(point) + q.eval(point)) return fail("add");
        }
        return ok();
    });
    s.run("rank-identity-sweep", []() -> Outcome {
        std::vector<moment::MomentSystem> systems;
        systems.push_back(moment::make_moment_system(moment::gl_gl_action(2, 2)));
        systems.push_back(moment::make_moment_system(moment::gl_gl_action(2, 3)));
        systems.push_back(moment::make_moment_system(moment::sp_gl_action(4, 3)));
        DetRng rng(31);
        for (const auto& sys : systems) {
            for (int pt = 0; pt < 20; ++pt) {
                std::vector<Rational> point;
                for (int i = 0; i < sys.vars.total(); ++i)
                    point.push_back(Rational(rng.range(-6, 6), 1 + rng.below(3)));
                int jr = jacobian_rank(sys, point);
                int tr = orbit_tangent_rank(sys, point);
                if (jr != tr) return fail("rank mismatch");
                if (jr > static_cast<int>(sys.action.basis.size())) return fail("rank > dim g");
                if (jr > sys.vars.total()) return fail("rank > dim T*X");
            }
        }
        return okd("gradient rank equals orbit tangent rank at 60 points");
    });
    s.run("origin-has-rank-zero", []() -> Outcome {
        auto sys = moment::make_moment_system(moment::gl_gl_action(2, 2));
        std::vector<Rational> origin(static_cast<size_t>(sys.vars.total()), Rational(0));
        return jacobian_rank(sys, origin) == 0 && orbit_tangent_rank(sys, origin) == 0
                   ? ok()
                   : fail("nonzero rank at origin");
    });
    s.run("sp4-basis-dimension", []() -> Outcome {
        auto act = moment::sp_gl_action(4, 3);
        return act.basis.size() == 19 ? ok() : fail("dim != 10 + 9");
    });
    return s.checks;
}

std::vector<Check> lemma_m2_suite() {
    Suite s;
    s.run("generator-symbols-vanish-at-point", []() -> Outcome {
        auto rep = moment::lemma_m2_check();
        for (const auto& item : rep.generator_values)
            if (item.value != 0) return fail(item.name + " = " + to_string(item.value));
        return okd(std::to_string(rep.generator_values.size()) + " symbols vanish");
    });
    s.run("h-nonzero-at-point", []() -> Outcome {
        auto rep = moment::lemma_m2_check();
        if (rep.h_value == 0) return fail("h vanishes");
        if (rep.h_value != 1) return fail("h(v) != 1 (frozen hand evaluation)");
        return okd("h(v) = " + to_string(rep.h_value));
    });
    s.run("point-shape", []() -> Outcome {
        auto d = moment::lemma_m2_data();
        int nonzero = 0;
        for (const auto& c : d.point)
            if (c != 0) ++nonzero;
        // one unit in the position matrix, two in the momentum matrix
        return nonzero == 3 ? ok() : fail("unexpected support");
    });
    return s.checks;
}

std::vector<Check> all_suites() {
    std::vector<Check> all;
    auto append = [&](const std::string& prefix, std::vector<Check> cs) {
        for (auto& c : cs) {
            c.name = prefix + "/" + c.name;
            all.push_back(std::move(c));
        }
    };
    append("quiver-core", quiver_core_suite());
    append("strings", strings_suite());
    append("tits", tits_suite());
    append("atlas", atlas_suite());
    append("moment", moment_suite());
    append("lemma-m2", lemma_m2_suite());
    return all;
}

bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace qv::verify
