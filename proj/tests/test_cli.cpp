#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qv/cli.hpp"
#include "qv/quiver_json.hpp"
#include "qv/rep_json.hpp"

using namespace qv;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = qv::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content) {
        path = std::string("qv_test_") + name;
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("atlas list and show") {
    Run list = run_cli({"atlas", "list"});
    CHECK(list.code == 0);
    CHECK(list.out.find("sp4_gl4") != std::string::npos);
    CHECK(list.out.find("e6") != std::string::npos);

    Run show = run_cli({"atlas", "show", "symmetric", "--n", "3"});
    CHECK(show.code == 0);
    CHECK(show.out.find("7 vertices") != std::string::npos);
    CHECK(show.out.find("(2)'") != std::string::npos);
    CHECK(show.out.find("-3/2") != std::string::npos);

    Run bad = run_cli({"atlas", "show", "so_n", "--n", "2"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("n must be >= 3") != std::string::npos);

    Run unknown = run_cli({"atlas", "show", "nope"});
    CHECK(unknown.code == 1);
}

TEST_CASE("atlas show --json round-trips through the quiver parser") {
    Run show = run_cli({"atlas", "show", "sp2n_gl3", "--n", "3", "--json"});
    REQUIRE(show.code == 0);
    json j = json::parse(show.out);
    QuiverPresentation pres = quiver_from_json(j.at("quiver"));
    CHECK(pres.quiver.vertices.size() == 6);
    CHECK(j.at("semi_invariant").is_null());
    CHECK(j.at("fourier").at("partial") == false);
    CHECK(j.at("orbits").size() == 6);
}

TEST_CASE("quiver subcommands") {
    Run cartan = run_cli({"quiver", "cartan", "--builtin", "AA:4"});
    CHECK(cartan.code == 0);
    CHECK(cartan.out == "1 1 1 1\n1 1 1 1\n1 1 1 1\n1 1 1 1\n");

    Run paths = run_cli({"quiver", "paths", "--builtin", "AA:2"});
    CHECK(paths.code == 0);
    CHECK(paths.out.find("4 nonzero paths") != std::string::npos);

    Run pjson = run_cli({"quiver", "paths", "--builtin", "EE6", "--json"});
    REQUIRE(pjson.code == 0);
    json j = json::parse(pjson.out);
    CHECK(j.at("paths").size() == 28);
    // the emitted quiver parses back
    CHECK(quiver_from_json(j.at("quiver")).quiver.arrows.size() == 10);

    Run both = run_cli({"quiver", "cartan", "--builtin", "AA:2", "--file", "x.json"});
    CHECK(both.code == 1);
    Run neither = run_cli({"quiver", "cartan"});
    CHECK(neither.code == 1);
}

TEST_CASE("quiver file input") {
    TempFile qf("quiver.json", R"json({
        "vertices": ["u", "v"],
        "arrows": [{"id": "a", "tail": "u", "head": "v"}],
        "relations": []
    })json");
    Run cartan = run_cli({"quiver", "cartan", "--file", qf.path});
    CHECK(cartan.code == 0);
    CHECK(cartan.out == "1 1\n0 1\n");

    TempFile bad("bad.json", "{not json");
    CHECK(run_cli({"quiver", "cartan", "--file", bad.path}).code == 1);
    CHECK(run_cli({"quiver", "cartan", "--file", "missing.json"}).code == 1);
}

TEST_CASE("rep subcommands") {
    TempFile rf("rep.json", R"json({
        "quiver": "builtin:AA:2",
        "field": "Q",
        "dims": {"(1)": 1, "(2)": 1},
        "maps": {"a1": [["1"]]}
    })json");
    Run val = run_cli({"rep", "validate", "--file", rf.path});
    CHECK(val.code == 0);
    CHECK(val.out.find("OK") != std::string::npos);

    Run dec = run_cli({"rep", "decompose", "--file", rf.path});
    CHECK(dec.code == 0);
    CHECK(dec.out.find("1 indecomposable summand") != std::string::npos);

    Run cls = run_cli({"rep", "classify-aa", "--file", rf.path});
    CHECK(cls.code == 0);
    CHECK(cls.out.find("I[1,2]^+") != std::string::npos);

    Run field_mismatch = run_cli({"rep", "validate", "--file", rf.path, "--field", "Fp:5"});
    CHECK(field_mismatch.code == 1);

    TempFile bad("badrep.json", R"json({
        "quiver": "builtin:AA:2",
        "field": "Q",
        "dims": {"(1)": 1, "(2)": 1},
        "maps": {"a1": [["1"]], "b1": [["1"]]}
    })json");
    Run invalid = run_cli({"rep", "validate", "--file", bad.path});
    CHECK(invalid.code == 1);
    CHECK(invalid.out.find("INVALID") != std::string::npos);

    // decompose --json emits representations that parse back
    Run dj = run_cli({"rep", "decompose", "--file", rf.path, "--json"});
    REQUIRE(dj.code == 0);
    json pieces = json::parse(dj.out);
    REQUIRE(pieces.size() == 1);
    AnyRep back = rep_from_json(pieces.at(0));
    CHECK(std::get<RepQ>(back).total_dim() == 2);
}

TEST_CASE("tits analyze") {
    Run b8 = run_cli({"tits", "analyze", "--builtin", "B8"});
    CHECK(b8.code == 0);
    CHECK(b8.out.find("positive semidefinite: yes") != std::string::npos);
    CHECK(b8.out.find("(1,3,4,3,1,2,1,1)") != std::string::npos);

    Run j = run_cli({"tits", "analyze", "--builtin", "B8", "--json"});
    REQUIRE(j.code == 0);
    json parsed = json::parse(j.out);
    CHECK(parsed.at("psd") == true);
    CHECK(parsed.at("radical").size() == 1);
}

TEST_CASE("census command") {
    Run c = run_cli({"census", "--builtin", "AA:2", "--dims", "1,1", "--prime", "2"});
    CHECK(c.code == 0);
    CHECK(c.out.find("3 iso classes, 2 indecomposable") != std::string::npos);

    Run sweep = run_cli({"census", "--builtin", "AA:3", "--all-dims-upto", "1,1,1", "--prime", "2"});
    CHECK(sweep.code == 0);
    CHECK(sweep.out.find("11 indecomposable") != std::string::npos);

    Run cj = run_cli({"census", "--builtin", "AA:2", "--dims", "1,1", "--prime", "2", "--json"});
    REQUIRE(cj.code == 0);
    json parsed = json::parse(cj.out);
    CHECK(parsed.at("total_indecomposable_classes") == 2);
    // representatives round-trip through the representation parser
    AnyRep rep0 = rep_from_json(parsed.at("reports").at(0).at("classes").at(0).at("representative"));
    CHECK(std::holds_alternative<RepF>(rep0));
    CHECK(std::get<RepF>(rep0).field.p == 2);

    CHECK(run_cli({"census", "--builtin", "AA:2", "--dims", "1,1,1"}).code == 1);
    CHECK(run_cli({"census", "--builtin", "AA:2"}).code == 1);
    CHECK(run_cli({"census", "--builtin", "AA:2", "--dims", "9,9", "--max-cells", "4"}).code == 1);
}

TEST_CASE("verify command") {
    Run lm2 = run_cli({"verify", "lemma-m2"});
    CHECK(lm2.code == 0);
    CHECK(lm2.out.find("PASS") != std::string::npos);
    CHECK(lm2.out.find("h(v) = 1") != std::string::npos);
    CHECK(lm2.out.find("FAIL") == std::string::npos);

    Run vq = run_cli({"verify", "quiver-core", "--json"});
    REQUIRE(vq.code == 0);
    json parsed = json::parse(vq.out);
    for (const auto& item : parsed) CHECK(item.at("pass") == true);

    CHECK(run_cli({"verify", "nonsense"}).code == 1);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"atlas"}).code == 2);
    CHECK(run_cli({"atlas", "show"}).code == 2);  // missing required family
    Run help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("atlas") != std::string::npos);
}

TEST_CASE("atlas show succeeds for one representative of every family") {
    std::vector<std::vector<std::string>> cases = {
        {"atlas", "show", "gl_m_gl_n", "--m", "3", "--n", "3"},
        {"atlas", "show", "skew", "--n", "4"},
        {"atlas", "show", "symmetric", "--n", "2"},
        {"atlas", "show", "sp2n_gl2", "--n", "2"},
        {"atlas", "show", "sp2n_gl3", "--n", "2"},
        {"atlas", "show", "sp4_glm", "--m", "5"},
        {"atlas", "show", "sp4_gl4"},
        {"atlas", "show", "sp_2n", "--n", "2"},
        {"atlas", "show", "spin10"},
        {"atlas", "show", "so_n", "--n", "3"},
        {"atlas", "show", "spin7"},
        {"atlas", "show", "spin9"},
        {"atlas", "show", "g2"},
        {"atlas", "show", "e6"},
    };
    for (auto args : cases) {
        Run human = run_cli(args);
        CHECK(human.code == 0);
        args.push_back("--json");
        Run machine = run_cli(args);
        CHECK(machine.code == 0);
        json j = json::parse(machine.out);
        // the quiver block always parses back
        CHECK(quiver_from_json(j.at("quiver")).quiver.vertices.size() ==
              j.at("quiver").at("vertices").size());
    }
}

TEST_CASE("shipped sample files work end to end") {
    // resolve the samples directory relative to this source file
    std::string dir = __FILE__;
    dir = dir.substr(0, dir.find_last_of('/'));
    dir = dir.substr(0, dir.find_last_of('/')) + "/samples";

    Run cartan = run_cli({"quiver", "cartan", "--file", dir + "/commuting_square.json"});
    REQUIRE(cartan.code == 0);
    CHECK(cartan.out == "1 1 1 0\n0 1 0 1\n0 0 1 1\n0 0 0 1\n");

    Run cls = run_cli({"rep", "classify-aa", "--file", dir + "/chain_rep.json"});
    REQUIRE(cls.code == 0);
    CHECK(cls.out.find("I[1,2]^+") != std::string::npos);
    CHECK(cls.out.find("I[2,3]^-") != std::string::npos);
}

TEST_CASE("atlas show golden output") {
    Run r = run_cli({"atlas", "show", "sp_2n", "--n", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "case: sp_2n n=2\n"
          "space dimension: 4\n"
          "orbits (label, codim, component group order):\n"
          "  (0)  codim 4  cg 1\n"
          "  (1)  codim 0  cg 1\n"
          "quiver: 2 vertices, 0 arrows, 0 relations\n"
          "  vertices: (0) (1)\n"
          "  arrows:\n"
          "  relations: none\n"
          "semi-invariant: none\n"
          "fourier: (0)<->(1)\n"
          "pyasetskii: (0)<->(1)\n"
          "note: two isolated vertices; the Fourier transform exchanges the delta module and "
          "the structure sheaf\n");
}

TEST_CASE("malformed representation files are rejected with diagnostics") {
    TempFile wrong_rows("wrongrows.json", R"json({
        "quiver": "builtin:AA:2",
        "field": "Q",
        "dims": {"(1)": 2, "(2)": 1},
        "maps": {"a1": [["1"], ["0"]]}
    })json");
    Run r = run_cli({"rep", "validate", "--file", wrong_rows.path});
    CHECK(r.code == 1);
    CHECK(r.err.find("rows") != std::string::npos);

    TempFile bad_entry("badentry.json", R"json({
        "quiver": "builtin:AA:2",
        "field": "Q",
        "dims": {"(1)": 1, "(2)": 1},
        "maps": {"a1": [["x/y"]]}
    })json");
    CHECK(run_cli({"rep", "validate", "--file", bad_entry.path}).code == 1);

    TempFile bad_vertex("badvertex.json", R"json({
        "quiver": "builtin:AA:2",
        "field": "Q",
        "dims": {"(7)": 1}
    })json");
    CHECK(run_cli({"rep", "validate", "--file", bad_vertex.path}).code == 1);
}

TEST_CASE("verify output is deterministic across runs") {
    Run a = run_cli({"verify", "lemma-m2"});
    Run b = run_cli({"verify", "lemma-m2"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}
