#include "qv/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qv/atlas.hpp"
#include "qv/census.hpp"
#include "qv/moment.hpp"
#include "qv/quiver_json.hpp"
#include "qv/rep_alg.hpp"
#include "qv/rep_json.hpp"
#include "qv/tits.hpp"
#include "qv/verify.hpp"

namespace qv::cli {

using nlohmann::json;

namespace {

QuiverPresentation resolve_quiver(const std::string& builtin, const std::string& file) {
    if (!builtin.empty() && !file.empty())
        throw Error("give either --builtin or --file, not both");
    if (!builtin.empty()) return make_builtin(builtin);
    if (!file.empty()) return load_quiver_file(file);
    throw Error("a quiver is required (--builtin or --file)");
}

std::vector<int> parse_dims(const std::string& s, size_t expected) {
    std::vector<int> dims;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) {
        try {
            dims.push_back(std::stoi(cur));
        } catch (const std::logic_error&) {
            throw Error("bad dimension list '" + s + "'");
        }
    }
    if (dims.size() != expected)
        throw Error("dimension list must have " + std::to_string(expected) + " entries");
    return dims;
}

atlas::CaseId make_case_id(const std::string& family, int m, int n) {
    atlas::CaseId id;
    id.family = atlas::family_from_tag(family);
    id.m = m;
    id.n = n;
    return id;
}

json orbit_json(const atlas::OrbitInfo& o) {
    return {{"label", o.label}, {"codim", o.codim}, {"component_group", o.component_group_order}};
}

json record_json(const atlas::CaseRecord& rec) {
    json j;
    j["case"] = {{"family", atlas::family_tag(rec.id.family)}, {"m", rec.id.m}, {"n", rec.id.n}};
    j["dim_space"] = rec.dim_space;
    j["orbits"] = json::array();
    for (const auto& o : rec.orbits) j["orbits"].push_back(orbit_json(o));
    j["closure"] = json::array();
    for (const auto& [a, b] : rec.closure)
        j["closure"].push_back({rec.orbits[static_cast<size_t>(a)].label,
                                rec.orbits[static_cast<size_t>(b)].label});
    j["quiver"] = quiver_to_json(rec.quiver);
    j["vertex_orbits"] = json::object();
    for (size_t i = 0; i < rec.vertex_orbit.size(); ++i)
        j["vertex_orbits"][rec.quiver.quiver.vertices[i]] =
            rec.orbits[static_cast<size_t>(rec.vertex_orbit[i])].label;
    if (rec.semi_invariant) {
        json roots = json::array();
        for (const auto& r : rec.semi_invariant->roots) roots.push_back(to_string(r));
        j["semi_invariant"] = {{"degree", rec.semi_invariant->degree}, {"roots", roots}};
    } else {
        j["semi_invariant"] = nullptr;
    }
    if (rec.fourier) {
        json pairs = json::array();
        for (const auto& [a, b] : rec.fourier->pairs) pairs.push_back({a, b});
        j["fourier"] = {{"pairs", pairs}, {"partial", rec.fourier->partial}};
    } else {
        j["fourier"] = nullptr;
    }
    j["notes"] = rec.notes;
    return j;
}

void print_record(std::ostream& out, const atlas::CaseRecord& rec) {
    out << "case: " << rec.id.to_string() << "\n";
    out << "space dimension: " << rec.dim_space << "\n";
    out << "orbits (label, codim, component group order):\n";
    for (const auto& o : rec.orbits)
        out << "  " << o.label << "  codim " << o.codim << "  cg " << o.component_group_order
            << "\n";
    const Quiver& q = rec.quiver.quiver;
    out << "quiver: " << q.vertices.size() << " vertices, " << q.arrows.size() << " arrows, "
        << rec.quiver.relations.size() << " relations\n";
    out << "  vertices:";
    for (const auto& v : q.vertices) out << " " << v;
    out << "\n  arrows:";
    for (const auto& a : q.arrows)
        out << " " << a.id << ":" << q.vertices[static_cast<size_t>(a.tail)] << "->"
            << q.vertices[static_cast<size_t>(a.head)];
    out << "\n  relations:";
    if (rec.quiver.relations.empty()) out << " none";
    for (const auto& r : rec.quiver.relations) {
        out << " [";
        for (size_t i = 0; i < r.size(); ++i)
            out << (i ? " " : "") << q.arrows[static_cast<size_t>(r[i])].id;
        out << "]";
    }
    out << "\n";
    if (rec.semi_invariant) {
        out << "semi-invariant: degree " << rec.semi_invariant->degree << ", b-function roots";
        for (const auto& r : rec.semi_invariant->roots) out << " " << to_string(r);
        out << "\n";
    } else {
        out << "semi-invariant: none\n";
    }
    if (rec.fourier) {
        out << "fourier" << (rec.fourier->partial ? " (partial)" : "") << ":";
        for (const auto& [a, b] : rec.fourier->pairs) out << " " << a << "<->" << b;
        out << "\n";
        auto pd = atlas::pyasetskii(rec.id);
        out << "pyasetskii" << (pd->partial ? " (partial)" : "") << ":";
        for (const auto& [a, b] : pd->pairs) out << " " << a << "<->" << b;
        out << "\n";
    } else {
        out << "fourier: not recorded\n";
    }
    for (const auto& note : rec.notes) out << "note: " << note << "\n";
}

int print_checks(std::ostream& out, const std::vector<verify::Check>& checks, bool as_json) {
    if (as_json) {
        json j = json::array();
        for (const auto& c : checks)
            j.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        out << j.dump(2) << "\n";
    } else {
        int width = 0;
        for (const auto& c : checks) width = std::max(width, static_cast<int>(c.name.size()));
        for (const auto& c : checks) {
            out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
            if (!c.detail.empty()) out << std::string(static_cast<size_t>(width - static_cast<int>(c.name.size()) + 2), ' ') << c.detail;
            out << "\n";
        }
        int passed = 0;
        for (const auto& c : checks) passed += c.pass;
        out << passed << "/" << checks.size() << " checks passed\n";
    }
    return verify::all_pass(checks) ? 0 : 1;
}

template <class K>
void print_rep_summary(std::ostream& out, const RepT<K>& v) {
    out << "field: " << v.field.name() << "\n";
    out << "dims:";
    for (size_t i = 0; i < v.dims.size(); ++i)
        out << " " << v.pres->quiver.vertices[i] << "=" << v.dims[i];
    out << "\n";
}

struct CensusArgs {
    std::string builtin, file, dims_str, upto_str;
    long long prime = 2;
    long long max_cells = 24;
    bool as_json = false;
};

int run_census(const CensusArgs& a, std::ostream& out) {
    QuiverPresentation pres = resolve_quiver(a.builtin, a.file);
    PresPtr shared = share(std::move(pres));
    CensusOptions opts;
    opts.max_cells = a.max_cells;
    json jout;
    jout["reports"] = json::array();
    long long grand_total = 0, grand_indec = 0;
    std::vector<std::vector<int>> dim_vectors;
    if (!a.dims_str.empty()) {
        dim_vectors.push_back(parse_dims(a.dims_str, shared->quiver.vertices.size()));
    } else if (!a.upto_str.empty()) {
        auto bound = parse_dims(a.upto_str, shared->quiver.vertices.size());
        std::vector<int> cur(bound.size(), 0);
        while (true) {
            size_t pos = 0;
            while (pos < cur.size() && cur[pos] == bound[pos]) cur[pos++] = 0;
            if (pos == cur.size()) break;
            cur[pos]++;
            dim_vectors.push_back(cur);
        }
    } else {
        throw Error("census needs --dims or --all-dims-upto");
    }
    for (const auto& dims : dim_vectors) {
        CensusReport rep = census(shared, dims, a.prime, opts);
        grand_total += rep.total_classes;
        grand_indec += rep.indec_classes;
        if (a.as_json) {
            json jr;
            jr["dims"] = rep.dims;
            jr["p"] = rep.p;
            jr["valid_assignments"] = rep.valid_assignments;
            jr["iso_classes"] = rep.total_classes;
            jr["indecomposable_classes"] = rep.indec_classes;
            jr["classes"] = json::array();
            for (const auto& cls : rep.classes)
                jr["classes"].push_back({{"size", cls.size},
                                         {"indecomposable", cls.indecomposable},
                                         {"representative", rep_to_json(cls.representative)}});
            jout["reports"].push_back(std::move(jr));
        } else {
            out << "census over F_" << rep.p << " at dims";
            for (int d : rep.dims) out << " " << d;
            out << ": " << rep.valid_assignments << " assignments, " << rep.total_classes
                << " iso classes, " << rep.indec_classes << " indecomposable\n";
            int idx = 0;
            for (const auto& cls : rep.classes) {
                out << "  class " << idx++ << (cls.indecomposable ? " [indec]" : "        ")
                    << " size " << cls.size << " maps:";
                for (size_t ai = 0; ai < cls.representative.maps.size(); ++ai) {
                    const auto& m = cls.representative.maps[ai];
                    if (m.rows() == 0 || m.cols() == 0) continue;
                    out << " " << shared->quiver.arrows[ai].id << "=[";
                    for (int r = 0; r < m.rows(); ++r)
                        for (int c = 0; c < m.cols(); ++c)
                            out << (r + c ? " " : "") << m.at(r, c).v;
                    out << "]";
                }
                out << "\n";
            }
        }
    }
    if (a.as_json) {
        jout["total_iso_classes"] = grand_total;
        jout["total_indecomposable_classes"] = grand_indec;
        out << jout.dump(2) << "\n";
    } else if (dim_vectors.size() > 1) {
        out << "total over " << dim_vectors.size() << " dimension vectors: " << grand_total
            << " iso classes, " << grand_indec << " indecomposable\n";
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with quivers, their representations, and the atlas of "
                 "equivariant module categories on spherical vector spaces"};
    app.require_subcommand(1);

    // ---- atlas ----
    auto* atlas_cmd = app.add_subcommand("atlas", "query the case atlas");
    atlas_cmd->require_subcommand(1);
    auto* atlas_list = atlas_cmd->add_subcommand("list", "list the case families");
    bool atlas_list_json = false;
    atlas_list->add_flag("--json", atlas_list_json, "machine-readable output");

    auto* atlas_show = atlas_cmd->add_subcommand("show", "print one case record");
    std::string show_family;
    int show_m = 0, show_n = 0;
    bool atlas_show_json = false;
    atlas_show->add_option("family", show_family, "family tag (see 'atlas list')")->required();
    atlas_show->add_option("--m", show_m, "m parameter");
    atlas_show->add_option("--n", show_n, "n parameter");
    atlas_show->add_flag("--json", atlas_show_json, "machine-readable output");

    // ---- quiver ----
    auto* quiver_cmd = app.add_subcommand("quiver", "path computations on a presentation");
    quiver_cmd->require_subcommand(1);
    std::string qp_builtin, qp_file;
    bool qp_json = false;
    auto* quiver_paths = quiver_cmd->add_subcommand("paths", "enumerate the nonzero paths");
    quiver_paths->add_option("--builtin", qp_builtin, "builtin quiver (AA:<n>, AA3c, EE6, B8, B8op)");
    quiver_paths->add_option("--file", qp_file, "quiver json file");
    quiver_paths->add_flag("--json", qp_json, "machine-readable output");
    std::string qc_builtin, qc_file;
    bool qc_json = false;
    auto* quiver_cartan = quiver_cmd->add_subcommand("cartan", "print the Cartan matrix");
    quiver_cartan->add_option("--builtin", qc_builtin, "builtin quiver");
    quiver_cartan->add_option("--file", qc_file, "quiver json file");
    quiver_cartan->add_flag("--json", qc_json, "machine-readable output");

    // ---- rep ----
    auto* rep_cmd = app.add_subcommand("rep", "operations on representation files");
    rep_cmd->require_subcommand(1);
    std::string rv_file, rv_field;
    auto* rep_validate = rep_cmd->add_subcommand("validate", "check shapes and relations");
    rep_validate->add_option("--file", rv_file, "representation json file")->required();
    rep_validate->add_option("--field", rv_field, "expected field tag (Q or Fp:<p>)");
    std::string rd_file;
    bool rd_json = false;
    auto* rep_decompose = rep_cmd->add_subcommand("decompose", "split into indecomposables (over Q)");
    rep_decompose->add_option("--file", rd_file, "representation json file")->required();
    rep_decompose->add_flag("--json", rd_json, "machine-readable output");
    std::string rc_file;
    bool rc_json = false;
    auto* rep_classify = rep_cmd->add_subcommand("classify-aa",
                                                 "decompose into string modules on the doubled chain");
    rep_classify->add_option("--file", rc_file, "representation json file")->required();
    rep_classify->add_flag("--json", rc_json, "machine-readable output");

    // ---- tits ----
    auto* tits_cmd = app.add_subcommand("tits", "quadratic form analysis");
    tits_cmd->require_subcommand(1);
    std::string ta_builtin, ta_file;
    bool ta_json = false;
    auto* tits_analyze = tits_cmd->add_subcommand("analyze", "form, definiteness, radical");
    tits_analyze->add_option("--builtin", ta_builtin, "builtin quiver");
    tits_analyze->add_option("--file", ta_file, "quiver json file");
    tits_analyze->add_flag("--json", ta_json, "machine-readable output");

    // ---- census ----
    CensusArgs census_args;
    auto* census_cmd = app.add_subcommand("census", "brute-force module census over F_p");
    census_cmd->add_option("--builtin", census_args.builtin, "builtin quiver");
    census_cmd->add_option("--file", census_args.file, "quiver json file");
    census_cmd->add_option("--dims", census_args.dims_str, "dimension vector, comma separated");
    census_cmd->add_option("--all-dims-upto", census_args.upto_str,
                           "sweep all nonzero dimension vectors below the bound");
    census_cmd->add_option("--prime", census_args.prime, "field characteristic (2, 3, 5, 7)");
    census_cmd->add_option("--max-cells", census_args.max_cells, "budget: total matrix entries");
    census_cmd->add_flag("--json", census_args.as_json, "machine-readable output");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
    std::string verify_which = "all";
    bool verify_json = false;
    verify_cmd->add_option("suite", verify_which,
                           "all | quiver-core | strings | tits | atlas | moment | lemma-m2");
    verify_cmd->add_flag("--json", verify_json, "machine-readable output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*atlas_list) {
            if (atlas_list_json) {
                json j = json::array();
                for (const auto& t : atlas::list_cases())
                    j.push_back({{"tag", t.tag},
                                 {"parameters", t.parameters},
                                 {"description", t.description}});
                out << j.dump(2) << "\n";
            } else {
                for (const auto& t : atlas::list_cases()) {
                    out << t.tag;
                    if (!t.parameters.empty()) out << "  (" << t.parameters << ")";
                    out << "  -- " << t.description << "\n";
                }
            }
            return 0;
        }
        if (*atlas_show) {
            auto rec = atlas::get_case(make_case_id(show_family, show_m, show_n));
            if (atlas_show_json)
                out << record_json(rec).dump(2) << "\n";
            else
                print_record(out, rec);
            return 0;
        }
        if (*quiver_paths) {
            QuiverPresentation pres = resolve_quiver(qp_builtin, qp_file);
            auto paths = enumerate_nonzero_paths(pres);
            if (qp_json) {
                json j;
                j["quiver"] = quiver_to_json(pres);
                j["paths"] = json::array();
                for (const auto& p : paths) {
                    json jp;
                    jp["source"] = pres.quiver.vertices[static_cast<size_t>(p.source)];
                    jp["target"] = pres.quiver.vertices[static_cast<size_t>(p.target(pres.quiver))];
                    jp["arrows"] = json::array();
                    for (int ai : p.arrows)
                        jp["arrows"].push_back(pres.quiver.arrows[static_cast<size_t>(ai)].id);
                    j["paths"].push_back(std::move(jp));
                }
                out << j.dump(2) << "\n";
            } else {
                out << paths.size() << " nonzero paths\n";
                for (const auto& p : paths)
                    out << "  " << path_to_string(pres.quiver, p) << " : "
                        << pres.quiver.vertices[static_cast<size_t>(p.source)] << " -> "
                        << pres.quiver.vertices[static_cast<size_t>(p.target(pres.quiver))] << "\n";
            }
            return 0;
        }
        if (*quiver_cartan) {
            QuiverPresentation pres = resolve_quiver(qc_builtin, qc_file);
            auto c = cartan_matrix(pres);
            if (qc_json) {
                json j;
                j["quiver"] = quiver_to_json(pres);
                j["cartan"] = c;
                out << j.dump(2) << "\n";
            } else {
                for (const auto& row : c) {
                    for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
                    out << "\n";
                }
            }
            return 0;
        }
        if (*rep_validate) {
            AnyRep any = load_rep_file(rv_file);
            return std::visit(
                [&](const auto& v) -> int {
                    if (!rv_field.empty() && !(parse_field(rv_field) == v.field))
                        throw Error("field mismatch: file declares " + v.field.name());
                    print_rep_summary(out, v);
                    auto report = validate_rep(v);
                    if (report.ok) {
                        out << "OK: all relation composites vanish\n";
                        return 0;
                    }
                    out << "INVALID: " << report.message << "\n";
                    return 1;
                },
                any);
        }
        if (*rep_decompose) {
            AnyRep any = load_rep_file(rd_file);
            if (!std::holds_alternative<RepQ>(any))
                throw Error("decompose works over Q (use field \"Q\")");
            auto pieces = decompose(std::get<RepQ>(any));
            if (rd_json) {
                json j = json::array();
                for (const auto& p : pieces) j.push_back(rep_to_json(p));
                out << j.dump(2) << "\n";
            } else {
                out << pieces.size() << " indecomposable summands\n";
                for (const auto& p : pieces) {
                    out << "  dims:";
                    for (size_t i = 0; i < p.dims.size(); ++i)
                        if (p.dims[i]) out << " " << p.pres->quiver.vertices[i] << "=" << p.dims[i];
                    out << "\n";
                }
            }
            return 0;
        }
        if (*rep_classify) {
            AnyRep any = load_rep_file(rc_file);
            if (!std::holds_alternative<RepQ>(any))
                throw Error("classify-aa works over Q (use field \"Q\")");
            auto specs = classify_AA(std::get<RepQ>(any));
            if (rc_json) {
                json j = json::array();
                for (const auto& sp : specs)
                    j.push_back({{"i", sp.i}, {"j", sp.j}, {"signs", sp.signs}});
                out << j.dump(2) << "\n";
            } else {
                out << specs.size() << " string summands\n";
                for (const auto& sp : specs) out << "  " << sp.name() << "\n";
            }
            return 0;
        }
        if (*tits_analyze) {
            QuiverPresentation pres = resolve_quiver(ta_builtin, ta_file);
            TitsForm f = tits_form(pres);
            bool psd = is_psd(f);
            auto rad = radical_lattice(f);
            if (ta_json) {
                json j;
                j["form"] = f.to_string();
                j["vertices"] = f.labels;
                j["psd"] = psd;
                j["radical"] = json::array();
                for (const auto& v : rad) {
                    json jv = json::array();
                    for (const auto& e : v) jv.push_back(e.str());
                    j["radical"].push_back(std::move(jv));
                }
                out << j.dump(2) << "\n";
            } else {
                out << "q(x) = " << f.to_string() << "\n";
                out << "positive semidefinite: " << (psd ? "yes" : "no") << "\n";
                out << "radical lattice rank " << rad.size() << "\n";
                for (const auto& v : rad) {
                    out << "  (";
                    for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].str();
                    out << ")\n";
                }
            }
            return 0;
        }
        if (*census_cmd) return run_census(census_args, out);
        if (*verify_cmd) {
            std::vector<verify::Check> checks;
            if (verify_which == "all") checks = verify::all_suites();
            else if (verify_which == "quiver-core") checks = verify::quiver_core_suite();
            else if (verify_which == "strings") checks = verify::strings_suite();
            else if (verify_which == "tits") checks = verify::tits_suite();
            else if (verify_which == "atlas") checks = verify::atlas_suite();
            else if (verify_which == "moment") checks = verify::moment_suite();
            else if (verify_which == "lemma-m2") checks = verify::lemma_m2_suite();
            else throw Error("unknown verify suite '" + verify_which + "'");
            return print_checks(out, checks, verify_json);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace qv::cli
