#include "qv/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace qv {

int Quiver::vertex_index(const std::string& id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == id) return static_cast<int>(i);
    throw Error("unknown vertex id '" + id + "'");
}

int Quiver::arrow_index(const std::string& id) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id == id) return static_cast<int>(i);
    throw Error("unknown arrow id '" + id + "'");
}

void Quiver::validate() const {
    std::set<std::string> seen;
    for (const auto& v : vertices)
        if (!seen.insert(v).second) throw Error("duplicate vertex id '" + v + "'");
    seen.clear();
    int n = static_cast<int>(vertices.size());
    for (const auto& a : arrows) {
        if (!seen.insert(a.id).second) throw Error("duplicate arrow id '" + a.id + "'");
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
            throw Error("arrow '" + a.id + "' references a missing vertex");
    }
}

int PathWord::target(const Quiver& q) const {
    if (arrows.empty()) return source;
    return q.arrows[static_cast<size_t>(arrows.back())].head;
}

PathWord trivial_path(int vertex) { return PathWord{vertex, {}}; }

PathWord make_path(const Quiver& q, const std::vector<std::string>& arrow_ids) {
    if (arrow_ids.empty()) throw Error("make_path: empty arrow list has no source");
    PathWord p;
    for (const auto& id : arrow_ids) {
        int ai = q.arrow_index(id);
        if (p.arrows.empty()) {
            p.source = q.arrows[static_cast<size_t>(ai)].tail;
        } else if (p.target(q) != q.arrows[static_cast<size_t>(ai)].tail) {
            throw Error("non-composable path at arrow '" + id + "'");
        }
        p.arrows.push_back(ai);
    }
    return p;
}

PathWord compose(const Quiver& q, const PathWord& p, const PathWord& q_) {
    if (p.target(q) != q_.source)
        throw Error("compose: endpoints mismatch (" + q.vertices[static_cast<size_t>(p.target(q))] +
                    " vs " + q.vertices[static_cast<size_t>(q_.source)] + ")");
    PathWord r = p;
    r.arrows.insert(r.arrows.end(), q_.arrows.begin(), q_.arrows.end());
    return r;
}

std::string path_to_string(const Quiver& q, const PathWord& p) {
    std::ostringstream os;
    if (p.trivial()) {
        os << "e[" << q.vertices[static_cast<size_t>(p.source)] << "]";
        return os.str();
    }
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) os << " ";
        os << q.arrows[static_cast<size_t>(p.arrows[i])].id;
    }
    return os.str();
}

namespace {

bool word_composable(const Quiver& q, const std::vector<int>& word) {
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (q.arrows[static_cast<size_t>(word[i])].head !=
            q.arrows[static_cast<size_t>(word[i + 1])].tail)
            return false;
    return true;
}

// true iff some relation equals a suffix of `word`
bool relation_suffix(const std::vector<std::vector<int>>& relations,
                     const std::vector<int>& word) {
    for (const auto& r : relations) {
        if (r.size() > word.size()) continue;
        if (std::equal(r.begin(), r.end(), word.end() - static_cast<long>(r.size())))
            return true;
    }
    return false;
}

// Finiteness of the monomial quotient. Nonzero paths form the language of
// arrow words avoiding every relation as a factor; that language is
// infinite iff the sliding-window graph (windows = nonzero paths of length
// L-1, L = longest relation) has a directed cycle. With no relations the
// windows degenerate to vertices and the check is plain digraph acyclicity.
bool has_unbounded_nonzero_paths(const Quiver& q,
                                 const std::vector<std::vector<int>>& relations) {
    size_t window = 0;
    for (const auto& r : relations) window = std::max(window, r.size() - 1);

    std::vector<std::vector<int>> states;      // arrow words of length `window`
    std::vector<std::vector<int>> successors;  // state graph

    if (window == 0) {
        // states = vertices, transitions = arrows
        int n = static_cast<int>(q.vertices.size());
        successors.assign(static_cast<size_t>(n), {});
        for (const auto& a : q.arrows) successors[static_cast<size_t>(a.tail)].push_back(a.head);
    } else {
        // enumerate nonzero words of length `window`
        std::vector<std::vector<int>> level;
        for (size_t i = 0; i < q.arrows.size(); ++i) {
            std::vector<int> w{static_cast<int>(i)};
            if (!relation_suffix(relations, w)) level.push_back(w);
        }
        for (size_t len = 1; len < window; ++len) {
            std::vector<std::vector<int>> next;
            for (const auto& w : level) {
                int at = q.arrows[static_cast<size_t>(w.back())].head;
                for (size_t i = 0; i < q.arrows.size(); ++i) {
                    if (q.arrows[i].tail != at) continue;
                    std::vector<int> w2 = w;
                    w2.push_back(static_cast<int>(i));
                    if (!relation_suffix(relations, w2)) next.push_back(std::move(w2));
                }
            }
            level = std::move(next);
        }
        states = std::move(level);
        std::map<std::vector<int>, int> index;
        for (size_t i = 0; i < states.size(); ++i) index[states[i]] = static_cast<int>(i);
        successors.assign(states.size(), {});
        for (size_t s = 0; s < states.size(); ++s) {
            int at = q.arrows[static_cast<size_t>(states[s].back())].head;
            for (size_t i = 0; i < q.arrows.size(); ++i) {
                if (q.arrows[i].tail != at) continue;
                std::vector<int> ext = states[s];
                ext.push_back(static_cast<int>(i));
                if (relation_suffix(relations, ext)) continue;
                std::vector<int> nw(ext.begin() + 1, ext.end());
                auto it = index.find(nw);
                if (it != index.end()) successors[s].push_back(it->second);
            }
        }
    }

    // cycle detection (iterative three-color DFS)
    std::vector<int> color(successors.size(), 0);
    for (size_t start = 0; start < successors.size(); ++start) {
        if (color[start]) continue;
        std::vector<std::pair<int, size_t>> stack{{static_cast<int>(start), 0}};
        color[start] = 1;
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            if (next < successors[static_cast<size_t>(node)].size()) {
                int child = successors[static_cast<size_t>(node)][next++];
                if (color[static_cast<size_t>(child)] == 1) return true;
                if (color[static_cast<size_t>(child)] == 0) {
                    color[static_cast<size_t>(child)] = 1;
                    stack.push_back({child, 0});
                }
            } else {
                color[static_cast<size_t>(node)] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

}  // namespace

void QuiverPresentation::validate() const {
    quiver.validate();
    for (const auto& r : relations) {
        if (r.size() < 2) throw Error("relation of length < 2");
        for (int ai : r)
            if (ai < 0 || ai >= static_cast<int>(quiver.arrows.size()))
                throw Error("relation references a missing arrow");
        if (!word_composable(quiver, r)) throw Error("non-composable relation word");
    }
    if (!is_finite_dimensional())
        throw Error("infinite algebra: presentation admits arbitrarily long nonzero paths");
}

bool QuiverPresentation::is_finite_dimensional() const {
    return !has_unbounded_nonzero_paths(quiver, relations);
}

QuiverPresentation make_presentation(Quiver q,
                                     const std::vector<std::vector<std::string>>& relation_ids) {
    QuiverPresentation pres;
    pres.quiver = std::move(q);
    for (const auto& rid : relation_ids) {
        std::vector<int> word;
        for (const auto& id : rid) word.push_back(pres.quiver.arrow_index(id));
        pres.relations.push_back(std::move(word));
    }
    pres.validate();
    return pres;
}

bool is_zero_path(const QuiverPresentation& pres, const PathWord& p) {
    for (const auto& r : pres.relations) {
        if (r.size() > p.arrows.size()) continue;
        for (size_t off = 0; off + r.size() <= p.arrows.size(); ++off)
            if (std::equal(r.begin(), r.end(), p.arrows.begin() + static_cast<long>(off)))
                return true;
    }
    return false;
}

std::vector<PathWord> enumerate_nonzero_paths(const QuiverPresentation& pres) {
    if (!pres.is_finite_dimensional())
        throw Error("infinite algebra: presentation admits arbitrarily long nonzero paths");
    const Quiver& q = pres.quiver;
    std::vector<PathWord> all;
    for (size_t v = 0; v < q.vertices.size(); ++v) all.push_back(trivial_path(static_cast<int>(v)));
    // extend level by level; generation order is (length, lex on arrow indices)
    std::vector<PathWord> level;
    for (size_t i = 0; i < q.arrows.size(); ++i)
        level.push_back(PathWord{q.arrows[i].tail, {static_cast<int>(i)}});
    level.erase(std::remove_if(level.begin(), level.end(),
                               [&](const PathWord& p) { return is_zero_path(pres, p); }),
                level.end());
    while (!level.empty()) {
        all.insert(all.end(), level.begin(), level.end());
        std::vector<PathWord> next;
        for (const auto& p : level) {
            int at = p.target(q);
            for (size_t i = 0; i < q.arrows.size(); ++i) {
                if (q.arrows[i].tail != at) continue;
                PathWord ext = p;
                ext.arrows.push_back(static_cast<int>(i));
                if (!relation_suffix(pres.relations, ext.arrows)) next.push_back(std::move(ext));
            }
        }
        level = std::move(next);
    }
    return all;
}

std::vector<std::vector<long long>> cartan_matrix(const QuiverPresentation& pres) {
    size_t n = pres.quiver.vertices.size();
    std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
    for (const auto& p : enumerate_nonzero_paths(pres))
        c[static_cast<size_t>(p.source)][static_cast<size_t>(p.target(pres.quiver))]++;
    return c;
}

bool same_presentation(const QuiverPresentation& a, const QuiverPresentation& b) {
    if (a.quiver.vertices != b.quiver.vertices) return false;
    if (a.quiver.arrows.size() != b.quiver.arrows.size()) return false;
    for (size_t i = 0; i < a.quiver.arrows.size(); ++i) {
        const Arrow &x = a.quiver.arrows[i], &y = b.quiver.arrows[i];
        if (x.id != y.id || x.tail != y.tail || x.head != y.head) return false;
    }
    auto norm = [](const std::vector<std::vector<int>>& r) {
        auto s = r;
        std::sort(s.begin(), s.end());
        return s;
    };
    return norm(a.relations) == norm(b.relations);
}

QuiverPresentation opposite(const QuiverPresentation& pres) {
    QuiverPresentation op;
    op.quiver.vertices = pres.quiver.vertices;
    for (const auto& a : pres.quiver.arrows) op.quiver.arrows.push_back({a.id, a.head, a.tail});
    for (const auto& r : pres.relations) {
        std::vector<int> rev(r.rbegin(), r.rend());
        op.relations.push_back(std::move(rev));
    }
    return op;
}

namespace {

// arrow counts per ordered vertex pair
std::map<std::pair<int, int>, int> arrow_profile(const Quiver& q) {
    std::map<std::pair<int, int>, int> m;
    for (const auto& a : q.arrows) m[{a.tail, a.head}]++;
    return m;
}

std::set<std::vector<int>> mapped_relation_set(const QuiverPresentation& pres,
                                               const std::vector<int>& arrow_map) {
    std::set<std::vector<int>> out;
    for (const auto& r : pres.relations) {
        std::vector<int> w;
        for (int ai : r) w.push_back(arrow_map[static_cast<size_t>(ai)]);
        out.insert(std::move(w));
    }
    return out;
}

std::set<std::vector<int>> relation_set(const QuiverPresentation& pres) {
    return std::set<std::vector<int>>(pres.relations.begin(), pres.relations.end());
}

// With the vertex map fixed, try to match arrows (backtracking only over
// parallel arrows) so that relation sets agree.
bool match_arrows_and_relations(const QuiverPresentation& a, const QuiverPresentation& b,
                                const std::vector<int>& vmap) {
    // group b's arrows by endpoint pair
    std::map<std::pair<int, int>, std::vector<int>> b_group;
    for (size_t i = 0; i < b.quiver.arrows.size(); ++i)
        b_group[{b.quiver.arrows[i].tail, b.quiver.arrows[i].head}].push_back(static_cast<int>(i));
    std::map<std::pair<int, int>, std::vector<int>> a_group;
    for (size_t i = 0; i < a.quiver.arrows.size(); ++i) {
        const auto& ar = a.quiver.arrows[i];
        a_group[{vmap[static_cast<size_t>(ar.tail)], vmap[static_cast<size_t>(ar.head)]}].push_back(
            static_cast<int>(i));
    }
    if (a_group.size() != b_group.size()) return false;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;  // (a arrows, b arrows)
    for (const auto& [key, av] : a_group) {
        auto it = b_group.find(key);
        if (it == b_group.end() || it->second.size() != av.size()) return false;
        groups.push_back({av, it->second});
    }
    const auto b_rels = relation_set(b);
    std::vector<int> arrow_map(a.quiver.arrows.size(), -1);
    // backtrack over permutations within parallel groups (usually singletons)
    std::function<bool(size_t)> place = [&](size_t gi) -> bool {
        if (gi == groups.size()) return mapped_relation_set(a, arrow_map) == b_rels;
        auto& [av, bv] = groups[gi];
        std::vector<int> perm = bv;
        std::sort(perm.begin(), perm.end());
        do {
            for (size_t k = 0; k < av.size(); ++k)
                arrow_map[static_cast<size_t>(av[k])] = perm[k];
            if (place(gi + 1)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    return place(0);
}

struct IsoSearch {
    const QuiverPresentation& a;
    const QuiverPresentation& b;
    std::map<std::pair<int, int>, int> prof_a, prof_b;
    std::vector<int> vmap;     // a vertex -> b vertex
    std::vector<bool> used_b;
    bool involution = false;   // interpret as automorphism with f(f(v)) = v

    IsoSearch(const QuiverPresentation& a_, const QuiverPresentation& b_)
        : a(a_), b(b_), prof_a(arrow_profile(a_.quiver)), prof_b(arrow_profile(b_.quiver)),
          vmap(a_.quiver.vertices.size(), -1), used_b(b_.quiver.vertices.size(), false) {}

    bool consistent(int v, int w) const {
        for (size_t u = 0; u < vmap.size(); ++u) {
            if (vmap[u] < 0) continue;
            auto cnt = [](const std::map<std::pair<int, int>, int>& m, int x, int y) {
                auto it = m.find({x, y});
                return it == m.end() ? 0 : it->second;
            };
            int ui = static_cast<int>(u);
            if (cnt(prof_a, ui, v) != cnt(prof_b, vmap[u], w)) return false;
            if (cnt(prof_a, v, ui) != cnt(prof_b, w, vmap[u])) return false;
            if (cnt(prof_a, v, v) != cnt(prof_b, w, w)) return false;
        }
        return true;
    }

    bool assign(int v, int w) {
        if (vmap[static_cast<size_t>(v)] >= 0) return vmap[static_cast<size_t>(v)] == w;
        if (used_b[static_cast<size_t>(w)]) return false;
        if (!consistent(v, w)) return false;
        vmap[static_cast<size_t>(v)] = w;
        used_b[static_cast<size_t>(w)] = true;
        return true;
    }

    bool search(size_t v) {
        while (v < vmap.size() && vmap[v] >= 0) ++v;
        if (v == vmap.size()) return match_arrows_and_relations(a, b, vmap);
        for (size_t w = 0; w < used_b.size(); ++w) {
            std::vector<int> save_vmap = vmap;
            std::vector<bool> save_used = used_b;
            bool ok = assign(static_cast<int>(v), static_cast<int>(w));
            if (ok && involution) ok = assign(static_cast<int>(w), static_cast<int>(v));
            if (ok && search(v + 1)) return true;
            vmap = std::move(save_vmap);
            used_b = std::move(save_used);
        }
        return false;
    }
};

}  // namespace

bool presentation_isomorphic(const QuiverPresentation& a, const QuiverPresentation& b) {
    if (a.quiver.vertices.size() != b.quiver.vertices.size()) return false;
    if (a.quiver.arrows.size() != b.quiver.arrows.size()) return false;
    if (a.relations.size() != b.relations.size()) return false;
    IsoSearch s(a, b);
    return s.search(0);
}

bool is_self_opposite(const QuiverPresentation& pres) {
    return presentation_isomorphic(pres, opposite(pres));
}

bool is_presentation_automorphism(const QuiverPresentation& pres,
                                  const std::vector<int>& vertex_perm) {
    if (vertex_perm.size() != pres.quiver.vertices.size()) return false;
    std::vector<bool> hit(vertex_perm.size(), false);
    for (int w : vertex_perm) {
        if (w < 0 || w >= static_cast<int>(vertex_perm.size()) || hit[static_cast<size_t>(w)])
            return false;
        hit[static_cast<size_t>(w)] = true;
    }
    return match_arrows_and_relations(pres, pres, vertex_perm);
}

std::optional<std::vector<int>> find_involutive_automorphism(
    const QuiverPresentation& pres, const std::vector<std::pair<int, int>>& forced) {
    IsoSearch s(pres, pres);
    s.involution = true;
    for (const auto& [v, w] : forced) {
        if (!s.assign(v, w)) return std::nullopt;
        if (!s.assign(w, v)) return std::nullopt;
    }
    if (!s.search(0)) return std::nullopt;
    return s.vmap;
}

namespace {
std::string paren(int k) { return "(" + std::to_string(k) + ")"; }
}  // namespace

QuiverPresentation make_AA(int n) {
    if (n < 1) throw Error("make_AA: n must be >= 1");
    Quiver q;
    for (int i = 1; i <= n; ++i) q.vertices.push_back(paren(i));
    for (int i = 1; i < n; ++i) {
        q.arrows.push_back({"a" + std::to_string(i), i - 1, i});
        q.arrows.push_back({"b" + std::to_string(i), i, i - 1});
    }
    std::vector<std::vector<std::string>> rels;
    for (int i = 1; i < n; ++i) {
        rels.push_back({"a" + std::to_string(i), "b" + std::to_string(i)});
        rels.push_back({"b" + std::to_string(i), "a" + std::to_string(i)});
    }
    return make_presentation(std::move(q), rels);
}

QuiverPresentation make_AA3c() {
    QuiverPresentation aa = make_AA(3);
    // same quiver, but every length-2 composition dies
    std::vector<std::vector<int>> rels;
    for (size_t i = 0; i < aa.quiver.arrows.size(); ++i)
        for (size_t j = 0; j < aa.quiver.arrows.size(); ++j)
            if (aa.quiver.arrows[i].head == aa.quiver.arrows[j].tail)
                rels.push_back({static_cast<int>(i), static_cast<int>(j)});
    aa.relations = std::move(rels);
    aa.validate();
    return aa;
}

QuiverPresentation make_EE6() {
    Quiver q;
    for (int i = 1; i <= 6; ++i) q.vertices.push_back(paren(i));
    for (int i = 1; i <= 4; ++i) {
        q.arrows.push_back({"a" + std::to_string(i), i - 1, i});
        q.arrows.push_back({"b" + std::to_string(i), i, i - 1});
    }
    q.arrows.push_back({"alpha", 5, 2});  // (6) -> (3)
    q.arrows.push_back({"beta", 2, 5});   // (3) -> (6)
    std::vector<std::vector<std::string>> rels;
    for (int i = 1; i <= 4; ++i) {
        rels.push_back({"a" + std::to_string(i), "b" + std::to_string(i)});
        rels.push_back({"b" + std::to_string(i), "a" + std::to_string(i)});
    }
    rels.push_back({"alpha", "beta"});
    rels.push_back({"beta", "alpha"});
    // every other composition through alpha or beta
    rels.push_back({"alpha", "a3"});  // (6)->(3)->(4)
    rels.push_back({"alpha", "b2"});  // (6)->(3)->(2)
    rels.push_back({"a2", "beta"});   // (2)->(3)->(6)
    rels.push_back({"b3", "beta"});   // (4)->(3)->(6)
    return make_presentation(std::move(q), rels);
}

QuiverPresentation make_B8() {
    Quiver q;
    for (int i = 1; i <= 8; ++i) q.vertices.push_back(paren(i));
    q.arrows.push_back({"c1", 1, 0});  // (2) -> (1)
    q.arrows.push_back({"c2", 2, 1});  // (3) -> (2)
    q.arrows.push_back({"c3", 2, 3});  // (3) -> (4)
    q.arrows.push_back({"c4", 3, 4});  // (4) -> (5)
    q.arrows.push_back({"c5", 2, 5});  // (3) -> (6)
    q.arrows.push_back({"c6", 6, 1});  // (7) -> (2)
    q.arrows.push_back({"c7", 7, 3});  // (8) -> (4)
    return make_presentation(std::move(q), {{"c6", "c1"}, {"c7", "c4"}});
}

QuiverPresentation make_B8_opposite() { return opposite(make_B8()); }

QuiverPresentation make_builtin(const std::string& spec) {
    if (spec == "AA3c") return make_AA3c();
    if (spec == "EE6") return make_EE6();
    if (spec == "B8") return make_B8();
    if (spec == "B8op") return make_B8_opposite();
    if (spec.rfind("AA:", 0) == 0) {
        try {
            return make_AA(std::stoi(spec.substr(3)));
        } catch (const std::logic_error&) {
            throw Error("bad builtin quiver spec '" + spec + "'");
        }
    }
    throw Error("unknown builtin quiver '" + spec + "' (expected AA:<n>, AA3c, EE6, B8, B8op)");
}

}  // namespace qv
