#include "qv/quiver_json.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace qv {

using nlohmann::json;

QuiverPresentation quiver_from_json(const json& j) {
    if (!j.is_object()) throw Error("quiver json: expected an object");
    Quiver q;
    for (const auto& v : j.value("vertices", json::array())) {
        if (!v.is_string()) throw Error("quiver json: vertex ids must be strings");
        q.vertices.push_back(v.get<std::string>());
    }
    std::vector<std::vector<std::string>> rels;
    QuiverPresentation pres;
    pres.quiver = q;
    pres.quiver.arrows.clear();
    for (const auto& a : j.value("arrows", json::array())) {
        if (!a.is_object() || !a.contains("id") || !a.contains("tail") || !a.contains("head"))
            throw Error("quiver json: arrow needs id/tail/head");
        Arrow arr;
        arr.id = a.at("id").get<std::string>();
        arr.tail = pres.quiver.vertex_index(a.at("tail").get<std::string>());
        arr.head = pres.quiver.vertex_index(a.at("head").get<std::string>());
        pres.quiver.arrows.push_back(arr);
    }
    for (const auto& r : j.value("relations", json::array())) {
        if (!r.is_array()) throw Error("quiver json: relation must be an array of arrow ids");
        std::vector<std::string> word;
        for (const auto& id : r) word.push_back(id.get<std::string>());
        rels.push_back(std::move(word));
    }
    return make_presentation(std::move(pres.quiver), rels);
}

json quiver_to_json(const QuiverPresentation& pres) {
    json j;
    j["vertices"] = pres.quiver.vertices;
    j["arrows"] = json::array();
    for (const auto& a : pres.quiver.arrows)
        j["arrows"].push_back({{"id", a.id},
                               {"tail", pres.quiver.vertices[static_cast<size_t>(a.tail)]},
                               {"head", pres.quiver.vertices[static_cast<size_t>(a.head)]}});
    j["relations"] = json::array();
    for (const auto& r : pres.relations) {
        json word = json::array();
        for (int ai : r) word.push_back(pres.quiver.arrows[static_cast<size_t>(ai)].id);
        j["relations"].push_back(word);
    }
    return j;
}

QuiverPresentation load_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open quiver file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("bad json in '" + path + "': " + e.what());
    }
    return quiver_from_json(j);
}

}  // namespace qv
