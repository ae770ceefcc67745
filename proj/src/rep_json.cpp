#include "qv/rep_json.hpp"

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "qv/quiver_json.hpp"

namespace qv {

using nlohmann::json;

FieldInfo parse_field(const std::string& s) {
    if (s == "Q") return FieldInfo{0};
    if (s.rfind("Fp:", 0) == 0) {
        long long p;
        try {
            p = std::stoll(s.substr(3));
        } catch (const std::logic_error&) {
            throw Error("bad field tag '" + s + "'");
        }
        if (p < 2) throw Error("field Fp needs a prime p >= 2");
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw Error("field Fp:" + std::to_string(p) + ": p is not prime");
        return FieldInfo{p};
    }
    throw Error("bad field tag '" + s + "' (expected \"Q\" or \"Fp:<p>\")");
}

namespace {

template <class K>
RepT<K> rep_from_json_typed(const json& j, PresPtr pres, FieldInfo field) {
    std::vector<int> dims(pres->quiver.vertices.size(), 0);
    if (!j.contains("dims") || !j.at("dims").is_object())
        throw Error("rep json: 'dims' object required");
    for (const auto& [key, val] : j.at("dims").items()) {
        int vi = pres->quiver.vertex_index(key);
        if (!val.is_number_integer() || val.template get<long long>() < 0)
            throw Error("rep json: dims must be nonnegative integers");
        dims[static_cast<size_t>(vi)] = val.template get<int>();
    }
    RepT<K> v = make_zero_rep<K>(pres, dims, field);
    const json maps = j.value("maps", json::object());
    for (const auto& [key, mat] : maps.items()) {
        int ai = pres->quiver.arrow_index(key);
        const auto& arr = pres->quiver.arrows[static_cast<size_t>(ai)];
        int r = dims[static_cast<size_t>(arr.head)], c = dims[static_cast<size_t>(arr.tail)];
        if (!mat.is_array() || static_cast<int>(mat.size()) != r)
            throw Error("rep json: map '" + key + "' must have " + std::to_string(r) + " rows");
        for (int i = 0; i < r; ++i) {
            const auto& row = mat.at(static_cast<size_t>(i));
            if (!row.is_array() || static_cast<int>(row.size()) != c)
                throw Error("rep json: map '" + key + "' row " + std::to_string(i) + " must have " +
                            std::to_string(c) + " entries");
            for (int jj = 0; jj < c; ++jj) {
                const auto& cell = row.at(static_cast<size_t>(jj));
                if constexpr (std::is_same_v<K, Rational>) {
                    if (cell.is_string())
                        v.maps[static_cast<size_t>(ai)].at(i, jj) =
                            parse_rational(cell.template get<std::string>());
                    else if (cell.is_number_integer())
                        v.maps[static_cast<size_t>(ai)].at(i, jj) = Rational(cell.template get<long long>());
                    else
                        throw Error("rep json: rational entries are \"num/den\" strings");
                } else {
                    if (!cell.is_number_integer())
                        throw Error("rep json: F_p entries are integers 0..p-1");
                    v.maps[static_cast<size_t>(ai)].at(i, jj) = Fp(cell.template get<long long>(), field.p);
                }
            }
        }
    }
    check_shapes(v);
    return v;
}

template <class K>
json matrix_rows(const Matrix<K>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) {
            if constexpr (std::is_same_v<K, Rational>)
                row.push_back(to_string(m.at(i, j)));
            else
                row.push_back(m.at(i, j).v);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class K>
json rep_to_json_typed(const RepT<K>& v) {
    json j;
    j["quiver"] = quiver_to_json(*v.pres);
    j["field"] = v.field.name();
    j["dims"] = json::object();
    for (size_t i = 0; i < v.dims.size(); ++i) j["dims"][v.pres->quiver.vertices[i]] = v.dims[i];
    j["maps"] = json::object();
    for (size_t a = 0; a < v.maps.size(); ++a)
        if (v.maps[a].rows() > 0 && v.maps[a].cols() > 0)
            j["maps"][v.pres->quiver.arrows[a].id] = matrix_rows(v.maps[a]);
    return j;
}

}  // namespace

AnyRep rep_from_json(const json& j, const std::string& base_dir) {
    if (!j.is_object()) throw Error("rep json: expected an object");
    if (!j.contains("quiver")) throw Error("rep json: 'quiver' required");
    PresPtr pres;
    const auto& qj = j.at("quiver");
    if (qj.is_object()) {
        pres = share(quiver_from_json(qj));
    } else if (qj.is_string()) {
        std::string ref = qj.get<std::string>();
        if (ref.rfind("builtin:", 0) == 0)
            pres = share(make_builtin(ref.substr(8)));
        else
            pres = share(load_quiver_file(
                (std::filesystem::path(base_dir) / ref).string()));
    } else {
        throw Error("rep json: 'quiver' must be an object or a reference string");
    }
    FieldInfo field = parse_field(j.value("field", "Q"));
    if (field.is_q()) return rep_from_json_typed<Rational>(j, pres, field);
    return rep_from_json_typed<Fp>(j, pres, field);
}

json rep_to_json(const RepQ& v) { return rep_to_json_typed(v); }
json rep_to_json(const RepF& v) { return rep_to_json_typed(v); }

AnyRep load_rep_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open representation file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("bad json in '" + path + "': " + e.what());
    }
    return rep_from_json(j, std::filesystem::path(path).parent_path().string());
}

}  // namespace qv
