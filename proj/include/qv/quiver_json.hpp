#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "qv/quiver.hpp"

namespace qv {

// On-disk schema:
//   {"vertices": ["v1", ...],
//    "arrows":   [{"id": "a1", "tail": "v1", "head": "v2"}, ...],
//    "relations":[["a1", "a2"], ...]}
// Relation words list arrow ids in tail-to-head composition order.
QuiverPresentation quiver_from_json(const nlohmann::json& j);
nlohmann::json quiver_to_json(const QuiverPresentation& pres);

QuiverPresentation load_quiver_file(const std::string& path);

}  // namespace qv
