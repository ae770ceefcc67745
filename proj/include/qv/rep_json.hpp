#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <variant>

#include "qv/rep.hpp"

namespace qv {

using AnyRep = std::variant<RepQ, RepF>;

// On-disk schema:
//   {"quiver": <inline quiver> | "<path>" | "builtin:<spec>",
//    "field":  "Q" | "Fp:<p>",
//    "dims":   {"v": 1, ...},
//    "maps":   {"a1": [[...], ...], ...}}
// Rational entries are "num/den" strings (plain integers also accepted);
// F_p entries are integers 0..p-1. Arrows whose matrix is omitted get the
// zero map. `base_dir` resolves a relative quiver file reference.
AnyRep rep_from_json(const nlohmann::json& j, const std::string& base_dir = ".");
nlohmann::json rep_to_json(const RepQ& v);
nlohmann::json rep_to_json(const RepF& v);

AnyRep load_rep_file(const std::string& path);

FieldInfo parse_field(const std::string& s);

}  // namespace qv
