#pragma once

#include "makai/geometry.hpp"

#include <json.hpp>

namespace makai {

/// Polytope wire format:
///   {"dimension": N, "vertices": [[...]], "halfspaces":
///    [{"normal": [...], "offset": b}]}
/// Either of "vertices"/"halfspaces" may be omitted; the constructor
/// completes the missing representation.
Polytope polytope_from_json(const nlohmann::json& j);
nlohmann::json polytope_to_json(const Polytope& P);

} // namespace makai
