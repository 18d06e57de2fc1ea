#include "makai/geometry_json.hpp"

#include <stdexcept>

namespace makai {

Polytope polytope_from_json(const nlohmann::json& j) {
  if (!j.contains("dimension"))
    throw std::invalid_argument("polytope JSON: missing \"dimension\"");
  const int dim = j.at("dimension").get<int>();

  if (j.contains("vertices")) {
    std::vector<Vec3> pts;
    for (const auto& row : j.at("vertices")) {
      if (static_cast<int>(row.size()) != dim)
        throw std::invalid_argument("polytope JSON: vertex arity mismatch");
      Vec3 p = Vec3::Zero();
      for (int k = 0; k < dim; ++k) p[k] = row[k].get<double>();
      pts.push_back(p);
    }
    return Polytope::from_vertices(dim, pts);
  }
  if (j.contains("halfspaces")) {
    std::vector<Halfspace> hs;
    for (const auto& row : j.at("halfspaces")) {
      const auto& nrm = row.at("normal");
      if (static_cast<int>(nrm.size()) != dim)
        throw std::invalid_argument("polytope JSON: normal arity mismatch");
      Halfspace h;
      for (int k = 0; k < dim; ++k) h.normal[k] = nrm[k].get<double>();
      h.offset = row.at("offset").get<double>();
      hs.push_back(h);
    }
    return Polytope::from_halfspaces(dim, hs);
  }
  throw std::invalid_argument(
      "polytope JSON: need \"vertices\" or \"halfspaces\"");
}

nlohmann::json polytope_to_json(const Polytope& P) {
  nlohmann::json j;
  j["dimension"] = P.dimension();
  auto& verts = j["vertices"] = nlohmann::json::array();
  for (const auto& v : P.vertices()) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < P.dimension(); ++k) row.push_back(v[k]);
    verts.push_back(row);
  }
  auto& hs = j["halfspaces"] = nlohmann::json::array();
  for (const auto& h : P.facets()) {
    nlohmann::json row;
    nlohmann::json nrm = nlohmann::json::array();
    for (int k = 0; k < P.dimension(); ++k) nrm.push_back(h.normal[k]);
    row["normal"] = nrm;
    row["offset"] = h.offset;
    hs.push_back(row);
  }
  return j;
}

} // namespace makai
