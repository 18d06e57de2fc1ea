#pragma once

#include "makai/exponents.hpp"
#include "makai/geometry.hpp"
#include "makai/normal_coords.hpp"
#include "makai/spectral.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace makai {

/// A generated verification domain: a polytope, a smooth body, or the slit
/// annulus family (which is polygonized at mesh time from eps).
struct GeneratedDomain {
  enum class Kind { polytope, smooth, slit_annulus };
  Kind kind = Kind::polytope;
  std::optional<Polytope> polytope;
  std::optional<SmoothBody2D> smooth;
  double annulus_eps = 0.0;
  std::string label;
};

/// Generators: regular_ngon(n,r), random_convex(k,seed), rectangle(L),
/// triangle(vertices), box3d(a,b,c), simplex3d, annulus_tooth(eps),
/// ellipse(a,b), circle(R); or an inline {"polytope": {...}} body.
GeneratedDomain generate_domain(const nlohmann::json& spec,
                                std::uint64_t default_seed);

/// Convex hull of k uniform points in the unit disk; redraws until the hull
/// has at least 5 vertices.  Deterministic per seed.
Polytope random_convex_polytope(int k, std::uint64_t seed);

struct Scenario {
  std::string id;
  nlohmann::json domain;
  std::vector<ExponentPair> pairs;
  std::vector<std::string> checks;
  double h = 0.0;          // absolute target edge length; 0 = use h_rel
  double h_rel = 0.05;     // relative to the domain diameter
  double tol = 1e-9;
  std::uint64_t seed = 42;
  std::vector<double> alphas = {0.5, 1.0, 2.0};
  std::vector<double> Ls = {1.0, 2.0, 4.0, 8.0};
  double eps = 0.1;
  int grid = 512;
};

struct ScenarioResult {
  std::string id;
  std::vector<InequalityReport> reports;
  bool pass = false;
  double wall_ms = 0.0;  // timing field, quarantined from comparisons
  std::string error;
};

struct RunReport {
  std::vector<ScenarioResult> scenarios;
  bool overall_pass = false;
};

Scenario scenario_from_json(const nlohmann::json& j);
std::vector<Scenario> scenarios_from_json(const nlohmann::json& file);

/// Executes all scenarios (scenario-level parallelism bounded by jobs);
/// individual scenario failures are recorded, not fatal.
RunReport run_scenarios(const std::vector<Scenario>& scenarios, int jobs = 1);

/// Report serialization.  Timestamps and host data live in "metadata" only,
/// so reports from identical runs are comparable.
nlohmann::json report_to_json(const RunReport& report, int jobs);
std::string report_to_csv(const RunReport& report);

/// CSV table of pi_{p,q}, C_{p,q}, and the discrete cross-check at grid n.
/// Inadmissible pairs are emitted with a "skipped" note.
std::string constants_table_csv(const std::vector<double>& ps,
                                const std::vector<double>& qs, int n);

} // namespace makai
