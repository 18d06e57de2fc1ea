#include "makai/harness.hpp"

#include "makai/constants.hpp"
#include "makai/geometry_json.hpp"
#include "makai/measure.hpp"
#include "makai/quotient1d.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

namespace makai {

namespace {

double param(const nlohmann::json& p, const std::string& key, double fallback) {
  return p.contains(key) ? p.at(key).get<double>() : fallback;
}

} // namespace

Polytope random_convex_polytope(int k, std::uint64_t seed) {
  if (k < 5)
    throw std::invalid_argument("random_convex: need k >= 5 samples");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vec3> pts;
    for (int i = 0; i < k; ++i) {
      double x, y;
      do {
        x = unif(rng);
        y = unif(rng);
      } while (x * x + y * y > 1.0);
      pts.emplace_back(x, y, 0.0);
    }
    Polytope P = Polytope::from_vertices(2, pts);
    if (P.vertices().size() >= 5) return P;
  }
  throw std::runtime_error("random_convex: retry budget exhausted");
}

GeneratedDomain generate_domain(const nlohmann::json& spec,
                                std::uint64_t default_seed) {
  GeneratedDomain out;
  if (spec.contains("polytope")) {
    out.kind = GeneratedDomain::Kind::polytope;
    out.polytope = polytope_from_json(spec.at("polytope"));
    out.label = "inline_polytope";
    return out;
  }
  if (!spec.contains("generator"))
    throw std::invalid_argument("domain: need \"generator\" or \"polytope\"");
  const std::string gen = spec.at("generator").get<std::string>();
  const nlohmann::json params =
      spec.contains("params") ? spec.at("params") : nlohmann::json::object();
  out.label = gen;

  if (gen == "regular_ngon") {
    const int n = static_cast<int>(param(params, "n", 6));
    out.polytope = make_regular_ngon(n, param(params, "r", 1.0));
  } else if (gen == "random_convex") {
    const int k = static_cast<int>(param(params, "k", 20));
    const auto seed = static_cast<std::uint64_t>(
        param(params, "seed", static_cast<double>(default_seed)));
    out.polytope = random_convex_polytope(k, seed);
  } else if (gen == "rectangle") {
    out.polytope = make_slab(2, param(params, "L", 1.0));
  } else if (gen == "triangle") {
    if (!params.contains("vertices"))
      throw std::invalid_argument("triangle: params.vertices required");
    std::vector<Vec3> pts;
    for (const auto& row : params.at("vertices"))
      pts.emplace_back(row[0].get<double>(), row[1].get<double>(), 0.0);
    if (pts.size() != 3)
      throw std::invalid_argument("triangle: exactly three vertices");
    out.polytope = Polytope::from_vertices(2, pts);
  } else if (gen == "box3d") {
    out.polytope = make_box(
        3, Vec3(0, 0, 0),
        Vec3(param(params, "a", 1.0), param(params, "b", 1.0),
             param(params, "c", 1.0)));
  } else if (gen == "simplex3d") {
    out.polytope = make_simplex3d();
  } else if (gen == "annulus_tooth") {
    out.kind = GeneratedDomain::Kind::slit_annulus;
    out.annulus_eps = param(params, "eps", 0.1);
  } else if (gen == "ellipse") {
    out.kind = GeneratedDomain::Kind::smooth;
    out.smooth =
        SmoothBody2D::ellipse(param(params, "a", 2.0), param(params, "b", 1.0));
  } else if (gen == "circle") {
    out.kind = GeneratedDomain::Kind::smooth;
    out.smooth = SmoothBody2D::circle(param(params, "R", 1.0));
  } else if (gen == "tabulated") {
    // user-supplied boundary samples, interpolated by a periodic spline
    if (!params.contains("points"))
      throw std::invalid_argument("tabulated: params.points required");
    std::vector<Vec2> pts;
    for (const auto& row : params.at("points"))
      pts.emplace_back(row[0].get<double>(), row[1].get<double>());
    out.kind = GeneratedDomain::Kind::smooth;
    out.smooth = SmoothBody2D::from_samples(pts);
  } else {
    throw std::invalid_argument("domain: unknown generator \"" + gen + "\"");
  }
  return out;
}

Scenario scenario_from_json(const nlohmann::json& j) {
  Scenario s;
  s.id = j.at("id").get<std::string>();
  s.domain = j.value("domain", nlohmann::json::object());
  if (j.contains("pairs")) {
    for (const auto& row : j.at("pairs"))
      s.pairs.emplace_back(row[0].get<double>(), row[1].get<double>());
  }
  if (j.contains("checks"))
    for (const auto& c : j.at("checks")) s.checks.push_back(c.get<std::string>());
  if (s.checks.empty())
    throw std::invalid_argument("scenario " + s.id + ": no checks");
  if (j.contains("h")) s.h = j.at("h").get<double>();
  if (j.contains("h_rel")) s.h_rel = j.at("h_rel").get<double>();
  if (j.contains("tol")) s.tol = j.at("tol").get<double>();
  if (!(s.tol > 0.0))
    throw std::invalid_argument("scenario " + s.id + ": tolerance must be > 0");
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("alpha")) {
    s.alphas.clear();
    for (const auto& a : j.at("alpha")) s.alphas.push_back(a.get<double>());
  }
  if (j.contains("L")) {
    s.Ls.clear();
    for (const auto& L : j.at("L")) s.Ls.push_back(L.get<double>());
  }
  if (j.contains("eps")) s.eps = j.at("eps").get<double>();
  if (j.contains("grid")) s.grid = j.at("grid").get<int>();
  return s;
}

std::vector<Scenario> scenarios_from_json(const nlohmann::json& file) {
  if (!file.contains("scenarios"))
    throw std::invalid_argument("scenario file: missing \"scenarios\"");
  std::vector<Scenario> out;
  std::vector<std::string> ids;
  for (const auto& j : file.at("scenarios")) {
    out.push_back(scenario_from_json(j));
    for (const auto& id : ids)
      if (id == out.back().id)
        throw std::invalid_argument("scenario ids must be unique: " + id);
    ids.push_back(out.back().id);
  }
  return out;
}

namespace {

void run_one(const Scenario& sc, ScenarioResult& result) {
  result.id = sc.id;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    std::optional<GeneratedDomain> dom;
    auto ensure_domain = [&]() -> GeneratedDomain& {
      if (!dom) dom = generate_domain(sc.domain, sc.seed);
      return *dom;
    };
    auto& reports = result.reports;

    // shared mesh + lambda cache for polytope checks
    std::optional<TriangleMesh> mesh;
    std::vector<std::pair<ExponentPair, double>> lambda_cache;
    auto mesh_h = [&](const Polytope& P) {
      return sc.h > 0.0 ? sc.h : sc.h_rel * P.diameter();
    };
    auto lambda_of = [&](const Polytope& P, const ExponentPair& e) {
      if (!mesh) mesh = mesh_polygon(polygon_of(P), mesh_h(P));
      for (const auto& [pe, v] : lambda_cache)
        if (pe.p() == e.p() && pe.q() == e.q()) return v;
      const double v = minimize_lambda(*mesh, e).lambda_upper;
      lambda_cache.emplace_back(e, v);
      return v;
    };
    auto require_polytope = [&]() -> const Polytope& {
      if (!ensure_domain().polytope)
        throw std::invalid_argument("check requires a polytope domain");
      return *ensure_domain().polytope;
    };
    auto require_smooth = [&]() -> const SmoothBody2D& {
      if (!ensure_domain().smooth)
        throw std::invalid_argument("check requires a smooth domain");
      return *ensure_domain().smooth;
    };

    for (const std::string& check : sc.checks) {
      if (check == "makai") {
        const Polytope& P = require_polytope();
        for (const auto& e : sc.pairs) {
          auto rep = make_report(
              "makai(" + std::to_string(e.p()) + "," + std::to_string(e.q()) +
                  ")",
              makai_lower_bound(P, e), lambda_of(P, e), sc.tol, "le",
              "distance-moment lower bound (exact)",
              "FEM Rayleigh upper bound");
          reports.push_back(rep);
        }
      } else if (check == "hersch_protter") {
        const Polytope& P = require_polytope();
        for (const auto& e : sc.pairs) {
          reports.push_back(make_report(
              "hersch_protter(" + std::to_string(e.p()) + "," +
                  std::to_string(e.q()) + ")",
              hersch_protter_bound(P, e), lambda_of(P, e), sc.tol, "le",
              "(pi_pq/2)^p / (|P|^{(p-q)/q} r^p)", "FEM Rayleigh upper bound"));
        }
      } else if (check == "moment_bound") {
        const Polytope& P = require_polytope();
        for (double alpha : sc.alphas) {
          reports.push_back(make_report(
              "moment_bound(alpha=" + std::to_string(alpha) + ")",
              distance_moment(P, alpha).value, moment_upper_bound(P, alpha),
              sc.tol, "le", "exact distance moment", "|P| r^a/(a+1)"));
        }
      } else if (check == "slab_sharpness") {
        for (const auto& e : sc.pairs) {
          const double hh = sc.h > 0.0 ? sc.h : 0.05;
          auto rows = slab_sharpness(e, sc.Ls, hh);
          for (size_t k = 0; k < rows.size(); ++k) {
            reports.push_back(make_report(
                "slab_rho(L=" + std::to_string(rows[k].L) + ")", rows[k].rho,
                1.0, sc.tol, "ge", "lambda_h * bound factor / C_{p,q}",
                "sharp limit"));
            if (k > 0) {
              reports.push_back(make_report(
                  "slab_rho_monotone(L=" + std::to_string(rows[k].L) + ")",
                  rows[k].rho, rows[k - 1].rho, std::max(sc.tol, 1e-3), "le",
                  "rho at the larger slab", "rho at the previous slab"));
            }
          }
        }
      } else if (check == "counterexample") {
        const double hh = sc.h > 0.0 ? sc.h : 0.02;
        auto tooth = counterexample_annulus_tooth(sc.eps, hh);
        reports.push_back(tooth.report);
        auto control = counterexample_annulus_tooth(0.0, hh);
        reports.push_back(make_report(
            "counterexample_control", std::abs(control.lambda_upper - M_PI * M_PI),
            0.05 * M_PI * M_PI, 0.0, "le",
            "|lambda_upper(slit annulus) - pi^2|", "5% of pi^2"));
      } else if (check == "cov") {
        const SmoothBody2D& B = require_smooth();
        const double area =
            cov_integral(B, [](const Vec2&) { return 1.0; }, sc.grid, sc.grid);
        // reference area: shoelace over a dense boundary polygon
        double ref = 0.0;
        const int m = 4096;
        for (int k = 0; k < m; ++k) {
          const Vec2 a = B.point(2.0 * M_PI * k / m);
          const Vec2 b = B.point(2.0 * M_PI * (k + 1) / m);
          ref += 0.5 * (a.x() * b.y() - a.y() * b.x());
        }
        reports.push_back(make_report(
            "cov_area", std::abs(area - std::abs(ref)),
            std::max(sc.tol, 1e-3), 0.0, "le",
            "|normal-coordinates area - boundary shoelace area|",
            "tolerance"));
      } else if (check == "weighted_quotient") {
        const SmoothBody2D& B = require_smooth();
        for (const auto& e : sc.pairs) {
          if (!(e.p() > 1.0)) continue;
          for (double s : {0.0, 1.0, 2.5, 4.0})
            reports.push_back(
                weighted_quotient_check(B, s, e.p(), std::max(64, sc.grid / 2)));
        }
      } else {
        throw std::invalid_argument("unknown check \"" + check + "\"");
      }
    }
    result.pass = true;
    for (const auto& r : result.reports) result.pass = result.pass && r.pass;
  } catch (const std::exception& ex) {
    result.error = ex.what();
    result.pass = false;
  }
  const auto t1 = std::chrono::steady_clock::now();
  result.wall_ms =
      std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() /
      1000.0;
}

} // namespace

RunReport run_scenarios(const std::vector<Scenario>& scenarios, int jobs) {
  RunReport report;
  report.scenarios.resize(scenarios.size());
  jobs = std::max(1, jobs);
  if (jobs == 1 || scenarios.size() <= 1) {
    for (size_t i = 0; i < scenarios.size(); ++i)
      run_one(scenarios[i], report.scenarios[i]);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    const int workers =
        std::min<std::size_t>(jobs, scenarios.size());
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        while (true) {
          const size_t i = next.fetch_add(1);
          if (i >= scenarios.size()) return;
          run_one(scenarios[i], report.scenarios[i]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  report.overall_pass = true;
  for (const auto& s : report.scenarios)
    report.overall_pass = report.overall_pass && s.pass && s.error.empty();
  return report;
}

nlohmann::json report_to_json(const RunReport& report, int jobs) {
  nlohmann::json j;
  j["schema_version"] = 1;
  {
    nlohmann::json meta;
    const auto now = std::chrono::system_clock::now();
    meta["created_unix"] =
        std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch())
            .count();
    meta["jobs"] = jobs;
    j["metadata"] = meta;
  }
  auto& arr = j["scenarios"] = nlohmann::json::array();
  for (const auto& s : report.scenarios) {
    nlohmann::json js;
    js["id"] = s.id;
    js["pass"] = s.pass;
    js["wall_ms"] = s.wall_ms;
    if (!s.error.empty()) js["error"] = s.error;
    auto& reps = js["reports"] = nlohmann::json::array();
    for (const auto& r : s.reports) {
      nlohmann::json jr;
      jr["id"] = r.id;
      jr["left"] = r.left;
      jr["right"] = r.right;
      jr["ratio"] = r.ratio;
      jr["tolerance"] = r.tolerance;
      jr["direction"] = r.direction;
      jr["pass"] = r.pass;
      jr["left_provenance"] = r.left_provenance;
      jr["right_provenance"] = r.right_provenance;
      reps.push_back(jr);
    }
    arr.push_back(js);
  }
  j["overall_pass"] = report.overall_pass;
  return j;
}

std::string report_to_csv(const RunReport& report) {
  std::ostringstream os;
  os.precision(12);
  os << "scenario,check,left,right,ratio,direction,verdict\n";
  for (const auto& s : report.scenarios) {
    for (const auto& r : s.reports) {
      os << s.id << "," << r.id << "," << r.left << "," << r.right << ","
         << r.ratio << "," << r.direction << ","
         << (r.pass ? "pass" : "fail") << "\n";
    }
    if (!s.error.empty()) os << s.id << ",error,,,,," << "fail\n";
  }
  return os.str();
}

std::string constants_table_csv(const std::vector<double>& ps,
                                const std::vector<double>& qs, int n) {
  std::ostringstream os;
  os.precision(12);
  os << "p,q,pi_pq,c_pq,pi_pq_numeric,rel_delta,note\n";
  for (double p : ps) {
    for (double q : qs) {
      os << p << "," << q << ",";
      if (!(q >= 1.0) || !(q <= p) || (q == p && !(p > 1.0)) || !(p > 1.0)) {
        os << ",,,,skipped (inadmissible)\n";
        continue;
      }
      ExponentPair e(p, q);
      const double closed = pi_pq(e);
      const double numeric = pi_pq_numeric(e, n).value;
      os << closed << "," << c_pq(e) << "," << numeric << ","
         << std::abs(numeric - closed) / closed << ",\n";
    }
  }
  return os.str();
}

} // namespace makai
