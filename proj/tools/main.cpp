#include "makai/harness.hpp"
#include "makai/measure.hpp"
#include "makai/normal_coords.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::vector<double> parse_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

int write_outputs(const makai::RunReport& report, const std::string& out_dir,
                  int jobs) {
  const auto json = makai::report_to_json(report, jobs);
  const auto csv = makai::report_to_csv(report);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream(out_dir + "/report.json") << json.dump(2) << "\n";
    std::ofstream(out_dir + "/summary.csv") << csv;
    std::cout << "wrote " << out_dir << "/report.json and summary.csv\n";
  } else {
    std::cout << json.dump(2) << "\n";
  }
  for (const auto& s : report.scenarios) {
    std::cout << (s.pass ? "[pass] " : "[FAIL] ") << s.id;
    if (!s.error.empty()) std::cout << "  error: " << s.error;
    std::cout << "\n";
  }
  std::cout << (report.overall_pass ? "overall: pass" : "overall: FAIL")
            << "\n";
  return report.overall_pass ? 0 : 1;
}

int run_scenario_file(const std::string& path, const std::string& out_dir,
                      int jobs, std::uint64_t seed_override, bool has_seed,
                      double tol_override, bool has_tol) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open scenario file: " << path << "\n";
    return 2;
  }
  nlohmann::json file;
  try {
    in >> file;
  } catch (const std::exception& ex) {
    std::cerr << "scenario parse error in " << path << ": " << ex.what()
              << "\n";
    return 2;
  }
  std::vector<makai::Scenario> scenarios;
  try {
    scenarios = makai::scenarios_from_json(file);
  } catch (const std::exception& ex) {
    std::cerr << "scenario validation error: " << ex.what() << "\n";
    return 2;
  }
  for (auto& s : scenarios) {
    if (has_seed) s.seed = seed_override;
    if (has_tol) s.tol = tol_override;
  }
  const auto report = makai::run_scenarios(scenarios, jobs);
  return write_outputs(report, out_dir, jobs);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Sharp lower bounds for principal frequencies of convex bodies: "
      "constants, distance-function moments, certified eigenvalue upper "
      "bounds, and inequality audits"};
  app.require_subcommand(1);

  // constants
  std::string p_list = "1.5,2,3,4", q_list = "1,2,3";
  int grid_n = 2000;
  std::string out_path;
  auto* cmd_constants =
      app.add_subcommand("constants", "Table of pi_{p,q} and C_{p,q} with "
                                      "discrete cross-checks");
  cmd_constants->add_option("--p", p_list, "comma-separated p values");
  cmd_constants->add_option("--q", q_list, "comma-separated q values");
  cmd_constants->add_option("--n", grid_n, "1D grid size for the cross-check");
  cmd_constants->add_option("--out", out_path, "output CSV file");

  // verify / suite
  std::string scenario_path, out_dir;
  int jobs = 1;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  auto* cmd_verify = app.add_subcommand(
      "verify", "Run inequality audits from a scenario file");
  cmd_verify->add_option("--scenario", scenario_path, "scenario JSON file")
      ->required();
  cmd_verify->add_option("--out", out_dir, "output directory");
  cmd_verify->add_option("--jobs", jobs, "parallel scenarios");
  auto* vseed = cmd_verify->add_option("--seed", seed, "override seeds");
  auto* vtol = cmd_verify->add_option("--tol", tol, "override tolerances");

  std::string suite_path = "data/paper_suite.json";
  std::string suite_out = "out";
  int suite_jobs = 1;
  std::uint64_t suite_seed = 42;
  double suite_tol = 1e-9;
  auto* cmd_suite = app.add_subcommand(
      "suite", "Run the bundled verification suite (or a given scenario file)");
  cmd_suite->add_option("--scenario", suite_path, "scenario JSON file");
  cmd_suite->add_option("--out", suite_out, "output directory");
  cmd_suite->add_option("--jobs", suite_jobs, "parallel scenarios");
  auto* sseed = cmd_suite->add_option("--seed", suite_seed, "override seeds");
  auto* stol = cmd_suite->add_option("--tol", suite_tol, "override tolerances");

  // sharpness
  std::string pq = "2,2";
  std::string L_list = "1,2,4,8";
  double h = 0.05;
  auto* cmd_sharp = app.add_subcommand(
      "sharpness", "Slab sharpness table rho(L) for one exponent pair");
  cmd_sharp->add_option("--pq", pq, "pair as p,q");
  cmd_sharp->add_option("--L", L_list, "slab lengths");
  cmd_sharp->add_option("--mesh-h", h, "mesh edge length");
  cmd_sharp->add_option("--out", out_path, "output CSV file");

  // counterexample
  double eps = 0.1, ce_h = 0.02;
  bool control_only = false;
  auto* cmd_ce = app.add_subcommand(
      "counterexample",
      "Annulus-with-tooth audit of lambda r^2 < pi^2/4 (slit as a seam)");
  cmd_ce->add_option("--eps", eps, "tooth half-width in (0,1)");
  cmd_ce->add_option("--mesh-h", ce_h, "mesh edge length");
  cmd_ce->add_flag("--control", control_only,
                   "run the slit annulus without the tooth");

  // cov
  std::string body_spec = "ellipse:2,1";
  int cov_n = 512;
  auto* cmd_cov = app.add_subcommand(
      "cov", "Change-of-variables area audit on a smooth body");
  cmd_cov->add_option("--body", body_spec,
                      "circle:R or ellipse:a,b");
  cmd_cov->add_option("--n", cov_n, "quadrature grid per direction");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_constants) {
      const auto csv =
          makai::constants_table_csv(parse_list(p_list), parse_list(q_list),
                                     grid_n);
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream(out_path) << csv;
        std::cout << "wrote " << out_path << "\n";
      }
      return 0;
    }
    if (*cmd_verify) {
      return run_scenario_file(scenario_path, out_dir, jobs, seed,
                               vseed->count() > 0, tol, vtol->count() > 0);
    }
    if (*cmd_suite) {
      return run_scenario_file(suite_path, suite_out, suite_jobs, suite_seed,
                               sseed->count() > 0, suite_tol,
                               stol->count() > 0);
    }
    if (*cmd_sharp) {
      const auto pqv = parse_list(pq);
      if (pqv.size() != 2) {
        std::cerr << "--pq expects p,q\n";
        return 2;
      }
      makai::ExponentPair e(pqv[0], pqv[1]);
      const auto rows = makai::slab_sharpness(e, parse_list(L_list), h);
      std::ostringstream os;
      os.precision(12);
      os << "L,lambda_upper,bound_factor,rho\n";
      bool ok = true;
      double prev = 1e300;
      for (const auto& r : rows) {
        os << r.L << "," << r.lambda_upper << "," << r.bound_factor << ","
           << r.rho << "\n";
        ok = ok && r.rho >= 1.0 && r.rho <= prev * (1.0 + 1e-3);
        prev = r.rho;
      }
      if (out_path.empty()) {
        std::cout << os.str();
      } else {
        std::ofstream(out_path) << os.str();
        std::cout << "wrote " << out_path << "\n";
      }
      std::cout << (ok ? "rho >= 1 and non-increasing: pass"
                       : "rho audit: FAIL")
                << "\n";
      return ok ? 0 : 1;
    }
    if (*cmd_ce) {
      const auto res =
          makai::counterexample_annulus_tooth(control_only ? 0.0 : eps, ce_h);
      std::cout.precision(12);
      std::cout << "nodes " << res.nodes << "  triangles " << res.triangles
                << "\n";
      std::cout << "lambda_upper " << res.lambda_upper << "  (pi^2 = "
                << M_PI * M_PI << ")\n";
      std::cout << "polygon inradius >= " << res.inradius_lower << "\n";
      if (control_only) {
        const bool ok =
            std::abs(res.lambda_upper - M_PI * M_PI) <= 0.05 * M_PI * M_PI;
        std::cout << "control |lambda - pi^2| <= 5%: "
                  << (ok ? "pass" : "FAIL") << "\n";
        return ok ? 0 : 1;
      }
      std::cout << "lambda r^2 = " << res.report.left << " vs pi^2/4 = "
                << res.report.right << " : "
                << (res.report.pass ? "pass (strict)" : "FAIL") << "\n";
      return res.report.pass ? 0 : 1;
    }
    if (*cmd_cov) {
      const auto colon = body_spec.find(':');
      const std::string kind = body_spec.substr(0, colon);
      const auto params = parse_list(body_spec.substr(colon + 1));
      std::optional<makai::SmoothBody2D> body;
      double exact_area = 0.0;
      if (kind == "circle" && params.size() == 1) {
        body = makai::SmoothBody2D::circle(params[0]);
        exact_area = M_PI * params[0] * params[0];
      } else if (kind == "ellipse" && params.size() == 2) {
        body = makai::SmoothBody2D::ellipse(params[0], params[1]);
        exact_area = M_PI * params[0] * params[1];
      } else {
        std::cerr << "--body expects circle:R or ellipse:a,b\n";
        return 2;
      }
      const double area = makai::cov_integral(
          *body, [](const makai::Vec2&) { return 1.0; }, cov_n, cov_n);
      std::cout.precision(12);
      std::cout << "normal-coordinates area " << area << "  exact "
                << exact_area << "  |err| " << std::abs(area - exact_area)
                << "\n";
      const bool ok = std::abs(area - exact_area) <= 1e-3;
      std::cout << (ok ? "pass" : "FAIL") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
