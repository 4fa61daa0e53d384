#include "eigenmin/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace eigenmin {

std::map<std::string, double> default_tolerances() {
  return {
      {"eigen", 1e-8},        // tau/kappa residuals against the closed-form eigenvalues
      {"pair", 1e-8},         // scaled-pair family check
      {"backend", 1e-5},      // FD vs exact derivative agreement
      {"invariance", 1e-10},  // |phi(pk) - phi(p)|, an exact identity
      {"vertical", 1e-9},     // derivatives along k directions
      {"zero", 1e-10},        // |phi| on returned fiber points
      {"membership", 1e-8},   // group residual of returned points
      {"margin", 1e-3},       // regularity gate, unit-norm parameters (measured)
      {"hnorm", 1e-4},        // mean curvature bound on the zero fiber
      {"control_factor", 10.0},
      {"scan", 1e-6},         // whole-group margin for the submersive families
      {"appendix", 1e-10},    // determinant identity relative error
      {"sphere", 1e-7},       // measured (lambda, mu) on the sphere examples
      {"gram", 1e-12},        // basis Gram residual
      {"basis_indep", 1e-9},  // tau/kappa under orthonormal re-mixing
  };
}

void VerificationReport::add_check(const std::string& name, double residual, double tolerance,
                                   bool gated) {
  checks.push_back({name, residual, tolerance, residual <= tolerance, gated});
}

void VerificationReport::add_min_check(const std::string& name, double value, double gate,
                                       bool gated) {
  const double deficit = std::max(0.0, gate - value);
  checks.push_back({name, deficit, 0.0, deficit <= 0.0, gated});
}

bool VerificationReport::all_gated_pass() const {
  for (const auto& c : checks) {
    if (c.gated && !c.pass) return false;
  }
  return true;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "eigenmin/1";
  j["command"] = command;
  j["config"] = config;
  for (auto it = details.begin(); it != details.end(); ++it) j[it.key()] = it.value();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"residual", c.residual},
                   {"tolerance", c.tolerance},
                   {"pass", c.pass},
                   {"gated", c.gated}});
  }
  j["checks"] = arr;
  auto wt = nlohmann::ordered_json::object();
  for (const auto& [k, v] : wall_time) wt[k] = v;
  j["wall_time"] = wt;
  return j;
}

std::string VerificationReport::to_csv() const {
  std::string out = "name,residual,tolerance,pass,gated\n";
  char num[64];
  for (const auto& c : checks) {
    out += c.name;
    std::snprintf(num, sizeof num, ",%.12g,%.12g,", c.residual, c.tolerance);
    out += num;
    out += (c.pass ? "true" : "false");
    out += c.gated ? ",true\n" : ",false\n";
  }
  return out;
}

nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["space"] = space_name(c.space);
  j["n"] = c.n;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["draws"] = c.draws;
  j["backend"] = backend_name(c.backend);
  j["params"] = c.params_path;
  auto tj = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.tol) tj[k] = v;
  j["tolerances"] = tj;
  return j;
}

nlohmann::ordered_json fiber_points_json(const std::vector<FiberPoint>& points) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& fp : points) {
    std::vector<double> re, im;
    re.reserve(fp.p.data().size());
    im.reserve(fp.p.data().size());
    for (const auto& z : fp.p.data()) {
      re.push_back(z.real());
      im.push_back(z.imag());
    }
    arr.push_back({{"rows", fp.p.rows()},
                   {"cols", fp.p.cols()},
                   {"p_re", re},
                   {"p_im", im},
                   {"residual", fp.value_residual},
                   {"margin", fp.gradient_margin}});
  }
  return arr;
}

void write_text_file(const std::string& text, const std::string& path, bool force) {
  if (!force && std::filesystem::exists(path)) {
    throw ReportExistsError("refusing to overwrite existing report '" + path +
                            "' (pass --force to allow)");
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
}

}  // namespace eigenmin
