#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "eigenmin/diff_ops.hpp"
#include "eigenmin/fiber.hpp"
#include "eigenmin/spaces.hpp"

namespace eigenmin {

/// One gateable check. The invariant pass == (residual <= tolerance) holds
/// for every check; lower-bounded quantities are stored as deficits
/// (residual = max(0, gate - value), tolerance = 0) with the raw value in the
/// report details. Ungated checks are informational and do not affect exit
/// codes.
struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool gated = true;
};

/// Central tolerance table. Some keys bound residuals of exact identities;
/// the rest are measured gates documented in the README.
std::map<std::string, double> default_tolerances();

struct RunConfig {
  SpaceId space = SpaceId::SUSO;
  int n = 2;
  std::uint64_t seed = 1;
  int samples = 20;
  int draws = 5;
  Backend backend = Backend::exact;
  std::map<std::string, double> tol = default_tolerances();
  std::string params_path;  // optional JSON parameter file
  std::string out_path;     // optional report destination
  bool csv = false;
  bool force = false;
  par::Mode mode = par::default_mode();
};

class ReportExistsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VerificationReport {
  std::string command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, double>> wall_time;

  void add_check(const std::string& name, double residual, double tolerance, bool gated = true);
  /// Deficit form for "value must be at least gate".
  void add_min_check(const std::string& name, double value, double gate, bool gated = true);
  bool all_gated_pass() const;

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
};

nlohmann::ordered_json config_json(const RunConfig& c);
nlohmann::ordered_json fiber_points_json(const std::vector<FiberPoint>& points);

/// Refuses to overwrite an existing file unless force is set.
void write_text_file(const std::string& text, const std::string& path, bool force);

}  // namespace eigenmin
