#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "eigenmin/verification.hpp"

using namespace eigenmin;

namespace {

nlohmann::ordered_json strip_wall_time(nlohmann::ordered_json j) {
  j.erase("wall_time");
  return j;
}

}  // namespace

TEST_CASE("check bookkeeping") {
  VerificationReport rep;
  rep.add_check("a", 1e-9, 1e-8);
  rep.add_check("b", 1e-7, 1e-8);
  CHECK(rep.checks[0].pass);
  CHECK_FALSE(rep.checks[1].pass);
  CHECK_FALSE(rep.all_gated_pass());

  VerificationReport rep2;
  rep2.add_min_check("margin", 0.5, 1e-3);
  rep2.add_check("reported", 99.0, 1e-8, /*gated=*/false);
  CHECK(rep2.checks[0].pass);
  CHECK(rep2.all_gated_pass());
}

TEST_CASE("default tolerances are positive and complete") {
  const auto tol = default_tolerances();
  for (const char* key : {"eigen", "pair", "backend", "invariance", "zero", "membership",
                          "margin", "hnorm", "control_factor", "scan", "appendix", "sphere",
                          "gram", "basis_indep", "vertical"}) {
    REQUIRE(tol.count(key) == 1);
    CHECK(tol.at(key) > 0.0);
  }
}

TEST_CASE("verify reports are deterministic modulo wall_time") {
  RunConfig config;
  config.space = SpaceId::SUSO;
  config.n = 3;
  config.samples = 6;
  config.draws = 2;
  config.seed = 5;

  const auto r1 = run_verify(config);
  const auto r2 = run_verify(config);
  CHECK(strip_wall_time(r1.to_json()).dump() == strip_wall_time(r2.to_json()).dump());
  CHECK(r1.to_json()["schema"] == "eigenmin/1");
  CHECK(r1.to_json()["lambda_expected"].get<double>() == doctest::Approx(-20.0 / 3.0));
}

TEST_CASE("verify accepts a parameter file and echoes the config") {
  const std::string path = "/tmp/eigenmin_report_params.json";
  {
    std::ofstream out(path, std::ios::trunc);
    out << R"({"space": "suso", "n": 3, "a_re": [1.0, 0.0, 0.0], "a_im": [0.0, 0.0, 0.0]})";
  }
  RunConfig config;
  config.space = SpaceId::SUSO;
  config.n = 3;
  config.samples = 5;
  config.params_path = path;
  const auto rep = run_verify(config);
  CHECK(rep.all_gated_pass());
  CHECK(rep.config["params"] == path);
  CHECK(rep.config["space"] == "suso");
  std::remove(path.c_str());

  // Space mismatch between file and flags is a config error.
  {
    std::ofstream out(path, std::ios::trunc);
    out << R"({"space": "spu", "n": 1, "a_re": [1.0, 0.0], "a_im": [0.0, 0.0]})";
  }
  RunConfig bad = config;
  bad.params_path = path;
  CHECK_THROWS_AS(run_verify(bad), std::invalid_argument);
  std::remove(path.c_str());
}

TEST_CASE("csv export flattens the checks") {
  VerificationReport rep;
  rep.add_check("alpha", 1e-9, 1e-8);
  rep.add_min_check("beta", 2.0, 1.0);
  const std::string csv = rep.to_csv();
  CHECK(csv.find("name,residual,tolerance,pass,gated") == 0);
  CHECK(csv.find("alpha") != std::string::npos);
  CHECK(csv.find("beta") != std::string::npos);
}

TEST_CASE("reports refuse to overwrite without force") {
  const std::string path = "/tmp/eigenmin_overwrite_test.json";
  std::remove(path.c_str());
  write_text_file("one", path, false);
  CHECK_THROWS_AS(write_text_file("two", path, false), ReportExistsError);
  write_text_file("two", path, true);
  std::ifstream in(path);
  std::string content;
  in >> content;
  CHECK(content == "two");
  std::remove(path.c_str());
}

TEST_CASE("fiber points serialize with entries, residual and margin") {
  FiberPoint fp;
  fp.p = CMat::identity(2);
  fp.value_residual = 1e-12;
  fp.gradient_margin = 0.5;
  const auto j = fiber_points_json({fp});
  REQUIRE(j.size() == 1);
  CHECK(j[0]["rows"] == 2);
  CHECK(j[0]["p_re"].size() == 4);
  CHECK(j[0]["margin"] == 0.5);
}

TEST_CASE("appendix reports are deterministic under the seed") {
  RunConfig config;
  config.samples = 10;
  config.seed = 77;
  const auto r1 = run_appendix(config, 3);
  const auto r2 = run_appendix(config, 3);
  CHECK(strip_wall_time(r1.to_json()).dump() == strip_wall_time(r2.to_json()).dump());
}

TEST_CASE("config validation") {
  RunConfig config;
  config.samples = 0;
  CHECK_THROWS_AS(run_verify(config), std::invalid_argument);
  config.samples = 5;
  config.tol["eigen"] = -1.0;
  CHECK_THROWS_AS(run_verify(config), std::invalid_argument);
}

TEST_CASE("fiber report records the identity value for file parameters") {
  const std::string path = "/tmp/eigenmin_fiber_params.json";
  {
    std::ofstream out(path, std::ios::trunc);
    out << R"({"space": "suso", "n": 2, "a_re": [1.0, 0.0], "a_im": [0.0, 1.0]})";
  }
  RunConfig config;
  config.space = SpaceId::SUSO;
  config.n = 2;
  config.samples = 5;
  config.params_path = path;
  const auto rep = run_fiber(config);
  CHECK(rep.details["identity_residual"].get<double>() == 0.0);  // a = (1, i) is isotropic
  CHECK(rep.all_gated_pass());
  std::remove(path.c_str());
}

TEST_CASE("fiber driver gates behave per space") {
  RunConfig config;
  config.space = SpaceId::SOU;
  config.n = 2;
  config.samples = 10;
  config.seed = 8;
  const auto rep = run_fiber(config);
  CHECK(rep.all_gated_pass());
  bool found_zero_note = false;
  for (const auto& c : rep.checks) {
    if (c.name == "control_identically_zero") {
      found_zero_note = true;
      CHECK(c.gated);
      CHECK(c.pass);
    }
    if (c.name == "critical_point_scan") CHECK_FALSE(c.gated);  // not submersive here
  }
  CHECK(found_zero_note);
}
