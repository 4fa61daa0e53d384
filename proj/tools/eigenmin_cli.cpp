// eigenmin: numerical certification of the codimension-two minimal fibers cut
// out by complex-valued eigenfunctions on SU(n)/SO(n), Sp(n)/U(n),
// SO(2n)/U(n) and SU(2n)/Sp(n).
//
// Subcommands:
//   verify    eigen identities, invariance, pairing, backend agreement
//   fiber     zero finding, fiber sampling, regularity margin, minimality
//   appendix  determinant identities of the associated linear systems
//   all       the full sweep over every space in the grid
//
// Exit codes: 0 all gated checks pass, 1 a gated check failed, 2 bad config.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "eigenmin/verification.hpp"

namespace {

using namespace eigenmin;

void add_common_flags(CLI::App* cmd, RunConfig& config, std::string& space_str,
                      std::string& backend_str, bool& serial, bool with_space) {
  if (with_space) {
    cmd->add_option("--space", space_str, "symmetric space: suso|spu|sou|susp");
    cmd->add_option("--n", config.n, "space parameter n");
  }
  cmd->add_option("--seed", config.seed, "master seed (all sampling is deterministic in it)");
  cmd->add_option("--samples", config.samples, "sample count per sweep");
  cmd->add_option("--draws", config.draws, "parameter draws for the eigen sweep");
  cmd->add_option("--backend", backend_str, "derivative backend: exact|fd");
  cmd->add_option("--params", config.params_path, "JSON file with family parameters");
  cmd->add_option("--out", config.out_path, "write the JSON report here");
  cmd->add_flag("--csv", config.csv, "also write a flattened CSV next to the report");
  cmd->add_flag("--force", config.force, "allow overwriting an existing report");
  cmd->add_flag("--serial", serial, "run sweeps on the serial reference path");
  for (auto& [name, value] : config.tol) {
    cmd->add_option("--tol." + name, value, "override tolerance '" + name + "'");
  }
}

int emit(const VerificationReport& rep, const RunConfig& config) {
  for (const auto& c : rep.checks) {
    std::printf("%-9s %-36s residual %.3e  tol %.3e  %s\n", c.pass ? "[pass]" : "[FAIL]",
                c.name.c_str(), c.residual, c.tolerance, c.gated ? "" : "(ungated)");
  }
  const bool ok = rep.all_gated_pass();
  std::printf("%s\n", ok ? "all gated checks passed" : "gated check failure");

  if (!config.out_path.empty()) {
    write_text_file(rep.to_json().dump(2) + "\n", config.out_path, config.force);
    std::printf("report written to %s\n", config.out_path.c_str());
    if (config.csv) {
      const std::string csv_path = config.out_path + ".csv";
      write_text_file(rep.to_csv(), csv_path, config.force);
      std::printf("csv written to %s\n", csv_path.c_str());
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eigenfunction / minimal-fiber verification toolkit"};
  app.require_subcommand(1);

  RunConfig config;
  std::string space_str = "suso";
  std::string backend_str = "exact";
  bool serial = false;
  int nmax = 4;

  CLI::App* verify = app.add_subcommand("verify", "eigen identities and invariance");
  add_common_flags(verify, config, space_str, backend_str, serial, true);

  CLI::App* fiber = app.add_subcommand("fiber", "zero fiber, regularity, minimality");
  add_common_flags(fiber, config, space_str, backend_str, serial, true);

  CLI::App* appendix = app.add_subcommand("appendix", "determinant identity sweep");
  add_common_flags(appendix, config, space_str, backend_str, serial, false);
  appendix->add_option("--nmax", nmax, "largest n in the sweep (>= 2)");

  CLI::App* all = app.add_subcommand("all", "full verification sweep");
  add_common_flags(all, config, space_str, backend_str, serial, false);
  all->add_option("--nmax", nmax, "largest appendix n (>= 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    config.space = space_from_string(space_str);
    config.backend = backend_from_string(backend_str);
    if (serial) config.mode = par::Mode::serial;

    VerificationReport rep;
    if (verify->parsed()) {
      rep = run_verify(config);
    } else if (fiber->parsed()) {
      rep = run_fiber(config);
    } else if (appendix->parsed()) {
      if (config.samples == 20) config.samples = 50;  // sweep default: 50 draws
      rep = run_appendix(config, nmax);
    } else {
      rep = run_all(config, nmax);
    }
    return emit(rep, config);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const ReportExistsError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
