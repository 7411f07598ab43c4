#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>

#include "rsvd/campaign.hpp"

namespace {

struct CommonFlags {
  std::string config;
  std::string suites;
  std::string family;
  std::string out;
  int n = -1;
  long long seed = -1;
  double tol = -1.0;
};

void register_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config, "Configuration file (key = value lines)");
  cmd->add_option("--n", flags.n, "Number of particles");
  cmd->add_option("--seed", flags.seed, "Seed for the deterministic sample streams");
  cmd->add_option("--suite", flags.suites, "Comma-separated suite list (verify only)");
  cmd->add_option("--out", flags.out, "Output directory for report.json / trajectory.csv");
  cmd->add_option("--tol", flags.tol, "Tolerance override applied to every check");
  cmd->add_option("--family", flags.family, "Coefficient family: plain|tilde|hat|all");
}

rsvd::RunConfig build_config(const CommonFlags& flags) {
  rsvd::RunConfig cfg;
  if (!flags.config.empty()) cfg = rsvd::parse_config_file(flags.config);
  if (flags.n >= 0) rsvd::apply_override(cfg, "n", std::to_string(flags.n));
  if (flags.seed >= 0) rsvd::apply_override(cfg, "seed", std::to_string(flags.seed));
  if (!flags.suites.empty()) rsvd::apply_override(cfg, "suites", flags.suites);
  if (!flags.family.empty()) rsvd::apply_override(cfg, "family", flags.family);
  if (!flags.out.empty()) rsvd::apply_override(cfg, "out", flags.out);
  // Assigned directly: a std::to_string round trip would truncate small
  // tolerances (fixed notation with six digits) to zero.
  if (flags.tol > 0.0) cfg.tol = flags.tol;
  cfg.validate();
  return cfg;
}

int finish(const rsvd::Report& report, const rsvd::RunConfig& cfg) {
  const auto path = std::filesystem::path(cfg.out) / "report.json";
  report.write(path.string());
  for (const rsvd::CheckRecord& c : report.checks) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.check;
    if (!c.family.empty()) std::cout << " (" << c.family << ")";
    std::cout << "  residual " << c.residual << "  tol " << c.tolerance << "\n";
  }
  std::cout << (report.all_pass() ? "OK" : "FAILED") << ": " << report.checks.size()
            << " checks, report " << path.string() << "\n";
  return rsvd::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical workbench for a rational multi-particle Lax system"};
  app.require_subcommand(1);

  CommonFlags verify_flags, simulate_flags, calibrate_flags;
  CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
  register_common(verify, verify_flags);
  CLI::App* simulate = app.add_subcommand("simulate", "Integrate the flow and export it");
  register_common(simulate, simulate_flags);
  CLI::App* calibrate = app.add_subcommand("calibrate", "Re-run the bracket-sign calibration");
  register_common(calibrate, calibrate_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      const rsvd::RunConfig cfg = build_config(verify_flags);
      return finish(rsvd::run_verify(cfg), cfg);
    }
    if (simulate->parsed()) {
      const rsvd::RunConfig cfg = build_config(simulate_flags);
      return finish(rsvd::run_simulate(cfg), cfg);
    }
    const rsvd::RunConfig cfg = build_config(calibrate_flags);
    return finish(rsvd::run_calibrate(cfg), cfg);
  } catch (const rsvd::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const rsvd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
