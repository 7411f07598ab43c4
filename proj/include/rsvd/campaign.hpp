#ifndef RSVD_CAMPAIGN_HPP
#define RSVD_CAMPAIGN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsvd/lax.hpp"
#include "rsvd/poisson.hpp"
#include "rsvd/report.hpp"

namespace rsvd {

/// Suite names accepted by the verification driver.
extern const std::vector<std::string> kAllSuites;

/// Run configuration shared by the subcommands. Defaults < config file <
/// command-line overrides.
struct RunConfig {
  int n = 2;
  std::uint64_t seed = 1;
  int points = 20;              ///< sampled points per suite
  double mu = -1.0;
  double nu = 1.0;
  double kappa = 0.5;
  std::vector<std::string> suites = kAllSuites;
  std::string family = "all";   ///< plain | tilde | hat | all
  double tol = -1.0;            ///< > 0 overrides every suite tolerance
  std::string out = ".";
  // Finite differences
  double fd_scale = 1e-5;
  bool richardson = true;
  double min_gap = 1e-6;
  // Integrator
  double dt = 1e-3;
  double t_end = 10.0;
  double flow_step = 1e-4;
  // Optional explicit initial point (otherwise a seeded scattering draw)
  std::optional<std::vector<double>> lambda;
  std::optional<std::vector<double>> theta;

  BracketConfig bracket_config() const;
  std::vector<Family> selected_families() const;  ///< throws ConfigError
  PhasePoint initial_point() const;               ///< explicit or seeded draw
  void validate() const;                          ///< throws ConfigError
};

/// Parses a flat "key = value" config file ('#' starts a comment).
/// Unknown keys or malformed values raise ConfigError.
RunConfig parse_config_file(const std::string& path);

/// Applies one "key=value" override (the CLI funnels flags through this).
void apply_override(RunConfig& cfg, const std::string& key, const std::string& value);

/// Runs the selected verification suites and returns the report
/// (not yet written to disk).
Report run_verify(const RunConfig& cfg);

/// Integrates the flow, writes trajectory.csv into cfg.out and returns the
/// summary report.
Report run_simulate(const RunConfig& cfg);

/// Runs the empirical sign calibration and returns the report.
Report run_calibrate(const RunConfig& cfg);

/// Exit code mapping: 0 all pass, 1 numerical failure.
int exit_code(const Report& report);

}  // namespace rsvd

#endif  // RSVD_CAMPAIGN_HPP
