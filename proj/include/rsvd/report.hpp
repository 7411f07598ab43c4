#ifndef RSVD_REPORT_HPP
#define RSVD_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rsvd/types.hpp"

namespace rsvd {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kVersion = "1.0.0";

/// One verified identity, aggregated over the sampled points of a run.
/// `check` is a stable identifier naming the identity (e.g.
/// "quadratic-bracket", "consistency/antisymmetry-a").
struct CheckRecord {
  std::string check;
  std::string family;  ///< "plain", "tilde", "hat", or "" when not applicable
  int n = 0;
  int samples = 1;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Verification/simulation/calibration outcome serialized to report.json.
/// Identical configuration and seed produce byte-identical files except for
/// the isolated "timestamp" field.
struct Report {
  std::string command;  ///< "verify", "simulate", or "calibrate"
  std::uint64_t seed = 0;
  int bracket_sign = 0;
  std::vector<CheckRecord> checks;
  std::string extra_json;  ///< command-specific payload, already serialized

  bool all_pass() const;
  std::string to_json() const;                  ///< includes the timestamp
  void write(const std::string& path) const;    ///< creates parent dir if needed
};

}  // namespace rsvd

#endif  // RSVD_REPORT_HPP
