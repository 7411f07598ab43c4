#include "rsvd/report.hpp"

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>

namespace rsvd {

using nlohmann::json;

bool Report::all_pass() const {
  for (const CheckRecord& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string Report::to_json() const {
  json doc;
  doc["schema"] = kReportSchema;
  doc["version"] = kVersion;
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  doc["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(now).count();
  doc["command"] = command;
  doc["seed"] = seed;
  doc["bracket_sign"] = bracket_sign;
  doc["pass"] = all_pass();
  doc["checks"] = json::array();
  for (const CheckRecord& c : checks) {
    json rec;
    rec["check"] = c.check;
    if (!c.family.empty()) rec["family"] = c.family;
    rec["n"] = c.n;
    rec["samples"] = c.samples;
    rec["residual"] = c.residual;
    rec["tolerance"] = c.tolerance;
    rec["pass"] = c.pass;
    doc["checks"].push_back(rec);
  }
  if (!extra_json.empty()) doc["result"] = json::parse(extra_json);
  return doc.dump(2) + "\n";
}

void Report::write(const std::string& path) const {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw Error("Report::write: cannot open " + path);
  out << to_json();
}

}  // namespace rsvd
