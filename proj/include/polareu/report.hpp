#pragma once

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "certificate.hpp"
#include "variety_file.hpp"

namespace polareu {

enum class CheckStatus { kPass, kFail, kSkipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

/// A skipped check had missing input data; it does not fail the run.
struct CheckVerdict {
  std::string name;
  CheckStatus status = CheckStatus::kSkipped;
  std::string detail;

  friend bool operator==(const CheckVerdict&, const CheckVerdict&) = default;
};

/// Result of one CLI run. Serialized field-for-field as the machine output;
/// the wall time only goes to the human report so the machine output stays
/// reproducible.
struct RunReport {
  std::string command;
  std::string name;
  int dimension = 0;
  std::optional<std::int64_t> eu;
  std::vector<std::int64_t> alphas;
  std::optional<std::int64_t> degree;
  GenericityCertificate certificate;
  std::vector<CheckVerdict> checks;
  double wall_seconds = 0.0;

  bool all_checks_pass() const {
    for (const auto& c : checks) {
      if (c.status == CheckStatus::kFail) return false;
    }
    return true;
  }
};

inline nlohmann::ordered_json to_json(const TrialRecord& r) {
  nlohmann::ordered_json j;
  j["stage"] = r.stage;
  j["level"] = r.level;
  j["seed"] = r.seed;
  auto opt = [&](const char* key, const std::optional<bool>& v) {
    if (v) j[key] = *v;
  };
  opt("dimension_drop", r.dimension_drop);
  opt("zero_dimensional", r.zero_dimensional);
  opt("radical", r.radical);
  j["accepted"] = r.accepted;
  if (r.value) j["value"] = *r.value;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline nlohmann::ordered_json to_json(const GenericityCertificate& c) {
  nlohmann::ordered_json j;
  j["field"] = c.field;
  j["prime"] = c.prime;
  j["master_seed"] = c.master_seed;
  j["trials"] = c.trials;
  auto records = nlohmann::ordered_json::array();
  for (const auto& r : c.records) records.push_back(to_json(r));
  j["records"] = records;
  return j;
}

inline nlohmann::ordered_json to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["format_version"] = kFormatVersion;
  j["command"] = r.command;
  j["name"] = r.name;
  j["dimension"] = r.dimension;
  if (r.eu) j["eu"] = *r.eu;
  if (!r.alphas.empty()) j["alphas"] = r.alphas;
  if (r.degree) j["degree"] = *r.degree;
  j["prime"] = r.certificate.prime;
  j["master_seed"] = r.certificate.master_seed;
  j["certificate"] = to_json(r.certificate);
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  j["checks"] = checks;
  j["status"] = r.all_checks_pass() ? "ok" : "mismatch";
  return j;
}

inline std::string join(const std::vector<std::int64_t>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

/// Human-readable summary, meant for standard error.
inline std::string format_human(const RunReport& r) {
  std::ostringstream os;
  os << r.command << " " << (r.name.empty() ? "(unnamed)" : r.name) << "  d=" << r.dimension
     << "  field=" << r.certificate.field << "  seed=" << r.certificate.master_seed
     << "  trials=" << r.certificate.trials << "\n";
  if (!r.alphas.empty()) os << "  alphas  " << join(r.alphas) << "\n";
  if (r.degree) os << "  degree  " << *r.degree << "\n";
  if (r.eu) os << "  Eu      " << *r.eu << "\n";
  std::size_t accepted = 0;
  for (const auto& t : r.certificate.records) accepted += t.accepted ? 1 : 0;
  os << "  certificate: " << r.certificate.records.size() << " trials, " << accepted
     << " accepted\n";
  for (const auto& c : r.checks) {
    os << "  [" << to_string(c.status) << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  if (r.command == "check") os << "  note: strata data is taken as given, not verified\n";
  os << "  " << (r.all_checks_pass() ? "ok" : "MISMATCH") << " in " << std::fixed
     << std::setprecision(3) << r.wall_seconds << " s\n";
  return os.str();
}

}  // namespace polareu
