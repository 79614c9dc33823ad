#ifndef SPHBM_VALIDATE_HPP
#define SPHBM_VALIDATE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "sphbm/stats.hpp"

namespace sphbm::validation {

/// Outcome of one named validation check (one acceptance criterion).
struct CheckResult {
  std::string name;
  bool pass = false;
  std::vector<StatReport> reports;  // one row per cell / sub-test
  std::vector<std::string> notes;   // human-readable detail lines
};

/// Registered check names, in criterion order.
std::vector<std::string> check_names();

/// Runs one check. params may override the pinned defaults (seed, N, ...);
/// unknown names throw std::domain_error.
CheckResult run_check(const std::string& name, const nlohmann::json& params);

struct SuiteResult {
  std::vector<CheckResult> checks;
  bool all_pass = false;
};

/// Runs every entry of a manifest {"checks":[{"check":..., "seed":..., ...}]}.
/// `only` restricts to a single check name when nonempty. Malformed manifests
/// throw std::domain_error.
SuiteResult run_manifest(const nlohmann::json& manifest, const std::string& only = "");

nlohmann::json load_manifest_file(const std::string& path);

}  // namespace sphbm::validation

#endif
