#pragma once

// Structured check results for the verification suites.

#include <string>
#include <vector>

namespace hecke {

struct CheckResult {
  std::string id;       // e.g. "braid.diff.1.2"
  std::string relation; // human-readable relation name
  bool pass = true;
  std::string detail;   // counterexample description on failure

  static CheckResult ok(std::string id, std::string rel) {
    return {std::move(id), std::move(rel), true, ""};
  }
  static CheckResult fail(std::string id, std::string rel, std::string what) {
    return {std::move(id), std::move(rel), false, std::move(what)};
  }
};

inline bool all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

}  // namespace hecke
